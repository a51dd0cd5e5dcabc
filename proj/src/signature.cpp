#include "fractalseq/signature.hpp"

#include <algorithm>

namespace fractalseq {

std::strong_ordering ElementOrder::compare(const MultisetElement& x, const MultisetElement& y) const {
  auto by_value = compare_affine(x.i, x.j, y.i, y.j, *theta_);
  if (by_value != 0) return by_value;
  return y.i <=> x.i;  // ties: larger i first
}

SignatureGenerator::SignatureGenerator(ExactNumber theta)
    : theta_(std::move(theta)), order_(theta_), frontier_(HeapOrder{&order_}) {
  frontier_.push({1, 1});
}

AnnotatedTerm SignatureGenerator::next() {
  const MultisetElement top = frontier_.top();
  frontier_.pop();
  frontier_.push({top.i + 1, top.j});
  if (top.i == 1) frontier_.push({1, top.j + 1});
  ++emitted_;
  return {top.i, top.j};
}

std::vector<AnnotatedTerm> generate_signature(const ExactNumber& theta, std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("term count must be positive");
  SignatureGenerator gen(theta);
  std::vector<AnnotatedTerm> out;
  out.reserve(n_terms);
  while (out.size() < n_terms) out.push_back(gen.next());
  return out;
}

std::vector<AnnotatedTerm> brute_force_signature(const ExactNumber& theta, std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("term count must be positive");
  const ElementOrder order(theta);
  std::vector<MultisetElement> box;
  for (Term cutoff = 2;; cutoff *= 2) {
    // all (i, j) with i + j*theta <= cutoff
    box.clear();
    for (Term j = 1; compare_affine(1, j, cutoff, 0, theta) <= 0; ++j) {
      for (Term i = 1; compare_affine(i, j, cutoff, 0, theta) <= 0; ++i) box.push_back({i, j});
    }
    if (box.size() >= n_terms) break;
  }
  std::sort(box.begin(), box.end(), order);
  std::vector<AnnotatedTerm> out;
  out.reserve(n_terms);
  for (std::size_t h = 0; h < n_terms; ++h) out.push_back({box[h].i, box[h].j});
  return out;
}

}  // namespace fractalseq
