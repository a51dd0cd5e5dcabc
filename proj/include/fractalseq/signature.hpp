#pragma once

#include <cstddef>
#include <queue>
#include <vector>

#include "fractalseq/exact_number.hpp"
#include "fractalseq/sequence.hpp"

namespace fractalseq {

/// A grid point (i, j) of the multiset {i + j*theta : i, j >= 1}.
struct MultisetElement {
  Term i = 1;
  Term j = 1;
};

/// Strict weak order on multiset elements: by value i + j*theta, and among
/// equal values (rational theta only) larger i first.
class ElementOrder {
 public:
  explicit ElementOrder(const ExactNumber& theta) : theta_(&theta) {}

  [[nodiscard]] std::strong_ordering compare(const MultisetElement& x, const MultisetElement& y) const;
  bool operator()(const MultisetElement& x, const MultisetElement& y) const { return compare(x, y) < 0; }

 private:
  const ExactNumber* theta_;
};

/// Lazy generator of the signature sequence of theta.
///
/// Rows j are merged with a heap. Popping (i, j) pushes (i+1, j); popping
/// (1, j) additionally opens row j+1. Every unvisited grid point therefore
/// has a predecessor that is strictly earlier in the order, so elements come
/// out sorted.
class SignatureGenerator {
 public:
  /// Throws DomainError unless theta > 0 (guaranteed by ExactNumber).
  explicit SignatureGenerator(ExactNumber theta);

  SignatureGenerator(const SignatureGenerator&) = delete;
  SignatureGenerator& operator=(const SignatureGenerator&) = delete;

  /// Next term: value is i, rank is j.
  AnnotatedTerm next();

  [[nodiscard]] std::size_t emitted() const noexcept { return emitted_; }
  [[nodiscard]] const ExactNumber& theta() const noexcept { return theta_; }

 private:
  struct HeapOrder {
    const ElementOrder* order;
    bool operator()(const MultisetElement& x, const MultisetElement& y) const { return (*order)(y, x); }
  };

  ExactNumber theta_;
  ElementOrder order_;
  std::priority_queue<MultisetElement, std::vector<MultisetElement>, HeapOrder> frontier_;
  std::size_t emitted_ = 0;
};

/// First n_terms of the signature of theta. Throws DomainError if n_terms == 0.
std::vector<AnnotatedTerm> generate_signature(const ExactNumber& theta, std::size_t n_terms);

/// Independent oracle: enumerates every grid point with value <= V, sorts,
/// and doubles V until the first n_terms are certain.
std::vector<AnnotatedTerm> brute_force_signature(const ExactNumber& theta, std::size_t n_terms);

}  // namespace fractalseq
