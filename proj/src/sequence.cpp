#include "fractalseq/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace fractalseq {

namespace {

void require_positive(Term v) {
  if (v < 1) throw DomainError("sequence terms must be positive integers, got " + std::to_string(v));
}

// Per-value counters indexed directly by value; terms are small in practice.
class ValueCounter {
 public:
  explicit ValueCounter(Term max_value) : counts_(static_cast<std::size_t>(max_value) + 1, 0) {}
  Term bump(Term v) { return ++counts_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<Term> counts_;
};

}  // namespace

Sequence::Sequence(std::initializer_list<Term> terms) : terms_(terms) {
  std::for_each(terms_.begin(), terms_.end(), require_positive);
}

Sequence::Sequence(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::for_each(terms_.begin(), terms_.end(), require_positive);
}

Term Sequence::at(std::size_t k) const {
  if (k == 0 || k > terms_.size()) {
    throw std::out_of_range("sequence index " + std::to_string(k) + " out of range 1.." +
                            std::to_string(terms_.size()));
  }
  return terms_[k - 1];
}

void Sequence::push_back(Term v) {
  require_positive(v);
  terms_.push_back(v);
}

void Sequence::append(const Sequence& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

Sequence Sequence::prefix(std::size_t len) const {
  Sequence out;
  out.terms_.assign(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(std::min(len, terms_.size())));
  return out;
}

Sequence Sequence::slice(std::size_t first, std::size_t last) const {
  Sequence out;
  if (first == 0 || first > last) return out;
  last = std::min(last, terms_.size());
  if (first > last) return out;
  out.terms_.assign(terms_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                    terms_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

bool Sequence::is_prefix_of(const Sequence& other) const noexcept {
  return terms_.size() <= other.terms_.size() &&
         std::equal(terms_.begin(), terms_.end(), other.terms_.begin());
}

Term Sequence::max_value() const noexcept {
  return terms_.empty() ? 0 : *std::max_element(terms_.begin(), terms_.end());
}

std::ostream& operator<<(std::ostream& os, const Sequence& s) { return os << '(' << to_string(s) << ')'; }

std::ostream& operator<<(std::ostream& os, const AnnotatedTerm& t) {
  return os << '(' << t.value << ',' << t.rank << ')';
}

std::string to_string(const Sequence& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s.terms()[k]);
  }
  return out;
}

Sequence parse_sequence(std::istream& in) {
  std::vector<Term> terms;
  std::string token;
  while (in >> token) {
    Term v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError("not an integer: '" + token + "'");
    }
    require_positive(v);
    terms.push_back(v);
  }
  return Sequence(std::move(terms));
}

Sequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_sequence(in);
}

Sequence upper_trim(const Sequence& s) {
  std::vector<bool> seen(static_cast<std::size_t>(s.max_value()) + 1, false);
  Sequence out;
  for (Term v : s) {
    auto idx = static_cast<std::size_t>(v);
    if (seen[idx]) {
      out.push_back(v);
    } else {
      seen[idx] = true;
    }
  }
  return out;
}

Sequence lower_trim(const Sequence& s) {
  Sequence out;
  for (Term v : s) {
    if (v > 1) out.push_back(v - 1);
  }
  return out;
}

std::optional<std::size_t> occurrence_index(const Sequence& s, Term value, std::size_t k) {
  if (k == 0) return std::nullopt;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.terms()[i] == value && ++seen == k) return i + 1;
  }
  return std::nullopt;
}

std::vector<AnnotatedTerm> annotate_ranks(const Sequence& s) {
  ValueCounter counter(s.max_value());
  std::vector<AnnotatedTerm> out;
  out.reserve(s.size());
  for (Term v : s) out.push_back({v, counter.bump(v)});
  return out;
}

Sequence values_of(std::span<const AnnotatedTerm> terms) {
  std::vector<Term> values;
  values.reserve(terms.size());
  for (const auto& t : terms) values.push_back(t.value);
  return Sequence(std::move(values));
}

InitialSegmentClass classify_initial_segment(const Sequence& s) {
  const auto& v = s.vector();
  if (v.empty()) return {SegmentKind::Indeterminate, 0};
  if (v[0] != 1) return {SegmentKind::Invalid, 0};
  if (v.size() == 1) return {SegmentKind::Indeterminate, 0};

  if (v[1] == 2) {
    std::size_t n = 2;
    while (n < v.size() && v[n] == static_cast<Term>(n + 1)) ++n;
    if (n == v.size()) return {SegmentKind::Indeterminate, 0};
    if (v[n] == 1) return {SegmentKind::Type1, static_cast<Term>(n)};
    return {SegmentKind::Invalid, 0};
  }
  if (v[1] == 1) {
    std::size_t n = 2;
    while (n < v.size() && v[n] == 1) ++n;
    if (n == v.size()) return {SegmentKind::Indeterminate, 0};
    if (v[n] == 2) return {SegmentKind::Type2, static_cast<Term>(n)};
    return {SegmentKind::Invalid, 0};
  }
  return {SegmentKind::Invalid, 0};
}

std::string to_string(const InitialSegmentClass& c) {
  switch (c.kind) {
    case SegmentKind::Type1: return "type1(" + std::to_string(c.n) + ")";
    case SegmentKind::Type2: return "type2(" + std::to_string(c.n) + ")";
    case SegmentKind::Indeterminate: return "indeterminate";
    case SegmentKind::Invalid: return "invalid";
  }
  return "invalid";
}

namespace {

std::optional<std::size_t> first_departure(const Sequence& trimmed, const Sequence& s) {
  for (std::size_t i = 0; i < trimmed.size(); ++i) {
    if (trimmed.terms()[i] != s.terms()[i]) return i + 1;
  }
  return std::nullopt;
}

}  // namespace

FractalReport check_doubly_fractal_prefix(const Sequence& s) {
  FractalReport r;
  r.upper_violation = first_departure(upper_trim(s), s);
  r.lower_violation = first_departure(lower_trim(s), s);
  r.upper_ok = !r.upper_violation;
  r.lower_ok = !r.lower_violation;
  if (r.upper_violation && r.lower_violation) {
    r.first_violation_index = std::min(*r.upper_violation, *r.lower_violation);
  } else {
    r.first_violation_index = r.upper_violation ? r.upper_violation : r.lower_violation;
  }
  return r;
}

}  // namespace fractalseq
