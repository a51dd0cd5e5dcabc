#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fractalseq {

using Term = std::int64_t;

/// Raised for malformed inputs (non-positive terms, bad parameters).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite prefix of a sequence of positive integers.
///
/// Storage is 0-based; the accessors `at(k)` and the index-returning
/// operations in this module use 1-based positions, so `at(1)` is the first
/// term.
class Sequence {
 public:
  Sequence() = default;
  Sequence(std::initializer_list<Term> terms);
  explicit Sequence(std::vector<Term> terms);

  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

  /// 1-based access; throws std::out_of_range.
  [[nodiscard]] Term at(std::size_t k) const;

  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
  [[nodiscard]] const std::vector<Term>& vector() const noexcept { return terms_; }

  [[nodiscard]] auto begin() const noexcept { return terms_.begin(); }
  [[nodiscard]] auto end() const noexcept { return terms_.end(); }

  void push_back(Term v);
  void append(const Sequence& other);

  /// First `len` terms (or the whole sequence if shorter).
  [[nodiscard]] Sequence prefix(std::size_t len) const;
  /// Terms at 1-based positions first..last inclusive.
  [[nodiscard]] Sequence slice(std::size_t first, std::size_t last) const;

  [[nodiscard]] bool is_prefix_of(const Sequence& other) const noexcept;
  [[nodiscard]] Term max_value() const noexcept;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Term> terms_;
};

/// A term together with its occurrence rank: `rank` counts how many times
/// `value` has appeared up to and including this position.
struct AnnotatedTerm {
  Term value = 0;
  Term rank = 0;

  friend bool operator==(const AnnotatedTerm&, const AnnotatedTerm&) = default;
};

std::ostream& operator<<(std::ostream& os, const Sequence& s);
std::ostream& operator<<(std::ostream& os, const AnnotatedTerm& t);

/// Comma-separated rendering, e.g. "1,2,3".
std::string to_string(const Sequence& s);

/// Parses whitespace-separated decimal integers. Throws DomainError on any
/// token that is not a positive integer.
Sequence parse_sequence(std::istream& in);
Sequence parse_sequence(const std::string& text);

Sequence upper_trim(const Sequence& s);
Sequence lower_trim(const Sequence& s);

/// 1-based index of the k-th occurrence of `value`, if there is one.
std::optional<std::size_t> occurrence_index(const Sequence& s, Term value, std::size_t k);

std::vector<AnnotatedTerm> annotate_ranks(const Sequence& s);
Sequence values_of(std::span<const AnnotatedTerm> terms);

enum class SegmentKind { Type1, Type2, Indeterminate, Invalid };

struct InitialSegmentClass {
  SegmentKind kind = SegmentKind::Indeterminate;
  Term n = 0;  // meaningful for Type1 / Type2 only

  friend bool operator==(const InitialSegmentClass&, const InitialSegmentClass&) = default;
};

/// Classifies the leading segment as (1,2,...,n,1,...) [Type1] or
/// (1 x n, 2, ...) [Type2]. Prefixes too short to decide are Indeterminate;
/// prefixes that no doubly fractal sequence can start with are Invalid.
InitialSegmentClass classify_initial_segment(const Sequence& s);

std::string to_string(const InitialSegmentClass& c);

struct FractalReport {
  bool upper_ok = true;
  bool lower_ok = true;
  std::optional<std::size_t> upper_violation;
  std::optional<std::size_t> lower_violation;
  /// Earliest index where either trimmed sequence departs from s.
  std::optional<std::size_t> first_violation_index;

  [[nodiscard]] bool ok() const noexcept { return upper_ok && lower_ok; }
};

/// Both trims must be prefixes of s. A finite prefix can only be checked for
/// prefix consistency, not equality.
FractalReport check_doubly_fractal_prefix(const Sequence& s);

}  // namespace fractalseq
