#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "fractalseq/exact_number.hpp"
#include "fractalseq/sequence.hpp"

namespace fractalseq {

/// Interval of theta values with exact rational bounds. A missing bound is
/// unbounded on that side. The empty interval is a distinguished value.
class ThetaInterval {
 public:
  /// (0, inf)
  static ThetaInterval positive_reals();
  static ThetaInterval empty();
  /// Normalizes to empty when the bounds cross or touch with an open flag.
  static ThetaInterval make(std::optional<BigRational> lo, bool lo_closed, std::optional<BigRational> hi,
                            bool hi_closed);
  static ThetaInterval closed(const BigRational& lo, const BigRational& hi);

  [[nodiscard]] bool is_empty() const noexcept { return empty_; }
  [[nodiscard]] const std::optional<BigRational>& lo() const noexcept { return lo_; }
  [[nodiscard]] const std::optional<BigRational>& hi() const noexcept { return hi_; }
  [[nodiscard]] bool lo_closed() const noexcept { return lo_closed_; }
  [[nodiscard]] bool hi_closed() const noexcept { return hi_closed_; }
  [[nodiscard]] bool is_point() const noexcept { return !empty_ && lo_ && hi_ && *lo_ == *hi_; }

  [[nodiscard]] ThetaInterval intersect(const ThetaInterval& other) const;
  /// theta >= bound (closed) or theta > bound (open)
  [[nodiscard]] ThetaInterval with_lower(const BigRational& bound, bool closed) const;
  [[nodiscard]] ThetaInterval with_upper(const BigRational& bound, bool closed) const;

  [[nodiscard]] bool contains(const BigRational& x) const;
  [[nodiscard]] bool is_subset_of(const ThetaInterval& other) const;

  /// "[3, 4]", "(0, 1/3]", "[2, inf)" or "EMPTY".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ThetaInterval&, const ThetaInterval&) = default;

 private:
  bool empty_ = false;
  std::optional<BigRational> lo_;
  bool lo_closed_ = false;
  std::optional<BigRational> hi_;
  bool hi_closed_ = false;
};

std::ostream& operator<<(std::ostream& os, const ThetaInterval& iv);

/// Exact membership of theta.
bool contains(const ThetaInterval& iv, const ExactNumber& theta);

/// Closed interval of theta > 0 whose signature can start with s.
///
/// The prefix must be a down-set of the grid {(i, j)} once each term is
/// paired with its occurrence rank (otherwise EMPTY). The bounds then come
/// from two linear constraint families: consecutive terms are nondecreasing
/// in value, and the last term is no larger than any grid point the prefix
/// leaves out. Endpoints are reported closed; whether a rational endpoint
/// itself reproduces s depends on tie order and is not encoded here.
ThetaInterval theta_interval_from_prefix(const Sequence& s);

/// Midpoint of a bounded interval; lo + 1 when unbounded above.
BigRational midpoint(const ThetaInterval& iv);

/// Simplest rational (smallest denominator, then numerator) strictly inside
/// a non-degenerate interval, or the point itself for a degenerate one.
/// Found by descending the Stern-Brocot tree.
BigRational simplest_rational(const ThetaInterval& iv);

/// Smallest 1-based index where the two signatures differ, scanning at most
/// max_terms terms. Throws DomainError if theta1 == theta2.
std::optional<std::size_t> first_divergence(const ExactNumber& theta1, const ExactNumber& theta2,
                                            std::size_t max_terms);

/// Interval of theta whose signature starts with the given initial
/// segment: [n-1, n] for (1,2,...,n,1,n+1) and [1/n, 1/(n-1)] for
/// (1 x n, 2, 1). Throws DomainError for n < 2.
ThetaInterval initial_segment_interval(Term n, SegmentKind kind);

}  // namespace fractalseq
