#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fractalseq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A positive real parameter, held exactly: either a rational p/q in lowest
/// terms, or a quadratic irrational (a + b*sqrt(d))/c with d square-free,
/// b != 0, c > 0 and gcd(a, b, c) = 1.
///
/// The normal form is unique, so equality is structural.
class ExactNumber {
 public:
  enum class Kind { Rational, Surd };

  /// Throws DomainError if q == 0 or p/q <= 0.
  static ExactNumber rational(const BigInt& p, const BigInt& q);
  static ExactNumber rational(const BigRational& r);
  /// Builds (a + b*sqrt(d))/c. Square factors are pulled out of d, and the
  /// result collapses to a rational when the irrational part vanishes.
  /// Throws DomainError if d < 0, c == 0 or the value is not positive.
  static ExactNumber surd(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& c);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_rational() const noexcept { return kind_ == Kind::Rational; }

  /// Valid only when is_rational().
  [[nodiscard]] BigRational rational_value() const;

  // Surd components; for a rational p/q these read a = p, b = 0, d = 1, c = q.
  [[nodiscard]] const BigInt& a() const noexcept { return a_; }
  [[nodiscard]] const BigInt& b() const noexcept { return b_; }
  [[nodiscard]] const BigInt& d() const noexcept { return d_; }
  [[nodiscard]] const BigInt& c() const noexcept { return c_; }

  /// Canonical text: "p/q", "p", or "(a+b*sqrt(d))/c". Parses back to the
  /// same value.
  [[nodiscard]] std::string to_string() const;

  /// Floating approximation, for display and diagnostics only.
  [[nodiscard]] double approx() const;

  friend bool operator==(const ExactNumber& x, const ExactNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_ && x.c_ == y.c_;
  }

 private:
  ExactNumber() = default;
  void refresh_fast();

  Kind kind_ = Kind::Rational;
  BigInt a_{0}, b_{0}, d_{1}, c_{1};

  // 64-bit mirrors of (a, b, d, c) when every component fits; lets the hot
  // comparison loop avoid heap-allocated big integers.
  struct Small {
    std::int64_t a, b, d, c;
  };
  std::optional<Small> small_;

  friend std::strong_ordering compare_affine(std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                                             const ExactNumber&);
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

/// Orders e1 + f1*theta against e2 + f2*theta exactly.
std::strong_ordering compare_affine(std::int64_t e1, std::int64_t f1, std::int64_t e2, std::int64_t f2,
                                    const ExactNumber& theta);

/// Orders theta against a rational r exactly.
std::strong_ordering compare(const ExactNumber& theta, const BigRational& r);

/// Sign (-1, 0, +1) of A + B*sqrt(d) for d >= 0, decided by case analysis
/// and one exact squaring.
int sign_of_quadratic(const BigInt& A, const BigInt& B, const BigInt& d);

/// Largest integer not exceeding sqrt(n), n >= 0.
BigInt isqrt(const BigInt& n);

std::string to_string(const BigRational& r);

}  // namespace fractalseq
