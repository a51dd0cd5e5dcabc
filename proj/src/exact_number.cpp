#include "fractalseq/exact_number.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "fractalseq/sequence.hpp"

namespace fractalseq {

namespace {

using i128 = __int128;

int sgn(const BigInt& x) { return x.sign(); }
int sgn(i128 x) { return (x > 0) - (x < 0); }

bool fits_i64(const BigInt& x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

BigInt abs_big(const BigInt& x) { return x.sign() < 0 ? BigInt(-x) : x; }

// Sign of A + B*sqrt(d) given already-computed squares where needed.
template <class Int, class Square>
int quadratic_sign(const Int& A, const Int& B, Square&& squares_cmp) {
  const int sa = sgn(A);
  const int sb = sgn(B);
  if (sa >= 0 && sb >= 0) return (sa != 0 || sb != 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare A^2 with B^2 d.
  const int c = squares_cmp();  // sign of A^2 - B^2 d
  return sa > 0 ? c : -c;
}

// Fast path on 128-bit integers; nullopt on any overflow.
std::optional<int> small_sign(i128 de, i128 df, std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t c) {
  i128 t1, t2, A, B;
  if (__builtin_mul_overflow(static_cast<i128>(c), de, &t1)) return std::nullopt;
  if (__builtin_mul_overflow(df, static_cast<i128>(a), &t2)) return std::nullopt;
  if (__builtin_add_overflow(t1, t2, &A)) return std::nullopt;
  if (b == 0) return sgn(A);
  if (__builtin_mul_overflow(df, static_cast<i128>(b), &B)) return std::nullopt;
  bool overflow = false;
  int result = quadratic_sign(A, B, [&]() -> int {
    i128 a2, b2, b2d;
    if (__builtin_mul_overflow(A, A, &a2) || __builtin_mul_overflow(B, B, &b2) ||
        __builtin_mul_overflow(b2, static_cast<i128>(d), &b2d)) {
      overflow = true;
      return 0;
    }
    return sgn(a2 - b2d);
  });
  if (overflow) return std::nullopt;
  return result;
}

BigInt square_free_part(BigInt d, BigInt& outside) {
  outside = 1;
  for (BigInt k = 2; k * k <= d; ++k) {
    const BigInt k2 = k * k;
    while (d % k2 == 0) {
      d /= k2;
      outside *= k;
    }
  }
  return d;
}

}  // namespace

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

int sign_of_quadratic(const BigInt& A, const BigInt& B, const BigInt& d) {
  if (d.sign() < 0) throw DomainError("negative radicand");
  return quadratic_sign(A, B, [&] { return sgn(BigInt(A * A - B * B * d)); });
}

ExactNumber ExactNumber::rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw DomainError("zero denominator");
  return rational(BigRational(p, q));
}

ExactNumber ExactNumber::rational(const BigRational& r) {
  if (r <= 0) throw DomainError("theta must be positive, got " + fractalseq::to_string(r));
  ExactNumber x;
  x.kind_ = Kind::Rational;
  x.a_ = numerator(r);
  x.b_ = 0;
  x.d_ = 1;
  x.c_ = denominator(r);
  x.refresh_fast();
  return x;
}

ExactNumber ExactNumber::surd(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& c) {
  if (c == 0) throw DomainError("zero denominator");
  if (d.sign() < 0) throw DomainError("negative radicand");
  BigInt outside;
  BigInt core = d.sign() == 0 ? BigInt(0) : square_free_part(d, outside);
  BigInt bb = d.sign() == 0 ? BigInt(0) : BigInt(b * outside);
  BigInt aa = a;
  BigInt cc = c;
  if (core == 1) {
    aa += bb;
    bb = 0;
  }
  if (bb == 0) return rational(aa, cc);
  if (cc.sign() < 0) {
    aa = -aa;
    bb = -bb;
    cc = -cc;
  }
  BigInt g = gcd(gcd(abs_big(aa), abs_big(bb)), cc);
  aa /= g;
  bb /= g;
  cc /= g;
  if (sign_of_quadratic(aa, bb, core) <= 0) {
    throw DomainError("theta must be positive");
  }
  ExactNumber x;
  x.kind_ = Kind::Surd;
  x.a_ = aa;
  x.b_ = bb;
  x.d_ = core;
  x.c_ = cc;
  x.refresh_fast();
  return x;
}

void ExactNumber::refresh_fast() {
  if (fits_i64(a_) && fits_i64(b_) && fits_i64(d_) && fits_i64(c_)) {
    small_ = Small{a_.convert_to<std::int64_t>(), b_.convert_to<std::int64_t>(), d_.convert_to<std::int64_t>(),
                   c_.convert_to<std::int64_t>()};
  } else {
    small_.reset();
  }
}

BigRational ExactNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value() on a quadratic irrational");
  return BigRational(a_, c_);
}

std::string ExactNumber::to_string() const {
  if (is_rational()) return fractalseq::to_string(rational_value());
  std::string core;
  if (a_ != 0) core = a_.str() + (b_.sign() > 0 ? "+" : "-");
  else if (b_.sign() < 0) core = "-";
  BigInt mag = abs_big(b_);
  if (mag != 1) core += mag.str() + "*";
  core += "sqrt(" + d_.str() + ")";
  if (c_ == 1) return core;
  return "(" + core + ")/" + c_.str();
}

double ExactNumber::approx() const {
  return (a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>())) /
         c_.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) { return os << x.to_string(); }

std::strong_ordering compare_affine(std::int64_t e1, std::int64_t f1, std::int64_t e2, std::int64_t f2,
                                    const ExactNumber& theta) {
  // sign of (e2 - e1) + (f2 - f1) * theta
  int s = 0;
  const i128 de = static_cast<i128>(e2) - e1;
  const i128 df = static_cast<i128>(f2) - f1;
  std::optional<int> fast;
  if (theta.small_) {
    const auto& k = *theta.small_;
    fast = small_sign(de, df, k.a, k.b, k.d, k.c);
  }
  if (fast) {
    s = *fast;
  } else {
    const BigInt bde = BigInt(e2) - e1;
    const BigInt bdf = BigInt(f2) - f1;
    s = sign_of_quadratic(BigInt(theta.c_ * bde + bdf * theta.a_), BigInt(bdf * theta.b_), theta.d_);
  }
  if (s > 0) return std::strong_ordering::less;
  if (s < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const ExactNumber& theta, const BigRational& r) {
  const BigInt u = numerator(r);
  const BigInt v = denominator(r);
  const int s = sign_of_quadratic(BigInt(theta.a() * v - u * theta.c()), BigInt(theta.b() * v), theta.d());
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const BigRational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace fractalseq
