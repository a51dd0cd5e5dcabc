#include "fractalseq/theta_parser.hpp"

#include <cctype>
#include <string>

#include "fractalseq/sequence.hpp"

namespace fractalseq {

namespace {

// Element r + s*sqrt(d) of Q(sqrt(d)); d == 0 means no radicand seen yet.
struct QuadValue {
  BigRational r{0};
  BigRational s{0};
  BigInt d{0};
};

BigInt common_radicand(const QuadValue& x, const QuadValue& y) {
  const bool xi = x.s != 0;
  const bool yi = y.s != 0;
  if (xi && yi && x.d != y.d) {
    throw DomainError("mixing sqrt(" + x.d.str() + ") and sqrt(" + y.d.str() + ") is not supported");
  }
  return xi ? x.d : (yi ? y.d : BigInt(0));
}

QuadValue add(const QuadValue& x, const QuadValue& y) {
  return {x.r + y.r, x.s + y.s, common_radicand(x, y)};
}

QuadValue negate(const QuadValue& x) { return {-x.r, -x.s, x.d}; }

QuadValue mul(const QuadValue& x, const QuadValue& y) {
  const BigInt d = common_radicand(x, y);
  return {x.r * y.r + x.s * y.s * BigRational(d), x.r * y.s + x.s * y.r, d};
}

QuadValue div(const QuadValue& x, const QuadValue& y) {
  const BigInt d = common_radicand(x, y);
  // (r + s√d)^-1 = (r - s√d) / (r² - s²d)
  const BigRational norm = y.r * y.r - y.s * y.s * BigRational(d);
  if (norm == 0) throw DomainError("division by zero");
  return mul(x, QuadValue{y.r / norm, -y.s / norm, d});
}

// sqrt(p/q) = sqrt(p*q)/q, then k^2 factors move outside.
QuadValue square_root(const QuadValue& x) {
  if (x.s != 0) throw DomainError("nested square roots are not supported");
  if (x.r < 0) throw DomainError("square root of a negative number");
  const BigInt p = numerator(x.r);
  const BigInt q = denominator(x.r);
  BigInt radicand = p * q;
  BigInt outside = 1;
  for (BigInt k = 2; k * k <= radicand; ++k) {
    const BigInt k2 = k * k;
    while (radicand % k2 == 0) {
      radicand /= k2;
      outside *= k;
    }
  }
  if (radicand <= 1) return {BigRational(outside * radicand, q), 0, 0};
  return {0, BigRational(outside, q), radicand};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuadValue parse() {
    QuadValue v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("malformed theta expression '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  QuadValue expression() {
    QuadValue v = term();
    for (;;) {
      if (accept('+')) v = add(v, term());
      else if (accept('-')) v = add(v, negate(term()));
      else return v;
    }
  }

  QuadValue term() {
    QuadValue v = unary();
    for (;;) {
      if (accept('*')) v = mul(v, unary());
      else if (accept('/')) v = div(v, unary());
      else return v;
    }
  }

  QuadValue unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return primary();
  }

  QuadValue primary() {
    skip_space();
    if (accept('(')) {
      QuadValue v = expression();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      QuadValue v = expression();
      expect(')');
      return square_root(v);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
    return {BigRational(BigInt(std::string(text_.substr(start, pos_ - start)))), 0, 0};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactNumber parse_theta(std::string_view text) {
  const QuadValue v = Parser(text).parse();
  if (v.s == 0) return ExactNumber::rational(v.r);
  // r + s√d = (a + b√d)/c over a common denominator
  const BigInt c = boost::multiprecision::lcm(denominator(v.r), denominator(v.s));
  const BigInt a = numerator(v.r) * (c / denominator(v.r));
  const BigInt b = numerator(v.s) * (c / denominator(v.s));
  return ExactNumber::surd(a, b, v.d, c);
}

}  // namespace fractalseq
