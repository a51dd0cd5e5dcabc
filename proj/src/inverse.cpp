#include "fractalseq/inverse.hpp"

#include <ostream>
#include <vector>

#include "fractalseq/signature.hpp"

namespace fractalseq {

ThetaInterval ThetaInterval::positive_reals() { return make(BigRational(0), false, std::nullopt, false); }

ThetaInterval ThetaInterval::empty() {
  ThetaInterval iv;
  iv.empty_ = true;
  return iv;
}

ThetaInterval ThetaInterval::make(std::optional<BigRational> lo, bool lo_closed, std::optional<BigRational> hi,
                                  bool hi_closed) {
  if (lo && hi && (*lo > *hi || (*lo == *hi && !(lo_closed && hi_closed)))) return empty();
  ThetaInterval iv;
  iv.lo_ = std::move(lo);
  iv.lo_closed_ = iv.lo_ && lo_closed;
  iv.hi_ = std::move(hi);
  iv.hi_closed_ = iv.hi_ && hi_closed;
  return iv;
}

ThetaInterval ThetaInterval::closed(const BigRational& lo, const BigRational& hi) { return make(lo, true, hi, true); }

ThetaInterval ThetaInterval::with_lower(const BigRational& bound, bool closed) const {
  return intersect(make(bound, closed, std::nullopt, false));
}

ThetaInterval ThetaInterval::with_upper(const BigRational& bound, bool closed) const {
  return intersect(make(std::nullopt, false, bound, closed));
}

ThetaInterval ThetaInterval::intersect(const ThetaInterval& other) const {
  if (empty_ || other.empty_) return empty();
  std::optional<BigRational> lo = lo_;
  bool lo_closed = lo_closed_;
  if (other.lo_) {
    if (!lo || *other.lo_ > *lo) {
      lo = other.lo_;
      lo_closed = other.lo_closed_;
    } else if (*other.lo_ == *lo) {
      lo_closed = lo_closed && other.lo_closed_;
    }
  }
  std::optional<BigRational> hi = hi_;
  bool hi_closed = hi_closed_;
  if (other.hi_) {
    if (!hi || *other.hi_ < *hi) {
      hi = other.hi_;
      hi_closed = other.hi_closed_;
    } else if (*other.hi_ == *hi) {
      hi_closed = hi_closed && other.hi_closed_;
    }
  }
  return make(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

bool ThetaInterval::contains(const BigRational& x) const {
  if (empty_) return false;
  if (lo_ && (x < *lo_ || (x == *lo_ && !lo_closed_))) return false;
  if (hi_ && (x > *hi_ || (x == *hi_ && !hi_closed_))) return false;
  return true;
}

bool ThetaInterval::is_subset_of(const ThetaInterval& other) const {
  if (empty_) return true;
  if (other.empty_) return false;
  if (other.lo_) {
    if (!lo_ || *lo_ < *other.lo_) return false;
    if (*lo_ == *other.lo_ && lo_closed_ && !other.lo_closed_) return false;
  }
  if (other.hi_) {
    if (!hi_ || *hi_ > *other.hi_) return false;
    if (*hi_ == *other.hi_ && hi_closed_ && !other.hi_closed_) return false;
  }
  return true;
}

std::string ThetaInterval::to_string() const {
  if (empty_) return "EMPTY";
  std::string out = lo_ ? (lo_closed_ ? "[" : "(") + fractalseq::to_string(*lo_) : "(-inf";
  out += ", ";
  out += hi_ ? fractalseq::to_string(*hi_) + (hi_closed_ ? "]" : ")") : "inf)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ThetaInterval& iv) { return os << iv.to_string(); }

bool contains(const ThetaInterval& iv, const ExactNumber& theta) {
  if (iv.is_empty()) return false;
  if (iv.lo()) {
    const auto c = compare(theta, *iv.lo());
    if (c < 0 || (c == 0 && !iv.lo_closed())) return false;
  }
  if (iv.hi()) {
    const auto c = compare(theta, *iv.hi());
    if (c > 0 || (c == 0 && !iv.hi_closed())) return false;
  }
  return true;
}

namespace {

// Adds the constraint  offset <= slope * theta.
ThetaInterval constrain(const ThetaInterval& iv, Term offset, Term slope) {
  if (slope > 0) return iv.with_lower(BigRational(offset, slope), true);
  if (slope < 0) return iv.with_upper(BigRational(-offset, -slope), true);
  return offset <= 0 ? iv : ThetaInterval::empty();
}

// (x_value + x_rank*theta) <= (y_value + y_rank*theta)
ThetaInterval constrain_order(const ThetaInterval& iv, Term x_value, Term x_rank, Term y_value, Term y_rank) {
  return constrain(iv, x_value - y_value, y_rank - x_rank);
}

}  // namespace

ThetaInterval theta_interval_from_prefix(const Sequence& s) {
  if (s.empty()) throw DomainError("cannot invert an empty prefix");
  const auto annotated = annotate_ranks(s);

  // Down-set: (v-1, r) must already be present when (v, r) arrives.
  std::vector<Term> count(static_cast<std::size_t>(s.max_value()) + 2, 0);
  for (const auto& t : annotated) {
    if (t.value > 1 && count[static_cast<std::size_t>(t.value - 1)] < t.rank) return ThetaInterval::empty();
    count[static_cast<std::size_t>(t.value)] = t.rank;
  }

  ThetaInterval iv = ThetaInterval::positive_reals();
  for (std::size_t h = 0; h + 1 < annotated.size() && !iv.is_empty(); ++h) {
    iv = constrain_order(iv, annotated[h].value, annotated[h].rank, annotated[h + 1].value, annotated[h + 1].rank);
  }
  // Every omitted grid point must come no earlier than the last term; the
  // points (v, count[v] + 1) dominate all the others.
  const AnnotatedTerm last = annotated.back();
  for (std::size_t v = 1; v < count.size() && !iv.is_empty(); ++v) {
    iv = constrain_order(iv, last.value, last.rank, static_cast<Term>(v), count[v] + 1);
  }
  return iv;
}

BigRational midpoint(const ThetaInterval& iv) {
  if (iv.is_empty()) throw DomainError("midpoint of an empty interval");
  const BigRational lo = iv.lo().value_or(BigRational(0));
  if (!iv.hi()) return lo + 1;
  return (lo + *iv.hi()) / 2;
}

namespace {

BigInt floor_nonneg(const BigRational& x) { return numerator(x) / denominator(x); }

}  // namespace

BigRational simplest_rational(const ThetaInterval& iv) {
  if (iv.is_empty()) throw DomainError("no rational in an empty interval");
  if (iv.is_point()) return *iv.lo();
  const BigRational lo = iv.lo().value_or(BigRational(0));
  if (lo < 0) throw DomainError("simplest_rational expects a nonnegative lower bound");

  // Stern-Brocot descent between left = lp/lq and right = rp/rq (1/0 = inf),
  // taking runs of same-direction moves in one step.
  BigInt lp = 0, lq = 1, rp = 1, rq = 0;
  for (;;) {
    const BigRational m(lp + rp, lq + rq);
    if (m <= lo) {
      const BigInt k = floor_nonneg((lo * BigRational(lq) - BigRational(lp)) / (BigRational(rp) - lo * BigRational(rq)));
      lp += k * rp;
      lq += k * rq;
    } else if (iv.hi() && m >= *iv.hi()) {
      const BigRational& hi = *iv.hi();
      const BigInt k = floor_nonneg((BigRational(rp) - hi * BigRational(rq)) / (hi * BigRational(lq) - BigRational(lp)));
      rp += k * lp;
      rq += k * lq;
    } else {
      return m;
    }
  }
}

std::optional<std::size_t> first_divergence(const ExactNumber& theta1, const ExactNumber& theta2,
                                            std::size_t max_terms) {
  if (theta1 == theta2) throw DomainError("first_divergence needs two distinct numbers, got " + theta1.to_string() + " twice");
  SignatureGenerator g1(theta1);
  SignatureGenerator g2(theta2);
  for (std::size_t h = 1; h <= max_terms; ++h) {
    if (g1.next().value != g2.next().value) return h;
  }
  return std::nullopt;
}

ThetaInterval initial_segment_interval(Term n, SegmentKind kind) {
  if (n < 2) throw DomainError("initial segments need n >= 2, got " + std::to_string(n));
  switch (kind) {
    case SegmentKind::Type1: return ThetaInterval::closed(BigRational(n - 1), BigRational(n));
    case SegmentKind::Type2: return ThetaInterval::closed(BigRational(1, n), BigRational(1, n - 1));
    default: throw DomainError("initial_segment_interval expects Type1 or Type2");
  }
}

}  // namespace fractalseq
