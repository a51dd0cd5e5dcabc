#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "fractalseq/inverse.hpp"
#include "fractalseq/signature.hpp"
#include "fractalseq/theta_parser.hpp"

using namespace fractalseq;

namespace {

BigRational q(long long p, long long d = 1) { return BigRational(p, d); }

Sequence signature_values(const ExactNumber& theta, std::size_t n) { return values_of(generate_signature(theta, n)); }

// Every reduced p/d in (0, upper) with d <= max_den, by walking the
// Stern-Brocot tree.
std::vector<BigRational> stern_brocot_rationals(long long upper, long long max_den) {
  std::vector<BigRational> out;
  std::function<void(long long, long long, long long, long long)> walk = [&](long long lp, long long lq, long long rp,
                                                                             long long rq) {
    const long long mp = lp + rp;
    const long long mq = lq + rq;
    if (mq > max_den) return;
    if (mp >= upper * mq) {  // mediant at or beyond the cap: only the left subtree matters
      walk(lp, lq, mp, mq);
      return;
    }
    out.emplace_back(mp, mq);
    walk(lp, lq, mp, mq);
    walk(mp, mq, rp, rq);
  };
  walk(0, 1, 1, 0);
  return out;
}

}  // namespace

TEST_CASE("interval from a type-1 initial segment") {
  CHECK(theta_interval_from_prefix({1, 2, 3, 4, 1, 5}) == ThetaInterval::closed(q(3), q(4)));
}

TEST_CASE("interval from a type-2 initial segment") {
  // 1 + 4t <= 2 + t <= 1 + 5t  gives  1/4 <= t <= 1/3
  CHECK(theta_interval_from_prefix({1, 1, 1, 1, 2}) == ThetaInterval::closed(q(1, 4), q(1, 3)));
  // cross-check: 0.3 starts (1,1,1,1,2) while 0.22 starts with five 1s
  CHECK(signature_values(ExactNumber::rational(3, 10), 5) == Sequence{1, 1, 1, 1, 2});
  CHECK(signature_values(ExactNumber::rational(22, 100), 5) == Sequence{1, 1, 1, 1, 1});
}

TEST_CASE("gaps and impossible orders give EMPTY") {
  CHECK(theta_interval_from_prefix({1, 3}).is_empty());
  CHECK(theta_interval_from_prefix({2}).is_empty());
  CHECK(theta_interval_from_prefix({1, 2, 2}).is_empty());
  CHECK(theta_interval_from_prefix({1, 2, 1, 3, 2, 1, 5}).is_empty());
  CHECK_THROWS_AS(theta_interval_from_prefix({}), DomainError);
}

TEST_CASE("closed bounds can leave a single tie point") {
  // forces theta = 1, where ties order (1,2,1,3,2,1,...) instead
  const auto iv = theta_interval_from_prefix({1, 2, 1, 1, 3});
  CHECK(iv == ThetaInterval::closed(q(1), q(1)));
  CHECK(signature_values(ExactNumber::rational(1), 5) != Sequence{1, 2, 1, 1, 3});
}

TEST_CASE("short prefixes") {
  CHECK(theta_interval_from_prefix({1}) == ThetaInterval::positive_reals());
  // (1, 2) needs 2 + t <= 1 + 2t
  CHECK(theta_interval_from_prefix({1, 2}) == ThetaInterval::make(q(1), true, std::nullopt, false));
  CHECK(theta_interval_from_prefix({1, 1}) == ThetaInterval::make(q(0), false, q(1), true));
}

TEST_CASE("membership") {
  const auto iv34 = ThetaInterval::closed(q(3), q(4));
  CHECK(contains(iv34, parse_theta("sqrt(13)")));
  CHECK_FALSE(contains(ThetaInterval::closed(q(1, 5), q(1, 4)), parse_theta("1/7")));
  CHECK_FALSE(contains(ThetaInterval::empty(), parse_theta("1")));
  CHECK(contains(iv34, parse_theta("4")));
  CHECK_FALSE(contains(ThetaInterval::make(q(3), true, q(4), false), parse_theta("4")));
  CHECK(contains(ThetaInterval::positive_reals(), parse_theta("1/1000")));
}

TEST_CASE("interval algebra") {
  CHECK(ThetaInterval::make(q(2), true, q(1), true).is_empty());
  CHECK(ThetaInterval::make(q(2), true, q(2), false).is_empty());
  CHECK(ThetaInterval::closed(q(2), q(2)).is_point());
  const auto a = ThetaInterval::closed(q(1), q(3));
  const auto b = ThetaInterval::make(q(2), false, std::nullopt, false);
  CHECK(a.intersect(b) == ThetaInterval::make(q(2), false, q(3), true));
  CHECK(a.intersect(b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(a.intersect(b)));
  CHECK(ThetaInterval::empty().is_subset_of(a));
  CHECK(a.to_string() == "[1, 3]");
  CHECK(a.intersect(b).to_string() == "(2, 3]");
  CHECK(ThetaInterval::make(q(1, 2), true, std::nullopt, false).to_string() == "[1/2, inf)");
  CHECK(ThetaInterval::empty().to_string() == "EMPTY");
}

TEST_CASE("witness rationals") {
  CHECK(simplest_rational(ThetaInterval::closed(q(3), q(4))) == q(7, 2));
  CHECK(simplest_rational(ThetaInterval::closed(q(1, 4), q(1, 3))) == q(2, 7));
  CHECK(simplest_rational(ThetaInterval::make(q(0), false, q(1, 3), true)) == q(1, 4));
  CHECK(simplest_rational(ThetaInterval::make(q(2), true, std::nullopt, false)) == q(3));
  CHECK(simplest_rational(ThetaInterval::closed(q(5, 3), q(5, 3))) == q(5, 3));
  CHECK(simplest_rational(ThetaInterval::closed(q(355, 113), q(22, 7))) == q(377, 120));
  CHECK(midpoint(ThetaInterval::closed(q(3), q(4))) == q(7, 2));
  CHECK(midpoint(ThetaInterval::make(q(2), true, std::nullopt, false)) == q(3));
  CHECK_THROWS_AS(simplest_rational(ThetaInterval::empty()), DomainError);
}

TEST_CASE("first divergence") {
  const auto idx = first_divergence(parse_theta("7/2"), parse_theta("sqrt(13)"), 100);
  REQUIRE(idx.has_value());
  CHECK(*idx > 6);
  CHECK(*idx <= 100);
  // the prefixes really do agree before idx and differ at it
  const Sequence a = signature_values(parse_theta("7/2"), *idx);
  const Sequence b = signature_values(parse_theta("sqrt(13)"), *idx);
  CHECK(a.prefix(*idx - 1) == b.prefix(*idx - 1));
  CHECK(a.at(*idx) != b.at(*idx));

  CHECK(first_divergence(parse_theta("1/7"), parse_theta("13/2"), 10) == 2u);
  CHECK_THROWS_AS(first_divergence(parse_theta("2/4"), parse_theta("1/2"), 10), DomainError);
  // close numbers may need more terms than allowed
  CHECK_FALSE(first_divergence(parse_theta("1000"), parse_theta("1001"), 5).has_value());
}

TEST_CASE("initial segment intervals") {
  CHECK(initial_segment_interval(4, SegmentKind::Type1) == ThetaInterval::closed(q(3), q(4)));
  CHECK(initial_segment_interval(4, SegmentKind::Type2) == ThetaInterval::closed(q(1, 4), q(1, 3)));
  CHECK(initial_segment_interval(2, SegmentKind::Type1) == ThetaInterval::closed(q(1), q(2)));
  CHECK_THROWS_AS(initial_segment_interval(1, SegmentKind::Type1), DomainError);
  CHECK_THROWS_AS(initial_segment_interval(3, SegmentKind::Invalid), DomainError);

  for (Term n = 2; n <= 9; ++n) {
    CAPTURE(n);
    Sequence type1;
    for (Term m = 1; m <= n; ++m) type1.push_back(m);
    type1.push_back(1);
    type1.push_back(n + 1);
    CHECK(theta_interval_from_prefix(type1) == initial_segment_interval(n, SegmentKind::Type1));

    Sequence type2;
    for (Term m = 1; m <= n; ++m) type2.push_back(1);
    type2.push_back(2);
    type2.push_back(1);
    CHECK(theta_interval_from_prefix(type2) == initial_segment_interval(n, SegmentKind::Type2));

    // brute force: interior rationals reproduce the segment, outside ones do not
    for (const auto& r : stern_brocot_rationals(n + 2, 24)) {
      const auto theta = ExactNumber::rational(r);
      for (const auto* seg : {&type1, &type2}) {
        const auto kind = seg == &type1 ? SegmentKind::Type1 : SegmentKind::Type2;
        const auto iv = initial_segment_interval(n, kind);
        const bool interior = *iv.lo() < r && r < *iv.hi();
        const bool reproduces = signature_values(theta, seg->size()) == *seg;
        if (interior) CHECK(reproduces);
        if (!iv.contains(r)) CHECK_FALSE(reproduces);
      }
    }
  }
}

TEST_CASE("property: soundness and nesting over random parameters") {
  for (const auto& theta : fixtures::random_thetas()) {
    CAPTURE(theta.to_string());
    const Sequence s = signature_values(theta, 500);
    ThetaInterval previous = ThetaInterval::positive_reals();
    for (std::size_t len : {50, 100, 500}) {
      const ThetaInterval iv = theta_interval_from_prefix(s.prefix(len));
      CHECK_FALSE(iv.is_empty());
      CHECK(contains(iv, theta));
      CHECK(iv.is_subset_of(previous));
      previous = iv;
    }
  }
}

TEST_CASE("property: completeness against a Stern-Brocot scan") {
  // Every prefix (length <= 12) reachable from a rational with denominator
  // <= 40 below 8.
  std::map<std::vector<Term>, BigRational> reachable;
  for (const auto& r : stern_brocot_rationals(8, 40)) {
    const Sequence s = signature_values(ExactNumber::rational(r), 12);
    for (std::size_t len = 1; len <= 12; ++len) reachable.emplace(s.prefix(len).vector(), r);
  }
  for (const auto& [terms, r] : reachable) {
    const ThetaInterval iv = theta_interval_from_prefix(Sequence(terms));
    REQUIRE_FALSE(iv.is_empty());
    CHECK(iv.contains(r));
  }

  // Every sequence of length <= 7 over {1..4}: EMPTY only for unreachable
  // prefixes; otherwise interior witnesses regenerate it.
  std::size_t checked = 0;
  std::vector<Term> cur;
  std::function<void()> visit = [&] {
    if (!cur.empty()) {
      const Sequence s(cur);
      const ThetaInterval iv = theta_interval_from_prefix(s);
      CAPTURE(to_string(s));
      if (iv.is_empty()) {
        CHECK(reachable.count(cur) == 0);
      } else if (!iv.is_point()) {
        CHECK(signature_values(ExactNumber::rational(midpoint(iv)), s.size()) == s);
        CHECK(signature_values(ExactNumber::rational(simplest_rational(iv)), s.size()) == s);
      }
      ++checked;
    }
    if (cur.size() == 7) return;
    for (Term v = 1; v <= 4; ++v) {
      cur.push_back(v);
      visit();
      cur.pop_back();
    }
  };
  visit();
  CHECK(checked == 4 + 16 + 64 + 256 + 1024 + 4096 + 16384);
}
