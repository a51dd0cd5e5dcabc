#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "fractalseq/exact_number.hpp"
#include "fractalseq/sequence.hpp"
#include "fractalseq/theta_parser.hpp"

using namespace fractalseq;
using Ord = std::strong_ordering;

TEST_CASE("parse rationals and integers") {
  CHECK(parse_theta("1/7") == ExactNumber::rational(1, 7));
  CHECK(parse_theta("2/14") == ExactNumber::rational(1, 7));
  CHECK(parse_theta("5") == ExactNumber::rational(5));
  CHECK(parse_theta(" 3 / 2 ").to_string() == "3/2");
  CHECK(parse_theta("1000000").to_string() == "1000000");
}

TEST_CASE("parse surds into normal form") {
  const auto r13 = parse_theta("sqrt(13)");
  CHECK(r13.kind() == ExactNumber::Kind::Surd);
  CHECK(r13.a() == 0);
  CHECK(r13.b() == 1);
  CHECK(r13.d() == 13);
  CHECK(r13.c() == 1);

  CHECK(parse_theta("(1+sqrt(5))/2").to_string() == "(1+sqrt(5))/2");
  CHECK(parse_theta("sqrt(8)") == ExactNumber::surd(0, 2, 2, 1));
  CHECK(parse_theta("sqrt(16)") == ExactNumber::rational(4));
  CHECK(parse_theta("(2+2*sqrt(3))/4") == ExactNumber::surd(1, 1, 3, 2));
  CHECK(parse_theta("(3-sqrt(2))/7").to_string() == "(3-sqrt(2))/7");
  CHECK(parse_theta("1/(sqrt(2)-1)") == parse_theta("1+sqrt(2)"));
  CHECK(parse_theta("sqrt(1/2)") == ExactNumber::surd(0, 1, 2, 2));

  // canonical text parses back to the same number
  for (const char* text : {"sqrt(13)", "(1+sqrt(5))/2", "(3-2*sqrt(7))/-5", "4/6", "(5+3*sqrt(12))/9"}) {
    const auto x = parse_theta(text);
    CHECK(parse_theta(x.to_string()) == x);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_theta(""), DomainError);
  CHECK_THROWS_AS(parse_theta("abc"), DomainError);
  CHECK_THROWS_AS(parse_theta("1/0"), DomainError);
  CHECK_THROWS_AS(parse_theta("0"), DomainError);
  CHECK_THROWS_AS(parse_theta("-3/2"), DomainError);
  CHECK_THROWS_AS(parse_theta("1-sqrt(2)"), DomainError);
  CHECK_THROWS_AS(parse_theta("sqrt(2)+sqrt(3)"), DomainError);
  CHECK_THROWS_AS(parse_theta("sqrt(-4)"), DomainError);
  CHECK_THROWS_AS(parse_theta("(1+2"), DomainError);
  CHECK_THROWS_AS(parse_theta("2.5"), DomainError);
}

TEST_CASE("compare_affine examples") {
  const auto r13 = parse_theta("sqrt(13)");
  CHECK(compare_affine(1, 1, 2, 1, r13) == Ord::less);
  CHECK(compare_affine(4, 1, 1, 2, r13) == Ord::less);
  CHECK(compare_affine(2, 1, 1, 8, parse_theta("1/7")) == Ord::equal);
  CHECK(compare_affine(1, 2, 5, 1, r13) == Ord::less);     // 3 < sqrt(13) < 4
  CHECK(compare_affine(5, 1, 1, 2, r13) == Ord::greater);
}

TEST_CASE("sign of A + B sqrt(d)") {
  CHECK(sign_of_quadratic(0, 0, 5) == 0);
  CHECK(sign_of_quadratic(3, -1, 10) == -1);  // 9 < 10
  CHECK(sign_of_quadratic(4, -1, 15) == 1);   // 16 > 15
  CHECK(sign_of_quadratic(-4, 1, 15) == -1);
  CHECK(sign_of_quadratic(-1, -1, 2) == -1);
  CHECK(sign_of_quadratic(0, 2, 2) == 1);
}

TEST_CASE("exact comparison against rationals") {
  const auto r13 = parse_theta("sqrt(13)");
  CHECK(compare(r13, BigRational(3)) > 0);
  CHECK(compare(r13, BigRational(4)) < 0);
  CHECK(compare(r13, BigRational(3606, 1000)) < 0);
  CHECK(compare(r13, BigRational(3605, 1000)) > 0);
  CHECK(compare(parse_theta("1/7"), BigRational(1, 7)) == 0);
}

TEST_CASE("big components fall back to arbitrary precision") {
  // theta = (10^30 + sqrt(2)) / 10^30 has components beyond 64 bits
  const BigInt big = BigInt(1000000000000000LL) * BigInt(1000000000000000LL);
  const auto theta = ExactNumber::surd(big, 1, 2, big);
  CHECK(compare_affine(0, 1, 1, 0, theta) == Ord::greater);   // theta > 1
  CHECK(compare_affine(0, 1, 2, 0, theta) == Ord::less);      // theta < 2
  const auto tiny_gap = ExactNumber::rational(big + 1, big);
  CHECK(compare_affine(0, 1, 1, 0, tiny_gap) == Ord::greater);
  // a close rational approximation needs the exact squaring to decide
  const auto r2 = parse_theta("sqrt(2)");
  const std::int64_t p = 6369051672525773LL;  // p/q is the double nearest sqrt(2), just above it
  const std::int64_t q = 4503599627370496LL;
  CHECK(compare_affine(0, q, p, 0, r2) == Ord::less);
}

TEST_CASE("property: compare_affine agrees with 100-digit decimal evaluation") {
  using Dec = boost::multiprecision::cpp_dec_float_100;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(-40, 40);
  std::uniform_int_distribution<int> comp(1, 12);
  const int radicands[] = {2, 3, 5, 7, 13};
  for (int round = 0; round < 2000; ++round) {
    const int a = small(rng), b = comp(rng), c = comp(rng), d = radicands[round % 5];
    if (sign_of_quadratic(a, b, d) <= 0) continue;
    const auto theta = ExactNumber::surd(a, b, d, c);
    const Dec value = (Dec(a) + Dec(b) * sqrt(Dec(d))) / Dec(c);
    const std::int64_t e1 = small(rng), f1 = small(rng), e2 = small(rng), f2 = small(rng);
    const Dec diff = Dec(e2 - e1) + Dec(f2 - f1) * value;
    const auto got = compare_affine(e1, f1, e2, f2, theta);
    if (diff > Dec("1e-60")) CHECK(got == Ord::less);
    else if (diff < Dec("-1e-60")) CHECK(got == Ord::greater);
    else CHECK(got == Ord::equal);
    // swapping the two forms flips the result
    const auto swapped = compare_affine(e2, f2, e1, f1, theta);
    CHECK((got == Ord::equal) == (swapped == Ord::equal));
    CHECK((got == Ord::less) == (swapped == Ord::greater));
  }
}
