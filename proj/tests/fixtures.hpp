#pragma once

#include <random>
#include <vector>

#include "fractalseq/exact_number.hpp"
#include "fractalseq/sequence.hpp"

namespace fixtures {

using fractalseq::ExactNumber;
using fractalseq::Sequence;

// Published listings.
inline const Sequence kSignatureSqrt13{1, 2, 3, 4, 1, 5, 2, 6, 3, 7, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11, 4, 8};
inline const Sequence kSignatureOneSeventh{1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 3, 2, 1};

// Five blocks of the worked type-1 construction with n = 4.
inline const Sequence kConstructionA{
    1, 2, 3, 4,                                           //
    1, 5, 2, 6, 3, 7, 4,                                  //
    1, 8, 5, 2, 9, 6, 3, 10, 7, 4, 11,                    //
    1, 8, 5, 12, 2, 9, 6, 13, 3, 10, 7, 14, 4, 11,        //
    1, 8, 15, 5, 12, 2, 9, 16, 6, 13, 3, 10, 17, 7, 14, 4};

// The worked type-2 construction exactly as displayed; term 36 reads 1.
inline const Sequence kConstructionAPrimeDisplayed{
    1, 1, 1, 1,                                           //
    2, 1, 2, 1, 2, 1, 2,                                  //
    3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1,                      //
    4, 2, 3, 1, 4, 2, 3, 1, 4, 2, 3, 1, 4, 1,             //
    5, 3, 1, 4, 2, 5, 3, 1, 4, 2, 5, 3, 1, 4, 2, 5};

/// The 50 parameters shared by the property suites: 25 rationals p/q with
/// p, q <= 50 and 25 positive quadratic irrationals (a + b*sqrt(d))/c with
/// d in {2, 3, 5, 7, 13}. Fixed seed.
inline std::vector<ExactNumber> random_thetas() {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> pq(1, 50);
  std::vector<ExactNumber> out;
  while (out.size() < 25) {
    auto x = ExactNumber::rational(pq(rng), pq(rng));
    bool dup = false;
    for (const auto& y : out) dup = dup || y == x;
    if (!dup) out.push_back(x);
  }
  const int radicands[] = {2, 3, 5, 7, 13};
  std::uniform_int_distribution<int> a_dist(-6, 6);
  std::uniform_int_distribution<int> b_dist(1, 5);
  std::uniform_int_distribution<int> c_dist(1, 9);
  std::uniform_int_distribution<int> d_idx(0, 4);
  std::bernoulli_distribution flip(0.3);
  while (out.size() < 50) {
    const int a = a_dist(rng);
    const int b = b_dist(rng) * (flip(rng) ? -1 : 1);
    const int d = radicands[d_idx(rng)];
    const int c = c_dist(rng);
    // keep only positive values
    if (fractalseq::sign_of_quadratic(a, b, d) <= 0) continue;
    out.push_back(ExactNumber::surd(a, b, d, c));
  }
  return out;
}

}  // namespace fixtures
