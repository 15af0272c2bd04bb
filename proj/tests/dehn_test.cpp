// Copyright 2026 the su2abelian authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <numeric>

#include "su2abelian/dehn.hpp"
#include "su2abelian/errors.hpp"
#include "su2abelian/search.hpp"

using namespace su2abelian;

TEST_CASE("cfrac evaluation") {
  CHECK(cfrac_eval({3, 2}) == Rational(7, 2));
  CHECK(cfrac_eval({2, -2, 1, 2, -2, -1}) == Rational(14, 11));
  CHECK(cfrac_eval({5}) == Rational(5));
  CHECK_THROWS_AS(cfrac_eval({1, 0}), DivisionByZero);
  CHECK_THROWS_AS(cfrac_eval({3, 1, -1}), DivisionByZero);  // 1 + 1/(-1) = 0
}

TEST_CASE("cfrac expansion") {
  CHECK(cfrac_of(Rational(7, 2)) == std::vector<long long>{3, 2});
  CHECK(cfrac_of(Rational(21, 13)) == std::vector<long long>{1, 1, 1, 1, 1, 2});
  CHECK(cfrac_of(Rational(5)) == std::vector<long long>{5});
  CHECK(cfrac_of(Rational(-7, 2)) == std::vector<long long>{-4, 2});
}

TEST_CASE("cfrac round trip") {
  for (long long p = 2; p <= 500; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Rational x(p, q);
      CHECK(cfrac_eval(cfrac_of(x)) == x);
    }
}

TEST_CASE("lens space homeomorphism") {
  CHECK(lens_homeo(LensSpace::make(7, 2), LensSpace::make(7, 4)));
  CHECK(!lens_homeo(LensSpace::make(5, 1), LensSpace::make(5, 2)));
  CHECK(lens_homeo(LensSpace::make(13, 5), LensSpace::make(13, 5)));
  CHECK(lens_homeo(LensSpace::make(1, 0), LensSpace::make(1, 0)));
  CHECK(!lens_homeo(LensSpace::make(7, 1), LensSpace::make(5, 1)));
  CHECK_THROWS_AS(LensSpace::make(10, 4), InvalidSeifertData);
}

TEST_CASE("lens_homeo is an equivalence relation") {
  std::vector<LensSpace> sample;
  for (long long p = 2; p <= 19; ++p)
    for (long long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) sample.push_back(LensSpace::make(p, q));
  for (const auto& a : sample) {
    CHECK(lens_homeo(a, a));
    for (const auto& b : sample) {
      CHECK(lens_homeo(a, b) == lens_homeo(b, a));
      if (!lens_homeo(a, b)) continue;
      for (const auto& c : sample)
        if (lens_homeo(b, c)) CHECK(lens_homeo(a, c));
    }
  }
}

TEST_CASE("splice homology") {
  CHECK(splice_h1({2, 3, 2, 3}) == 35);
  CHECK(splice_h1({2, 3, -2, 3}) == 37);
  CHECK_THROWS_AS(splice_h1({1, 1, 2, 3}), InvalidSplice);
  CHECK_THROWS_AS(splice_h1({2, 4, 2, 3}), InvalidSplice);
}

TEST_CASE("filling tables") {
  FillingTable t = mg_fillings(1);
  CHECK(t.r2 == LensSpace::make(7, 2));
  CHECK(t.r11 == LensSpace::make(14, 11));
  CHECK(t.r13 == LensSpace::make(21, 13));
  CHECK(t.rT == SpliceDescriptor{2, 3, 2, 3});

  t = mg_fillings(2);
  CHECK(t.r2 == LensSpace::make(9, 2));
  CHECK(t.r11 == LensSpace::make(25, 11));
  CHECK(t.r13 == LensSpace::make(34, 13));
  CHECK(t.rT == SpliceDescriptor{2, 3, 2, 5});

  CHECK_THROWS_AS(mg_fillings(0), PreconditionError);

  // The lens orders stay pairwise distinct across the family.
  for (long long g = 1; g <= 50; ++g) {
    FillingTable f = mg_fillings(g);
    CHECK(f.r2.p != f.r11.p);
    CHECK(f.r2.p != f.r13.p);
    CHECK(f.r11.p != f.r13.p);
  }

  FillingTable c = mg_fillings_conjectural(1);
  CHECK(c.conjectural);
  CHECK(c.r2 == LensSpace::make(1, 0));  // S^3 at g = 1
  CHECK(c.r11 == LensSpace::make(19, 11));
  CHECK(c.r13 == LensSpace::make(18, 13));
}

TEST_CASE("torus knot lens orders") {
  CHECK(torus_knot_lens_orders(3, 17, 2) ==
        std::set<long long>{50, 52, 101, 103});
  CHECK(torus_knot_lens_orders(2, 3, 1) == std::set<long long>{5, 7});
  CHECK_THROWS_AS(torus_knot_lens_orders(1, 5, 1), InvalidTorusKnot);
  CHECK_THROWS_AS(torus_knot_lens_orders(2, 4, 1), InvalidTorusKnot);
}

TEST_CASE("the 11/13 divisibility trap closes on (3,17)") {
  std::set<std::pair<long long, long long>> target = {{3, 17}};
  for (long long g = 1; g <= 40; ++g) {
    auto hits = lemma_11_13_check(g, 20);
    for (const auto& h : hits) CHECK(target.count(h) == 1);
  }
  CHECK(lemma_11_13_check(1, 2).empty());
}
