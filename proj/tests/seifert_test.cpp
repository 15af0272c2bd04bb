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

#include <cmath>
#include <numeric>

#include "su2abelian/errors.hpp"
#include "su2abelian/seifert.hpp"
#include "test_support.hpp"

using namespace su2abelian;

namespace {

SeifertInvariants s2(std::vector<SeifertPair> pairs) {
  return {BaseSurface::S2(), std::move(pairs)};
}
SeifertInvariants t2(std::vector<SeifertPair> pairs) {
  return {BaseSurface::T2(), std::move(pairs)};
}
SeifertInvariants rp2(std::vector<SeifertPair> pairs) {
  return {BaseSurface::RP2(), std::move(pairs)};
}

long long det_formula(const SeifertInvariants& s) {
  const auto& p = s.pairs;
  return std::abs(p[0].alpha * p[1].alpha * p[2].beta +
                  p[0].alpha * p[1].beta * p[2].alpha +
                  p[0].beta * p[1].alpha * p[2].alpha);
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize(s2({{1, 1}, {2, 1}})) == s2({{2, 3}}));
  CHECK(normalize(s2({{2, 1}, {3, 1}})) == s2({{2, 1}, {3, 1}}));
  CHECK(normalize(t2({{1, 2}})) == t2({{1, 2}}));
  // A trivial leftover (1,0) is dropped outright.
  CHECK(normalize(rp2({{1, 1}, {1, -1}})) == rp2({}));
  CHECK(normalize(s2({{1, 3}})) == s2({{1, 3}}));
}

TEST_CASE("pi1 presentations") {
  GroupPresentation p = pi1_presentation(s2({{2, 1}, {3, 1}, {5, 1}}));
  CHECK(p.generators == std::vector<std::string>{"c1", "c2", "c3", "h"});
  CHECK(p.relators.size() == 7);  // 3 centrality + 3 fiber + 1 product

  GroupPresentation q = pi1_presentation(rp2({{3, 1}}));
  CHECK(q.generators == std::vector<std::string>{"a1", "c1", "h"});
  CHECK(q.relators.size() == 4);

  GroupPresentation r = pi1_presentation(t2({}));
  CHECK(r.generators == std::vector<std::string>{"a1", "b1", "h"});
  CHECK(abelianization(r) == AbelianGroup{3, {}});

  CHECK_THROWS_AS(pi1_presentation(s2({{2, 2}})), InvalidSeifertData);
  CHECK_THROWS_AS(
      pi1_presentation({BaseSurface::nonorientable_genus(0), {}}),
      InvalidSeifertData);
}

TEST_CASE("h1") {
  CHECK(h1(s2({{2, 1}, {3, 1}, {5, 1}})) == AbelianGroup{0, {31}});

  // Euler number 0 over S^2(3,3,3): the flat T^2 semidirect Z/3 bundle,
  // whose torsion is coker(A - I) = Z/3 for the order-3 monodromy A.
  AbelianGroup inf = h1(s2({{3, 1}, {3, 1}, {3, -2}}));
  CHECK(inf.rank == 1);
  CHECK(inf.torsion == std::vector<long long>{3});

  for (long long alpha : {2, 3, 5})
    CHECK(h1(rp2({{alpha, 1}})) == AbelianGroup{0, {4 * alpha}});

  CHECK(h1(rp2({})) == AbelianGroup{0, {2, 2}});
}

TEST_CASE("euler number and orbifold characteristic") {
  CHECK(euler_number(s2({{2, 1}, {4, 1}, {4, -3}})) == Rational(0));
  CHECK(euler_number(t2({{1, 2}})) == Rational(-2));
  CHECK(euler_number(s2({{3, 1}, {3, 1}, {3, 1}})) == Rational(-1));

  CHECK(orbifold_euler_char(s2({{2, 1}, {4, 1}, {4, 1}})) == Rational(0));
  CHECK(orbifold_euler_char(s2({{2, 1}, {3, 1}, {5, 1}})) == Rational(1, 30));
  CHECK(orbifold_euler_char(t2({})) == Rational(0));
}

TEST_CASE("geometry") {
  CHECK(geometry(s2({{2, 1}, {4, 1}, {4, -3}})) == GeometryTag::Euclidean);
  CHECK(geometry(s2({{3, 1}, {3, 1}, {3, 1}})) == GeometryTag::Nil);
  CHECK(geometry(s2({{2, 1}, {3, 1}, {5, 1}})) == GeometryTag::Spherical);
  CHECK(geometry(s2({})) == GeometryTag::S2xR);
  CHECK(geometry(rp2({})) == GeometryTag::S2xR);     // RP^3 # RP^3
  CHECK(geometry(t2({})) == GeometryTag::Euclidean); // T^3
  CHECK(geometry(s2({{3, 1}, {3, 1}, {3, -2}})) == GeometryTag::Euclidean);
  CHECK(geometry(s2({{2, 1}, {4, 1}, {4, 1}})) == GeometryTag::Nil);
  CHECK(geometry(s2({{2, 1}, {3, 1}, {7, 1}})) == GeometryTag::SL2Rtilde);
  CHECK(geometry(s2({{2, 1}, {3, 1}, {7, -1}, {42, 5}})) != GeometryTag::Spherical);
  CHECK(geometry({BaseSurface::orientable_genus(2), {}}) == GeometryTag::H2xR);
}

TEST_CASE("classification verdicts") {
  auto v = is_su2_abelian(s2({{2, 1}, {4, 1}, {4, -3}}));
  CHECK(v.abelian);
  CHECK(*v.certificate == AbelianCertificate::Base244);

  CHECK(!is_su2_abelian(s2({{3, 1}, {3, 1}, {3, 1}})).abelian);

  v = is_su2_abelian(s2({{3, 1}, {3, 1}, {3, -2}}));
  CHECK(v.abelian);
  CHECK(*v.certificate == AbelianCertificate::Base333EvenH1);

  v = is_su2_abelian(rp2({{3, 1}}));
  CHECK(v.abelian);
  CHECK(*v.certificate == AbelianCertificate::CyclicPi1);

  CHECK(!is_su2_abelian(rp2({{5, 2}})).abelian);
  CHECK(!is_su2_abelian(t2({{1, 3}})).abelian);
  CHECK(!is_su2_abelian({BaseSurface::nonorientable_genus(2), {}}).abelian);

  v = is_su2_abelian(t2({{1, 2}}));
  CHECK(v.abelian);
  CHECK(*v.certificate == AbelianCertificate::CircleBundleT2Even);
  v = is_su2_abelian(t2({}));
  CHECK(v.abelian);

  v = is_su2_abelian(s2({{2, 1}, {3, 1}}));
  CHECK(v.abelian);
  CHECK(*v.certificate == AbelianCertificate::CyclicPi1);

  v = is_su2_abelian(rp2({}));
  CHECK(v.abelian);
  CHECK(*v.certificate == AbelianCertificate::RP3ConnectSumRP3);
  // A trivial fiber (1,0) over RP^2 is still RP^3 # RP^3.
  v = is_su2_abelian(rp2({{1, 0}}));
  CHECK(v.abelian);
  CHECK(*v.certificate == AbelianCertificate::RP3ConnectSumRP3);
}

TEST_CASE("explicit witnesses from the large-fiber construction") {
  SeifertInvariants s = s2({{2, 1}, {2, 1}, {4, 1}, {4, 1}});
  Representation w = nonabelian_witness(s);
  // The (2,2,4,4) base case is explicit: h -> -1, c1 -> i, c2 -> -i,
  // c3 -> e^{pi j/4}, c4 -> e^{-pi j/4}.
  CHECK(dist(w.images[0], Quat::i()) < 1e-14);
  CHECK(dist(w.images[1], -Quat::i()) < 1e-14);
  CHECK(dist(w.images[2], qexp({0, 1, 0}, M_PI / 4)) < 1e-14);
  CHECK(dist(w.images[3], qexp({0, 1, 0}, -M_PI / 4)) < 1e-14);
  CHECK(dist(w.images[4], Quat::minus_one()) < 1e-14);
  CHECK(relator_residual(pi1_presentation(s), w) < 1e-12);
}

TEST_CASE("witnesses across bases") {
  // (3,3,3) with odd beta sum: angles pi/3 each.
  SeifertInvariants s333 = s2({{3, 1}, {3, 1}, {3, 1}});
  Representation w = nonabelian_witness(s333);
  CHECK(std::abs(qaxis(w.images[0]).theta - M_PI / 3) < 1e-12);
  CHECK(dist(w.images[3], Quat::minus_one()) < 1e-14);
  CHECK(relator_residual(pi1_presentation(s333), w) < 1e-10);

  SeifertInvariants st = t2({{2, 1}});
  w = nonabelian_witness(st);
  CHECK(relator_residual(pi1_presentation(st), w) < 1e-10);
  CHECK(!is_abelian_rep(w, 1e-6));

  // RP^2((5,2)): a -> j, c -> -1, h -> e^{5 pi i/2} = i.
  SeifertInvariants sp = rp2({{5, 2}});
  w = nonabelian_witness(sp);
  CHECK(dist(w.images[0], Quat::j()) < 1e-14);
  CHECK(dist(w.images[1], Quat::minus_one()) < 1e-14);
  CHECK(dist(w.images[2], Quat::i()) < 1e-12);
  CHECK(relator_residual(pi1_presentation(sp), w) < 1e-10);

  CHECK_THROWS_AS(nonabelian_witness(s2({{2, 1}, {4, 1}, {4, 1}})), IsAbelian);
}

TEST_CASE("witness contracts on a mixed corpus") {
  std::vector<SeifertInvariants> corpus = {
      s2({{3, 1}, {3, 1}, {3, 1}}),
      s2({{3, 2}, {3, 2}, {3, 1}}),
      s2({{2, 1}, {3, 1}, {7, 1}}),
      s2({{2, 1}, {2, 1}, {2, 1}}),
      s2({{5, 2}, {4, 3}, {3, 1}}),
      s2({{4, 1}, {2, 1}, {2, -1}, {4, 3}}),   // unsorted (2,...,2,p,q) shape
      s2({{2, 1}, {2, 1}, {2, 1}, {2, 1}}),
      s2({{2, 1}, {2, 1}, {2, 1}, {2, 1}, {4, 1}}),
      s2({{3, 1}, {4, 1}, {5, 1}, {2, 1}}),
      s2({{3, 1}, {3, 2}, {3, 1}, {3, 2}}),
      s2({{1, 1}, {3, 1}, {3, 1}, {3, -2}}),   // alpha = 1 pair folded in
      s2({{2, 1}, {3, 1}, {3, 1}, {3, 1}}),
      t2({{2, 1}}),
      t2({{1, 1}}),
      t2({{3, 2}, {2, 1}}),
      t2({{1, 1}, {5, 2}}),
      rp2({{5, 2}}),
      rp2({{1, 2}}),
      rp2({{2, 1}, {3, 1}}),
      rp2({{1, 1}, {4, 3}, {2, 1}}),
      {BaseSurface::orientable_genus(2), {}},
      {BaseSurface::orientable_genus(2), {{3, 2}}},
      {BaseSurface::orientable_genus(3), {{2, 1}, {5, 3}}},
      {BaseSurface::nonorientable_genus(2), {}},
      {BaseSurface::nonorientable_genus(3), {{4, 3}}},
  };
  for (const auto& s : corpus) {
    CAPTURE(to_string(s));
    auto verdict = is_su2_abelian(s);
    REQUIRE(!verdict.abelian);
    REQUIRE(verdict.witness);
    CHECK(relator_residual(pi1_presentation(s), *verdict.witness) < 1e-10);
    CHECK(!is_abelian_rep(*verdict.witness, 1e-6));
  }
}

TEST_CASE("normalize preserves the invariants") {
  std::vector<SeifertInvariants> sample = {
      s2({{1, 1}, {2, 1}, {4, 1}, {4, -3}}),
      s2({{1, -2}, {3, 1}, {3, 1}, {3, 1}}),
      s2({{1, 1}, {1, -1}, {2, 1}, {3, 2}}),
      t2({{1, 2}, {3, 1}}),
      rp2({{1, 1}, {5, 2}}),
  };
  for (const auto& s : sample) {
    CAPTURE(to_string(s));
    SeifertInvariants ns = normalize(s);
    CHECK(h1(s) == h1(ns));
    CHECK(euler_number(s) == euler_number(ns));
    CHECK(geometry(s) == geometry(ns));
    CHECK(is_su2_abelian(s).abelian == is_su2_abelian(ns).abelian);
  }
}

TEST_CASE("the (3,3,3) family: abelian iff beta sum is even iff |H1| even or infinite") {
  for (long long b1 : {-2, -1, 1, 2})
    for (long long b2 : {-2, -1, 1, 2})
      for (long long b3 : {-2, -1, 1, 2}) {
        SeifertInvariants s = s2({{3, b1}, {3, b2}, {3, b3}});
        bool even_sum = ((b1 + b2 + b3) % 2 + 2) % 2 == 0;
        CHECK(is_su2_abelian(s).abelian == even_sum);
        AbelianGroup g = h1(s);
        bool even_or_infinite = g.rank > 0 || g.torsion_order() % 2 == 0;
        CHECK(even_sum == even_or_infinite);
      }
}

TEST_CASE("h1 order matches the closed forms") {
  std::uint64_t state = 99;
  for (int t = 0; t < 60; ++t) {
    SeifertInvariants s = s2({});
    for (int i = 0; i < 3; ++i) {
      long long alpha = 2 + static_cast<long long>(detail::splitmix64(state) % 7);
      long long beta;
      do {
        beta = static_cast<long long>(detail::splitmix64(state) % 13) - 6;
      } while (std::gcd(alpha, std::abs(beta)) != 1);
      s.pairs.push_back({alpha, beta});
    }
    CAPTURE(to_string(s));
    AbelianGroup g = h1(s);
    long long formula = det_formula(s);
    if (formula == 0)
      CHECK(g.rank > 0);
    else
      CHECK((g.rank == 0 && g.order() == formula));
    // |H1| = alpha1...alphan * |e| whenever e != 0.
    Rational e = euler_number(s);
    if (e != Rational(0)) {
      Rational prod(1);
      for (const auto& p : s.pairs) prod *= Rational(p.alpha);
      Rational order = prod * (e > Rational(0) ? e : -e);
      CHECK(order.denominator() == 1);
      CHECK(g.order() == order.numerator());
    }
  }
}

TEST_CASE("sfs grammar round trip") {
  SeifertInvariants s = parse_sfs("sfs(S2; 2/1, 4/1, 4/-3)");
  CHECK(s == s2({{2, 1}, {4, 1}, {4, -3}}));
  CHECK(parse_sfs("sfs(T2)") == t2({}));
  CHECK(parse_sfs("sfs(N3; 2/1)") ==
        SeifertInvariants{BaseSurface::nonorientable_genus(3), {{2, 1}}});
  CHECK(parse_sfs(to_string(s)) == s);
  CHECK_THROWS_AS(parse_sfs("sfs(S2; 2/2)"), InvalidSeifertData);
  CHECK_THROWS_AS(parse_sfs("sfs(S2; 2/1"), ParseError);
  CHECK_THROWS_AS(parse_sfs("lens(5,2)"), ParseError);
}
