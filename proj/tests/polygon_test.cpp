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

#include "su2abelian/errors.hpp"
#include "su2abelian/polygon.hpp"
#include "test_support.hpp"

using namespace su2abelian;

TEST_CASE("angle triple status") {
  CHECK(angle_triple_status({M_PI / 3, M_PI / 3, M_PI / 3}) ==
        TripleStatus::NonabelianExists);
  CHECK(angle_triple_status({2 * M_PI / 3, 2 * M_PI / 3, 2 * M_PI / 3}) ==
        TripleStatus::AbelianOnly);
  CHECK(angle_triple_status({M_PI, M_PI / 4, M_PI / 4}) == TripleStatus::NoRep);
  CHECK(angle_triple_status({M_PI / 2, M_PI / 4, 3 * M_PI / 4}) ==
        TripleStatus::AbelianOnly);
}

TEST_CASE("angle triple status, exact rational angles") {
  using R = Rational;
  CHECK(angle_triple_status_exact(R(1, 3), R(1, 3), R(1, 3)) ==
        TripleStatus::NonabelianExists);
  CHECK(angle_triple_status_exact(R(2, 3), R(2, 3), R(2, 3)) ==
        TripleStatus::AbelianOnly);
  CHECK(angle_triple_status_exact(R(1), R(1, 4), R(1, 4)) == TripleStatus::NoRep);
  // The (2,4,4) boundary: pi/2 + pi/4 = 3pi/4 exactly.
  CHECK(angle_triple_status_exact(R(1, 2), R(1, 4), R(3, 4)) ==
        TripleStatus::AbelianOnly);
}

TEST_CASE("construct_triple gauge and residual") {
  TripleAxes axes = construct_triple({M_PI / 2, M_PI / 2, M_PI / 2});
  CHECK(norm(axes.v1 - Vec3{1, 0, 0}) < 1e-14);
  CHECK(norm(axes.v2 - Vec3{0, 1, 0}) < 1e-14);
  CHECK(norm(axes.v3 - Vec3{0, 0, -1}) < 1e-10);

  TripleAxes deg = construct_triple({0, 1.0, 1.0});
  CHECK(norm(deg.v2 + deg.v3) < 1e-10);  // v3 = -v2

  AngleTriple t{M_PI / 3, M_PI / 3, M_PI / 3};
  TripleAxes a2 = construct_triple(t);
  Quat p = mul(mul(qexp(a2.v1, t.theta1), qexp(a2.v2, t.theta2)),
               qexp(a2.v3, t.theta3));
  CHECK(dist(p, Quat::one()) < 1e-12);

  CHECK_THROWS_AS(construct_triple({M_PI, M_PI / 4, M_PI / 4}), Inadmissible);
}

TEST_CASE("construct_triple residual contract on the grid") {
  for (int i = 0; i <= 12; ++i) {
    for (int j = 0; j <= 12; ++j) {
      for (int k = 0; k <= 12; ++k) {
        AngleTriple t{i * M_PI / 12, j * M_PI / 12, k * M_PI / 12};
        if (angle_triple_status(t) == TripleStatus::NoRep) continue;
        TripleAxes v = construct_triple(t);
        Quat p = mul(mul(qexp(v.v1, t.theta1), qexp(v.v2, t.theta2)),
                     qexp(v.v3, t.theta3));
        CHECK(dist(p, Quat::one()) < 1e-10);
      }
    }
  }
}

TEST_CASE("delta_has_nonabelian") {
  CHECK(!delta_has_nonabelian(PolygonSignature({2, 3, 5})));
  CHECK(!delta_has_nonabelian(PolygonSignature({3, 3, 3})));
  CHECK(delta_has_nonabelian(PolygonSignature({3, 3, 4})));
  CHECK(delta_has_nonabelian(PolygonSignature({2, 3, 3, 3})));
  CHECK(!delta_has_nonabelian(PolygonSignature({2, 2, 2, 2, 7})));
}

TEST_CASE("delta_witness explicit values") {
  // Delta(3,3,3,3): (e^{2pi i/3}, e^{2pi j/3}, e^{-2pi j/3}, e^{-2pi i/3})
  Representation w = delta_witness(PolygonSignature({3, 3, 3, 3}));
  double th = 2 * M_PI / 3;
  CHECK(dist(w.images[0], qexp({1, 0, 0}, th)) < 1e-14);
  CHECK(dist(w.images[1], qexp({0, 1, 0}, th)) < 1e-14);
  CHECK(dist(w.images[2], qexp({0, 1, 0}, -th)) < 1e-14);
  CHECK(dist(w.images[3], qexp({1, 0, 0}, -th)) < 1e-14);

  // Delta(2,3,3,3): c1 = -1, the rest rotations by 2pi/3 about the stated axes.
  Representation w2 = delta_witness(PolygonSignature({2, 3, 3, 3}));
  double r3 = std::sqrt(3.0);
  CHECK(dist(w2.images[0], Quat::minus_one()) < 1e-14);
  CHECK(dist(w2.images[1], qexp({1, 0, 0}, th)) < 1e-14);
  CHECK(dist(w2.images[2], qexp({-1.0 / 3, 2.0 / 3, 2.0 / 3}, th)) < 1e-14);
  CHECK(dist(w2.images[3],
             qexp({-1.0 / 3, (-1 - r3) / 3, (-1 + r3) / 3}, th)) < 1e-14);

  // Delta(3,3,4) goes through the angle recipe (2pi/3, 2pi/3, pi/2).
  Representation w3 = delta_witness(PolygonSignature({3, 3, 4}));
  CHECK(std::abs(qaxis(w3.images[0]).theta - th) < 1e-12);
  CHECK(std::abs(qaxis(w3.images[1]).theta - th) < 1e-12);
  CHECK(std::abs(qaxis(w3.images[2]).theta - M_PI / 2) < 1e-12);

  CHECK_THROWS_AS(delta_witness(PolygonSignature({2, 3, 5})), NoWitness);
  CHECK_THROWS_AS(delta_witness(PolygonSignature({3, 3, 3})), NoWitness);
}

TEST_CASE("delta_witness contracts across small signatures") {
  for (long long a1 = 2; a1 <= 6; ++a1)
    for (long long a2 = a1; a2 <= 6; ++a2)
      for (long long a3 = a2; a3 <= 6; ++a3)
        for (long long a4 = a3; a4 <= 7; ++a4) {
          PolygonSignature sig({a1, a2, a3, a4});
          if (!delta_has_nonabelian(sig)) continue;
          Representation w = delta_witness(sig);
          CHECK(relator_residual(polygon_presentation(sig), w) < 1e-10);
          CHECK(!is_abelian_rep(w, 1e-6));
        }
}

TEST_CASE("witness images survive reordering of the cone points") {
  // The Seifert-facing entry point takes unsorted orders; product must hold.
  std::vector<std::vector<long long>> orders = {
      {4, 3, 3}, {5, 2, 2}, {3, 4, 3, 2}, {3, 3, 3, 2}, {6, 2, 2, 3, 2}};
  for (const auto& alphas : orders) {
    std::vector<long long> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    if (!delta_has_nonabelian(PolygonSignature(sorted))) continue;
    auto images = detail::delta_witness_images(alphas);
    Quat prod = Quat::one();
    for (std::size_t i = 0; i < images.size(); ++i) {
      prod = mul(prod, images[i]);
      CHECK(dist(power(images[i], alphas[i]), Quat::one()) < 1e-10);
    }
    CHECK(dist(prod, Quat::one()) < 1e-10);
    CHECK(!is_abelian_rep(Representation{images}, 1e-6));
  }
}

TEST_CASE("triangle status agrees with the axis-search oracle on a subgrid") {
  // Full 13^3 grid at 500 restarts is exercised by the acceptance suite;
  // here a coarser sample keeps the unit run quick.
  for (int i = 0; i <= 12; i += 3) {
    for (int j = 0; j <= 12; j += 4) {
      for (int k = 0; k <= 12; k += 3) {
        AngleTriple t{i * M_PI / 12, j * M_PI / 12, k * M_PI / 12};
        TripleStatus status = angle_triple_status(t);
        auto oracle =
            testsupport::axis_search(t.theta1, t.theta2, t.theta3, 60, 1234);
        if (status == TripleStatus::NoRep) {
          CHECK(oracle.best_residual > 1e-4);
        } else {
          CHECK(oracle.best_residual < 1e-8);
          CHECK(oracle.noncommuting_found ==
                (status == TripleStatus::NonabelianExists));
        }
      }
    }
  }
}
