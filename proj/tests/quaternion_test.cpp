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
#include "su2abelian/presentation.hpp"
#include "su2abelian/quaternion.hpp"
#include "test_support.hpp"

using namespace su2abelian;
using testsupport::random_unit_quat;
using testsupport::random_unit_vec3;

TEST_CASE("quaternion products") {
  CHECK(dist(mul(Quat::i(), Quat::j()), Quat::k()) < 1e-15);
  CHECK(dist(mul(Quat::i(), Quat::i()), Quat::minus_one()) < 1e-15);

  std::uint64_t state = 7;
  for (int t = 0; t < 200; ++t) {
    Quat q = random_unit_quat(state);
    CHECK(dist(mul(q, conj(q)), Quat::one()) < 1e-14);
  }
}

TEST_CASE("product of unit quaternions stays unit") {
  std::uint64_t state = 11;
  for (int t = 0; t < 500; ++t) {
    Quat a = random_unit_quat(state), b = random_unit_quat(state);
    CHECK(std::abs(norm(mul(a, b)) - 1.0) < 1e-12);
  }
}

TEST_CASE("qexp") {
  CHECK(dist(qexp({1, 0, 0}, 0), Quat::one()) < 1e-15);
  CHECK(dist(qexp({0, 1, 0}, M_PI), Quat::minus_one()) < 1e-15);
  Quat q = qexp({1, 0, 0}, M_PI / 3);
  CHECK(q.w == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q.x == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));

  std::uint64_t state = 3;
  for (int t = 0; t < 100; ++t) {
    Vec3 v = random_unit_vec3(state);
    double theta = 0.1 + 2.9 * (t / 100.0);
    CHECK(qexp(v, theta).w == std::cos(theta));
  }
}

TEST_CASE("qaxis") {
  AxisAngle aa = qaxis(Quat::minus_one());
  CHECK(aa.theta == doctest::Approx(M_PI));
  CHECK(!aa.axis);

  aa = qaxis(Quat::k());
  CHECK(aa.theta == doctest::Approx(M_PI / 2));
  REQUIRE(aa.axis);
  CHECK(norm(*aa.axis - Vec3{0, 0, 1}) < 1e-14);

  std::uint64_t state = 19;
  for (int t = 0; t < 200; ++t) {
    Vec3 v = random_unit_vec3(state);
    double theta = 0.1 + 2.9 * (t / 200.0);
    AxisAngle back = qaxis(qexp(v, theta));
    REQUIRE(back.axis);
    CHECK(std::abs(back.theta - theta) < 1e-10);
    CHECK(norm(*back.axis - v) < 1e-10);
  }
}

TEST_CASE("eval_word") {
  Representation rep{{Quat::i()}};
  Word aa = {{0, 2}};
  CHECK(dist(eval_word(rep, aa), Quat::minus_one()) < 1e-15);
  Word cancel;
  append_syllable(cancel, 0, 1);
  append_syllable(cancel, 0, -1);
  CHECK(dist(eval_word(rep, cancel), Quat::one()) < 1e-15);

  Representation rep2{{Quat::i(), Quat::j()}};
  Word comm = {{0, 1}, {1, 1}, {0, -1}, {1, -1}};
  CHECK(dist(eval_word(rep2, comm), Quat::minus_one()) < 1e-15);

  Word bad = {{5, 1}};
  CHECK_THROWS_AS(eval_word(rep, bad), UnknownGenerator);
}

TEST_CASE("eval_word respects concatenation") {
  std::uint64_t state = 23;
  Representation rep{{random_unit_quat(state), random_unit_quat(state),
                      random_unit_quat(state)}};
  for (int t = 0; t < 100; ++t) {
    Word w1, w2;
    for (int k = 0; k < 4; ++k) {
      append_syllable(w1, static_cast<int>(detail::splitmix64(state) % 3),
                      static_cast<int>(detail::splitmix64(state) % 5) - 2);
      append_syllable(w2, static_cast<int>(detail::splitmix64(state) % 3),
                      static_cast<int>(detail::splitmix64(state) % 5) - 2);
    }
    Quat lhs = eval_word(rep, concat(w1, w2));
    Quat rhs = mul(eval_word(rep, w1), eval_word(rep, w2));
    CHECK(dist(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("relator_residual") {
  GroupPresentation free2{{"a", "b"}, {}};
  Representation any{{Quat::i(), Quat::j()}};
  CHECK(relator_residual(free2, any) == 0.0);

  GroupPresentation a2{{"a"}, {{{0, 2}}}};
  Representation ai{{Quat::i()}};
  CHECK(relator_residual(a2, ai) == doctest::Approx(2.0));

  GroupPresentation a4{{"a"}, {{{0, 4}}}};
  CHECK(relator_residual(a4, ai) < 1e-14);
}

TEST_CASE("is_abelian_rep") {
  CHECK(is_abelian_rep(Representation{{Quat::i(), Quat::i()}}, 1e-6));
  CHECK(!is_abelian_rep(Representation{{Quat::i(), Quat::j()}}, 1e-6));
  CHECK(is_abelian_rep(
      Representation{{qexp({1, 0, 0}, 0.7), qexp({1, 0, 0}, 2.1)}}, 1e-6));
}

TEST_CASE("commutator_solve") {
  auto [a1, b1] = commutator_solve(Quat::one());
  CHECK(dist(a1, Quat::one()) < 1e-15);
  CHECK(dist(b1, Quat::one()) < 1e-15);

  auto [a2, b2] = commutator_solve(Quat::minus_one());
  CHECK(dist(a2, Quat::i()) < 1e-15);
  CHECK(dist(b2, Quat::j()) < 1e-15);
  CHECK(dist(commutator(a2, b2), Quat::minus_one()) < 1e-14);

  auto [a3, b3] = commutator_solve(Quat::k());
  CHECK(dist(commutator(a3, b3), Quat::k()) < 1e-10);

  std::uint64_t state = 2026;
  for (int t = 0; t < 1000; ++t) {
    Quat z = random_unit_quat(state);
    auto [a, b] = commutator_solve(z);
    CHECK(dist(commutator(a, b), z) < 1e-10);
  }
}

TEST_CASE("rational angle recognition") {
  auto frac = rational_angle(qexp({1, 0, 0}, M_PI / 3), 10000);
  REQUIRE(frac);
  CHECK(frac->first == 1);
  CHECK(frac->second == 3);
  auto whole = rational_angle(Quat::one(), 10000);
  REQUIRE(whole);
  CHECK(whole->first == 0);
}
