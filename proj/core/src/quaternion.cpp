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

#include "su2abelian/quaternion.hpp"

#include <cmath>

namespace su2abelian {

Quat aligning_rotation(Vec3 u, Vec3 v) {
  Vec3 sum = u + v;
  if (norm(sum) < 1e-12) {
    // u = -v: rotate by pi about any axis orthogonal to v.
    Vec3 probe = std::abs(v.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 axis = normalized(cross(v, probe));
    return {0, axis.x, axis.y, axis.z};
  }
  // For unit imaginaries, conjugation by the normalized half-way vector
  // (v + u)/|v + u| carries u to v.
  Vec3 h = normalized(sum);
  return {0, h.x, h.y, h.z};
}

std::pair<Quat, Quat> commutator_solve(Quat z) {
  AxisAngle aa = qaxis(z);
  if (!aa.axis) {
    if (z.w > 0) return {Quat::one(), Quat::one()};
    return {Quat::i(), Quat::j()};  // [i, j] = -1
  }
  double theta = aa.theta;
  Quat a0 = qexp({1, 0, 0}, theta / 2);  // e^{i theta/2}
  Quat b0 = Quat::j();
  Quat r = aligning_rotation({1, 0, 0}, *aa.axis);
  Quat a = mul(mul(r, a0), conj(r));
  Quat b = mul(mul(r, b0), conj(r));
  return {a, b};
}

std::optional<std::pair<long long, long long>> rational_angle(Quat q,
                                                              long long max_den) {
  double t = qaxis(q).theta / M_PI;  // in [0, 1]
  // Continued-fraction convergents of t until the denominator bound.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = t;
  for (int iter = 0; iter < 64; ++iter) {
    double fa = std::floor(x);
    long long a = static_cast<long long>(fa);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = x - fa;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return std::nullopt;
  if (std::abs(t - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-9)
    return std::make_pair(p1, q1);
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Quat& q) {
  return os << q.w << (q.x < 0 ? " - " : " + ") << std::abs(q.x) << "i"
            << (q.y < 0 ? " - " : " + ") << std::abs(q.y) << "j"
            << (q.z < 0 ? " - " : " + ") << std::abs(q.z) << "k";
}

}  // namespace su2abelian
