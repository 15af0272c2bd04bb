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

#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <utility>

namespace su2abelian {

// A unit vector in R^3, identified with a purely imaginary unit quaternion.
struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(Vec3 v) {
  double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

// An element of SU(2) represented as a unit quaternion w + xi + yj + zk.
// Products renormalize, so norms stay within 1e-12 of 1 even along long words.
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  static constexpr Quat one() { return {1, 0, 0, 0}; }
  static constexpr Quat minus_one() { return {-1, 0, 0, 0}; }
  static constexpr Quat i() { return {0, 1, 0, 0}; }
  static constexpr Quat j() { return {0, 0, 1, 0}; }
  static constexpr Quat k() { return {0, 0, 0, 1}; }

  Vec3 imag() const { return {x, y, z}; }

  friend Quat operator-(Quat q) { return {-q.w, -q.x, -q.y, -q.z}; }
};

inline double norm(Quat q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quat normalized(Quat q) {
  double n = norm(q);
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

// Inverse of a unit quaternion.
inline Quat conj(Quat q) { return {q.w, -q.x, -q.y, -q.z}; }

// Raw Hamilton product, no renormalization.  Internal building block; the
// public product is mul() below.
inline Quat raw_mul(Quat a, Quat b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// Quaternion product of two unit quaternions, renormalized.
inline Quat mul(Quat a, Quat b) { return normalized(raw_mul(a, b)); }

inline Quat operator*(Quat a, Quat b) { return mul(a, b); }

// Euclidean distance in R^4.
inline double dist(Quat a, Quat b) {
  double dw = a.w - b.w, dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

// cos(theta) + sin(theta) v for a unit vector v.
inline Quat qexp(Vec3 v, double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return {c, s * v.x, s * v.y, s * v.z};
}

// Rotation angle and axis of a unit quaternion: q = cos(theta) + sin(theta) v
// with theta in [0, pi].  The axis is absent for q = +-1 (|imag| < 1e-10);
// callers must branch rather than rely on a fabricated direction.
struct AxisAngle {
  double theta = 0;
  std::optional<Vec3> axis;
};

inline AxisAngle qaxis(Quat q) {
  double w = q.w;
  if (w > 1) w = 1;
  if (w < -1) w = -1;
  AxisAngle out;
  out.theta = std::acos(w);
  Vec3 im = q.imag();
  if (norm(im) >= 1e-10) out.axis = normalized(im);
  return out;
}

inline Quat power(Quat q, long long e) {
  Quat base = e >= 0 ? q : conj(q);
  long long n = e >= 0 ? e : -e;
  Quat acc = Quat::one();
  for (long long t = 0; t < n; ++t) acc = mul(acc, base);
  return acc;
}

inline Quat commutator(Quat a, Quat b) {
  return mul(mul(a, b), mul(conj(a), conj(b)));
}

// A unit quaternion r with r u r^-1 = v, for unit vectors u, v.
Quat aligning_rotation(Vec3 u, Vec3 v);

// (A, B) with [A, B] = z to within 1e-10.  Built from the half-angle identity
// e^{i theta} = [e^{i theta/2}, j], conjugated so the i-axis moves onto the
// rotation axis of z.  z = 1 yields (1, 1) and z = -1 yields (i, j).
std::pair<Quat, Quat> commutator_solve(Quat z);

// Best-effort recognition of theta/pi as a fraction p/q with q <= max_den,
// for the rotation angle theta of q.  Used only to annotate abelian verdicts;
// floating point cannot distinguish cyclic from dense circle subgroups.
std::optional<std::pair<long long, long long>> rational_angle(Quat q,
                                                              long long max_den);

std::ostream& operator<<(std::ostream& os, const Quat& q);

}  // namespace su2abelian
