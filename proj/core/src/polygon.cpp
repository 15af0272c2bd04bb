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

#include "su2abelian/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "su2abelian/errors.hpp"

namespace su2abelian {

namespace {
constexpr double kStrictMargin = 1e-12;
}

TripleStatus angle_triple_status(const AngleTriple& t) {
  const double s[4] = {t.theta1 + t.theta2 - t.theta3,
                       t.theta2 + t.theta3 - t.theta1,
                       t.theta3 + t.theta1 - t.theta2,
                       2 * M_PI - t.theta1 - t.theta2 - t.theta3};
  bool all_strict = true;
  for (double v : s) {
    if (v < -kStrictMargin) return TripleStatus::NoRep;
    if (v <= kStrictMargin) all_strict = false;
  }
  return all_strict ? TripleStatus::NonabelianExists : TripleStatus::AbelianOnly;
}

TripleStatus angle_triple_status_exact(const Rational& a1, const Rational& a2,
                                       const Rational& a3) {
  const Rational s[4] = {a1 + a2 - a3, a2 + a3 - a1, a3 + a1 - a2,
                         Rational(2) - a1 - a2 - a3};
  bool all_strict = true;
  for (const Rational& v : s) {
    if (v < Rational(0)) return TripleStatus::NoRep;
    if (v == Rational(0)) all_strict = false;
  }
  return all_strict ? TripleStatus::NonabelianExists : TripleStatus::AbelianOnly;
}

TripleAxes construct_triple(const AngleTriple& t) {
  if (angle_triple_status(t) == TripleStatus::NoRep)
    throw Inadmissible("angle triple admits no representation");

  TripleAxes axes;
  axes.v1 = {1, 0, 0};
  double s1 = std::sin(t.theta1), s2 = std::sin(t.theta2);
  if (s1 * s2 < 1e-14) {
    // The <v1,v2> equation is vacuous; any axis works.
    axes.v2 = {0, 1, 0};
  } else {
    // Re(e^{v1 t1} e^{v2 t2}) = cos t1 cos t2 - sin t1 sin t2 <v1,v2>
    // must equal cos t3.
    double c = (std::cos(t.theta1) * std::cos(t.theta2) - std::cos(t.theta3)) /
               (s1 * s2);
    c = std::clamp(c, -1.0, 1.0);
    if (std::abs(std::sin(t.theta3)) < 1e-9) {
      // Third factor is +-1, so the first two must cancel exactly; any
      // admissible triple then has <v1,v2> = +-1 and the axes (anti)align.
      axes.v2 = c >= 0 ? Vec3{1, 0, 0} : Vec3{-1, 0, 0};
    } else {
      axes.v2 = {c, std::sqrt(std::max(0.0, 1.0 - c * c)), 0};
    }
  }
  Quat z_inv = conj(mul(qexp(axes.v1, t.theta1), qexp(axes.v2, t.theta2)));
  AxisAngle aa = qaxis(z_inv);
  axes.v3 = aa.axis ? *aa.axis : Vec3{0, 1, 0};
  return axes;
}

PolygonSignature::PolygonSignature(std::vector<long long> a) : alphas(std::move(a)) {
  if (alphas.size() < 3)
    throw PreconditionError("polygon signature needs at least 3 cone orders");
  std::sort(alphas.begin(), alphas.end());
  if (alphas.front() < 2)
    throw PreconditionError("polygon cone orders must be >= 2");
}

GroupPresentation polygon_presentation(const PolygonSignature& sig) {
  GroupPresentation pres;
  std::size_t n = sig.alphas.size();
  Word product;
  for (std::size_t i = 0; i < n; ++i) {
    pres.generators.push_back("c" + std::to_string(i + 1));
    pres.relators.push_back({{static_cast<int>(i), sig.alphas[i]}});
    append_syllable(product, static_cast<int>(i), 1);
  }
  pres.relators.push_back(product);
  return pres;
}

namespace {

bool is_form_22pq(const std::vector<long long>& sorted) {
  std::size_t n = sorted.size();
  for (std::size_t i = 0; i + 2 < n; ++i)
    if (sorted[i] != 2) return false;
  return true;
}

bool is_333(const std::vector<long long>& sorted) {
  return sorted.size() == 3 && sorted[0] == 3 && sorted[1] == 3 && sorted[2] == 3;
}

// Angles for a sorted admissible triple with a1 >= 3 and a3 >= 4:
// t1 = 2pi/a1, t2 = 2pi/a2, t3 the least positive multiple of 2pi/a3
// strictly exceeding t1 - t2.
AngleTriple triple_angles(long long a1, long long a2, long long a3) {
  long long m = (a3 * (a2 - a1)) / (a1 * a2) + 1;
  return {2 * M_PI / static_cast<double>(a1), 2 * M_PI / static_cast<double>(a2),
          2 * M_PI * static_cast<double>(m) / static_cast<double>(a3)};
}

std::vector<Quat> triple_witness(long long a1, long long a2, long long a3) {
  AngleTriple t = triple_angles(a1, a2, a3);
  TripleAxes v = construct_triple(t);
  return {qexp(v.v1, t.theta1), qexp(v.v2, t.theta2), qexp(v.v3, t.theta3)};
}

std::vector<Quat> witness_3333() {
  double th = 2 * M_PI / 3;
  return {qexp({1, 0, 0}, th), qexp({0, 1, 0}, th), qexp({0, 1, 0}, -th),
          qexp({1, 0, 0}, -th)};
}

std::vector<Quat> witness_2333() {
  double r3 = std::sqrt(3.0);
  Vec3 v2 = {1, 0, 0};
  Vec3 v3 = {-1.0 / 3, 2.0 / 3, 2.0 / 3};
  Vec3 v4 = {-1.0 / 3, (-1 - r3) / 3, (-1 + r3) / 3};
  double th = 2 * M_PI / 3;
  return {Quat::minus_one(), qexp(v2, th), qexp(v3, th), qexp(v4, th)};
}

}  // namespace

bool delta_has_nonabelian(const PolygonSignature& sig) {
  return !is_form_22pq(sig.alphas) && !is_333(sig.alphas);
}

namespace detail {

std::vector<Quat> unsort_product_images(const std::vector<Quat>& images,
                                        const std::vector<int>& perm) {
  struct Slot {
    int orig;
    Quat q;
  };
  std::vector<Slot> slots;
  slots.reserve(images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    slots.push_back({perm[k], images[k]});

  // Bubble toward original order; each adjacent swap [x, y] -> [x y x^-1, x]
  // preserves the ordered product and every conjugacy class.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
      if (slots[i].orig > slots[i + 1].orig) {
        Quat x = slots[i].q, y = slots[i + 1].q;
        Slot left = {slots[i + 1].orig, mul(mul(x, y), conj(x))};
        Slot right = {slots[i].orig, x};
        slots[i] = left;
        slots[i + 1] = right;
        moved = true;
      }
    }
  }
  std::vector<Quat> out(images.size());
  for (std::size_t i = 0; i < slots.size(); ++i) out[i] = slots[i].q;
  return out;
}

std::vector<Quat> delta_witness_images(const std::vector<long long>& alphas) {
  std::size_t n = alphas.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return alphas[a] < alphas[b]; });
  std::vector<long long> sorted(n);
  for (std::size_t k = 0; k < n; ++k) sorted[k] = alphas[order[k]];

  if (is_form_22pq(sorted) || is_333(sorted))
    throw NoWitness("polygon group has abelian image only");

  std::vector<Quat> images(n, Quat::one());
  if (n == 3) {
    auto w = triple_witness(sorted[0], sorted[1], sorted[2]);
    std::copy(w.begin(), w.end(), images.begin());
  } else {
    bool last3_is_333 =
        sorted[n - 3] == 3 && sorted[n - 2] == 3 && sorted[n - 1] == 3;
    if (sorted[n - 3] >= 3 && !last3_is_333) {
      auto w = triple_witness(sorted[n - 3], sorted[n - 2], sorted[n - 1]);
      std::copy(w.begin(), w.end(), images.begin() + (n - 3));
    } else {
      // Last three cone orders are (3,3,3); the fourth from the end is 2 or 3.
      auto w = sorted[n - 4] == 3 ? witness_3333() : witness_2333();
      std::copy(w.begin(), w.end(), images.begin() + (n - 4));
    }
  }
  return unsort_product_images(images, std::vector<int>(order.begin(), order.end()));
}

}  // namespace detail

Representation delta_witness(const PolygonSignature& sig) {
  Representation rep{detail::delta_witness_images(sig.alphas)};
  GroupPresentation pres = polygon_presentation(sig);
  if (relator_residual(pres, rep) > 1e-10 || is_abelian_rep(rep, 1e-6))
    throw Error("internal: polygon witness failed verification");
  return rep;
}

}  // namespace su2abelian
