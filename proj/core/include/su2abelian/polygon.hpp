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

#include <vector>

#include "su2abelian/presentation.hpp"
#include "su2abelian/quaternion.hpp"
#include "su2abelian/rational.hpp"

namespace su2abelian {

// Three rotation angles in [0, pi].
struct AngleTriple {
  double theta1 = 0, theta2 = 0, theta3 = 0;
};

// Whether angles (theta1, theta2, theta3) are realized by a product
// e^{v1 t1} e^{v2 t2} e^{v3 t3} = 1, and if so whether a non-commuting choice
// of axes exists.  The three options are exhaustive and mutually exclusive.
enum class TripleStatus { NoRep, AbelianOnly, NonabelianExists };

// Decides the four admissibility inequalities
//   t1 + t2 >= t3   (cyclically)   and   t1 + t2 + t3 <= 2 pi.
// NoRep if any fails; NonabelianExists if all four hold with margin > 1e-12;
// AbelianOnly otherwise (some inequality is an equality up to the margin).
TripleStatus angle_triple_status(const AngleTriple& t);

// Same decision for angles (a1, a2, a3) given exactly as fractions of pi,
// so boundary cases such as (pi/2, pi/4, 3pi/4) never flip under rounding.
TripleStatus angle_triple_status_exact(const Rational& a1, const Rational& a2,
                                       const Rational& a3);

struct TripleAxes {
  Vec3 v1, v2, v3;
};

// Axes with e^{v1 t1} e^{v2 t2} e^{v3 t3} = 1 to within 1e-10.  Gauge fixed:
// v1 = i, v2 in the span of i and j with nonnegative j component (v2 = j when
// sin t1 sin t2 = 0), v3 read off the inverse product.
// Throws Inadmissible when angle_triple_status(t) = NoRep.
TripleAxes construct_triple(const AngleTriple& t);

// Cone orders of a polygon orbifold group: sorted, each >= 2, at least 3.
struct PolygonSignature {
  std::vector<long long> alphas;
  explicit PolygonSignature(std::vector<long long> a);
};

// <c1, ..., cn | ci^{alpha_i} = 1, c1 c2 ... cn = 1>
GroupPresentation polygon_presentation(const PolygonSignature& sig);

// True iff the signature is neither (2, 2, ..., 2, p, q) nor (3, 3, 3);
// exactly these admit a non-abelian SU(2) representation.
bool delta_has_nonabelian(const PolygonSignature& sig);

// A representation with all relator residuals < 1e-10 and non-abelian image
// (pairwise commutation fails at tol 1e-6).
// Throws NoWitness when delta_has_nonabelian(sig) is false.
Representation delta_witness(const PolygonSignature& sig);

namespace detail {

// Witness images for cone orders listed in arbitrary order (the product
// relation c1...cn = 1 follows the given order).  Used by the Seifert module,
// which must respect the fiber order of its input.
std::vector<Quat> delta_witness_images(const std::vector<long long>& alphas);

// Rewrites images between orderings of the same multiset of pairs while
// preserving the ordered product and conjugacy classes: an adjacent swap
// [x, y] -> [x y x^-1, x] keeps the product and moves position i+1 left.
// `perm` maps target positions to current positions.
std::vector<Quat> unsort_product_images(const std::vector<Quat>& images,
                                        const std::vector<int>& perm);

}  // namespace detail

}  // namespace su2abelian
