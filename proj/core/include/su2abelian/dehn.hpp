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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "su2abelian/rational.hpp"

namespace su2abelian {

// L(p, q) with p >= 0, gcd(p, q) = 1 and q reduced mod p into [0, p).
// L(1, 0) is S^3 and L(0, 1) is S^1 x S^2.
struct LensSpace {
  long long p = 1;
  long long q = 0;

  // Throws InvalidSeifertData unless gcd(p, q) = 1; reduces q mod p.
  static LensSpace make(long long p, long long q);

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  std::string to_string() const;
};

// Homeomorphism: p1 = p2 and q2 = +-q1^{+-1} (mod p1).
bool lens_homeo(const LensSpace& l1, const LensSpace& l2);

// a1 + 1/(a2 + 1/(... + 1/ak)), exact.  Throws DivisionByZero when an
// intermediate tail evaluates to zero.
Rational cfrac_eval(const std::vector<long long>& coeffs);

// The canonical expansion (positive tail coefficients) with
// cfrac_eval(cfrac_of(x)) = x.
std::vector<long long> cfrac_of(const Rational& x);

// The graph manifold Y(T_{a,b}, T_{c,d}) spliced from two nontrivial torus
// knot exteriors (meridians exchanged with Seifert fibers).
struct SpliceDescriptor {
  long long a = 2, b = 3, c = 2, d = 3;
  friend bool operator==(const SpliceDescriptor&, const SpliceDescriptor&) = default;
  std::string to_string() const;
};

// |H1| = |abcd - 1|.  Throws InvalidSplice when some |coefficient| < 2 or a
// pair is not coprime.
long long splice_h1(const SpliceDescriptor& s);

// The four SU(2)-cyclic fillings of M_g: three lens spaces and one splice.
struct FillingTable {
  long long g = 1;
  LensSpace r2, r11, r13;
  SpliceDescriptor rT;
  bool conjectural = false;      // set on the mirror-family table
  bool orientation_reversed = false;
};

// { r_2: L(2g+5, 2), r_11: L(11g+3, 11), r_13: L(13g+8, 13),
//   r_T: Y(T_{2,3}, T_{2,2g+1}) }, cross-checked against the continued
// fractions [g+2,2], [g+1,-2,1,2,-2,-1], [g,1,1,1,1,2] and against
// splice_h1 = 24g+11.  Throws PreconditionError for g < 1.
FillingTable mg_fillings(long long g);

// The unproven mirror family: -L(2g-3,2), -L(11g+8,11), -L(13g+5,13) and
// (apparently) -Y(T_{2,3}, T_{2,-(2g+1)}).  Only exposed behind the CLI's
// --unverified flag.
FillingTable mg_fillings_conjectural(long long g);

// { |n ab + 1| : 0 < |n| <= nmax }, the lens surgery orders of T_{a,b}.
// Throws InvalidTorusKnot unless |a|, |b| >= 2 and gcd(a, b) = 1.
std::set<long long> torus_knot_lens_orders(long long a, long long b, long long nmax);

// Coprime pairs 2 <= a < b <= bound with ab | 11g+3+delta and
// ab | 13g+8+eps for some signs delta, eps; always a subset of {(3,17)}.
std::set<std::pair<long long, long long>> lemma_11_13_check(long long g,
                                                            long long bound);

}  // namespace su2abelian
