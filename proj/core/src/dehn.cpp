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

#include "su2abelian/dehn.hpp"

#include <cmath>
#include <numeric>

#include "su2abelian/errors.hpp"

namespace su2abelian {
namespace {

long long mod_pos(long long x, long long m) { return ((x % m) + m) % m; }

// Inverse of q mod p for gcd(q, p) = 1, p >= 1.
long long mod_inverse(long long q, long long p) {
  long long old_r = mod_pos(q, p), r = p;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  return mod_pos(old_s, p);
}

}  // namespace

LensSpace LensSpace::make(long long p, long long q) {
  if (p < 0) {
    p = -p;  // orientation reversal; same underlying space up to L(p, -q)
    q = -q;
  }
  if (std::gcd(p, std::abs(q)) != 1)
    throw InvalidSeifertData("lens space parameters must be coprime: L(" +
                             std::to_string(p) + "," + std::to_string(q) + ")");
  LensSpace l;
  l.p = p;
  l.q = p == 0 ? 1 : mod_pos(q, p);
  return l;
}

std::string LensSpace::to_string() const {
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool lens_homeo(const LensSpace& l1, const LensSpace& l2) {
  if (l1.p != l2.p) return false;
  long long p = l1.p;
  if (p == 0) return true;       // S^1 x S^2
  if (p == 1) return true;       // S^3
  long long q1 = l1.q, q2 = l2.q;
  long long inv = mod_inverse(q1, p);
  return q2 == q1 || q2 == mod_pos(-q1, p) || q2 == inv || q2 == mod_pos(-inv, p);
}

Rational cfrac_eval(const std::vector<long long>& coeffs) {
  if (coeffs.empty()) throw PreconditionError("empty continued fraction");
  Rational r(coeffs.back());
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    if (r == Rational(0))
      throw DivisionByZero("continued fraction tail evaluates to zero");
    r = Rational(*it) + Rational(1) / r;
  }
  return r;
}

std::vector<long long> cfrac_of(const Rational& x) {
  std::vector<long long> out;
  long long p = x.numerator(), q = x.denominator();  // q >= 1 in boost::rational
  for (;;) {
    long long a = p >= 0 ? p / q : -((-p + q - 1) / q);  // floor(p/q)
    out.push_back(a);
    long long rem = p - a * q;
    if (rem == 0) break;
    p = q;
    q = rem;
  }
  return out;
}

std::string SpliceDescriptor::to_string() const {
  return "Y(T(" + std::to_string(a) + "," + std::to_string(b) + "), T(" +
         std::to_string(c) + "," + std::to_string(d) + "))";
}

long long splice_h1(const SpliceDescriptor& s) {
  if (std::abs(s.a) < 2 || std::abs(s.b) < 2 || std::abs(s.c) < 2 || std::abs(s.d) < 2)
    throw InvalidSplice("splice requires nontrivial torus knots (|coefficients| >= 2)");
  if (std::gcd(std::abs(s.a), std::abs(s.b)) != 1 ||
      std::gcd(std::abs(s.c), std::abs(s.d)) != 1)
    throw InvalidSplice("torus knot parameters must be coprime");
  return std::abs(s.a * s.b * s.c * s.d - 1);
}

FillingTable mg_fillings(long long g) {
  if (g < 1) throw PreconditionError("the filling family starts at g = 1");
  FillingTable t;
  t.g = g;
  t.r2 = LensSpace::make(2 * g + 5, 2);
  t.r11 = LensSpace::make(11 * g + 3, 11);
  t.r13 = LensSpace::make(13 * g + 8, 13);
  t.rT = {2, 3, 2, 2 * g + 1};

  // Cross-checks: the tangle-replacement continued fractions and the splice
  // homology |2*3*2*(2g+1) - 1| = 24g + 11 must reproduce the table.
  if (cfrac_eval({g + 2, 2}) != Rational(2 * g + 5, 2) ||
      cfrac_eval({g + 1, -2, 1, 2, -2, -1}) != Rational(11 * g + 3, 11) ||
      cfrac_eval({g, 1, 1, 1, 1, 2}) != Rational(13 * g + 8, 13) ||
      splice_h1(t.rT) != 24 * g + 11)
    throw Error("internal: filling table cross-check failed");
  return t;
}

FillingTable mg_fillings_conjectural(long long g) {
  if (g < 1) throw PreconditionError("the filling family starts at g = 1");
  FillingTable t;
  t.g = g;
  t.conjectural = true;
  t.orientation_reversed = true;
  t.r2 = LensSpace::make(2 * g - 3, 2);
  t.r11 = LensSpace::make(11 * g + 8, 11);
  t.r13 = LensSpace::make(13 * g + 5, 13);
  t.rT = {2, 3, 2, -(2 * g + 1)};
  return t;
}

std::set<long long> torus_knot_lens_orders(long long a, long long b, long long nmax) {
  if (std::abs(a) < 2 || std::abs(b) < 2 || std::gcd(std::abs(a), std::abs(b)) != 1)
    throw InvalidTorusKnot("need coprime |a|, |b| >= 2 for a nontrivial torus knot");
  if (nmax < 1) throw PreconditionError("nmax must be >= 1");
  std::set<long long> orders;
  for (long long n = -nmax; n <= nmax; ++n) {
    if (n == 0) continue;
    orders.insert(std::abs(n * a * b + 1));
  }
  return orders;
}

std::set<std::pair<long long, long long>> lemma_11_13_check(long long g,
                                                            long long bound) {
  std::set<std::pair<long long, long long>> hits;
  for (long long a = 2; a <= bound; ++a) {
    for (long long b = a + 1; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      long long ab = a * b;
      bool div11 = (11 * g + 3 + 1) % ab == 0 || (11 * g + 3 - 1) % ab == 0;
      bool div13 = (13 * g + 8 + 1) % ab == 0 || (13 * g + 8 - 1) % ab == 0;
      if (div11 && div13) hits.insert({a, b});
    }
  }
  return hits;
}

}  // namespace su2abelian
