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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su2abelian/presentation.hpp"
#include "su2abelian/rational.hpp"
#include "su2abelian/snf.hpp"

namespace su2abelian {

// Closed surface: orientable of genus g >= 0 (S2 = genus 0, T2 = genus 1) or
// nonorientable of genus g >= 1 (RP2 = genus 1).
struct BaseSurface {
  bool orientable = true;
  long long genus = 0;

  static BaseSurface S2() { return {true, 0}; }
  static BaseSurface T2() { return {true, 1}; }
  static BaseSurface RP2() { return {false, 1}; }
  static BaseSurface orientable_genus(long long g) { return {true, g}; }
  static BaseSurface nonorientable_genus(long long g) { return {false, g}; }

  bool is_s2() const { return orientable && genus == 0; }
  bool is_t2() const { return orientable && genus == 1; }
  bool is_rp2() const { return !orientable && genus == 1; }

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

// One exceptional fiber (alpha, beta) with gcd(alpha, beta) = 1, alpha >= 1.
struct SeifertPair {
  long long alpha = 1;
  long long beta = 0;
  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
};

// Seifert invariants: base surface plus the list of (alpha_i, beta_i).
struct SeifertInvariants {
  BaseSurface base;
  std::vector<SeifertPair> pairs;

  // Throws InvalidSeifertData on genus bounds, alpha < 1, or gcd != 1.
  void validate() const;

  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

// Merges every (1, k) pair into another pair via (1,k),(a,b) -> (a, b+ka),
// which does not change the manifold.  When only (1, k) pairs are present a
// single combined (1, k) pair remains; a leftover (1, 0) is dropped entirely.
// Output pairs are sorted by alpha, then beta.
SeifertInvariants normalize(const SeifertInvariants& s);

// The fundamental group of the total space:
//   orientable genus g:  <a1,b1,...,ag,bg, c1..cn, h |
//       [h, x] for every generator x,  ci^{alpha_i} h^{beta_i},
//       c1...cn [a1,b1]...[ag,bg]>
//   nonorientable genus g:  <a1..ag, c1..cn, h |
//       ai^{-1} h ai h,  [h, cj],  cj^{alpha_j} h^{beta_j},
//       c1...cn a1^2...ag^2>
GroupPresentation pi1_presentation(const SeifertInvariants& s);

// First homology via the Smith normal form of the abelianized relations.
AbelianGroup h1(const SeifertInvariants& s);

// e = -sum beta_i / alpha_i, exact.
Rational euler_number(const SeifertInvariants& s);

// chi(base) - sum (1 - 1/alpha_i), with chi = 2-2g (orientable), 2-g (not).
Rational orbifold_euler_char(const SeifertInvariants& s);

// The Thurston geometry of the total space, determined by the sign of the
// orbifold Euler characteristic and the vanishing of the Euler number.
enum class GeometryTag { Spherical, S2xR, Euclidean, Nil, H2xR, SL2Rtilde };

GeometryTag geometry(const SeifertInvariants& s);

const char* to_string(GeometryTag g);

// Which of the finitely many reasons makes every representation abelian.
enum class AbelianCertificate {
  CyclicPi1,            // lens space, S^3, S^1 x S^2 (or the RP2 lens case)
  RP3ConnectSumRP3,     // RP^3 # RP^3
  Base244,              // base orbifold S^2(2,4,4)
  Base333EvenH1,        // base orbifold S^2(3,3,3), |H1| even or infinite
  CircleBundleT2Even,   // circle bundle over T^2 with even Euler number
};

const char* to_string(AbelianCertificate c);

struct ClassificationVerdict {
  bool abelian = false;
  std::optional<AbelianCertificate> certificate;  // present iff abelian
  std::optional<Representation> witness;          // present iff !abelian
};

// Full SU(2)-abelian decision.  Classification is applied after normalize;
// when the verdict is non-abelian the witness is an explicit representation
// of pi1_presentation(s) with relator residual < 1e-10 that fails pairwise
// commutation at tol 1e-6.
ClassificationVerdict is_su2_abelian(const SeifertInvariants& s);

// The witness alone.  Throws IsAbelian when is_su2_abelian(s).abelian.
Representation nonabelian_witness(const SeifertInvariants& s);

// Manifold description grammar:
//   sfs  := "sfs(" base ( ";" pair ("," pair)* )? ")"
//   base := "S2" | "RP2" | "T2" | "O" uint | "N" uint
//   pair := int "/" int
// e.g. "sfs(S2; 2/1, 4/1, 4/-3)".  Throws ParseError / InvalidSeifertData.
SeifertInvariants parse_sfs(std::string_view text);

std::string to_string(const SeifertInvariants& s);

}  // namespace su2abelian
