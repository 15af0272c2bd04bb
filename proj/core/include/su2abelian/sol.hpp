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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "su2abelian/presentation.hpp"

namespace su2abelian {

// Monodromy of a torus bundle over S^1: an element of SL(2,Z).
struct Monodromy {
  long long a = 1, b = 0, c = 0, d = 1;

  long long trace() const { return a + d; }
  long long det() const { return a * d - b * c; }
  bool hyperbolic() const { return std::abs(trace()) > 2; }

  friend bool operator==(const Monodromy&, const Monodromy&) = default;
  friend bool operator<(const Monodromy& l, const Monodromy& r) {
    return std::array{l.a, l.b, l.c, l.d} < std::array{r.a, r.b, r.c, r.d};
  }
  std::string to_string() const;
};

// Gluing diffeomorphism between the boundary tori of two twisted I-bundles
// over the Klein bottle, in the (a_i, b_i^2) homology bases; |det| = 1.
struct GluingMatrix {
  long long m = 1, n = 0, p = 0, q = 1;
  long long det() const { return m * q - n * p; }
};

// ax^2 + bxy + cy^2.
struct BinaryQuadraticForm {
  long long a = 0, b = 0, c = 0;
  long long disc() const { return b * b - 4 * a * c; }

  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
  friend bool operator<(const BinaryQuadraticForm& l, const BinaryQuadraticForm& r) {
    return std::array{l.a, l.b, l.c} < std::array{r.a, r.b, r.c};
  }
  std::string to_string() const;
};

struct ThetaPair {
  double theta1 = 0, theta2 = 0;
};

// Divisibility criterion: the mapping torus of phi is SU(2)-abelian iff every
// entry of 2(phi + Id) is divisible by tr(phi) + 2.  Requires |trace| > 2;
// throws NotHyperbolic otherwise.
bool sol_is_su2_abelian(const Monodromy& phi);

// <x, y, t | [x,y], t x t^-1 = x^a y^c, t y t^-1 = x^b y^d>
GroupPresentation torus_bundle_presentation(const Monodromy& phi);

struct TorusBundleRep {
  ThetaPair thetas;
  Representation rep;  // images of x, y, t
  bool nonabelian = false;
};

// The two candidate representations x -> e^{i theta1}, y -> e^{i theta2},
// t -> j, with (theta1; theta2) = 2pi/(tau+2) (d+1; -b) or 2pi/(tau+2)
// (-c; a+1).  Both always satisfy the bundle relations (checked to 1e-10);
// each is tagged non-abelian iff its angles are not both multiples of pi.
// Throws TraceMinusTwo when tr(phi) = -2.
std::array<TorusBundleRep, 2> torus_bundle_reps(const Monodromy& phi);

// <a1, b1, a2, b2 | b_i a_i b_i^-1 a_i, a2 = a1^m b1^{2n}, b2^2 = a1^p b1^{2q},
//  [a1, b1^2]>
GroupPresentation nun_presentation(const GluingMatrix& glue);

// The Q8 surjection f(b1) = i, f(b2) = j, f(a1) = (-1)^{q-1},
// f(a2) = f(a1)^m (-1)^n of the union of two twisted I-bundles; its image is
// the full quaternion group of order 8.  Throws InvalidGluing if |det| != 1.
Representation nun_q8_rep(const GluingMatrix& glue);

// Q_A(x, y) = b x^2 + (d - a) xy - c y^2, of discriminant tr(A)^2 - 4.
BinaryQuadraticForm form_of_matrix(const Monodromy& A);

// The full cycle of reduced forms equivalent to Q, listed from the
// lexicographically least element.  A form (a, b, c) of discriminant D > 0 is
// reduced iff 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
// Imprimitive forms reduce through their primitive part.
// Throws BadDiscriminant when D <= 0 or a perfect square.
std::vector<BinaryQuadraticForm> reduce_form_cycle(const BinaryQuadraticForm& Q);

// SL(2,Z)-equivalence, decided by comparing reduced cycles as sets.
// Throws DiscriminantMismatch for unequal discriminants.
bool forms_equivalent(const BinaryQuadraticForm& Q1, const BinaryQuadraticForm& Q2);

// Number of equivalence classes of binary quadratic forms of discriminant D,
// imprimitive forms included.  Throws BadDiscriminant unless D > 0, not a
// perfect square, and D = 0 or 1 (mod 4).
long long class_number(long long D);

// One monodromy per SL(2,Z) conjugacy class of the given trace, obtained by
// inverting the form bijection on each reduced cycle; the list length equals
// class_number(tau^2 - 4).  Throws NotHyperbolic when |tau| <= 2.
std::vector<Monodromy> sl2_trace_classes(long long tau);

// Conjugacy in SL(2,Z) via form equivalence.  Preconditions: equal traces
// (TraceMismatch) and |trace| > 2 (NotHyperbolic).
bool conjugate_sl2(const Monodromy& A, const Monodromy& B);

// Conjugacy in GL(2,Z): SL-conjugate directly or after twisting by
// J = diag(1, -1).
bool conjugate_gl2(const Monodromy& A, const Monodromy& B);

// "tbundle[a,b;c,d]" and "nun[m,n;p,q]".
Monodromy parse_tbundle(std::string_view text);
GluingMatrix parse_nun(std::string_view text);

}  // namespace su2abelian
