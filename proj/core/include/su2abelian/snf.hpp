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

#include <string>
#include <vector>

#include "su2abelian/presentation.hpp"

namespace su2abelian {

using IntMatrix = std::vector<std::vector<long long>>;

// A finitely generated abelian group Z^rank + Z/d1 + Z/d2 + ... in canonical
// form: invariant factors d1 | d2 | ..., each >= 2.
struct AbelianGroup {
  long long rank = 0;
  std::vector<long long> torsion;

  bool finite() const { return rank == 0; }
  // Product of the invariant factors; the group order when finite, and the
  // torsion subgroup order otherwise.
  long long torsion_order() const {
    long long n = 1;
    for (long long d : torsion) n *= d;
    return n;
  }
  // |G| with the convention |G| = 0 for infinite groups.
  long long order() const { return finite() ? torsion_order() : 0; }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string to_string() const;
};

// Diagonal of the Smith normal form of m (nonnegative entries, divisibility
// chain d1 | d2 | ...), padded with zeros up to min(rows, cols).
std::vector<long long> smith_diagonal(IntMatrix m);

// Cokernel Z^num_generators / rowspace(relations) in canonical form.
AbelianGroup cokernel(const IntMatrix& relations, std::size_t num_generators);

// Smith normal form of the relator exponent-sum matrix of a presentation.
AbelianGroup abelianization(const GroupPresentation& pres);

}  // namespace su2abelian
