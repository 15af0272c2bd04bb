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

#include "su2abelian/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace su2abelian {
namespace {

using i128 = __int128;

void check_range(i128 v) {
  constexpr i128 lim = i128(1) << 62;
  if (v > lim || v < -lim)
    throw std::overflow_error("Smith normal form: entry overflow");
}

// row[i] += k * row[j], with overflow checks; columns likewise via transpose
// of the same helper.
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, long long k) {
  for (std::size_t c = 0; c < m[dst].size(); ++c) {
    i128 v = i128(m[dst][c]) + i128(k) * i128(m[src][c]);
    check_range(v);
    m[dst][c] = static_cast<long long>(v);
  }
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, long long k) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    i128 v = i128(m[r][dst]) + i128(k) * i128(m[r][src]);
    check_range(v);
    m[r][dst] = static_cast<long long>(v);
  }
}

}  // namespace

std::vector<long long> smith_diagonal(IntMatrix m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t n = std::min(rows, cols);
  std::vector<long long> diag(n, 0);

  for (std::size_t t = 0; t < n; ++t) {
    // Find a pivot: the nonzero entry of least magnitude in the submatrix.
    std::size_t pr = t, pc = t;
    long long best = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (best == 0 || std::abs(m[r][c]) < best)) {
          best = std::abs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (best == 0) break;  // submatrix is zero
    std::swap(m[t], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

    // Clear row and column t; restart whenever a remainder shrinks the pivot.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        long long q = m[r][t] / m[t][t];
        add_row(m, r, t, -q);
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        long long q = m[t][c] / m[t][t];
        add_col(m, c, t, -q);
        if (m[t][c] != 0) {
          for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][c]);
          clean = false;
        }
      }
      // Divisibility: fold in any entry the pivot does not divide.
      if (clean) {
        for (std::size_t r = t + 1; r < rows && clean; ++r)
          for (std::size_t c = t + 1; c < cols && clean; ++c)
            if (m[r][c] % m[t][t] != 0) {
              add_row(m, t, r, 1);
              clean = false;
            }
      }
    }
    diag[t] = std::abs(m[t][t]);
  }
  return diag;
}

AbelianGroup cokernel(const IntMatrix& relations, std::size_t num_generators) {
  for (const auto& row : relations)
    if (row.size() != num_generators)
      throw std::invalid_argument("relation row width mismatch");
  std::vector<long long> diag = smith_diagonal(relations);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (long long d : diag)
    if (d != 0) ++nonzero;
  g.rank = static_cast<long long>(num_generators - nonzero);
  for (long long d : diag)
    if (d >= 2) g.torsion.push_back(d);
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

AbelianGroup abelianization(const GroupPresentation& pres) {
  IntMatrix m;
  m.reserve(pres.relators.size());
  for (const auto& rel : pres.relators) {
    std::vector<long long> row(pres.generators.size(), 0);
    for (const auto& s : rel) row.at(s.gen) += s.exp;
    m.push_back(std::move(row));
  }
  return cokernel(m, pres.generators.size());
}

std::string AbelianGroup::to_string() const {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " + ";
    out += piece;
  };
  for (long long r = 0; r < rank; ++r) append("Z");
  for (long long d : torsion) append("Z/" + std::to_string(d));
  if (out.empty()) out = "0";
  return out;
}

}  // namespace su2abelian
