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

#include "su2abelian/presentation.hpp"

#include <algorithm>

#include "su2abelian/errors.hpp"

namespace su2abelian {

long long word_length(const Word& w) {
  long long n = 0;
  for (const auto& s : w) n += std::abs(s.exp);
  return n;
}

void append_syllable(Word& w, int gen, long long exp) {
  if (exp == 0) return;
  if (!w.empty() && w.back().gen == gen) {
    w.back().exp += exp;
    if (w.back().exp == 0) w.pop_back();
    return;
  }
  w.push_back({gen, exp});
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  for (const auto& s : b) append_syllable(out, s.gen, s.exp);
  return out;
}

int GroupPresentation::generator_index(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) return -1;
  return static_cast<int>(it - generators.begin());
}

Quat eval_word(const Representation& rep, const Word& word) {
  Quat acc = Quat::one();
  for (const auto& s : word) {
    if (s.gen < 0 || s.gen >= static_cast<int>(rep.images.size()))
      throw UnknownGenerator("word references generator #" +
                             std::to_string(s.gen) + " with no assigned image");
    acc = mul(acc, power(rep.images[s.gen], s.exp));
  }
  return acc;
}

double relator_residual(const GroupPresentation& pres, const Representation& rep) {
  double worst = 0;
  for (const auto& r : pres.relators)
    worst = std::max(worst, dist(eval_word(rep, r), Quat::one()));
  return worst;
}

bool is_abelian_rep(const Representation& rep, double tol) {
  const auto& im = rep.images;
  for (std::size_t a = 0; a < im.size(); ++a)
    for (std::size_t b = a + 1; b < im.size(); ++b)
      if (dist(commutator(im[a], im[b]), Quat::one()) > tol) return false;
  return true;
}

std::string word_to_string(const GroupPresentation& pres, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += pres.generators.at(s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

}  // namespace su2abelian
