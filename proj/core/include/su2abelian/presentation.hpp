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

#include "su2abelian/quaternion.hpp"

namespace su2abelian {

// One syllable g^e of a word; e is never zero in a stored word.
struct Syllable {
  int gen = 0;
  long long exp = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

// Letter count, counting a syllable g^e as |e| letters.
long long word_length(const Word& w);

// Appends g^e, merging with the trailing syllable and dropping cancellations.
void append_syllable(Word& w, int gen, long long exp);

Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

// A finite presentation: named generators and relator words over them.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int generator_index(const std::string& name) const;  // -1 when absent
};

// An assignment generator -> SU(2), one image per generator.
struct Representation {
  std::vector<Quat> images;
};

// Left-to-right product of generator images along the word.
// Throws UnknownGenerator if the word references an index with no image.
Quat eval_word(const Representation& rep, const Word& word);

// max over relators of |rho(r) - 1| in R^4; 0 for a free group.
double relator_residual(const GroupPresentation& pres, const Representation& rep);

// True iff all pairs of generator images commute to within tol,
// i.e. |[rho(g), rho(h)] - 1| <= tol for every pair.
bool is_abelian_rep(const Representation& rep, double tol);

std::string word_to_string(const GroupPresentation& pres, const Word& w);

}  // namespace su2abelian
