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

#include "su2abelian/parser.hpp"

#include <cctype>
#include <map>
#include <string>

#include "su2abelian/errors.hpp"

namespace su2abelian {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }
  char take() {
    char c = peek();
    ++pos_;
    return c;
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "', found '" + peek() + "'", pos_);
    ++pos_;
  }
  bool try_take(char c) {
    if (at_end() || peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }

  // Raw (no whitespace skip) access for multi-char tokens.
  bool raw_avail() const { return pos_ < text_.size(); }
  char raw_peek() const { return text_[pos_]; }
  void raw_advance() { ++pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string parse_ident(Cursor& cur) {
  char c = cur.peek();
  if (!std::islower(static_cast<unsigned char>(c)))
    throw ParseError(std::string("expected identifier, found '") + c + "'", cur.pos());
  std::string name(1, cur.take());
  while (cur.raw_avail() && std::isdigit(static_cast<unsigned char>(cur.raw_peek()))) {
    name += cur.raw_peek();
    cur.raw_advance();
  }
  return name;
}

long long parse_sint(Cursor& cur) {
  bool neg = cur.try_take('-');
  char c = cur.peek();
  if (!std::isdigit(static_cast<unsigned char>(c)))
    throw ParseError("expected integer exponent", cur.pos());
  long long v = 0;
  while (cur.raw_avail() && std::isdigit(static_cast<unsigned char>(cur.raw_peek()))) {
    v = v * 10 + (cur.raw_peek() - '0');
    if (v > 1000000) throw ParseError("exponent too large", cur.pos());
    cur.raw_advance();
  }
  return neg ? -v : v;
}

Word repeat_word(const Word& w, long long e) {
  if (e == 0) return {};
  Word base = e > 0 ? w : inverse_word(w);
  Word out;
  for (long long t = 0; t < std::abs(e); ++t)
    for (const auto& s : base) append_syllable(out, s.gen, s.exp);
  return out;
}

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : cur_(text) {}

  GroupPresentation run() {
    cur_.expect('<');
    do {
      std::string name = parse_ident(cur_);
      if (index_.count(name))
        throw ParseError("duplicate generator '" + name + "'", cur_.pos());
      index_[name] = static_cast<int>(pres_.generators.size());
      pres_.generators.push_back(name);
    } while (cur_.try_take(','));
    cur_.expect('|');
    if (cur_.peek() != '>') {
      do {
        pres_.relators.push_back(parse_word());
      } while (cur_.try_take(','));
    }
    cur_.expect('>');
    if (!cur_.at_end())
      throw ParseError("trailing input after presentation", cur_.pos());
    return pres_;
  }

 private:
  Word parse_word() {
    Word out;
    bool any_factor = false;
    for (;;) {
      char c = cur_.peek();
      if (c == ',' || c == '>' || c == ')') break;
      Word factor = parse_factor();
      any_factor = true;
      for (const auto& s : factor) append_syllable(out, s.gen, s.exp);
    }
    // A word needs at least one factor, though it may still cancel to the
    // empty word (e.g. "a a^-1").
    if (!any_factor) throw ParseError("expected a word", cur_.pos());
    return out;
  }

  Word parse_factor() {
    Word base;
    if (cur_.try_take('(')) {
      base = parse_word();
      cur_.expect(')');
    } else {
      std::string name = parse_ident(cur_);
      auto it = index_.find(name);
      if (it == index_.end())
        throw ParseError("unknown generator '" + name + "'", cur_.pos());
      base.push_back({it->second, 1});
    }
    if (cur_.try_take('^')) return repeat_word(base, parse_sint(cur_));
    return base;
  }

  Cursor cur_;
  GroupPresentation pres_;
  std::map<std::string, int> index_;
};

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  return PresentationParser(text).run();
}

}  // namespace su2abelian
