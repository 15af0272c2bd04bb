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

#include "su2abelian/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "su2abelian/errors.hpp"
#include "su2abelian/polygon.hpp"

namespace su2abelian {

void SeifertInvariants::validate() const {
  if (base.orientable) {
    if (base.genus < 0) throw InvalidSeifertData("orientable genus must be >= 0");
  } else {
    if (base.genus < 1) throw InvalidSeifertData("nonorientable genus must be >= 1");
  }
  for (const auto& p : pairs) {
    if (p.alpha < 1) throw InvalidSeifertData("fiber invariant alpha must be >= 1");
    if (std::gcd(p.alpha, std::abs(p.beta)) != 1)
      throw InvalidSeifertData("fiber invariants must be coprime: " +
                               std::to_string(p.alpha) + "/" + std::to_string(p.beta));
  }
}

SeifertInvariants normalize(const SeifertInvariants& s) {
  s.validate();
  SeifertInvariants out{s.base, {}};
  long long k = 0;
  for (const auto& p : s.pairs) {
    if (p.alpha == 1)
      k += p.beta;
    else
      out.pairs.push_back(p);
  }
  auto by_alpha_beta = [](const SeifertPair& a, const SeifertPair& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  };
  std::sort(out.pairs.begin(), out.pairs.end(), by_alpha_beta);
  if (!out.pairs.empty()) {
    out.pairs.front().beta += k * out.pairs.front().alpha;
    std::sort(out.pairs.begin(), out.pairs.end(), by_alpha_beta);
  } else if (k != 0) {
    out.pairs.push_back({1, k});
  }
  return out;
}

GroupPresentation pi1_presentation(const SeifertInvariants& s) {
  s.validate();
  GroupPresentation pres;
  long long g = s.base.genus;
  std::size_t n = s.pairs.size();

  auto commutator_word = [](int a, int b) {
    Word w;
    append_syllable(w, a, 1);
    append_syllable(w, b, 1);
    append_syllable(w, a, -1);
    append_syllable(w, b, -1);
    return w;
  };

  if (s.base.orientable) {
    for (long long t = 1; t <= g; ++t) {
      pres.generators.push_back("a" + std::to_string(t));
      pres.generators.push_back("b" + std::to_string(t));
    }
    for (std::size_t i = 1; i <= n; ++i)
      pres.generators.push_back("c" + std::to_string(i));
    pres.generators.push_back("h");
    int h = static_cast<int>(pres.generators.size()) - 1;
    int c0 = static_cast<int>(2 * g);

    for (int x = 0; x < h; ++x) pres.relators.push_back(commutator_word(h, x));
    for (std::size_t i = 0; i < n; ++i) {
      Word w;
      append_syllable(w, c0 + static_cast<int>(i), s.pairs[i].alpha);
      append_syllable(w, h, s.pairs[i].beta);
      pres.relators.push_back(w);
    }
    Word product;
    for (std::size_t i = 0; i < n; ++i)
      append_syllable(product, c0 + static_cast<int>(i), 1);
    for (long long t = 0; t < g; ++t) {
      Word comm = commutator_word(static_cast<int>(2 * t), static_cast<int>(2 * t + 1));
      for (const auto& syl : comm) append_syllable(product, syl.gen, syl.exp);
    }
    pres.relators.push_back(product);
  } else {
    for (long long t = 1; t <= g; ++t)
      pres.generators.push_back("a" + std::to_string(t));
    for (std::size_t i = 1; i <= n; ++i)
      pres.generators.push_back("c" + std::to_string(i));
    pres.generators.push_back("h");
    int h = static_cast<int>(pres.generators.size()) - 1;
    int c0 = static_cast<int>(g);

    for (long long t = 0; t < g; ++t) {
      // a^{-1} h a h = 1, i.e. a^{-1} h a = h^{-1}.
      Word w;
      append_syllable(w, static_cast<int>(t), -1);
      append_syllable(w, h, 1);
      append_syllable(w, static_cast<int>(t), 1);
      append_syllable(w, h, 1);
      pres.relators.push_back(w);
    }
    for (std::size_t i = 0; i < n; ++i)
      pres.relators.push_back(commutator_word(h, c0 + static_cast<int>(i)));
    for (std::size_t i = 0; i < n; ++i) {
      Word w;
      append_syllable(w, c0 + static_cast<int>(i), s.pairs[i].alpha);
      append_syllable(w, h, s.pairs[i].beta);
      pres.relators.push_back(w);
    }
    Word product;
    for (std::size_t i = 0; i < n; ++i)
      append_syllable(product, c0 + static_cast<int>(i), 1);
    for (long long t = 0; t < g; ++t)
      append_syllable(product, static_cast<int>(t), 2);
    pres.relators.push_back(product);
  }
  return pres;
}

AbelianGroup h1(const SeifertInvariants& s) {
  return abelianization(pi1_presentation(s));
}

Rational euler_number(const SeifertInvariants& s) {
  s.validate();
  Rational e(0);
  for (const auto& p : s.pairs) e -= Rational(p.beta, p.alpha);
  return e;
}

Rational orbifold_euler_char(const SeifertInvariants& s) {
  s.validate();
  Rational chi(s.base.orientable ? 2 - 2 * s.base.genus : 2 - s.base.genus);
  for (const auto& p : s.pairs) chi -= Rational(p.alpha - 1, p.alpha);
  return chi;
}

GeometryTag geometry(const SeifertInvariants& s) {
  Rational chi = orbifold_euler_char(s);
  bool e_zero = euler_number(s) == Rational(0);
  if (chi > Rational(0)) return e_zero ? GeometryTag::S2xR : GeometryTag::Spherical;
  if (chi == Rational(0)) return e_zero ? GeometryTag::Euclidean : GeometryTag::Nil;
  return e_zero ? GeometryTag::H2xR : GeometryTag::SL2Rtilde;
}

const char* to_string(GeometryTag g) {
  switch (g) {
    case GeometryTag::Spherical: return "Spherical";
    case GeometryTag::S2xR: return "S2xR";
    case GeometryTag::Euclidean: return "Euclidean";
    case GeometryTag::Nil: return "Nil";
    case GeometryTag::H2xR: return "H2xR";
    case GeometryTag::SL2Rtilde: return "SL2R-tilde";
  }
  return "?";
}

const char* to_string(AbelianCertificate c) {
  switch (c) {
    case AbelianCertificate::CyclicPi1: return "CyclicPi1";
    case AbelianCertificate::RP3ConnectSumRP3: return "RP3ConnectSumRP3";
    case AbelianCertificate::Base244: return "Base244";
    case AbelianCertificate::Base333EvenH1: return "Base333EvenH1";
    case AbelianCertificate::CircleBundleT2Even: return "CircleBundleT2Even";
  }
  return "?";
}

namespace {

bool even(long long v) { return ((v % 2) + 2) % 2 == 0; }

std::vector<long long> alpha_list(const std::vector<SeifertPair>& pairs) {
  std::vector<long long> a;
  a.reserve(pairs.size());
  for (const auto& p : pairs) a.push_back(p.alpha);
  return a;
}

// Classification on normalized invariants.
std::optional<AbelianCertificate> abelian_certificate(const SeifertInvariants& ns) {
  const auto& pairs = ns.pairs;
  std::size_t n = pairs.size();

  if (ns.base.is_s2()) {
    if (n <= 2) return AbelianCertificate::CyclicPi1;
    std::vector<long long> a = alpha_list(pairs);
    std::sort(a.begin(), a.end());
    if (a == std::vector<long long>{2, 4, 4}) return AbelianCertificate::Base244;
    if (a == std::vector<long long>{3, 3, 3}) {
      long long beta_sum = 0;
      for (const auto& p : pairs) beta_sum += p.beta;
      if (even(beta_sum)) return AbelianCertificate::Base333EvenH1;
    }
    return std::nullopt;
  }
  if (ns.base.is_t2()) {
    if (n == 0) return AbelianCertificate::CircleBundleT2Even;  // T^3
    if (n == 1 && pairs[0].alpha == 1 && even(pairs[0].beta))
      return AbelianCertificate::CircleBundleT2Even;
    return std::nullopt;
  }
  if (ns.base.is_rp2()) {
    if (n == 0) return AbelianCertificate::RP3ConnectSumRP3;
    if (n == 1 && std::abs(pairs[0].beta) == 1) return AbelianCertificate::CyclicPi1;
    return std::nullopt;
  }
  return std::nullopt;  // genus >= 2 bases always admit non-abelian reps
}

// --- witness constructions ---------------------------------------------

long long parity_angle_numerator(long long alpha, long long beta) {
  // The multiple m pi / alpha closest to pi/2 with m = beta (mod 2).
  long long m = (alpha + 1) / 2 - 1;  // ceil(alpha/2) - 1
  if (even(m) != even(beta)) ++m;
  return m;
}

// Case (b): three fibers, some alpha = 2, signature != (2,4,4).  Angles are
// odd/even multiples of pi/alpha nearest pi/2; axes from the triple solver.
// rho(h) = -1.  Pairs may be listed in any order.
std::vector<Quat> half_angle_triple_images(const std::vector<SeifertPair>& pairs) {
  AngleTriple t;
  double* slots[3] = {&t.theta1, &t.theta2, &t.theta3};
  for (int i = 0; i < 3; ++i) {
    long long m = parity_angle_numerator(pairs[i].alpha, pairs[i].beta);
    *slots[i] = M_PI * static_cast<double>(m) / static_cast<double>(pairs[i].alpha);
  }
  TripleAxes v = construct_triple(t);
  return {qexp(v.v1, t.theta1), qexp(v.v2, t.theta2), qexp(v.v3, t.theta3)};
}

// Case (d): sorted pairs of shape (2,...,2,p,q) with n >= 3, rho(h) = -1.
// Guarantees the first image is exactly a purely imaginary unit.
std::vector<Quat> sorted_22pq_images(const std::vector<SeifertPair>& sorted) {
  std::size_t n = sorted.size();
  if (n == 3) return half_angle_triple_images(sorted);

  std::vector<long long> a = alpha_list(sorted);
  if (a == std::vector<long long>{2, 2, 4, 4}) {
    return {Quat::i(), -Quat::i(), qexp({0, 1, 0}, M_PI / 4),
            qexp({0, 1, 0}, -M_PI / 4)};
  }
  // Drop the first (2, beta) pair, realign the sub-witness so its leading
  // image is i, then prepend j, k (note jk = i).
  std::vector<SeifertPair> rest(sorted.begin() + 1, sorted.end());
  std::vector<Quat> sub = sorted_22pq_images(rest);
  Quat r = aligning_rotation(normalized(sub[0].imag()), {1, 0, 0});
  for (auto& q : sub) q = mul(mul(r, q), conj(r));
  std::vector<Quat> out = {Quat::j(), Quat::k()};
  out.insert(out.end(), sub.begin() + 1, sub.end());
  return out;
}

// All S^2-base constructions for merged pairs (alpha >= 2, n >= 3, any
// order).  h_img receives 1 for orbifold-level witnesses, -1 otherwise.
std::vector<Quat> s2_witness_images(const std::vector<SeifertPair>& pairs,
                                    Quat& h_img) {
  std::vector<long long> a = alpha_list(pairs);
  std::vector<long long> sorted_a = a;
  std::sort(sorted_a.begin(), sorted_a.end());

  bool form_22pq = true;
  for (std::size_t i = 0; i + 2 < sorted_a.size(); ++i)
    if (sorted_a[i] != 2) form_22pq = false;
  bool is_333 = sorted_a == std::vector<long long>{3, 3, 3};

  if (!form_22pq && !is_333) {
    h_img = Quat::one();  // case (a): lift a polygon-group witness
    return detail::delta_witness_images(a);
  }

  h_img = Quat::minus_one();
  if (is_333) {
    // Case (c): angles pi/3 (beta odd) or 2pi/3 (beta even), axes solved.
    AngleTriple t;
    double* slots[3] = {&t.theta1, &t.theta2, &t.theta3};
    for (int i = 0; i < 3; ++i)
      *slots[i] = even(pairs[i].beta) ? 2 * M_PI / 3 : M_PI / 3;
    TripleAxes v = construct_triple(t);
    return {qexp(v.v1, t.theta1), qexp(v.v2, t.theta2), qexp(v.v3, t.theta3)};
  }
  if (pairs.size() == 3) return half_angle_triple_images(pairs);

  // Case (d): sort, build, then restore the requested fiber order.
  std::vector<int> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return pairs[x].alpha < pairs[y].alpha; });
  std::vector<SeifertPair> sorted(pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) sorted[t] = pairs[order[t]];
  std::vector<Quat> images = sorted_22pq_images(sorted);
  return detail::unsort_product_images(images, order);
}

struct WitnessParts {
  std::vector<Quat> handles;      // images of a1,b1,... (or a1..ag)
  std::vector<Quat> main_images;  // images for the merged alpha>=2 pairs
  Quat h = Quat::one();
};

}  // namespace

Representation nonabelian_witness(const SeifertInvariants& s) {
  s.validate();
  SeifertInvariants ns = normalize(s);
  if (abelian_certificate(ns)) throw IsAbelian("manifold is SU(2)-abelian");

  long long g = s.base.genus;

  // Merge alpha = 1 fibers into the first alpha >= 2 pair, keeping order.
  std::vector<SeifertPair> main;
  std::vector<std::size_t> main_idx;
  long long k = 0;
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (s.pairs[i].alpha == 1) {
      k += s.pairs[i].beta;
    } else {
      main.push_back(s.pairs[i]);
      main_idx.push_back(i);
    }
  }
  if (!main.empty()) main.front().beta += k * main.front().alpha;

  WitnessParts parts;
  bool solve_handles_by_commutator = false;
  bool rp2_half_angle = false;

  if (s.base.orientable && g == 0) {
    parts.main_images = s2_witness_images(main, parts.h);
  } else if (s.base.orientable && g == 1) {
    // Case (e): rho(h) = -1, fiber axes i, j, j, ..., handles solved below.
    parts.h = Quat::minus_one();
    for (std::size_t t = 0; t < main.size(); ++t) {
      Vec3 axis = t == 0 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
      double theta = M_PI * static_cast<double>(main[t].beta) /
                     static_cast<double>(main[t].alpha);
      parts.main_images.push_back(qexp(axis, theta));
    }
    solve_handles_by_commutator = true;
  } else if (s.base.orientable) {
    // Case (h): genus >= 2, handle images (i, j, i, j, 1, ...), h = 1.
    parts.h = Quat::one();
    parts.main_images.assign(main.size(), Quat::one());
    parts.handles.assign(2 * g, Quat::one());
    parts.handles[0] = Quat::i();
    parts.handles[1] = Quat::j();
    parts.handles[2] = Quat::i();
    parts.handles[3] = Quat::j();
  } else if (g == 1) {
    if (main.size() >= 2) {
      // Case (f): rho(h) = -1, axes i, j, ..., j; a is a half turn of the
      // inverse fiber product.
      parts.h = Quat::minus_one();
      for (std::size_t t = 0; t < main.size(); ++t) {
        Vec3 axis = t == 0 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        double theta = M_PI * static_cast<double>(main[t].beta) /
                       static_cast<double>(main[t].alpha);
        parts.main_images.push_back(qexp(axis, theta));
      }
      rp2_half_angle = true;
    } else {
      // Case (g): single fiber (alpha, beta) with |beta| >= 2 (possibly
      // alpha = 1 when only trivial fibers were given).
      long long alpha = main.empty() ? 1 : main.front().alpha;
      long long beta = main.empty() ? k : main.front().beta;
      parts.h = qexp({1, 0, 0},
                     M_PI * static_cast<double>(alpha) / static_cast<double>(beta));
      if (!main.empty()) parts.main_images = {Quat::minus_one()};
      parts.handles = {Quat::j()};
    }
  } else {
    // Nonorientable genus >= 2: a1 -> i, a2 -> j, everything else trivial.
    parts.h = Quat::one();
    parts.main_images.assign(main.size(), Quat::one());
    parts.handles.assign(g, Quat::one());
    parts.handles[0] = Quat::i();
    parts.handles[1] = Quat::j();
  }

  // Assemble fiber images in the original order.  Trivial fibers map to
  // h^{-beta}; the merge target absorbs h^k.
  std::vector<Quat> c_images(s.pairs.size());
  std::size_t next_main = 0;
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (s.pairs[i].alpha == 1) {
      c_images[i] = power(parts.h, -s.pairs[i].beta);
    } else {
      Quat img = parts.main_images[next_main];
      if (next_main == 0) img = mul(power(parts.h, k), img);
      c_images[i] = img;
      ++next_main;
    }
  }

  if (solve_handles_by_commutator || rp2_half_angle) {
    Quat prod = Quat::one();
    for (const auto& q : c_images) prod = mul(prod, q);
    Quat z = conj(prod);
    if (solve_handles_by_commutator) {
      auto [A, B] = commutator_solve(z);
      parts.handles = {A, B};
    } else {
      AxisAngle aa = qaxis(z);
      Vec3 w = aa.axis ? *aa.axis : Vec3{1, 0, 0};
      parts.handles = {qexp(w, aa.theta / 2)};
    }
  }

  Representation rep;
  rep.images = parts.handles;
  rep.images.insert(rep.images.end(), c_images.begin(), c_images.end());
  rep.images.push_back(parts.h);

  GroupPresentation pres = pi1_presentation(s);
  if (rep.images.size() != pres.generators.size())
    throw Error("internal: witness image count mismatch");
  if (relator_residual(pres, rep) > 1e-10 || is_abelian_rep(rep, 1e-6))
    throw Error("internal: Seifert witness failed verification for " + to_string(s));
  return rep;
}

ClassificationVerdict is_su2_abelian(const SeifertInvariants& s) {
  s.validate();
  ClassificationVerdict v;
  auto cert = abelian_certificate(normalize(s));
  if (cert) {
    v.abelian = true;
    v.certificate = cert;
  } else {
    v.abelian = false;
    v.witness = nonabelian_witness(s);
  }
  return v;
}

SeifertInvariants parse_sfs(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "' in manifold description", pos);
    ++pos;
  };
  auto parse_int = [&]() -> long long {
    skip_ws();
    std::size_t start = pos;
    bool neg = pos < text.size() && text[pos] == '-';
    if (neg) ++pos;
    long long v = 0;
    bool any = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      any = true;
      ++pos;
    }
    if (!any) throw ParseError("expected integer", start);
    return neg ? -v : v;
  };

  skip_ws();
  if (text.substr(pos, 4) != "sfs(")
    throw ParseError("manifold description must start with 'sfs('", pos);
  pos += 4;
  skip_ws();

  SeifertInvariants s;
  if (text.substr(pos, 2) == "S2") {
    s.base = BaseSurface::S2();
    pos += 2;
  } else if (text.substr(pos, 2) == "T2") {
    s.base = BaseSurface::T2();
    pos += 2;
  } else if (text.substr(pos, 3) == "RP2") {
    s.base = BaseSurface::RP2();
    pos += 3;
  } else if (pos < text.size() && (text[pos] == 'O' || text[pos] == 'N')) {
    bool orientable = text[pos] == 'O';
    ++pos;
    long long genus = parse_int();
    s.base = orientable ? BaseSurface::orientable_genus(genus)
                        : BaseSurface::nonorientable_genus(genus);
  } else {
    throw ParseError("unknown base surface", pos);
  }

  skip_ws();
  if (pos < text.size() && text[pos] == ';') {
    ++pos;
    for (;;) {
      long long alpha = parse_int();
      expect('/');
      long long beta = parse_int();
      s.pairs.push_back({alpha, beta});
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect(')');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input after ')'", pos);
  s.validate();
  return s;
}

std::string to_string(const SeifertInvariants& s) {
  std::string out = "sfs(";
  if (s.base.is_s2())
    out += "S2";
  else if (s.base.is_t2())
    out += "T2";
  else if (s.base.is_rp2())
    out += "RP2";
  else
    out += (s.base.orientable ? "O" : "N") + std::to_string(s.base.genus);
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    out += i == 0 ? "; " : ", ";
    out += std::to_string(s.pairs[i].alpha) + "/" + std::to_string(s.pairs[i].beta);
  }
  out += ")";
  return out;
}

}  // namespace su2abelian
