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

#include "su2abelian/sol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "su2abelian/errors.hpp"

namespace su2abelian {
namespace {

long long isqrt(long long n) {
  if (n < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(long long n) {
  if (n < 0) return false;
  long long r = isqrt(n);
  return r * r == n;
}

// sign of x - sqrt(D), for nonsquare D > 0.
int cmp_sqrt(long long x, long long D) {
  if (x < 0) return -1;
  if (x * x < D) return -1;
  return 1;  // x*x == D impossible
}

bool divides(long long d, long long x) { return x % d == 0; }

void require_sl2(const Monodromy& m) {
  if (m.det() != 1)
    throw PreconditionError("matrix " + m.to_string() + " is not in SL(2,Z)");
}

}  // namespace

std::string Monodromy::to_string() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + ";" +
         std::to_string(c) + "," + std::to_string(d) + "]";
}

std::string BinaryQuadraticForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

bool sol_is_su2_abelian(const Monodromy& phi) {
  require_sl2(phi);
  if (!phi.hyperbolic())
    throw NotHyperbolic("monodromy trace " + std::to_string(phi.trace()) +
                        " is not hyperbolic (need |trace| > 2)");
  long long m = phi.trace() + 2;
  return divides(m, 2 * (phi.a + 1)) && divides(m, 2 * phi.b) &&
         divides(m, 2 * phi.c) && divides(m, 2 * (phi.d + 1));
}

GroupPresentation torus_bundle_presentation(const Monodromy& phi) {
  GroupPresentation pres;
  pres.generators = {"x", "y", "t"};
  const int x = 0, y = 1, t = 2;
  Word comm;
  append_syllable(comm, x, 1);
  append_syllable(comm, y, 1);
  append_syllable(comm, x, -1);
  append_syllable(comm, y, -1);
  pres.relators.push_back(comm);

  // t x t^-1 (x^a y^c)^-1 and t y t^-1 (x^b y^d)^-1
  Word rx;
  append_syllable(rx, t, 1);
  append_syllable(rx, x, 1);
  append_syllable(rx, t, -1);
  append_syllable(rx, y, -phi.c);
  append_syllable(rx, x, -phi.a);
  pres.relators.push_back(rx);
  Word ry;
  append_syllable(ry, t, 1);
  append_syllable(ry, y, 1);
  append_syllable(ry, t, -1);
  append_syllable(ry, y, -phi.d);
  append_syllable(ry, x, -phi.b);
  pres.relators.push_back(ry);
  return pres;
}

std::array<TorusBundleRep, 2> torus_bundle_reps(const Monodromy& phi) {
  require_sl2(phi);
  long long tau = phi.trace();
  if (tau == -2) throw TraceMinusTwo("theta pairs undefined at trace -2");

  GroupPresentation pres = torus_bundle_presentation(phi);
  std::array<TorusBundleRep, 2> out;
  const long long numerators[2][2] = {{phi.d + 1, -phi.b}, {-phi.c, phi.a + 1}};
  for (int which = 0; which < 2; ++which) {
    long long n1 = numerators[which][0], n2 = numerators[which][1];
    double scale = 2 * M_PI / static_cast<double>(tau + 2);
    TorusBundleRep r;
    r.thetas = {scale * static_cast<double>(n1), scale * static_cast<double>(n2)};
    r.rep.images = {qexp({1, 0, 0}, r.thetas.theta1),
                    qexp({1, 0, 0}, r.thetas.theta2), Quat::j()};
    // theta is a multiple of pi exactly when (tau+2) | 2*numerator.
    r.nonabelian = !(divides(tau + 2, 2 * n1) && divides(tau + 2, 2 * n2));
    if (relator_residual(pres, r.rep) > 1e-10)
      throw Error("internal: torus bundle representation failed verification");
    out[which] = r;
  }
  return out;
}

GroupPresentation nun_presentation(const GluingMatrix& glue) {
  GroupPresentation pres;
  pres.generators = {"a1", "b1", "a2", "b2"};
  const int a1 = 0, b1 = 1, a2 = 2, b2 = 3;
  auto flip = [&](int b, int a) {
    // b a b^-1 a = 1, i.e. b a b^-1 = a^-1.
    Word w;
    append_syllable(w, b, 1);
    append_syllable(w, a, 1);
    append_syllable(w, b, -1);
    append_syllable(w, a, 1);
    return w;
  };
  pres.relators.push_back(flip(b1, a1));
  pres.relators.push_back(flip(b2, a2));
  Word wa;  // a2^-1 a1^m b1^{2n}
  append_syllable(wa, a2, -1);
  append_syllable(wa, a1, glue.m);
  append_syllable(wa, b1, 2 * glue.n);
  pres.relators.push_back(wa);
  Word wb;  // b2^-2 a1^p b1^{2q}
  append_syllable(wb, b2, -2);
  append_syllable(wb, a1, glue.p);
  append_syllable(wb, b1, 2 * glue.q);
  pres.relators.push_back(wb);
  Word wc;  // [a1, b1^2]: the boundary torus subgroup is abelian
  append_syllable(wc, a1, 1);
  append_syllable(wc, b1, 2);
  append_syllable(wc, a1, -1);
  append_syllable(wc, b1, -2);
  pres.relators.push_back(wc);
  return pres;
}

Representation nun_q8_rep(const GluingMatrix& glue) {
  if (std::abs(glue.det()) != 1)
    throw InvalidGluing("gluing matrix must have determinant +-1, got " +
                        std::to_string(glue.det()));
  auto sign_pow = [](long long e) {
    return ((e % 2) + 2) % 2 == 0 ? Quat::one() : Quat::minus_one();
  };
  Quat fa1 = sign_pow(glue.q - 1);
  Quat fa2 = mul(power(fa1, glue.m), sign_pow(glue.n));
  Representation rep;
  rep.images = {fa1, Quat::i(), fa2, Quat::j()};

  if (relator_residual(nun_presentation(glue), rep) > 1e-10)
    throw Error("internal: Q8 representation failed verification");
  return rep;
}

BinaryQuadraticForm form_of_matrix(const Monodromy& A) {
  return {A.b, A.d - A.a, -A.c};
}

namespace {

void require_indefinite_nonsquare(long long D) {
  if (D <= 0 || is_square(D))
    throw BadDiscriminant("discriminant must be positive and not a perfect square, got " +
                          std::to_string(D));
}

bool is_reduced(const BinaryQuadraticForm& f) {
  long long D = f.disc();
  if (f.b <= 0 || cmp_sqrt(f.b, D) > 0) return false;
  long long two_a = 2 * std::abs(f.a);
  // sqrt(D) - b < 2|a|  <=>  sqrt(D) < 2|a| + b
  if (cmp_sqrt(two_a + f.b, D) < 0) return false;
  // 2|a| < sqrt(D) + b  <=>  2|a| - b < sqrt(D)
  if (cmp_sqrt(two_a - f.b, D) > 0) return false;
  return true;
}

// One rho-step (a,b,c) -> (c, r, (r^2-D)/(4c)) with r = -b (mod 2|c|) chosen
// in the standard normalization window.
BinaryQuadraticForm rho_step(const BinaryQuadraticForm& f) {
  long long D = f.disc();
  long long c = f.c;
  long long ac = std::abs(c);
  long long lo, hi;  // r in [lo, hi], a window of width exactly 2|c|
  if (cmp_sqrt(ac, D) > 0) {
    lo = -ac + 1;
    hi = ac;
  } else {
    long long s = isqrt(D);
    lo = s + 1 - 2 * ac;
    hi = s;
  }
  long long r = -f.b % (2 * ac);
  while (r < lo) r += 2 * ac;
  while (r > hi) r -= 2 * ac;
  long long c2 = (r * r - D) / (4 * c);
  return {c, r, c2};
}

BinaryQuadraticForm reduce_once(BinaryQuadraticForm f) {
  for (int guard = 0; guard < 20000; ++guard) {
    if (is_reduced(f)) return f;
    f = rho_step(f);
  }
  throw Error("internal: form reduction did not terminate");
}

std::vector<BinaryQuadraticForm> cycle_of_reduced(const BinaryQuadraticForm& start) {
  std::vector<BinaryQuadraticForm> cycle = {start};
  for (int guard = 0; guard < 20000; ++guard) {
    BinaryQuadraticForm next = rho_step(cycle.back());
    if (next == start) return cycle;
    cycle.push_back(next);
  }
  throw Error("internal: reduced cycle did not close");
}

void rotate_to_lex_least(std::vector<BinaryQuadraticForm>& cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
}

long long content(const BinaryQuadraticForm& f) {
  return std::gcd(std::gcd(std::abs(f.a), std::abs(f.b)), std::abs(f.c));
}

}  // namespace

std::vector<BinaryQuadraticForm> reduce_form_cycle(const BinaryQuadraticForm& Q) {
  require_indefinite_nonsquare(Q.disc());
  long long g = content(Q);
  BinaryQuadraticForm prim{Q.a / g, Q.b / g, Q.c / g};
  std::vector<BinaryQuadraticForm> cycle = cycle_of_reduced(reduce_once(prim));
  for (auto& f : cycle) f = {g * f.a, g * f.b, g * f.c};
  rotate_to_lex_least(cycle);
  return cycle;
}

bool forms_equivalent(const BinaryQuadraticForm& Q1, const BinaryQuadraticForm& Q2) {
  require_indefinite_nonsquare(Q1.disc());
  if (Q1.disc() != Q2.disc())
    throw DiscriminantMismatch("discriminants differ: " + std::to_string(Q1.disc()) +
                               " vs " + std::to_string(Q2.disc()));
  std::vector<BinaryQuadraticForm> c1 = reduce_form_cycle(Q1);
  std::vector<BinaryQuadraticForm> c2 = reduce_form_cycle(Q2);
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  return c1 == c2;
}

namespace {

std::vector<BinaryQuadraticForm> all_reduced_forms(long long D) {
  std::vector<BinaryQuadraticForm> forms;
  long long s = isqrt(D);
  for (long long b = (D % 2 == 0 ? 2 : 1); b <= s; b += 2) {
    long long P = (D - b * b) / 4;  // = -ac > 0
    for (long long a = -(s + b) / 2 - 1; a <= (s + b) / 2 + 1; ++a) {
      if (a == 0 || P % a != 0) continue;
      long long two_a = 2 * std::abs(a);
      if (cmp_sqrt(two_a + b, D) < 0) continue;   // need 2|a| > sqrt(D) - b
      if (cmp_sqrt(two_a - b, D) > 0) continue;   // need 2|a| < sqrt(D) + b
      forms.push_back({a, b, -P / a});
    }
  }
  return forms;
}

}  // namespace

long long class_number(long long D) {
  if (D <= 0 || is_square(D) || (D % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw BadDiscriminant("not a positive nonsquare discriminant: " + std::to_string(D));
  std::set<BinaryQuadraticForm> canonical;
  for (const auto& f : all_reduced_forms(D))
    canonical.insert(reduce_form_cycle(f).front());
  return static_cast<long long>(canonical.size());
}

std::vector<Monodromy> sl2_trace_classes(long long tau) {
  if (std::abs(tau) <= 2)
    throw NotHyperbolic("trace " + std::to_string(tau) + " is not hyperbolic");
  long long D = tau * tau - 4;
  std::set<BinaryQuadraticForm> canonical;
  for (const auto& f : all_reduced_forms(D))
    canonical.insert(reduce_form_cycle(f).front());
  std::vector<Monodromy> out;
  for (const auto& f : canonical) {
    // Invert Q_A = (b, d-a, -c): trace and the middle coefficient determine
    // the diagonal, since b == tau (mod 2) for discriminant tau^2 - 4.
    Monodromy A{(tau - f.b) / 2, f.a, -f.c, (tau + f.b) / 2};
    require_sl2(A);
    out.push_back(A);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool conjugate_sl2(const Monodromy& A, const Monodromy& B) {
  require_sl2(A);
  require_sl2(B);
  if (A.trace() != B.trace())
    throw TraceMismatch("traces differ: " + std::to_string(A.trace()) + " vs " +
                        std::to_string(B.trace()));
  if (!A.hyperbolic())
    throw NotHyperbolic("conjugacy test requires |trace| > 2");
  return forms_equivalent(form_of_matrix(A), form_of_matrix(B));
}

bool conjugate_gl2(const Monodromy& A, const Monodromy& B) {
  if (conjugate_sl2(A, B)) return true;
  Monodromy twisted{A.a, -A.b, -A.c, A.d};  // J A J^-1 with J = diag(1,-1)
  return conjugate_sl2(twisted, B);
}

namespace {

std::array<long long, 4> parse_bracket_quad(std::string_view text,
                                            std::string_view keyword) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, keyword.size()) != keyword)
    throw ParseError("expected '" + std::string(keyword) + "[...]'", pos);
  pos += keyword.size();
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::array<long long, 4> v{};
  const char separators[3] = {',', ';', ','};
  for (int t = 0; t < 4; ++t) {
    skip_ws();
    std::size_t start = pos;
    bool neg = pos < text.size() && text[pos] == '-';
    if (neg) ++pos;
    long long val = 0;
    bool any = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      val = val * 10 + (text[pos] - '0');
      any = true;
      ++pos;
    }
    if (!any) throw ParseError("expected integer", start);
    v[t] = neg ? -val : val;
    skip_ws();
    if (t < 3) {
      if (pos >= text.size() || text[pos] != separators[t])
        throw ParseError(std::string("expected '") + separators[t] + "'", pos);
      ++pos;
    }
  }
  skip_ws();
  if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
  ++pos;
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return v;
}

}  // namespace

Monodromy parse_tbundle(std::string_view text) {
  auto v = parse_bracket_quad(text, "tbundle");
  Monodromy m{v[0], v[1], v[2], v[3]};
  if (m.det() != 1)
    throw PreconditionError("torus bundle monodromy must have determinant 1, got " +
                            std::to_string(m.det()));
  return m;
}

GluingMatrix parse_nun(std::string_view text) {
  auto v = parse_bracket_quad(text, "nun");
  GluingMatrix g{v[0], v[1], v[2], v[3]};
  if (std::abs(g.det()) != 1)
    throw InvalidGluing("gluing matrix must have determinant +-1, got " +
                        std::to_string(g.det()));
  return g;
}

}  // namespace su2abelian
