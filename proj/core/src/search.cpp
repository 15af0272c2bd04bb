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

#include "su2abelian/search.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <thread>

#include "su2abelian/errors.hpp"

namespace su2abelian {
namespace {

struct Letter {
  int gen;
  bool inv;
};

struct Expanded {
  std::vector<std::vector<Letter>> rels;  // nonempty relators, letter by letter
  int ngens = 0;
};

Expanded expand(const GroupPresentation& pres) {
  Expanded ex;
  ex.ngens = static_cast<int>(pres.generators.size());
  for (const auto& r : pres.relators) {
    std::vector<Letter> letters;
    for (const auto& s : r) {
      bool inv = s.exp < 0;
      for (long long t = 0; t < std::abs(s.exp); ++t)
        letters.push_back({s.gen, inv});
    }
    if (!letters.empty()) ex.rels.push_back(std::move(letters));
  }
  return ex;
}

Quat letter_value(const std::vector<Quat>& q, Letter L) {
  return L.inv ? conj(q[L.gen]) : q[L.gen];
}

double objective(const Expanded& ex, const std::vector<Quat>& q) {
  double f = 0;
  for (const auto& rel : ex.rels) {
    Quat p = Quat::one();
    for (const auto& L : rel) p = mul(p, letter_value(q, L));
    double dw = p.w - 1;
    f += dw * dw + p.x * p.x + p.y * p.y + p.z * p.z;
  }
  return f;
}

void add_vec(double* dst, const Quat& q, double scale) {
  dst[0] += scale * q.w;
  dst[1] += scale * q.x;
  dst[2] += scale * q.y;
  dst[3] += scale * q.z;
}

// Euclidean gradient in R^{4G}, then projected to the tangent of each sphere.
std::vector<double> gradient(const Expanded& ex, const std::vector<Quat>& q) {
  std::vector<double> grad(4 * ex.ngens, 0.0);
  std::vector<Quat> prefix, suffix;
  for (const auto& rel : ex.rels) {
    std::size_t k = rel.size();
    prefix.assign(k + 1, Quat::one());
    suffix.assign(k + 1, Quat::one());
    for (std::size_t t = 0; t < k; ++t)
      prefix[t + 1] = raw_mul(prefix[t], letter_value(q, rel[t]));
    for (std::size_t t = k; t > 0; --t)
      suffix[t - 1] = raw_mul(letter_value(q, rel[t - 1]), suffix[t]);
    // f_rel = |p - 1|^2 = 2 - 2 Re(p) on the unit sphere; d(Re p)/dq comes
    // from Re(A q B) = <q, conj(BA)> and Re(A q^-1 B) = <q, BA>.
    for (std::size_t t = 0; t < k; ++t) {
      Quat BA = raw_mul(suffix[t + 1], prefix[t]);
      add_vec(&grad[4 * rel[t].gen], rel[t].inv ? BA : conj(BA), -2.0);
    }
  }
  for (int g = 0; g < ex.ngens; ++g) {
    double* v = &grad[4 * g];
    double d = v[0] * q[g].w + v[1] * q[g].x + v[2] * q[g].y + v[3] * q[g].z;
    v[0] -= d * q[g].w;
    v[1] -= d * q[g].x;
    v[2] -= d * q[g].y;
    v[3] -= d * q[g].z;
  }
  return grad;
}

// Orthonormal basis of the tangent space at q (3 vectors in R^4).
void tangent_basis(const Quat& q, Quat basis[3]) {
  double comps[4] = {q.w, q.x, q.y, q.z};
  int skip = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(comps[i]) > std::abs(comps[skip])) skip = i;
  int out = 0;
  for (int i = 0; i < 4 && out < 3; ++i) {
    if (i == skip) continue;
    double v[4] = {0, 0, 0, 0};
    v[i] = 1;
    // Gram-Schmidt against q and the previous basis vectors.
    double dq = v[0] * q.w + v[1] * q.x + v[2] * q.y + v[3] * q.z;
    v[0] -= dq * q.w;
    v[1] -= dq * q.x;
    v[2] -= dq * q.y;
    v[3] -= dq * q.z;
    for (int b = 0; b < out; ++b) {
      const Quat& u = basis[b];
      double du = v[0] * u.w + v[1] * u.x + v[2] * u.y + v[3] * u.z;
      v[0] -= du * u.w;
      v[1] -= du * u.x;
      v[2] -= du * u.y;
      v[3] -= du * u.z;
    }
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    basis[out++] = {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
  }
}

// Damped Gauss-Newton (Levenberg style) on the 4R-dimensional residual with
// 3 tangent coordinates per generator.  Returns the final objective value.
double newton_polish(const Expanded& ex, std::vector<Quat>& q, double f,
                     double f_target, int& iter, int max_iter) {
  const int G = ex.ngens;
  const int rows = 4 * static_cast<int>(ex.rels.size());
  Eigen::MatrixXd J(rows, 3 * G);
  Eigen::VectorXd res(rows);
  std::vector<Quat> prefix, suffix;
  std::vector<Quat> basis(3 * G);
  double lambda = 1e-3;
  int stall = 0;

  while (iter < max_iter && f > f_target && stall < 8) {
    ++iter;
    for (int g = 0; g < G; ++g) tangent_basis(q[g], &basis[3 * g]);
    J.setZero();
    int row = 0;
    for (const auto& rel : ex.rels) {
      std::size_t k = rel.size();
      prefix.assign(k + 1, Quat::one());
      suffix.assign(k + 1, Quat::one());
      for (std::size_t t = 0; t < k; ++t)
        prefix[t + 1] = raw_mul(prefix[t], letter_value(q, rel[t]));
      for (std::size_t t = k; t > 0; --t)
        suffix[t - 1] = raw_mul(letter_value(q, rel[t - 1]), suffix[t]);
      Quat p = prefix[k];
      res[row + 0] = p.w - 1;
      res[row + 1] = p.x;
      res[row + 2] = p.y;
      res[row + 3] = p.z;
      for (std::size_t t = 0; t < k; ++t) {
        int g = rel[t].gen;
        for (int b = 0; b < 3; ++b) {
          Quat u = basis[3 * g + b];
          if (rel[t].inv) u = conj(u);
          Quat dp = raw_mul(raw_mul(prefix[t], u), suffix[t + 1]);
          J(row + 0, 3 * g + b) += dp.w;
          J(row + 1, 3 * g + b) += dp.x;
          J(row + 2, 3 * g + b) += dp.y;
          J(row + 3, 3 * g + b) += dp.z;
        }
      }
      row += 4;
    }

    Eigen::MatrixXd A = J.transpose() * J;
    Eigen::VectorXd gvec = J.transpose() * res;
    bool accepted = false;
    for (int attempt = 0; attempt < 24; ++attempt) {
      Eigen::MatrixXd Areg = A;
      for (int d = 0; d < 3 * G; ++d) Areg(d, d) += lambda;
      Eigen::VectorXd step = Areg.ldlt().solve(-gvec);
      std::vector<Quat> qn(q);
      for (int g = 0; g < G; ++g) {
        Quat nq = q[g];
        for (int b = 0; b < 3; ++b) {
          const Quat& u = basis[3 * g + b];
          double s = step[3 * g + b];
          nq.w += s * u.w;
          nq.x += s * u.x;
          nq.y += s * u.y;
          nq.z += s * u.z;
        }
        qn[g] = normalized(nq);
      }
      double fn = objective(ex, qn);
      if (fn < f) {
        q = std::move(qn);
        if (f - fn < 1e-18 * (1 + f)) ++stall; else stall = 0;
        f = fn;
        lambda = std::max(lambda / 3, 1e-14);
        accepted = true;
        break;
      }
      lambda *= 10;
      if (lambda > 1e10) break;
    }
    if (!accepted) ++stall;
  }
  return f;
}

double optimize(const Expanded& ex, std::vector<Quat>& q, double f_target,
                int max_iter) {
  if (ex.rels.empty()) return 0;
  double f = objective(ex, q);
  int iter = 0;

  // Armijo gradient descent until the damped-Newton basin (f < 1e-4).
  double step0 = 0.25;
  while (iter < max_iter && f > 1e-4) {
    ++iter;
    std::vector<double> g = gradient(ex, q);
    double gnorm2 = 0;
    for (double v : g) gnorm2 += v * v;
    if (gnorm2 < 1e-24) break;  // first-order stationary
    double t = step0;
    bool moved = false;
    while (t > 1e-14) {
      std::vector<Quat> qn(q);
      for (int gi = 0; gi < ex.ngens; ++gi) {
        qn[gi].w -= t * g[4 * gi + 0];
        qn[gi].x -= t * g[4 * gi + 1];
        qn[gi].y -= t * g[4 * gi + 2];
        qn[gi].z -= t * g[4 * gi + 3];
        qn[gi] = normalized(qn[gi]);
      }
      double fn = objective(ex, qn);
      if (fn <= f - 1e-4 * t * gnorm2) {
        q = std::move(qn);
        f = fn;
        step0 = std::min(4 * t, 1.0);
        moved = true;
        break;
      }
      t /= 2;
    }
    if (!moved) break;  // line search exhausted; hand over to Newton
  }
  return newton_polish(ex, q, f, f_target, iter, max_iter);
}

double worst_commutator(const std::vector<Quat>& q) {
  double worst = 0;
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = a + 1; b < q.size(); ++b)
      worst = std::max(worst, dist(commutator(q[a], q[b]), Quat::one()));
  return worst;
}

// Attempts to realize the rotation angles of the images as an exact
// common-axis representation, by Newton iteration on the angle congruences
// sum_g E_{rg} phi_g = 0 (mod 2pi).  Near-reducible converged points whose
// residual vanishes to high order along the escape direction sit within
// angle distance ~1e-4 of such a point whenever one exists, while points on
// genuinely irreducible components have no such neighbor.  Returns the
// snapped representation if it meets the residual tolerance.
std::optional<std::vector<Quat>> abelian_snap(const GroupPresentation& pres,
                                              const std::vector<Quat>& q,
                                              double tol) {
  const std::size_t G = q.size();
  Vec3 axis{1, 0, 0};
  double largest = 0;
  for (const auto& img : q) {
    double m = norm(img.imag());
    if (m > largest) {
      largest = m;
      axis = normalized(img.imag());
    }
  }
  std::vector<double> phi(G);
  for (std::size_t g = 0; g < G; ++g) {
    double m = norm(q[g].imag());
    double s = m < 1e-14 ? 0.0 : (dot(q[g].imag(), axis) >= 0 ? m : -m);
    phi[g] = std::atan2(s, q[g].w);
  }

  std::vector<std::vector<double>> E;
  for (const auto& rel : pres.relators) {
    std::vector<double> row(G, 0.0);
    for (const auto& syl : rel) row[syl.gen] += static_cast<double>(syl.exp);
    E.push_back(std::move(row));
  }
  const int R = static_cast<int>(E.size());
  if (R == 0) return std::nullopt;

  Eigen::MatrixXd J(R, G);
  Eigen::VectorXd res(R);
  double lambda = 1e-6;
  for (int iter = 0; iter < 80; ++iter) {
    double f = 0;
    for (int r = 0; r < R; ++r) {
      double s = 0;
      for (std::size_t g = 0; g < G; ++g) s += E[r][g] * phi[g];
      res[r] = 2 * std::sin(s / 2);
      f += res[r] * res[r];
      for (std::size_t g = 0; g < G; ++g) J(r, g) = std::cos(s / 2) * E[r][g];
    }
    if (f < 1e-28) break;
    Eigen::MatrixXd A = J.transpose() * J;
    for (std::size_t d = 0; d < G; ++d) A(d, d) += lambda;
    Eigen::VectorXd step = A.ldlt().solve(-(J.transpose() * res));
    std::vector<double> cand(phi);
    for (std::size_t g = 0; g < G; ++g) cand[g] += step[g];
    double fc = 0;
    for (int r = 0; r < R; ++r) {
      double s = 0;
      for (std::size_t g = 0; g < G; ++g) s += E[r][g] * cand[g];
      fc += 4 * std::sin(s / 2) * std::sin(s / 2);
    }
    if (fc < f) {
      phi = std::move(cand);
      lambda = std::max(lambda / 4, 1e-12);
    } else {
      lambda *= 10;
      if (lambda > 1e8) break;
    }
  }

  std::vector<Quat> snapped(G);
  for (std::size_t g = 0; g < G; ++g) snapped[g] = qexp(axis, phi[g]);
  if (relator_residual(pres, Representation{snapped}) >= tol) return std::nullopt;
  return snapped;
}

std::vector<Word> trace_word_set(int ngens) {
  std::vector<Word> words;
  for (int g = 0; g < ngens; ++g) words.push_back({{g, 1}});
  for (int a = 0; a < ngens; ++a)
    for (int b = a + 1; b < ngens; ++b) words.push_back({{a, 1}, {b, 1}});
  for (int a = 0; a < ngens; ++a)
    for (int b = a + 1; b < ngens; ++b)
      words.push_back({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  return words;
}

std::vector<long long> trace_key(const Representation& rep,
                                 const std::vector<Word>& words,
                                 bool nonabelian) {
  std::vector<long long> key;
  key.reserve(words.size() + 1);
  // Points straddling the commutator tolerance can share rounded traces with
  // genuinely abelian points; never merge across the classification.
  key.push_back(nonabelian ? 1 : 0);
  for (const auto& w : words)
    key.push_back(std::llround(2 * eval_word(rep, w).w / 1e-4));
  return key;
}

double polish_target(double tol) { return std::min(tol * tol, 1e-26); }

}  // namespace

namespace detail {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t restart_index) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = a ^ (restart_index * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull);
  splitmix64(s);
  return s;
}

Quat haar_quaternion(std::uint64_t& state) {
  double g[4];
  for (int pair = 0; pair < 2; ++pair) {
    double u1 = ((splitmix64(state) >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    double u2 = (splitmix64(state) >> 11) * 0x1.0p-53;          // [0, 1)
    double r = std::sqrt(-2.0 * std::log(u1));
    g[2 * pair + 0] = r * std::cos(2 * M_PI * u2);
    g[2 * pair + 1] = r * std::sin(2 * M_PI * u2);
  }
  return normalized(Quat{g[0], g[1], g[2], g[3]});
}

double search_objective(const GroupPresentation& pres,
                        const std::vector<Quat>& images) {
  return objective(expand(pres), images);
}

std::vector<double> search_gradient(const GroupPresentation& pres,
                                    const std::vector<Quat>& images) {
  return gradient(expand(pres), images);
}

}  // namespace detail

SearchReport search(const GroupPresentation& pres, const SearchOptions& opts) {
  if (opts.restarts < 1) throw PreconditionError("search needs restarts >= 1");
  if (!(opts.tol > 0)) throw PreconditionError("search needs tol > 0");
  Expanded ex = expand(pres);
  const int G = ex.ngens;
  std::vector<Word> twords = trace_word_set(G);

  auto run_restart = [&](int idx) -> std::optional<FoundRep> {
    std::uint64_t state = detail::stream_seed(opts.seed, static_cast<std::uint64_t>(idx));
    std::vector<Quat> q(G);
    for (int g = 0; g < G; ++g) q[g] = detail::haar_quaternion(state);
    optimize(ex, q, polish_target(opts.tol), opts.max_iterations);
    Representation rep{q};
    double residual = relator_residual(pres, rep);
    if (residual >= opts.tol) return std::nullopt;
    FoundRep f;
    f.rep = std::move(rep);
    f.residual = residual;
    f.nonabelian = !is_abelian_rep(f.rep, opts.commutator_tol);
    // A near-reducible point whose escape direction kills the residual to
    // high order can stall with commutators above tol; when its angles are
    // realized exactly by a common-axis representation, report that instead.
    if (f.nonabelian && worst_commutator(f.rep.images) < 1e-2) {
      if (auto snapped = abelian_snap(pres, f.rep.images, opts.tol)) {
        f.rep.images = std::move(*snapped);
        f.residual = relator_residual(pres, f.rep);
        f.nonabelian = false;
      }
    }
    f.restart_index = idx;
    return f;
  };

  std::vector<FoundRep> candidates;
  int restarts_used = opts.restarts;
  int threads = std::max(1, opts.threads);
  // Fixed chunk size keeps the early-stop point independent of the thread
  // count, so reports are bit-identical under any parallel schedule.
  int chunk = opts.stop_at_first_nonabelian ? 16 : opts.restarts;

  for (int base = 0; base < opts.restarts && restarts_used == opts.restarts;
       base += chunk) {
    int hi = std::min(base + chunk, opts.restarts);
    std::vector<std::optional<FoundRep>> slot(hi - base);
    if (threads == 1) {
      for (int i = base; i < hi; ++i) slot[i - base] = run_restart(i);
    } else {
      std::vector<std::thread> pool;
      std::atomic<int> next{base};
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
          for (;;) {
            int i = next.fetch_add(1);
            if (i >= hi) return;
            slot[i - base] = run_restart(i);
          }
        });
      for (auto& th : pool) th.join();
    }
    for (int i = base; i < hi; ++i) {
      if (!slot[i - base]) continue;
      candidates.push_back(std::move(*slot[i - base]));
      if (opts.stop_at_first_nonabelian && candidates.back().nonabelian) {
        restarts_used = i + 1;
        break;
      }
    }
  }

  // Deduplicate by trace coordinates (conjugation invariants) and sort.
  std::map<std::vector<long long>, FoundRep> byclass;
  for (auto& c : candidates) {
    if (c.restart_index >= restarts_used) continue;
    auto key = trace_key(c.rep, twords, c.nonabelian);
    auto it = byclass.find(key);
    if (it == byclass.end()) {
      byclass.emplace(std::move(key), std::move(c));
    } else if (std::make_pair(c.residual, c.restart_index) <
               std::make_pair(it->second.residual, it->second.restart_index)) {
      it->second = std::move(c);
    }
  }

  SearchReport report;
  report.seed = opts.seed;
  report.tolerance = opts.tol;
  report.restarts_used = restarts_used;
  struct Entry {
    std::vector<long long> key;
    FoundRep rep;
  };
  std::vector<Entry> entries;
  for (auto& [key, rep] : byclass) entries.push_back({key, std::move(rep)});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.rep.residual != b.rep.residual) return a.rep.residual < b.rep.residual;
    return a.key < b.key;
  });
  for (auto& e : entries) report.found.push_back(std::move(e.rep));
  if (!report.any_nonabelian())
    report.caveat = "no non-abelian representation found after " +
                    std::to_string(report.restarts_used) +
                    " restarts; heuristic evidence only, not a proof of "
                    "SU(2)-cyclicity";
  return report;
}

Representation refine(const GroupPresentation& pres, const Representation& start,
                      double tol) {
  Expanded ex = expand(pres);
  std::vector<Quat> q = start.images;
  for (auto& v : q) v = normalized(v);
  optimize(ex, q, polish_target(tol), 2000);
  return Representation{std::move(q)};
}

}  // namespace su2abelian
