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

#include <cstdint>
#include <string>
#include <vector>

#include "su2abelian/presentation.hpp"
#include "su2abelian/snf.hpp"

namespace su2abelian {

struct SearchOptions {
  int restarts = 300;
  std::uint64_t seed = 0;
  double tol = 1e-9;            // residual acceptance threshold
  double commutator_tol = 1e-6; // abelian / non-abelian separation
  int max_iterations = 2000;
  // Stop scanning restarts once a non-abelian point has been kept.  The
  // outcome stays deterministic: restarts are examined in index order.
  bool stop_at_first_nonabelian = false;
  // Worker threads for the restart fan-out; results are independent of the
  // thread count because every restart has its own RNG stream keyed by
  // (seed, restart index) and the merge is a deterministic sort.
  int threads = 1;
};

struct FoundRep {
  Representation rep;
  double residual = 0;
  bool nonabelian = false;
  int restart_index = 0;
};

struct SearchReport {
  std::vector<FoundRep> found;  // sorted by residual, then trace vector
  int restarts_used = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  // A negative outcome is heuristic evidence only, never a proof; the caveat
  // string says so explicitly when nothing non-abelian was found.
  std::string caveat;

  bool any_nonabelian() const {
    for (const auto& f : found)
      if (f.nonabelian) return true;
    return false;
  }
};

// Random-restart minimization of f(rho) = sum_relators |rho(r) - 1|^2 over
// the product of unit 3-spheres: Haar-uniform starts, Armijo gradient
// descent far from zeros, damped Gauss-Newton once f < 1e-4, tangent-space
// steps with renormalization.  Converged points (residual < tol) are kept
// and deduplicated by the trace vector of generators, pairwise products and
// pairwise commutators at resolution 1e-4.
SearchReport search(const GroupPresentation& pres, const SearchOptions& opts);

inline SearchReport search(const GroupPresentation& pres, int restarts,
                           std::uint64_t seed, double tol) {
  SearchOptions o;
  o.restarts = restarts;
  o.seed = seed;
  o.tol = tol;
  return search(pres, o);
}

// Local minimization from the given starting point; returns the refined
// point even when it is stuck above tol (the residual is reported honestly
// by relator_residual).
Representation refine(const GroupPresentation& pres, const Representation& start,
                      double tol);

namespace detail {

// Objective and its tangent gradient, exposed for finite-difference checks.
double search_objective(const GroupPresentation& pres, const std::vector<Quat>& images);
std::vector<double> search_gradient(const GroupPresentation& pres,
                                    const std::vector<Quat>& images);

// Haar-uniform unit quaternion from a seeded stream (Box-Muller on the
// 4-dimensional Gaussian), reproducible across platforms.
Quat haar_quaternion(std::uint64_t& state);
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t restart_index);
// Advances the state and returns 64 well-mixed bits (splitmix64).
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace detail

}  // namespace su2abelian
