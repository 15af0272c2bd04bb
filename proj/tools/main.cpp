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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "su2abelian/dehn.hpp"
#include "su2abelian/errors.hpp"
#include "su2abelian/parser.hpp"
#include "su2abelian/presentation.hpp"
#include "su2abelian/search.hpp"
#include "su2abelian/seifert.hpp"
#include "su2abelian/snf.hpp"
#include "su2abelian/sol.hpp"

using namespace su2abelian;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Report {
  std::string verdict;
  std::optional<std::string> certificate;
  std::optional<std::vector<std::pair<std::string, Quat>>> witness;
  std::optional<double> residual;
  std::vector<std::pair<std::string, std::string>> extras;

  void add(const std::string& key, const std::string& value) {
    extras.emplace_back(key, value);
  }

  void print(bool as_json) const {
    if (as_json) {
      ordered_json j;
      j["verdict"] = verdict;
      j["certificate"] = certificate ? ordered_json(*certificate) : ordered_json();
      if (witness) {
        ordered_json w;
        for (const auto& [name, q] : *witness)
          w[name] = {q.w, q.x, q.y, q.z};
        j["witness"] = w;
      } else {
        j["witness"] = nullptr;
      }
      j["residual"] = residual ? ordered_json(*residual) : ordered_json();
      ordered_json ex;
      for (const auto& [k, v] : extras) ex[k] = v;
      j["extras"] = ex;
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "verdict: " << verdict << "\n";
    if (certificate) std::cout << "certificate: " << *certificate << "\n";
    if (witness) {
      std::cout << "witness:\n";
      for (const auto& [name, q] : *witness)
        std::cout << "  " << name << " -> [" << fmt17(q.w) << ", " << fmt17(q.x)
                  << ", " << fmt17(q.y) << ", " << fmt17(q.z) << "]\n";
    }
    if (residual) std::cout << "residual: " << fmt17(*residual) << "\n";
    for (const auto& [k, v] : extras) std::cout << k << ": " << v << "\n";
  }
};

std::vector<std::pair<std::string, Quat>> witness_list(const GroupPresentation& pres,
                                                       const Representation& rep) {
  std::vector<std::pair<std::string, Quat>> out;
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    out.emplace_back(pres.generators[i], rep.images[i]);
  return out;
}

Report classify_sfs(const SeifertInvariants& s) {
  Report r;
  ClassificationVerdict v = is_su2_abelian(s);
  r.verdict = v.abelian ? "abelian" : "non-abelian";
  if (v.certificate) r.certificate = to_string(*v.certificate);
  GroupPresentation pres = pi1_presentation(s);
  if (v.witness) {
    r.witness = witness_list(pres, *v.witness);
    r.residual = relator_residual(pres, *v.witness);
  }
  r.add("manifold", to_string(s));
  r.add("normalized", to_string(normalize(s)));
  r.add("h1", h1(s).to_string());
  r.add("euler-number", to_string(euler_number(s)));
  r.add("orbifold-euler-char", to_string(orbifold_euler_char(s)));
  r.add("geometry", to_string(geometry(s)));
  return r;
}

Report classify_tbundle(const Monodromy& phi) {
  Report r;
  bool abelian = sol_is_su2_abelian(phi);
  r.verdict = abelian ? "abelian" : "non-abelian";
  GroupPresentation pres = torus_bundle_presentation(phi);
  if (!abelian) {
    auto reps = torus_bundle_reps(phi);
    for (const auto& cand : reps) {
      if (!cand.nonabelian) continue;
      r.witness = witness_list(pres, cand.rep);
      r.residual = relator_residual(pres, cand.rep);
      r.add("theta-pair", "(" + fmt17(cand.thetas.theta1) + ", " +
                              fmt17(cand.thetas.theta2) + ")");
      break;
    }
  }
  r.add("manifold", "tbundle" + phi.to_string());
  r.add("trace", std::to_string(phi.trace()));
  r.add("h1", abelianization(pres).to_string());
  r.add("geometry", "Sol");
  return r;
}

Report classify_nun(const GluingMatrix& glue) {
  Report r;
  r.verdict = "non-abelian";
  GroupPresentation pres = nun_presentation(glue);
  Representation rep = nun_q8_rep(glue);
  r.witness = witness_list(pres, rep);
  r.residual = relator_residual(pres, rep);
  r.add("manifold-type", "union of two twisted I-bundles over the Klein bottle");
  r.add("witness-image", "quaternion group Q8 (order 8)");
  r.add("h1", abelianization(pres).to_string());
  r.add("geometry", "Sol");
  return r;
}

Report cmd_classify(const std::string& input) {
  std::size_t start = input.find_first_not_of(" \t");
  std::string head = start == std::string::npos ? "" : input.substr(start);
  if (head.rfind("sfs", 0) == 0) return classify_sfs(parse_sfs(input));
  if (head.rfind("tbundle", 0) == 0) return classify_tbundle(parse_tbundle(input));
  if (head.rfind("nun", 0) == 0) return classify_nun(parse_nun(input));
  throw ParseError("manifold description must be sfs(...), tbundle[...] or nun[...]");
}

Report cmd_search(const std::string& text, int restarts, std::uint64_t seed,
                  double tol, int threads) {
  GroupPresentation pres = parse_presentation(text);
  SearchOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  opts.tol = tol;
  opts.threads = threads;
  SearchReport rep = search(pres, opts);

  Report r;
  if (rep.any_nonabelian()) {
    r.verdict = "nonabelian-found";
    for (const auto& f : rep.found) {
      if (!f.nonabelian) continue;
      r.witness = witness_list(pres, f.rep);
      r.residual = f.residual;
      break;
    }
  } else {
    r.verdict = "none-found-after-" + std::to_string(rep.restarts_used);
    if (!rep.caveat.empty()) r.add("caveat", rep.caveat);
    // Best-effort angle annotation for the abelian points: floating point
    // cannot certify cyclicity, so this is a hint, not a verdict.
    if (!rep.found.empty()) {
      std::string hints;
      const Representation& best = rep.found.front().rep;
      for (std::size_t gi = 0; gi < best.images.size(); ++gi) {
        auto frac = rational_angle(best.images[gi], 10000);
        if (!hints.empty()) hints += ", ";
        hints += pres.generators[gi] + ": ";
        hints += frac ? std::to_string(frac->first) + "/" +
                            std::to_string(frac->second) + " pi"
                      : "(no small rational angle)";
      }
      r.add("abelian-angle-hints", hints);
    }
  }
  r.add("restarts", std::to_string(rep.restarts_used));
  r.add("seed", std::to_string(rep.seed));
  r.add("tol", fmt17(rep.tolerance));
  r.add("representations-found", std::to_string(rep.found.size()));
  r.add("abelianization", abelianization(pres).to_string());
  return r;
}

std::string cycle_to_string(const std::vector<BinaryQuadraticForm>& cycle) {
  std::string out;
  for (const auto& f : cycle) {
    if (!out.empty()) out += " -> ";
    out += f.to_string();
  }
  return out;
}

Report cmd_forms_disc(long long D) {
  Report r;
  long long h = class_number(D);
  r.verdict = std::to_string(h) + (h == 1 ? " class" : " classes") +
              " of discriminant " + std::to_string(D);
  std::vector<std::vector<BinaryQuadraticForm>> cycles;
  std::vector<BinaryQuadraticForm> seen;
  for (long long b = 1; b * b <= D; ++b) {
    if ((D - b * b) % 4 != 0) continue;
    long long P = (D - b * b) / 4;
    for (long long a = -P; a <= P; ++a) {
      if (a == 0 || P % a != 0) continue;
      BinaryQuadraticForm f{a, b, -P / a};
      auto cyc = reduce_form_cycle(f);
      if (std::find(seen.begin(), seen.end(), cyc.front()) == seen.end()) {
        seen.push_back(cyc.front());
        cycles.push_back(cyc);
      }
    }
  }
  int idx = 0;
  for (const auto& cyc : cycles)
    r.add("class-" + std::to_string(++idx), cycle_to_string(cyc));
  r.add("class-number", std::to_string(h));
  return r;
}

Report cmd_forms_trace(long long tau) {
  Report r;
  auto classes = sl2_trace_classes(tau);
  r.verdict = std::to_string(classes.size()) +
              (classes.size() == 1 ? " conjugacy class" : " conjugacy classes") +
              " in SL(2,Z) of trace " + std::to_string(tau);
  int idx = 0;
  for (const auto& m : classes) {
    std::string line = m.to_string();
    if (sol_is_su2_abelian(m)) line += "  [SU(2)-abelian mapping torus]";
    r.add("class-" + std::to_string(++idx), line);
  }
  r.add("discriminant", std::to_string(tau * tau - 4));
  r.add("class-number", std::to_string(class_number(tau * tau - 4)));
  return r;
}

std::string lens_str(const LensSpace& l, bool reversed) {
  return (reversed ? "-" : "") + l.to_string();
}

Report cmd_mg(long long g, bool unverified) {
  Report r;
  FillingTable t = mg_fillings(g);
  r.verdict = "four SU(2)-cyclic fillings of M_" + std::to_string(g);
  r.add("r_2", t.r2.to_string());
  r.add("r_11", t.r11.to_string());
  r.add("r_13", t.r13.to_string());
  r.add("r_T", t.rT.to_string());
  r.add("r_T-h1-order", std::to_string(splice_h1(t.rT)));
  r.add("cfrac-r_2", to_string(cfrac_eval({t.g + 2, 2})));
  r.add("cfrac-r_11", to_string(cfrac_eval({t.g + 1, -2, 1, 2, -2, -1})));
  r.add("cfrac-r_13", to_string(cfrac_eval({t.g, 1, 1, 1, 1, 2})));
  if (unverified) {
    FillingTable c = mg_fillings_conjectural(g);
    r.add("conjectural-M_-g-1-r_2", lens_str(c.r2, c.orientation_reversed));
    r.add("conjectural-M_-g-1-r_11", lens_str(c.r11, c.orientation_reversed));
    r.add("conjectural-M_-g-1-r_13", lens_str(c.r13, c.orientation_reversed));
    r.add("conjectural-M_-g-1-r_T",
          (c.orientation_reversed ? "-" : "") + c.rT.to_string());
    r.add("conjectural-note",
          "mirror family is believed but not proved; shown only under "
          "--unverified");
  }
  return r;
}

Report cmd_h1(const std::string& input) {
  Report r;
  AbelianGroup g;
  std::size_t start = input.find_first_not_of(" \t");
  std::string head = start == std::string::npos ? "" : input.substr(start);
  if (head.rfind("sfs", 0) == 0)
    g = h1(parse_sfs(input));
  else if (!head.empty() && head[0] == '<')
    g = abelianization(parse_presentation(input));
  else
    throw ParseError("h1 expects sfs(...) or a presentation <...|...>");
  r.verdict = g.to_string();
  r.add("rank", std::to_string(g.rank));
  std::string tors;
  for (long long d : g.torsion) tors += (tors.empty() ? "" : ", ") + std::to_string(d);
  r.add("invariant-factors", tors.empty() ? "(none)" : tors);
  r.add("order", g.finite() ? std::to_string(g.order()) : "infinite");
  return r;
}

Report cmd_geometry(const std::string& input) {
  SeifertInvariants s = parse_sfs(input);
  Report r;
  r.verdict = to_string(geometry(s));
  r.add("orbifold-euler-char", to_string(orbifold_euler_char(s)));
  r.add("euler-number", to_string(euler_number(s)));
  return r;
}

Report cmd_cfrac(const std::string& input) {
  Report r;
  std::size_t start = input.find_first_not_of(" \t");
  if (start != std::string::npos && input[start] == '[') {
    std::vector<long long> coeffs;
    std::size_t pos = start + 1;
    for (;;) {
      while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
      std::size_t intstart = pos;
      bool neg = pos < input.size() && input[pos] == '-';
      if (neg) ++pos;
      long long v = 0;
      bool any = false;
      while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) {
        v = v * 10 + (input[pos] - '0');
        any = true;
        ++pos;
      }
      if (!any) throw ParseError("expected integer in coefficient list", intstart);
      coeffs.push_back(neg ? -v : v);
      while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
      if (pos < input.size() && input[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= input.size() || input[pos] != ']') throw ParseError("expected ']'", pos);
    Rational value = cfrac_eval(coeffs);
    r.verdict = to_string(value);
    r.add("coefficients", input.substr(start));
    return r;
  }
  long long p = 0, q = 1;
  if (std::sscanf(input.c_str(), "%lld/%lld", &p, &q) < 1)
    throw ParseError("cfrac expects \"[a1,a2,...]\" or \"p/q\"");
  if (q == 0) throw DivisionByZero("zero denominator");
  std::vector<long long> coeffs = cfrac_of(Rational(p, q));
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out += (i ? ", " : "") + std::to_string(coeffs[i]);
  out += "]";
  r.verdict = out;
  r.add("value", to_string(Rational(p, q)));
  return r;
}

Report cmd_lens_eq(long long p1, long long q1, long long p2, long long q2) {
  Report r;
  LensSpace l1 = LensSpace::make(p1, q1);
  LensSpace l2 = LensSpace::make(p2, q2);
  r.verdict = lens_homeo(l1, l2) ? "homeomorphic" : "not-homeomorphic";
  r.add("lhs", l1.to_string());
  r.add("rhs", l2.to_string());
  return r;
}

Report cmd_splice_h1(long long a, long long b, long long c, long long d) {
  SpliceDescriptor s{a, b, c, d};
  Report r;
  r.verdict = std::to_string(splice_h1(s));
  r.add("manifold", s.to_string());
  r.add("h1", "Z/" + std::to_string(splice_h1(s)) + " (cyclic)");
  return r;
}

Report cmd_verify_rep(const std::string& pres_text, const std::string& images_text,
                      double tol) {
  GroupPresentation pres = parse_presentation(pres_text);
  Representation rep;
  std::size_t pos = 0;
  while (pos < images_text.size()) {
    while (pos < images_text.size() &&
           (std::isspace(static_cast<unsigned char>(images_text[pos])) ||
            images_text[pos] == ';'))
      ++pos;
    if (pos >= images_text.size()) break;
    double comp[4];
    for (int i = 0; i < 4; ++i) {
      while (pos < images_text.size() &&
             (std::isspace(static_cast<unsigned char>(images_text[pos])) ||
              images_text[pos] == ','))
        ++pos;
      std::size_t used = 0;
      try {
        comp[i] = std::stod(images_text.substr(pos), &used);
      } catch (const std::exception&) {
        throw ParseError("expected a number in the image list", pos);
      }
      pos += used;
    }
    rep.images.push_back(normalized(Quat{comp[0], comp[1], comp[2], comp[3]}));
  }
  if (rep.images.size() != pres.generators.size())
    throw PreconditionError("expected " + std::to_string(pres.generators.size()) +
                            " images, got " + std::to_string(rep.images.size()));
  double res = relator_residual(pres, rep);
  Report r;
  r.verdict = res < tol ? "valid-representation" : "not-a-representation";
  r.residual = res;
  r.add("abelian", is_abelian_rep(rep, 1e-6) ? "true" : "false");
  r.add("tol", fmt17(tol));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2)-abelian classification of geometric 3-manifolds"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report");

  std::string classify_input;
  auto* sc_classify = app.add_subcommand(
      "classify", "decide SU(2)-abelian for sfs(...), tbundle[...] or nun[...]");
  sc_classify->add_option("manifold", classify_input, "manifold description")->required();

  std::string search_pres;
  int restarts = 300;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int threads = 1;
  auto* sc_search = app.add_subcommand(
      "search", "random-restart SU(2) representation search on a presentation");
  sc_search->add_option("presentation", search_pres, "e.g. \"<a,b | a^2 b^3>\"")->required();
  sc_search->add_option("--restarts", restarts, "number of restarts (default 300)");
  sc_search->add_option("--seed", seed, "RNG seed (default 0)");
  sc_search->add_option("--tol", tol, "residual tolerance (default 1e-9)");
  sc_search->add_option("--threads", threads, "worker threads (default 1)");

  long long disc = 0, trace = 0;
  auto* sc_forms = app.add_subcommand(
      "forms", "reduced cycles / class numbers of binary quadratic forms");
  auto* opt_disc = sc_forms->add_option("--disc", disc, "positive nonsquare discriminant");
  auto* opt_trace = sc_forms->add_option("--trace", trace, "SL(2,Z) trace, |trace| > 2");

  long long g = 1;
  bool unverified = false;
  auto* sc_mg = app.add_subcommand("mg-table", "four SU(2)-cyclic filling family");
  sc_mg->add_option("--g", g, "family parameter, g >= 1")->required();
  sc_mg->add_flag("--unverified", unverified, "include the conjectural mirror row");

  std::string h1_input;
  auto* sc_h1 = app.add_subcommand("h1", "first homology of sfs(...) or <...|...>");
  sc_h1->add_option("input", h1_input)->required();

  std::string geom_input;
  auto* sc_geom = app.add_subcommand("geometry", "Thurston geometry of sfs(...)");
  sc_geom->add_option("manifold", geom_input)->required();

  std::string cfrac_input;
  auto* sc_cfrac = app.add_subcommand("cfrac", "continued fraction evaluate/expand");
  sc_cfrac->add_option("input", cfrac_input, "\"[a1,a2,...]\" or \"p/q\"")->required();

  std::vector<long long> lens_args;
  auto* sc_lens = app.add_subcommand("lens-eq", "lens space homeomorphism test");
  sc_lens->add_option("pq", lens_args, "p1 q1 p2 q2")->expected(4);

  std::vector<long long> splice_args;
  auto* sc_splice = app.add_subcommand("splice-h1", "|H1| of Y(T_{a,b}, T_{c,d})");
  sc_splice->add_option("abcd", splice_args, "a b c d")->expected(4);

  std::string vrep_pres, vrep_images;
  double vrep_tol = 1e-9;
  auto* sc_vrep = app.add_subcommand("verify-rep", "check images against a presentation");
  sc_vrep->add_option("presentation", vrep_pres)->required();
  sc_vrep->add_option("--images", vrep_images,
                      "semicolon-separated w,x,y,z quadruples, one per generator")
      ->required();
  sc_vrep->add_option("--tol", vrep_tol, "acceptance residual (default 1e-9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Report report;
    if (*sc_classify) {
      report = cmd_classify(classify_input);
    } else if (*sc_search) {
      report = cmd_search(search_pres, restarts, seed, tol, threads);
    } else if (*sc_forms) {
      if (opt_disc->count() == opt_trace->count())
        throw PreconditionError("forms needs exactly one of --disc or --trace");
      report = opt_disc->count() ? cmd_forms_disc(disc) : cmd_forms_trace(trace);
    } else if (*sc_mg) {
      report = cmd_mg(g, unverified);
    } else if (*sc_h1) {
      report = cmd_h1(h1_input);
    } else if (*sc_geom) {
      report = cmd_geometry(geom_input);
    } else if (*sc_cfrac) {
      report = cmd_cfrac(cfrac_input);
    } else if (*sc_lens) {
      report = cmd_lens_eq(lens_args[0], lens_args[1], lens_args[2], lens_args[3]);
    } else if (*sc_splice) {
      report = cmd_splice_h1(splice_args[0], splice_args[1], splice_args[2],
                             splice_args[3]);
    } else if (*sc_vrep) {
      report = cmd_verify_rep(vrep_pres, vrep_images, vrep_tol);
    }
    report.print(as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
