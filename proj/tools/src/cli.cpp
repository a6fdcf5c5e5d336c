// Copyright 2026 The qlattice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlattice_cli/cli.hpp"

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlattice/error.hpp"
#include "qlattice/grassmann.hpp"
#include "qlattice/serialize.hpp"
#include "qlattice/verify.hpp"

namespace qlattice::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  int q = 0;
  int n = -1;  // -1: not given
  int k = -1;
  int j = 0;
  std::size_t size = 0;
  std::string epsilon;
  std::string mode = "exhaustive";
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  std::string in;
  std::string out;
  std::uint64_t cap = 0;
  bool csv = false;
  bool edges = false;
  bool timing = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void require(bool ok, const char* message) {
  if (!ok) throw UsageError(message);
}

ojson rational_json(const Rational& r) { return to_string(r); }

ojson expansion_json(const ExpansionReport& e) {
  ojson j;
  j["family_size"] = e.family_size;
  j["vertex_count"] = e.vertex_count;
  j["boundary_edges"] = e.boundary_edges;
  j["phi"] = rational_json(e.phi);
  j["eml_lower"] = rational_json(e.eml_lower);
  j["eml_upper"] = rational_json(e.eml_upper);
  j["lemma_lower_bound"] =
      e.lemma_lower_bound ? rational_json(*e.lemma_lower_bound) : ojson(nullptr);
  j["lemma_upper_bound"] = rational_json(e.lemma_upper_bound);
  j["shadow_size"] = e.shadow_size;
  j["fiber_counts"] = e.fiber_counts;
  j["fiber_boundary_sum"] = to_string(e.fiber_boundary_sum);
  j["fiber_square_sum"] = to_string(e.fiber_square_sum);
  j["cauchy_schwarz_bound"] = rational_json(e.cauchy_schwarz_bound);
  return j;
}

Ideal ideal_from_spec(const Config& c) {
  std::string spec = c.in;
  if (spec.empty()) {
    require(c.j > 0, "densities needs --in flag:<j>|gen:<path> or --j");
    spec = "flag:" + std::to_string(c.j);
  }
  if (spec.rfind("flag:", 0) == 0) {
    require(c.q > 0 && c.n > 0, "flag ideals need --q and --n");
    int j = 0;
    try {
      j = std::stoi(spec.substr(5));
    } catch (const std::exception&) {
      throw UsageError("malformed flag spec '" + spec + "'");
    }
    return flag_ideal(c.q, c.n, j);
  }
  if (spec.rfind("gen:", 0) == 0) {
    const GeneratorSpec g = generators_from_json(read_input(spec.substr(4)));
    return downward_closure(g.q, g.n, g.generators);
  }
  throw UsageError("ideal spec must be flag:<j> or gen:<path>");
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  require(c.q > 0 && c.n >= 0 && c.k >= 0, "enumerate needs --q, --n and --k");
  out << family_to_json(SubspaceFamily::full_level(c.q, c.n, c.k), 2) << '\n';
  return 0;
}

int cmd_shadow(const Config& c, std::ostream& out) {
  out << family_to_json(shadow(family_from_json(read_input(c.in))), 2) << '\n';
  return 0;
}

int cmd_complement(const Config& c, std::ostream& out) {
  out << family_to_json(dual_family(family_from_json(read_input(c.in))), 2) << '\n';
  return 0;
}

int cmd_densities(const Config& c, std::ostream& out) {
  const Ideal ideal = ideal_from_spec(c);
  const ThresholdProfile p = threshold_profile(ideal);
  if (c.csv)
    out << profile_to_csv(p);
  else
    out << profile_to_json(ideal.q(), ideal.n(), p, 2) << '\n';
  return 0;
}

int cmd_spectrum(const Config& c, std::ostream& out) {
  require(c.q > 0 && c.n > 0 && c.k > 0, "spectrum needs --q, --n and --k");
  const std::size_t cap = c.cap ? c.cap : kDefaultSpectrumCap;
  const GrassmannGraph g(c.q, c.n, c.k, std::max<std::size_t>(
                                           cap, GrassmannGraph::kDefaultVertexCap));
  if (c.edges) {
    out << g.edge_list();
    return 0;
  }
  const SpectrumCheck s = spectrum_check(g, c.tol, cap);
  ojson j;
  j["q"] = c.q;
  j["n"] = c.n;
  j["k"] = c.k;
  j["degree"] = g.degree();
  j["lambda"] = g.lambda();
  ojson expected = ojson::array();
  for (const auto& [v, m] : s.expected) expected.push_back({{"eigenvalue", v}, {"multiplicity", m}});
  j["expected"] = expected;
  ojson clusters = ojson::array();
  for (const auto& [v, m] : s.clusters) clusters.push_back({{"eigenvalue", v}, {"multiplicity", m}});
  j["numeric"] = clusters;
  j["numeric_second_abs"] = s.numeric_second_abs;
  j["outcome"] = outcome_name(s.report.outcome);
  out << j.dump(2) << '\n';
  return s.pass ? 0 : kExitFail;
}

int cmd_expansion(const Config& c, std::ostream& out) {
  const SubspaceFamily s = family_from_json(read_input(c.in));
  const GrassmannGraph g(s.q(), s.n(), s.k(),
                         c.cap ? c.cap : GrassmannGraph::kDefaultVertexCap);
  ojson j;
  j["q"] = s.q();
  j["n"] = s.n();
  j["k"] = s.k();
  j["report"] = expansion_json(edge_expansion(g, s));
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_verify(const Config& c, std::ostream& out) {
  require((c.q > 0) == (c.n > 0), "verify takes both --q and --n, or neither");
  SuiteConfig cfg = c.q > 0 ? SuiteConfig::for_space(c.q, c.n, c.seed)
                            : SuiteConfig::defaults(c.seed);
  if (c.samples > 0) cfg.samples = c.samples;
  if (!c.epsilon.empty()) cfg.epsilons = {parse_rational(c.epsilon)};
  const SuiteReport report = run_suite(cfg);
  out << report.to_json(c.timing) << '\n';
  return report.passed() ? 0 : kExitFail;
}

int cmd_shadow_min(const Config& c, std::ostream& out) {
  require(c.q > 0 && c.n > 0 && c.k > 0 && c.size > 0,
          "shadow-min needs --q, --n, --k and --size");
  SearchMode mode;
  if (c.mode == "exhaustive")
    mode = SearchMode::Exhaustive;
  else if (c.mode == "anneal")
    mode = SearchMode::Anneal;
  else
    throw UsageError("--mode must be exhaustive or anneal");
  const std::uint64_t budget =
      c.cap ? c.cap : (mode == SearchMode::Exhaustive ? kDefaultSearchBudget : 200000);
  out << shadow_min_search(c.q, c.n, c.k, c.size, mode, c.seed, budget).to_json(2)
      << '\n';
  return 0;
}

ojson case_json(const CaseBound& b) {
  ojson j;
  j["defined"] = b.defined;
  j["in_range"] = b.in_range;
  j["parameter"] = b.parameter;
  j["value"] = b.value;
  return j;
}

int cmd_bound(const Config& c, std::ostream& out) {
  require(c.q > 0 && c.n > 0 && c.k > 0, "bound needs --q, --n and --k");
  ojson j;
  j["q"] = c.q;
  j["n"] = c.n;
  j["k"] = c.k;
  j["level_size"] = to_string(q_binomial_exact(c.q, c.n, c.k));
  j["coefficient"] = to_string(thm1_coefficient(c.q, c.n, c.k));
  if (c.size > 0) {
    const CombinedBound b = combined_shadow_lower_bound(c.q, c.n, c.k, BigInt(c.size));
    j["size"] = c.size;
    j["bound"] = b.value;
    j["attained"] = bound_case_name(b.attained);
    ojson cases;
    for (BoundCase bc : {BoundCase::Kruskal, BoundCase::Density, BoundCase::Dual})
      cases[bound_case_name(bc)] = case_json(b.cases[static_cast<int>(bc)]);
    j["cases"] = cases;
  }
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the lattice of subspaces of F_q^n", "qlattice"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", c.q, "field order");
    sub->add_option("--n", c.n, "ambient dimension");
    sub->add_option("--k", c.k, "subspace dimension");
    sub->add_option("--seed", c.seed, "64-bit seed (default 0)");
    sub->add_option("--out", c.out, "write output to this file");
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Config&, std::ostream&);
  };
  const Entry entries[] = {
      {"enumerate", "list L(n,k) as a family", cmd_enumerate},
      {"shadow", "shadow of a family (--in file or -)", cmd_shadow},
      {"complement", "orthogonal complements of a family", cmd_complement},
      {"densities", "density profile of an ideal (--in flag:<j>|gen:<path>)",
       cmd_densities},
      {"spectrum", "Grassmann graph spectrum check", cmd_spectrum},
      {"expansion", "edge expansion report for a family", cmd_expansion},
      {"verify", "run the verification suite", cmd_verify},
      {"shadow-min", "search for the minimum shadow of a given size", cmd_shadow_min},
      {"bound", "evaluate the combined shadow lower bound", cmd_bound},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    const std::string name = e.name;
    if (name == "densities") {
      sub->add_option("--in", c.in, "flag:<j> or gen:<path>");
      sub->add_option("--j", c.j, "flag index, same as --in flag:<j>");
      sub->add_flag("--csv", c.csv, "CSV output");
    } else if (name == "shadow" || name == "complement" || name == "expansion") {
      sub->add_option("--in", c.in, "family JSON file, - for stdin")->required();
    }
    if (name == "spectrum") {
      sub->add_option("--tol", c.tol, "eigenvalue clustering tolerance");
      sub->add_flag("--edges", c.edges, "print the edge list instead");
    }
    if (name == "spectrum" || name == "expansion" || name == "shadow-min")
      sub->add_option("--cap", c.cap, "vertex cap, or search budget for shadow-min");
    if (name == "verify") {
      sub->add_option("--samples", c.samples, "families per sampled cell");
      sub->add_option("--epsilon", c.epsilon, "threshold epsilon, e.g. 1/4");
      sub->add_flag("--timing", c.timing, "include elapsed seconds");
    }
    if (name == "shadow-min") {
      sub->add_option("--mode", c.mode, "exhaustive or anneal");
      sub->add_option("--size", c.size, "family size")->required();
    }
    if (name == "bound") sub->add_option("--size", c.size, "family size");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const Entry* entry = nullptr;
  for (const Entry& e : entries)
    if (chosen->get_name() == e.name) entry = &e;

  try {
    std::ostringstream buffer;
    const int status = entry->fn(c, buffer);
    if (c.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(c.out);
      if (!f) throw UsageError("cannot write " + c.out);
      f << buffer.str();
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << chosen->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qlattice::cli
