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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "qlattice/error.hpp"
#include "qlattice/rng.hpp"
#include "qlattice/serialize.hpp"
#include "qlattice/verify.hpp"

namespace qlattice {
namespace {

constexpr std::size_t kExhaustiveLevelCap = 20;
constexpr std::size_t kSpectrumVertexCap = 2000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// splitmix64 finalizer, used to derive independent per-cell streams.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag, int q, int n,
                          int k) {
  return mix(mix(seed ^ (tag << 56)) ^
             (static_cast<std::uint64_t>(q) << 32 |
              static_cast<std::uint64_t>(n) << 16 | static_cast<std::uint64_t>(k)));
}

bool supported(int q) {
  const auto orders = supported_orders();
  return std::find(orders.begin(), orders.end(), q) != orders.end();
}

void validate_cell(const Cell& c, int k_min, int k_max_offset, const char* what) {
  if (!supported(c.q))
    throw Error(Errc::ConfigError, std::string(what) + ": unsupported q=" +
                                       std::to_string(c.q));
  if (c.n < 1 || c.k < k_min || c.k > c.n - k_max_offset)
    throw Error(Errc::ConfigError, std::string(what) + ": invalid cell (" +
                                       std::to_string(c.q) + "," +
                                       std::to_string(c.n) + "," +
                                       std::to_string(c.k) + ")");
}

void validate(const SuiteConfig& cfg) {
  const bool empty = cfg.exhaustive.empty() && cfg.sampled.empty() &&
                     cfg.flag_ideals.empty() && cfg.random_ideals.empty() &&
                     cfg.spectra.empty() && cfg.shadow_min.empty() &&
                     cfg.interpolation_fields.empty();
  if (empty) throw Error(Errc::ConfigError, "suite configuration selects nothing");
  for (const Cell& c : cfg.exhaustive) {
    validate_cell(c, 1, 0, "exhaustive");
    if (q_binomial_exact(c.q, c.n, c.k) > kExhaustiveLevelCap)
      throw Error(Errc::ConfigError, "exhaustive corpus limited to levels of " +
                                         std::to_string(kExhaustiveLevelCap) +
                                         " subspaces");
  }
  for (const Cell& c : cfg.sampled) validate_cell(c, 1, 0, "sampled");
  for (const Cell& c : cfg.spectra) validate_cell(c, 1, 1, "spectra");
  for (const Cell& c : cfg.flag_ideals) {
    if (!supported(c.q) || c.n < 2)
      throw Error(Errc::ConfigError, "flag ideals need a supported q and n >= 2");
  }
  for (const Cell& c : cfg.random_ideals) {
    if (!supported(c.q) || c.n < 1)
      throw Error(Errc::ConfigError, "random ideals need a supported q and n >= 1");
  }
  for (const ShadowMinTask& t : cfg.shadow_min)
    validate_cell({t.q, t.n, t.k}, 1, 0, "shadow_min");
  for (int q : cfg.interpolation_fields)
    if (!supported(q))
      throw Error(Errc::ConfigError, "interpolation: unsupported q");
  for (const Rational& e : cfg.epsilons)
    if (e <= 0 || e > Rational(1, 2))
      throw Error(Errc::ConfigError, "epsilon must lie in (0, 1/2]");
}

// Per-cell accumulators for every check that runs on a family corpus.
class CorpusChecks {
 public:
  CorpusChecks(const Cell& c, const std::string& corpus, std::size_t cap,
               bool with_graph, std::uint64_t seed, std::size_t samples)
      : cell_(c) {
    auto acc = [&](const char* name) {
      auto a = std::make_unique<CheckAccumulator>(name, cap);
      a->param("q", c.q).param("n", c.n).param("k", c.k).param("corpus", corpus);
      if (corpus == "sampled") a->param("samples", static_cast<std::int64_t>(samples));
      a->param("seed", static_cast<std::int64_t>(seed));
      return a;
    };
    density = acc("thm_density");
    qkk = acc("qkk");
    dual_qkk = acc("dual_qkk");
    corollary = acc("corollary");
    if (with_graph) {
      eml = acc("eml_sandwich");
      lemma_upper = acc("lemma_upper");
      if (c.k >= 2 && c.k <= c.n - 2) lemma_lower = acc("lemma_lower");
      fiber = acc("fiber_identity");
      cs = acc("cauchy_schwarz");
    }
  }

  void add(std::span<const int> members, const LevelIndex& level,
           const GrassmannGraph* graph, bool attach_equalities) {
    const BigInt size(members.size());
    const BigInt sh(level.shadow_size(members));
    const int q = cell_.q, n = cell_.n, k = cell_.k;
    auto witness = [&](CheckReport& r) {
      if (r.outcome == Outcome::Fail || (attach_equalities && r.equalities > 0))
        r.witnesses.push_back(family_to_json(level.family_of(members)));
    };
    CheckReport d = density_instance(q, n, k, size, sh);
    witness(d);
    density->add(d);
    CheckReport kk = kruskal_instance(q, n, k, size, sh);
    witness(kk);
    qkk->add(kk);
    CheckReport dk = dual_kruskal_instance(q, n, k, size, sh);
    witness(dk);
    dual_qkk->add(dk);
    if (size < q_binomial_exact(q, n, k)) {
      CheckReport co = corollary_instance(q, n, k, size, sh);
      witness(co);
      corollary->add(co);
    }
    if (graph) {
      const ExpansionReport e = edge_expansion(*graph, members);
      eml->add(check_eml(*graph, e));
      lemma_upper->add(lemma_upper_check(*graph, e));
      if (lemma_lower) lemma_lower->add(lemma_lower_check(*graph, e));
      fiber->add(check_fiber_identity(*graph, e));
      cs->add(check_cauchy_schwarz(*graph, e));
    }
  }

  void finish(std::vector<CheckReport>& out, double elapsed) const {
    for (const auto* a : {&density, &qkk, &dual_qkk, &corollary, &eml,
                          &lemma_upper, &lemma_lower, &fiber, &cs}) {
      if (!*a) continue;
      CheckReport r = (*a)->finish();
      r.elapsed_seconds = elapsed;
      out.push_back(std::move(r));
    }
  }

  std::unique_ptr<CheckAccumulator> density, qkk, dual_qkk, corollary, eml,
      lemma_upper, lemma_lower, fiber, cs;

 private:
  Cell cell_;
};

CheckReport enumeration_count(const Cell& c, std::size_t listed) {
  CheckReport r;
  r.name = "enumeration_count";
  r.param("q", c.q).param("n", c.n).param("k", c.k);
  const BigInt expected = q_binomial_exact(c.q, c.n, c.k);
  r.bound = Rational(expected);
  r.actual = Rational(BigInt(listed));
  r.slack = Rational(-abs(BigInt(listed) - expected));
  r.outcome = BigInt(listed) == expected ? Outcome::Pass : Outcome::Fail;
  return r;
}

std::unique_ptr<GrassmannGraph> maybe_graph(const Cell& c) {
  if (c.k < 1 || c.k > c.n - 1) return nullptr;
  if (q_binomial_exact(c.q, c.n, c.k) > GrassmannGraph::kDefaultVertexCap)
    return nullptr;
  return std::make_unique<GrassmannGraph>(c.q, c.n, c.k);
}

void run_exhaustive(const SuiteConfig& cfg, const Cell& c,
                    std::vector<CheckReport>& out) {
  const auto start = Clock::now();
  const auto graph = maybe_graph(c);
  std::unique_ptr<LevelIndex> own_level;
  if (!graph) own_level = std::make_unique<LevelIndex>(c.q, c.n, c.k);
  const LevelIndex& level = graph ? graph->level() : *own_level;
  out.push_back(enumeration_count(c, level.upper().size()));

  CorpusChecks checks(c, "exhaustive", cfg.witness_cap, graph != nullptr, cfg.seed, 0);
  auto acc = [&](const char* name) {
    CheckAccumulator a(name, cfg.witness_cap);
    a.param("q", c.q).param("n", c.n).param("k", c.k).param("corpus", "exhaustive");
    a.param("seed", static_cast<std::int64_t>(cfg.seed));
    return a;
  };
  CheckAccumulator self_dual = acc("self_duality");
  CheckAccumulator gl = acc("gl_invariance");
  CheckAccumulator singleton = acc("lemma_upper_singleton_equality");
  const auto map = fixed_invertible_map(c.q, c.n);

  const std::size_t total = level.upper().size();
  std::vector<int> members;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << total); ++mask) {
    members.clear();
    for (std::size_t i = 0; i < total; ++i)
      if (mask >> i & 1) members.push_back(static_cast<int>(i));
    checks.add(members, level, graph.get(), true);
    const SubspaceFamily family = level.family_of(members);
    self_dual.add(check_self_duality(family));
    if (graph) {
      gl.add(check_gl_invariance(*graph, family, map));
      if (members.size() == 1) {
        CheckReport r = lemma_upper_check(*graph, edge_expansion(*graph, members));
        r.outcome = r.equalities == 1 ? Outcome::Pass : Outcome::Fail;
        singleton.add(r);
      }
    }
  }
  const double elapsed = seconds_since(start);
  checks.finish(out, elapsed);
  out.push_back(self_dual.finish());
  if (graph) {
    out.push_back(gl.finish());
    out.push_back(singleton.finish());
  }
}

void run_sampled(const SuiteConfig& cfg, const Cell& c,
                 std::vector<CheckReport>& out) {
  const auto start = Clock::now();
  const auto graph = maybe_graph(c);
  std::unique_ptr<LevelIndex> own_level;
  if (!graph) own_level = std::make_unique<LevelIndex>(c.q, c.n, c.k);
  const LevelIndex& level = graph ? graph->level() : *own_level;
  out.push_back(enumeration_count(c, level.upper().size()));

  CorpusChecks checks(c, "sampled", cfg.witness_cap, graph != nullptr, cfg.seed,
                      cfg.samples);
  Rng rng(stream_seed(cfg.seed, 1, c.q, c.n, c.k));
  const std::size_t total = level.upper().size();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    std::vector<int> members;
    if (i % 2 == 0) {
      // Bernoulli densities cycle through 0.1, 0.2, ..., 0.9.
      const double p = 0.1 * static_cast<double>(1 + (i / 2) % 9);
      do {
        members = sample_bernoulli(level, p, rng);
      } while (members.empty());
    } else {
      const std::size_t size = total <= 1 ? 1 : 1 + rng.below(total - 1);
      members = sample_fixed_size(level, size, rng);
    }
    checks.add(members, level, graph.get(), false);
  }
  checks.finish(out, seconds_since(start));
}

void run_ideal_checks(const SuiteConfig& cfg, const std::string& source,
                      int q, int n, const std::vector<Ideal>& ideals,
                      std::vector<CheckReport>& out) {
  const auto start = Clock::now();
  auto acc = [&](const char* name) {
    CheckAccumulator a(name, cfg.witness_cap);
    a.param("q", q).param("n", n).param("source", source);
    a.param("ideals", static_cast<std::int64_t>(ideals.size()));
    a.param("seed", static_cast<std::int64_t>(cfg.seed));
    return a;
  };
  CheckAccumulator main_acc = acc("thm_main");
  std::vector<CheckAccumulator> eps_accs;
  for (const Rational& e : cfg.epsilons) {
    eps_accs.push_back(acc("thm_main_sharp_threshold"));
    eps_accs.back().param("epsilon", to_string(e));
  }
  CheckAccumulator qbt = acc("qbt");
  CheckAccumulator dual_qbt = acc("dual_qbt");
  CheckAccumulator dual = acc("dual_ideal");
  CheckAccumulator mono = acc("density_monotone");

  auto add_with_witness = [&](CheckAccumulator& a, CheckReport r, const Ideal& id) {
    if (r.outcome == Outcome::Fail) r.witnesses.push_back(ideal_to_json(id));
    a.add(r);
  };
  for (const Ideal& ideal : ideals) {
    add_with_witness(dual, check_dual_ideal(ideal), ideal);
    add_with_witness(mono, check_density_monotone(ideal), ideal);
    if (!ideal.is_nontrivial()) continue;
    add_with_witness(main_acc, check_thm_main(ideal), ideal);
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i)
      add_with_witness(eps_accs[i], check_thm_main(ideal, cfg.epsilons[i]), ideal);
    add_with_witness(qbt, check_qbt(ideal), ideal);
    add_with_witness(dual_qbt, check_dual_qbt(ideal), ideal);
  }
  const double elapsed = seconds_since(start);
  for (CheckAccumulator* a : {&main_acc, &qbt, &dual_qbt, &dual, &mono}) {
    out.push_back(a->finish());
    out.back().elapsed_seconds = elapsed;
  }
  for (const auto& a : eps_accs) out.push_back(a.finish());
}

void run_interpolation(const SuiteConfig& cfg, std::vector<CheckReport>& out) {
  for (int q : cfg.interpolation_fields) {
    CheckReport r;
    r.name = "qbt_interpolation";
    r.param("q", q).param("max_n", cfg.interpolation_max_n);
    r.cases = 0;
    std::uint64_t failures = 0;
    for (int n = 1; n <= cfg.interpolation_max_n; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (int step = 0;; ++step) {
          const double x = std::min(static_cast<double>(n), k + 0.1 * step);
          ++r.cases;
          if (!qbt_interpolation_check(q, n, k, x)) ++failures;
          if (x >= n) break;
        }
      }
    }
    r.failures = failures;
    r.bound = Rational(0);
    r.actual = Rational(static_cast<long long>(failures));
    r.slack = Rational(-static_cast<long long>(failures));
    r.outcome = failures == 0 ? Outcome::Pass : Outcome::Fail;
    out.push_back(std::move(r));
  }
}

CheckReport shadow_min_report(const SuiteConfig& cfg, const ShadowMinTask& t) {
  const auto start = Clock::now();
  const ShadowMinResult res =
      shadow_min_search(t.q, t.n, t.k, t.size, SearchMode::Exhaustive, cfg.seed);
  CheckReport r;
  r.name = "shadow_min";
  r.param("q", t.q).param("n", t.n).param("k", t.k);
  r.param("size", static_cast<std::int64_t>(t.size));
  r.actual = Rational(BigInt(res.min_shadow));
  if (res.bound) {
    r.bound = res.bound->value;
    r.slack = *res.gap;
    const double b = res.bound->value;
    r.outcome = static_cast<double>(res.min_shadow) >=
                        b - kRealTolerance * std::max(1.0, b)
                    ? Outcome::Pass
                    : Outcome::Fail;
    r.equalities = std::abs(*res.gap) <= kRealTolerance * std::max(1.0, b) ? 1 : 0;
    r.note = bound_case_name(res.bound->attained);
  } else {
    r.outcome = Outcome::Skipped;
    r.note = "full level";
  }
  r.witnesses.push_back(family_to_json(res.witness));
  r.elapsed_seconds = seconds_since(start);
  return r;
}

}  // namespace

SuiteConfig SuiteConfig::defaults(std::uint64_t seed) {
  SuiteConfig c;
  c.seed = seed;
  c.exhaustive = {{2, 3, 1}, {2, 3, 2}};
  c.sampled = {{2, 4, 2}, {2, 5, 2}, {2, 5, 3}, {3, 4, 2}};
  for (int q : {2, 3})
    for (int n = 2; n <= 5; ++n) c.flag_ideals.push_back({q, n, 0});
  c.random_ideals = {{2, 3, 0}, {2, 4, 0}, {2, 5, 0}};
  c.epsilons = {Rational(1, 4), Rational(1, 10)};
  c.spectra = {{2, 3, 1}, {2, 4, 2}, {2, 5, 2}, {3, 4, 2}};
  c.shadow_min = {{2, 3, 2, 2}, {2, 3, 2, 7}, {2, 4, 2, 7}, {2, 4, 2, 28}};
  c.interpolation_fields = {2, 3};
  c.interpolation_max_n = 6;
  return c;
}

SuiteConfig SuiteConfig::for_space(int q, int n, std::uint64_t seed) {
  if (!supported(q)) throw Error(Errc::ConfigError, "unsupported q=" + std::to_string(q));
  if (n < 1) throw Error(Errc::ConfigError, "n must be positive");
  SuiteConfig c;
  c.seed = seed;
  for (int k = 1; k <= n; ++k) {
    const BigInt size = q_binomial_exact(q, n, k);
    if (size <= kExhaustiveLevelCap)
      c.exhaustive.push_back({q, n, k});
    else
      c.sampled.push_back({q, n, k});
    if (k <= n - 1 && size <= kSpectrumVertexCap) c.spectra.push_back({q, n, k});
  }
  if (n >= 2) c.flag_ideals.push_back({q, n, 0});
  c.random_ideals.push_back({q, n, 0});
  c.epsilons = {Rational(1, 4), Rational(1, 10)};
  c.interpolation_fields = {q};
  c.interpolation_max_n = n;
  return c;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  SuiteReport report;
  report.seed = cfg.seed;
  auto& out = report.checks;

  for (const Cell& c : cfg.exhaustive) run_exhaustive(cfg, c, out);
  for (const Cell& c : cfg.sampled) run_sampled(cfg, c, out);

  for (const Cell& c : cfg.flag_ideals) {
    const auto start = Clock::now();
    std::vector<Ideal> ideals;
    for (int j = 1; j <= c.n; ++j) ideals.push_back(flag_ideal(c.q, c.n, j));
    for (CheckReport& r : check_flag_densities(c.q, c.n)) {
      r.elapsed_seconds = seconds_since(start);
      out.push_back(std::move(r));
    }
    run_ideal_checks(cfg, "flag", c.q, c.n, ideals, out);
  }
  for (const Cell& c : cfg.random_ideals) {
    Rng rng(stream_seed(cfg.seed, 2, c.q, c.n, 0));
    std::vector<Ideal> ideals;
    for (std::size_t i = 0; i < cfg.ideal_samples; ++i)
      ideals.push_back(random_ideal(c.q, c.n, rng));
    run_ideal_checks(cfg, "random", c.q, c.n, ideals, out);
  }

  for (const Cell& c : cfg.spectra) {
    const auto start = Clock::now();
    const GrassmannGraph g(c.q, c.n, c.k);
    SpectrumCheck s = spectrum_check(g);
    s.report.elapsed_seconds = seconds_since(start);
    out.push_back(std::move(s.report));
  }

  for (const ShadowMinTask& t : cfg.shadow_min) out.push_back(shadow_min_report(cfg, t));
  run_interpolation(cfg, out);

  report.normalize();
  return report;
}

}  // namespace qlattice
