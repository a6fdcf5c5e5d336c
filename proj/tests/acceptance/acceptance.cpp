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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlattice/verify.hpp"

#ifdef QLATTICE_HAVE_CLI
#include "qlattice_cli/cli.hpp"
#endif

using namespace qlattice;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kSamples = 10000;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Seeded sample i of a level: Bernoulli families at densities 0.1..0.9
// alternate with fixed-size families.
std::vector<int> sample(const LevelIndex& level, std::size_t i, Rng& rng) {
  std::vector<int> members;
  if (i % 2 == 0) {
    const double p = 0.1 * static_cast<double>(1 + (i / 2) % 9);
    do {
      members = sample_bernoulli(level, p, rng);
    } while (members.empty());
    return members;
  }
  const std::size_t total = level.upper().size();
  return sample_fixed_size(level, 1 + rng.below(total - 1), rng);
}

struct SampledCell {
  int q, n, k;
};
const std::vector<SampledCell> kSampledCells = {
    {2, 4, 2}, {2, 5, 2}, {2, 5, 3}, {3, 4, 2}};

// Every subset of L_2(3,2) except the empty one, as index lists.
std::vector<std::vector<int>> fano_families() {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < 128; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 7; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    out.push_back(idx);
  }
  return out;
}

std::vector<Ideal> tested_ideals() {
  std::vector<Ideal> out;
  for (int q : {2, 3})
    for (int n = 2; n <= 5; ++n)
      for (int j = 1; j <= n; ++j) out.push_back(flag_ideal(q, n, j));
  for (int n : {3, 4, 5}) {
    Rng rng(kSeed + static_cast<std::uint64_t>(n));
    for (int i = 0; i < 100; ++i) out.push_back(random_ideal(2, n, rng));
  }
  return out;
}

const std::vector<Ideal>& ideals() {
  static const std::vector<Ideal> all = tested_ideals();
  return all;
}

// ---------------------------------------------------------------------------

Verdict enumeration_counts() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  std::size_t cells = 0;
  auto run = [&](int q, int max_n) {
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= n; ++k) {
        ++cells;
        const auto count = enumerate_grassmannian(Field::get(q), n, k).size();
        v.require(BigInt(count) == q_binomial_exact(q, n, k),
                  "count mismatch at q=" + std::to_string(q) + " n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
      }
  };
  run(2, 6);
  run(3, 5);
  run(4, 4);
  run(5, 4);
  v.require(q_binomial_exact(2, 6, 3) == 1395, "[6,3]_2 != 1395");
  v.require(q_binomial_exact(3, 4, 2) == 130, "[4,2]_3 != 130");
  v.require(q_binomial_exact(3, 5, 2) == 1210, "[5,2]_3 != 1210");
  v.require(q_binomial_exact(4, 4, 2) == 357, "[4,2]_4 != 357");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 60, "runtime " + fmt("%.1f", secs) + " s");
  if (v.ok) v.detail = std::to_string(cells) + " cells, " + fmt("%.2f", secs) + " s";
  return v;
}

Verdict spectra() {
  Verdict v;
  struct Case {
    int q, n, k;
    std::vector<std::pair<double, std::size_t>> expected;
  };
  const std::vector<Case> cases = {
      {2, 4, 2, {{-3, 20}, {3, 14}, {18, 1}}},
      {2, 5, 2, {{-3, 124}, {11, 30}, {42, 1}}},
  };
  for (const auto& c : cases) {
    const GrassmannGraph g(c.q, c.n, c.k);
    const SpectrumCheck s = spectrum_check(g, 1e-6);
    v.require(s.clusters.size() == c.expected.size(), "cluster count");
    for (std::size_t i = 0; v.ok && i < c.expected.size(); ++i) {
      v.require(std::abs(s.clusters[i].first - c.expected[i].first) <= 1e-6,
                "eigenvalue off by more than 1e-6");
      v.require(s.clusters[i].second == c.expected[i].second, "multiplicity");
    }
    v.require(s.pass, "closed-form comparison failed");
  }
  const GrassmannGraph k7(2, 3, 1);
  const SpectrumCheck s = spectrum_check(k7, 1e-6);
  v.require(k7.lambda() == 1 && std::abs(s.numeric_second_abs - 1) <= 1e-6,
            "J_2(3,1) second eigenvalue");
  if (v.ok) v.detail = "J_2(4,2), J_2(5,2), J_2(3,1)";
  return v;
}

Verdict density_theorem() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const LevelIndex fano(2, 3, 2);
  std::set<std::vector<int>> expected;
  for (int i = 0; i < 7; ++i) expected.insert({i});
  for (const Subspace& p : fano.lower()) {
    std::vector<int> avoid;
    for (int i = 0; i < 7; ++i)
      if (!contains(fano.upper()[i], p)) avoid.push_back(i);
    expected.insert(avoid);
  }
  std::set<std::vector<int>> proper_equalities;
  bool full_equality = false;
  for (const auto& idx : fano_families()) {
    const CheckReport r = density_instance(2, 3, 2, BigInt(idx.size()),
                                           BigInt(fano.shadow_size(idx)));
    v.require(r.outcome == Outcome::Pass, "L_2(3,2) family fails");
    if (r.equalities == 0) continue;
    if (idx.size() == 7)
      full_equality = true;
    else
      proper_equalities.insert(idx);
  }
  v.require(expected.size() == 14, "expected set");
  v.require(proper_equalities == expected,
            "proper equality families differ from singletons + line avoiders");

  std::size_t checked = 127;
  for (const auto& c : kSampledCells) {
    const LevelIndex level(c.q, c.n, c.k);
    Rng rng(kSeed);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const auto idx = sample(level, i, rng);
      const CheckReport r = density_instance(c.q, c.n, c.k, BigInt(idx.size()),
                                             BigInt(level.shadow_size(idx)));
      v.require(r.outcome == Outcome::Pass, "sampled family fails");
      ++checked;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 180, "runtime " + fmt("%.1f", secs) + " s");
  if (v.ok)
    v.detail = std::to_string(checked) + " families, 14 proper equality families" +
               std::string(full_equality ? " (+ full level, z = 0)" : "") + ", " +
               fmt("%.2f", secs) + " s";
  return v;
}

Verdict kruskal_katona() {
  Verdict v;
  std::size_t checked = 0;
  auto check = [&](int q, int n, int k, const BigInt& size, const BigInt& sh) {
    ++checked;
    v.require(kruskal_instance(q, n, k, size, sh).passed(), "q-KK fails");
    v.require(dual_kruskal_instance(q, n, k, size, sh).passed(), "dual q-KK fails");
  };
  const LevelIndex fano(2, 3, 2);
  for (const auto& idx : fano_families())
    check(2, 3, 2, BigInt(idx.size()), BigInt(fano.shadow_size(idx)));
  for (const auto& c : kSampledCells) {
    const LevelIndex level(c.q, c.n, c.k);
    Rng rng(kSeed);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const auto idx = sample(level, i, rng);
      check(c.q, c.n, c.k, BigInt(idx.size()), BigInt(level.shadow_size(idx)));
    }
  }

  const CheckReport x3 = kruskal_instance(2, 4, 2, BigInt(7), BigInt(7));
  v.require(x3.passed() && x3.equalities == 1, "|S|=7 is not tight");
  v.require(std::abs(q_binomial_inverse_x(2, 2, 7) - 3) <= 1e-9, "x != 3");
  const ShadowMinResult seven = shadow_min_search(2, 4, 2, 7, SearchMode::Exhaustive, 0);
  v.require(seven.min_shadow == 7, "min shadow of 7 planes != 7");

  const CheckReport y3 = dual_kruskal_instance(2, 4, 2, BigInt(28), BigInt(14));
  v.require(y3.passed() && y3.equalities == 1, "|S|=28 is not tight");
  v.require(std::abs(q_binomial_inverse_x(2, 4 - 2, 35.0 - 28.0) - 3) <= 1e-9, "y != 3");
  const ShadowMinResult big = shadow_min_search(2, 4, 2, 28, SearchMode::Exhaustive, 0);
  v.require(big.min_shadow == 14, "min shadow of 28 planes != 14");
  if (v.ok) v.detail = std::to_string(checked) + " families; x=3 -> 7, y=3 -> 14";
  return v;
}

Verdict gap_demonstration() {
  Verdict v;
  const CombinedBound b = combined_shadow_lower_bound(2, 3, 2, BigInt(2));
  const CaseBound& kk = b.cases[static_cast<int>(BoundCase::Kruskal)];
  const CaseBound& dens = b.cases[static_cast<int>(BoundCase::Density)];
  v.require(std::abs(kk.parameter - (1 + std::log2(2.5))) <= 1e-9, "x != 1+log2 2.5");
  v.require(std::abs(kk.value - 4) <= 1e-9, "q-KK bound != 4");
  v.require(std::abs(dens.value - 4.5) <= 1e-9, "density bound != 4.5");
  // The density bound in exact arithmetic: 7 / (1 + (2/9)(5/2)) = 9/2.
  const Rational exact = Rational(7) / (1 + thm1_coefficient(2, 3, 2) * Rational(5, 2));
  v.require(exact == Rational(9, 2), "exact density bound != 9/2");
  const ShadowMinResult m = shadow_min_search(2, 3, 2, 2, SearchMode::Exhaustive, 0);
  v.require(m.min_shadow == 5, "exhaustive minimum != 5");
  if (v.ok)
    v.detail = "q-KK " + fmt("%.6f", kk.value) + ", density " + fmt("%.6f", dens.value) +
               ", minimum " + std::to_string(m.min_shadow);
  return v;
}

Verdict flag_ideals() {
  Verdict v;
  bool witness = false;
  for (int q : {2, 3})
    for (int n = 2; n <= 5; ++n) {
      const auto reports = check_flag_densities(q, n);
      for (const auto& r : reports) {
        if (r.name == "flag_near_tight_upper") {
          v.require(r.outcome != Outcome::Fail, "upper half marked FAIL");
          for (const auto& w : r.witnesses) {
            const auto j = nlohmann::json::parse(w);
            if (j["q"] == 2 && j["n"] == 3 && j["j"] == 3 && j["k"] == 2 &&
                j["bound"] == "2/5" && j["mu_k_minus_1"] == "3/7")
              witness = witness || r.outcome == Outcome::Reported;
          }
        } else {
          v.require(r.outcome == Outcome::Pass || r.outcome == Outcome::Skipped,
                    r.name + " fails at q=" + std::to_string(q) + " n=" +
                        std::to_string(n));
        }
      }
    }
  v.require(witness, "no REPORTED counterexample at (2,3,3,2)");
  if (v.ok) v.detail = "(iii)/(iv)/(i) exact; REPORTED (2,3,3,2): 2/5 < 3/7";
  return v;
}

Verdict threshold_theorem() {
  Verdict v;
  for (const Ideal& ideal : ideals()) {
    v.require(check_thm_main(ideal).outcome == Outcome::Pass, "both directions");
    for (const Rational& eps : {Rational(1, 4), Rational(1, 10)})
      v.require(check_thm_main(ideal, eps).outcome == Outcome::Pass,
                "sharp threshold at eps=" + to_string(eps));
  }
  if (v.ok)
    v.detail = std::to_string(ideals().size()) + " ideals, eps in {1/4, 1/10}";
  return v;
}

Verdict dual_ideals() {
  Verdict v;
  for (const Ideal& ideal : ideals()) {
    v.require(check_dual_ideal(ideal).outcome == Outcome::Pass, "dual identity");
    v.require(check_density_monotone(ideal).outcome == Outcome::Pass, "monotone");
  }
  if (v.ok) v.detail = std::to_string(ideals().size()) + " ideals";
  return v;
}

Verdict expansion() {
  Verdict v;
  std::size_t checked = 0;
  auto check = [&](const GrassmannGraph& g, const std::vector<int>& idx) {
    ++checked;
    const ExpansionReport e = edge_expansion(g, idx);
    v.require(check_eml(g, e).outcome == Outcome::Pass, "EML sandwich");
    v.require(check_fiber_identity(g, e).outcome == Outcome::Pass, "fiber identity");
    v.require(lemma_upper_check(g, e).outcome == Outcome::Pass, "upper lemma");
    if (e.lemma_lower_bound)
      v.require(lemma_lower_check(g, e).outcome == Outcome::Pass, "lower lemma");
  };
  auto singletons = [&](const GrassmannGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      const std::vector<int> idx{static_cast<int>(i)};
      v.require(lemma_upper_check(g, edge_expansion(g, idx)).equalities == 1,
                "singleton misses upper-lemma equality");
    }
  };
  const GrassmannGraph fano(2, 3, 2);
  for (const auto& idx : fano_families()) check(fano, idx);
  singletons(fano);
  for (const auto& c : std::vector<SampledCell>{{2, 4, 2}, {2, 5, 2}, {3, 4, 2}}) {
    const GrassmannGraph g(c.q, c.n, c.k);
    Rng rng(kSeed);
    for (std::size_t i = 0; i < kSamples; ++i) check(g, sample(g.level(), i, rng));
    singletons(g);
  }
  if (v.ok) v.detail = std::to_string(checked) + " families";
  return v;
}

Verdict bollobas_thomason() {
  Verdict v;
  for (const Ideal& ideal : ideals()) {
    v.require(check_qbt(ideal).outcome == Outcome::Pass, "q-BT chain");
    v.require(check_dual_qbt(ideal).outcome == Outcome::Pass, "dual q-BT chain");
  }
  std::size_t points = 0;
  for (int q : {2, 3})
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k)
        for (int step = 0; k + 0.1 * step <= n + 1e-12; ++step) {
          const double x = std::min(static_cast<double>(n), k + 0.1 * step);
          ++points;
          v.require(qbt_interpolation_check(q, n, k, x),
                    "interpolation fails at q=" + std::to_string(q) + " n=" +
                        std::to_string(n) + " k=" + std::to_string(k) + " x=" +
                        fmt("%.1f", x));
        }
  if (v.ok)
    v.detail = std::to_string(ideals().size()) + " ideals, " + std::to_string(points) +
               " grid points";
  return v;
}

std::string verify_once() {
#ifdef QLATTICE_HAVE_CLI
  const char* argv[] = {"qlattice", "verify", "--seed", "42"};
  std::ostringstream out;
  std::ostringstream err;
  cli::run(4, argv, out, err);
  return out.str();
#else
  return run_suite(SuiteConfig::defaults(42)).to_json() + "\n";
#endif
}

Verdict determinism() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const std::string a = verify_once();
  const double first = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string b = verify_once();
  v.require(!a.empty(), "empty report");
  v.require(a == b, "reports differ between runs");
  v.require(first < 300, "full suite took " + fmt("%.1f", first) + " s");
  if (v.ok)
    v.detail = std::to_string(a.size()) + " bytes identical, suite " + fmt("%.2f", first) + " s";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"enumeration counts", enumeration_counts},
      {"Grassmann graph spectra", spectra},
      {"density bound on L_2(3,2) and sampled levels", density_theorem},
      {"q-Kruskal-Katona and dual", kruskal_katona},
      {"gap at (2,3,2,|S|=2)", gap_demonstration},
      {"flag ideal densities", flag_ideals},
      {"threshold inequalities and sharp threshold", threshold_theorem},
      {"dual ideals and monotone profiles", dual_ideals},
      {"edge expansion bounds", expansion},
      {"q-Bollobas-Thomason chains and interpolation", bollobas_thomason},
      {"verify determinism and runtime", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.ok ? 0 : 1;
    std::printf("%-4s %2zu  %s: %s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].label,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
