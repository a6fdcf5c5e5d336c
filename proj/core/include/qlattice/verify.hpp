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

// Checkers for the shadow, density and threshold inequalities, the
// shadow-minimization search, and the suite that runs them over exhaustive
// and sampled corpora.
//
// Every checker returns a CheckReport whose `slack` is the signed margin by
// which the claim holds (>= 0 passes). Rational comparisons are exact; bounds
// built from interpolated parameters are real and are reduced by a relative
// 1e-9 before comparing.

#ifndef QLATTICE_VERIFY_HPP
#define QLATTICE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlattice/family.hpp"
#include "qlattice/grassmann.hpp"
#include "qlattice/report.hpp"

namespace qlattice {

// --- Count-level instances --------------------------------------------------
// These take |S| and |shadow S| directly; the family checkers below and the
// bulk suite both go through them.

/// mu_{k-1}(shadow) >= (1 + c z)^{-1} >= (1 + z/q)^{-1} with mu_k = (1+z)^{-1}.
CheckReport density_instance(int q, int n, int k, const BigInt& size,
                             const BigInt& shadow_size);
/// |shadow| >= [x,k-1]_q where |S| = [x,k]_q.
CheckReport kruskal_instance(int q, int n, int k, const BigInt& size,
                             const BigInt& shadow_size);
/// |shadow| >= [n,k-1]_q - [y,n-k+1]_q where |S| = [n,k]_q - [y,n-k]_q;
/// SKIPPED when y < n-k+1.
CheckReport dual_kruskal_instance(int q, int n, int k, const BigInt& size,
                                  const BigInt& shadow_size);
/// |shadow| >= combined_shadow_lower_bound; the attained case goes in `note`.
CheckReport corollary_instance(int q, int n, int k, const BigInt& size,
                               const BigInt& shadow_size);

// --- Family checkers ---------------------------------------------------------

/// Throws Error(EmptyFamily).
CheckReport check_thm_density(const SubspaceFamily& s);
CheckReport check_qkk(const SubspaceFamily& s);
CheckReport check_dual_qkk(const SubspaceFamily& s);
/// Throws Error(DomainError) for an empty or full family.
CheckReport check_corollary(const SubspaceFamily& s);
/// Compares the density inequality for (mu_k(S), mu_{k-1}(shadow S)) with
/// the one for (1 - mu_{n-k}(shadow T), 1 - mu_{n-k+1}(T)), T the dual
/// family. Throws Error(EmptyFamily).
CheckReport check_self_duality(const SubspaceFamily& s);

/// Exact expander-mixing sandwich eml_lower <= Phi <= eml_upper.
CheckReport check_eml(const GrassmannGraph& g, const ExpansionReport& r);
/// |E(S, S-bar)| == sum_B |S_B| ([n-k+1]_q - |S_B|) and
/// sum_B |S_B| == [k]_q |S|.
CheckReport check_fiber_identity(const GrassmannGraph& g,
                                 const ExpansionReport& r);
/// sum_B |S_B|^2 >= ([k]_q |S|)^2 / |shadow S|.
CheckReport check_cauchy_schwarz(const GrassmannGraph& g,
                                 const ExpansionReport& r);
/// |S|, |shadow S| and Phi are unchanged when every member is moved by the
/// invertible n x n matrix `map`.
CheckReport check_gl_invariance(const GrassmannGraph& g,
                                const SubspaceFamily& s,
                                std::span<const Elem> map);
/// A fixed invertible matrix over F_q (unit upper triangular times a cyclic
/// coordinate shift).
std::vector<Elem> fixed_invertible_map(int q, int n);

// --- Ideal checkers -----------------------------------------------------------

/// Both directions of the threshold inequality at every 1 <= k <= n-1 with
/// 0 < mu_k < 1; with epsilon, also mu_{k+c} <= epsilon for the least k with
/// mu_k <= 1 - epsilon and c = sharp_threshold_steps(q, epsilon).
/// Throws Error(TrivialIdeal).
CheckReport check_thm_main(const Ideal& ideal,
                           std::optional<Rational> epsilon = std::nullopt);
/// mu_k^{1/k} chain plus the c in {1,2,3} floor/ceiling consequences.
CheckReport check_qbt(const Ideal& ideal);
CheckReport check_dual_qbt(const Ideal& ideal);
/// mu_k(Q*) == 1 - mu_{n-k}(Q) for all k, and (Q*)* == Q.
CheckReport check_dual_ideal(const Ideal& ideal);
/// mu_0 >= mu_1 >= ... >= mu_n.
CheckReport check_density_monotone(const Ideal& ideal);

/// Flag-ideal claims for every 1 <= j <= n: the threshold position (i), the
/// closed forms (iii)/(iv), the asserted lower half of (ii), and the upper
/// half of (ii) as a REPORTED entry listing counterexamples.
/// Throws Error(DomainError) for n < 2.
std::vector<CheckReport> check_flag_densities(int q, int n);

// --- Shadow minimization --------------------------------------------------------

enum class SearchMode { Exhaustive, Anneal };

struct ShadowMinResult {
  int q = 0;
  int n = 0;
  int k = 0;
  std::size_t size = 0;
  SearchMode mode = SearchMode::Exhaustive;
  std::size_t min_shadow = 0;
  SubspaceFamily witness{2, 0, 0};
  /// Combined lower bound, absent for the full level.
  std::optional<CombinedBound> bound;
  /// min_shadow - bound.value.
  std::optional<double> gap;
  /// Subsets visited (exhaustive) or proposals made (anneal).
  std::uint64_t work = 0;

  std::string to_json(int indent = 2) const;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Exhaustive mode finds the true minimum by branch and bound and throws
/// Error(BudgetExceeded) when C(|L(n,k)|, size) > budget. Anneal mode runs
/// `budget` single-swap proposals with geometric cooling and returns the best
/// family seen. Throws Error(DomainError) unless 1 <= size <= [n,k]_q.
ShadowMinResult shadow_min_search(int q, int n, int k, std::size_t size,
                                  SearchMode mode, std::uint64_t seed,
                                  std::uint64_t budget = kDefaultSearchBudget);

// --- Suite ------------------------------------------------------------------------

struct Cell {
  int q;
  int n;
  int k;
};

struct ShadowMinTask {
  int q;
  int n;
  int k;
  std::size_t size;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  /// Every nonempty family of each level (|L(n,k)| <= 20).
  std::vector<Cell> exhaustive;
  /// `samples` seeded families of each level.
  std::vector<Cell> sampled;
  std::size_t samples = 10000;
  /// (q, n) pairs whose flag ideals are checked (cell k unused).
  std::vector<Cell> flag_ideals;
  /// (q, n) pairs with `ideal_samples` random ideals each.
  std::vector<Cell> random_ideals;
  std::size_t ideal_samples = 100;
  std::vector<Rational> epsilons;
  std::vector<Cell> spectra;
  std::vector<ShadowMinTask> shadow_min;
  /// q values and maximum n for the interpolation grid; empty skips it.
  std::vector<int> interpolation_fields;
  int interpolation_max_n = 0;
  std::size_t witness_cap = 32;

  /// The full default corpus.
  static SuiteConfig defaults(std::uint64_t seed = 0);
  /// Everything that applies to one ambient space (q, n).
  static SuiteConfig for_space(int q, int n, std::uint64_t seed = 0);
};

/// Throws Error(ConfigError) for an empty or invalid configuration.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace qlattice

#endif  // QLATTICE_VERIFY_HPP
