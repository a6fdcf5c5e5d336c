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

#ifndef QLATTICE_GRASSMANN_HPP
#define QLATTICE_GRASSMANN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlattice/family.hpp"
#include "qlattice/report.hpp"

namespace qlattice {

/// The Grassmann graph J_q(n,k): vertices L(n,k) in enumeration order, with
/// A ~ B iff dim(A cap B) = k-1. Regular of degree q[k]_q[n-k]_q.
///
/// Adjacency is built from the (k-1)-spaces: the k-spaces through a common
/// hyperplane form a clique, and two adjacent vertices share exactly one
/// hyperplane. Rows are stored as bitsets.
class GrassmannGraph {
 public:
  static constexpr std::size_t kDefaultVertexCap = 20000;

  /// Throws Error(DomainError) unless 1 <= k <= n-1, and Error(TooLarge) when
  /// [n,k]_q exceeds vertex_cap.
  GrassmannGraph(int q, int n, int k,
                 std::size_t vertex_cap = kDefaultVertexCap);

  int q() const noexcept { return level_.q(); }
  int n() const noexcept { return level_.n(); }
  int k() const noexcept { return level_.k(); }
  std::size_t vertex_count() const noexcept { return level_.upper().size(); }
  const std::vector<Subspace>& vertices() const noexcept {
    return level_.upper();
  }
  const LevelIndex& level() const noexcept { return level_; }
  int index_of(const Subspace& s) const { return level_.index_of(s); }

  std::int64_t degree() const noexcept { return degree_; }
  /// Closed-form second largest absolute eigenvalue.
  std::int64_t lambda() const noexcept { return lambda_; }

  bool adjacent(int i, int j) const noexcept {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(int i) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }
  std::vector<int> neighbors(int i) const;

  /// "i j" per line for every edge with i < j.
  std::string edge_list() const;

 private:
  LevelIndex level_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::int64_t degree_ = 0;
  std::int64_t lambda_ = 0;
};

struct ExpansionReport {
  std::size_t family_size = 0;
  std::size_t vertex_count = 0;
  std::size_t boundary_edges = 0;
  Rational phi;
  /// Expander mixing sandwich (1 -/+ lambda/d)(1 - |S|/|V|), exact.
  Rational eml_lower;
  Rational eml_upper;
  /// Only for 2 <= k <= n-2.
  std::optional<Rational> lemma_lower_bound;
  Rational lemma_upper_bound;
  std::size_t shadow_size = 0;
  /// |S_B| for every B in the shadow, ascending.
  std::vector<std::size_t> fiber_counts;
  /// sum_B |S_B| ([n-k+1]_q - |S_B|); equals boundary_edges.
  BigInt fiber_boundary_sum;
  /// sum_B |S_B|^2 and the lower estimate ([k]_q |S|)^2 / |shadow|.
  BigInt fiber_square_sum;
  Rational cauchy_schwarz_bound;
};

/// Throws Error(EmptyFamily) or Error(MembershipError).
ExpansionReport edge_expansion(const GrassmannGraph& g, const SubspaceFamily& s);
/// Same, for sorted distinct vertex indices.
ExpansionReport edge_expansion(const GrassmannGraph& g,
                               std::span<const int> members);

/// Real-valued expander mixing bounds. Throws Error(EmptyFamily).
std::pair<double, double> eml_bounds(const GrassmannGraph& g,
                                     const SubspaceFamily& s);

/// Phi >= [n]_q / (q [k]_q [n-k]_q) (1 - mu_k(S)) in exact rationals.
/// Throws Error(DomainError) unless 2 <= k <= n-2.
CheckReport lemma_lower_check(const GrassmannGraph& g, const SubspaceFamily& s);
/// Phi <= [n-k+1]_q / (q [n-k]_q) (1 - mu_k(S) / mu_{k-1}(shadow S)).
CheckReport lemma_upper_check(const GrassmannGraph& g, const SubspaceFamily& s);

// Same checks from a precomputed report (bulk corpora).
CheckReport lemma_lower_check(const GrassmannGraph& g, const ExpansionReport& r);
CheckReport lemma_upper_check(const GrassmannGraph& g, const ExpansionReport& r);

struct SpectrumCheck {
  bool pass = false;
  /// Numeric eigenvalue clusters (mean value, size), ascending.
  std::vector<std::pair<double, std::size_t>> clusters;
  /// Closed-form (eigenvalue, multiplicity), ascending by eigenvalue.
  std::vector<std::pair<std::int64_t, std::int64_t>> expected;
  /// Largest |eigenvalue| after removing one copy of the degree.
  double numeric_second_abs = 0;
  CheckReport report;
};

inline constexpr std::size_t kDefaultSpectrumCap = 2000;

/// Dense symmetric eigensolve of the adjacency matrix, compared against the
/// closed-form spectrum. Throws Error(TooLarge) above `cap` vertices and
/// Error(NumericFailure) if the solver does not converge.
SpectrumCheck spectrum_check(const GrassmannGraph& g, double tol = 1e-6,
                             std::size_t cap = kDefaultSpectrumCap);

}  // namespace qlattice

#endif  // QLATTICE_GRASSMANN_HPP
