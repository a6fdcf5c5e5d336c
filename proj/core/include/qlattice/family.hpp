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

// Families of equal-dimension subspaces, their shadows and densities, and
// ideals (downward-closed sets) of the subspace lattice.

#ifndef QLATTICE_FAMILY_HPP
#define QLATTICE_FAMILY_HPP

#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qlattice/qnum.hpp"
#include "qlattice/rng.hpp"
#include "qlattice/subspace.hpp"

namespace qlattice {

/// A set of k-dimensional subspaces of (F_q)^n, ordered by canonical key.
class SubspaceFamily {
 public:
  using const_iterator = std::set<Subspace>::const_iterator;

  SubspaceFamily(int q, int n, int k);
  SubspaceFamily(int q, int n, int k, std::span<const Subspace> members);

  /// All of L(n,k).
  static SubspaceFamily full_level(int q, int n, int k);

  int q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  /// Returns false for a duplicate. Throws Error(AmbientMismatch) or
  /// Error(DimensionMismatch) for a subspace from another level.
  bool insert(const Subspace& s);
  bool contains(const Subspace& s) const { return members_.count(s) != 0; }
  bool is_subset_of(const SubspaceFamily& other) const;

  friend bool operator==(const SubspaceFamily& a, const SubspaceFamily& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.k_ == b.k_ &&
           a.members_ == b.members_;
  }

 private:
  int q_;
  int n_;
  int k_;
  std::set<Subspace> members_;
};

/// {B in L(n,k-1) : B is contained in some A in S}. Throws Error(DomainError)
/// when k == 0.
SubspaceFamily shadow(const SubspaceFamily& s);

/// |S| / [n,k]_q exactly.
Rational density(const SubspaceFamily& s);

/// z with mu = (1+z)^{-1}; nullopt encodes z = +infinity (mu == 0).
std::optional<Rational> z_from_density(const Rational& mu);
/// z for a nonempty family. Throws Error(EmptyFamily).
Rational z_parameter(const SubspaceFamily& s);

/// {B^perp : B in L(n,k-1) minus shadow(S)}, a family at level n-k+1.
/// Throws Error(DomainError) when k == 0.
SubspaceFamily dual_family(const SubspaceFamily& s);

/// Index-based view of one level L(n,k) together with L(n,k-1) and the
/// hyperplane incidence between them. Built once, used for bulk work.
class LevelIndex {
 public:
  LevelIndex(int q, int n, int k);

  int q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<Subspace>& upper() const noexcept { return upper_; }
  const std::vector<Subspace>& lower() const noexcept { return lower_; }
  /// Indices into lower() of the hyperplanes of upper()[i].
  std::span<const int> hyperplanes(int i) const noexcept {
    return hyperplanes_[i];
  }
  /// Indices into upper() of the k-spaces containing lower()[b].
  std::span<const int> containing(int b) const noexcept {
    return containing_[b];
  }
  /// Throws Error(MembershipError) for a subspace not in upper().
  int index_of(const Subspace& s) const;
  int lower_index_of(const Subspace& s) const;

  std::vector<int> indices_of(const SubspaceFamily& s) const;
  SubspaceFamily family_of(std::span<const int> members) const;
  /// Sorted indices into lower() of the shadow of the given members.
  std::vector<int> shadow(std::span<const int> members) const;
  std::size_t shadow_size(std::span<const int> members) const;

 private:
  int q_;
  int n_;
  int k_;
  std::vector<Subspace> upper_;
  std::vector<Subspace> lower_;
  std::unordered_map<std::string, int> upper_index_;
  std::unordered_map<std::string, int> lower_index_;
  std::vector<std::vector<int>> hyperplanes_;
  std::vector<std::vector<int>> containing_;
};

/// A downward-closed family of subspaces, stored level by level (k = 0..n).
class Ideal {
 public:
  /// The empty ideal of L(n) over F_q.
  Ideal(int q, int n);

  int q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  const SubspaceFamily& level(int k) const { return levels_.at(k); }
  const std::vector<SubspaceFamily>& levels() const noexcept { return levels_; }
  bool contains(const Subspace& s) const;
  std::size_t total_size() const noexcept;

  /// Nonempty and proper: contains the zero space but not the whole space.
  bool is_nontrivial() const;
  /// mu_0 .. mu_n, exact.
  std::vector<Rational> densities() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.levels_ == b.levels_;
  }

 private:
  friend Ideal ideal_from_levels(std::vector<SubspaceFamily> levels);
  friend Ideal downward_closure(int q, int n,
                                std::span<const Subspace> generators);
  int q_;
  int n_;
  std::vector<SubspaceFamily> levels_;
};

/// Outcome of a downward-closure test; `witness` holds a (member, missing
/// hyperplane) pair on failure.
struct IdealCheck {
  bool ok = true;
  std::optional<std::pair<Subspace, Subspace>> witness;
};

/// Checks shadow(level k) is inside level k-1 for every k. The levels must be
/// indexed 0..n with matching (q, n, k).
IdealCheck is_ideal(std::span<const SubspaceFamily> levels);
/// Throws Error(NotDownwardClosed) with the witness pair in the message.
Ideal ideal_from_levels(std::vector<SubspaceFamily> levels);

/// Smallest ideal containing every generator. Throws Error(AmbientMismatch).
Ideal downward_closure(int q, int n, std::span<const Subspace> generators);

/// {A : A^perp not in Q}; mu_k(Q*) = 1 - mu_{n-k}(Q).
Ideal dual_ideal(const Ideal& ideal);

/// The complete coordinate flag V_0 < V_1 < ... < V_n, V_j spanned by the
/// first j unit vectors.
struct FlagSpec {
  int q;
  int n;
  Subspace space(int j) const { return Subspace::coordinate(q, n, j); }
};

/// dim(A cap V_j) for the coordinate flag, from a rank computation.
int meet_dim_with_flag(const Subspace& a, int j);

/// Q_j = {A : A meets V_j only inside V_{j-1}}, 1 <= j <= n.
/// Throws Error(DomainError) for j out of range.
Ideal flag_ideal(int q, int n, int j);

struct ThresholdProfile {
  std::vector<Rational> densities;
  /// Unique t with mu_{t-1} >= 1/2 > mu_t.
  int t = 0;
};

/// Throws Error(TrivialIdeal) unless mu_0 = 1 and mu_n = 0.
ThresholdProfile threshold_profile(const Ideal& ideal);

// Seeded samplers over a LevelIndex (member indices, sorted).
std::vector<int> sample_bernoulli(const LevelIndex& level, double p, Rng& rng);
std::vector<int> sample_fixed_size(const LevelIndex& level, std::size_t size,
                                   Rng& rng);
/// Uniformly random k-dimensional subspace.
Subspace random_subspace(int q, int n, int k, Rng& rng);
/// Downward closure of a random antichain of proper nonzero subspaces; the
/// result is always a nontrivial ideal.
Ideal random_ideal(int q, int n, Rng& rng);

}  // namespace qlattice

#endif  // QLATTICE_FAMILY_HPP
