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

#include "qlattice/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlattice/error.hpp"

namespace qlattice {
namespace {

std::string describe(const Subspace& s) {
  std::string out = "[";
  for (int r = 0; r < s.dim(); ++r) {
    if (r) out += ",";
    out += format_row(s.row(r));
  }
  return out + "]";
}

}  // namespace

// --- SubspaceFamily --------------------------------------------------------

SubspaceFamily::SubspaceFamily(int q, int n, int k) : q_(q), n_(n), k_(k) {
  Field::get(q);
  if (k < 0 || k > n)
    throw Error(Errc::DomainError, "family level needs 0 <= k <= n");
}

SubspaceFamily::SubspaceFamily(int q, int n, int k,
                               std::span<const Subspace> members)
    : SubspaceFamily(q, n, k) {
  for (const Subspace& s : members) insert(s);
}

SubspaceFamily SubspaceFamily::full_level(int q, int n, int k) {
  const auto all = enumerate_grassmannian(Field::get(q), n, k);
  return SubspaceFamily(q, n, k, all);
}

bool SubspaceFamily::insert(const Subspace& s) {
  if (s.q() != q_ || s.ambient_dim() != n_)
    throw Error(Errc::AmbientMismatch, "member from another ambient space");
  if (s.dim() != k_)
    throw Error(Errc::DimensionMismatch,
                "member of dimension " + std::to_string(s.dim()) +
                    " in a level-" + std::to_string(k_) + " family");
  return members_.insert(s).second;
}

bool SubspaceFamily::is_subset_of(const SubspaceFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

SubspaceFamily shadow(const SubspaceFamily& s) {
  if (s.k() == 0) throw Error(Errc::DomainError, "shadow of level 0");
  SubspaceFamily out(s.q(), s.n(), s.k() - 1);
  for (const Subspace& a : s)
    for (const Subspace& b : hyperplanes_of(a)) out.insert(b);
  return out;
}

Rational density(const SubspaceFamily& s) {
  return Rational(BigInt(s.size()), q_binomial_exact(s.q(), s.n(), s.k()));
}

std::optional<Rational> z_from_density(const Rational& mu) {
  if (mu == 0) return std::nullopt;
  return Rational(1 / mu - 1);
}

Rational z_parameter(const SubspaceFamily& s) {
  if (s.empty()) throw Error(Errc::EmptyFamily, "z is infinite for |S| = 0");
  return *z_from_density(density(s));
}

SubspaceFamily dual_family(const SubspaceFamily& s) {
  if (s.k() == 0) throw Error(Errc::DomainError, "dual family of level 0");
  const SubspaceFamily sh = shadow(s);
  SubspaceFamily out(s.q(), s.n(), s.n() - s.k() + 1);
  for (const Subspace& b :
       enumerate_grassmannian(Field::get(s.q()), s.n(), s.k() - 1))
    if (!sh.contains(b)) out.insert(orthogonal_complement(b));
  return out;
}

// --- LevelIndex ------------------------------------------------------------

LevelIndex::LevelIndex(int q, int n, int k) : q_(q), n_(n), k_(k) {
  if (k < 1 || k > n)
    throw Error(Errc::DomainError, "level index needs 1 <= k <= n");
  const Field& f = Field::get(q);
  upper_ = enumerate_grassmannian(f, n, k);
  lower_ = enumerate_grassmannian(f, n, k - 1);
  for (std::size_t i = 0; i < upper_.size(); ++i)
    upper_index_.emplace(upper_[i].key(), static_cast<int>(i));
  for (std::size_t i = 0; i < lower_.size(); ++i)
    lower_index_.emplace(lower_[i].key(), static_cast<int>(i));
  hyperplanes_.resize(upper_.size());
  containing_.resize(lower_.size());
  for (std::size_t i = 0; i < upper_.size(); ++i) {
    for (const Subspace& h : hyperplanes_of(upper_[i])) {
      const int b = lower_index_.at(h.key());
      hyperplanes_[i].push_back(b);
      containing_[b].push_back(static_cast<int>(i));
    }
    std::sort(hyperplanes_[i].begin(), hyperplanes_[i].end());
  }
}

int LevelIndex::index_of(const Subspace& s) const {
  auto it = upper_index_.find(s.key());
  if (it == upper_index_.end())
    throw Error(Errc::MembershipError,
                describe(s) + " is not a vertex of this level");
  return it->second;
}

int LevelIndex::lower_index_of(const Subspace& s) const {
  auto it = lower_index_.find(s.key());
  if (it == lower_index_.end())
    throw Error(Errc::MembershipError,
                describe(s) + " is not in the level below");
  return it->second;
}

std::vector<int> LevelIndex::indices_of(const SubspaceFamily& s) const {
  if (s.q() != q_ || s.n() != n_ || s.k() != k_)
    throw Error(Errc::MembershipError, "family from another level");
  std::vector<int> out;
  out.reserve(s.size());
  for (const Subspace& a : s) out.push_back(index_of(a));
  std::sort(out.begin(), out.end());
  return out;
}

SubspaceFamily LevelIndex::family_of(std::span<const int> members) const {
  SubspaceFamily out(q_, n_, k_);
  for (int i : members) out.insert(upper_.at(i));
  return out;
}

std::vector<int> LevelIndex::shadow(std::span<const int> members) const {
  std::vector<char> mark(lower_.size(), 0);
  for (int i : members)
    for (int b : hyperplanes_[i]) mark[b] = 1;
  std::vector<int> out;
  for (std::size_t b = 0; b < mark.size(); ++b)
    if (mark[b]) out.push_back(static_cast<int>(b));
  return out;
}

std::size_t LevelIndex::shadow_size(std::span<const int> members) const {
  std::vector<char> mark(lower_.size(), 0);
  std::size_t count = 0;
  for (int i : members)
    for (int b : hyperplanes_[i])
      if (!mark[b]) {
        mark[b] = 1;
        ++count;
      }
  return count;
}

// --- Ideal -----------------------------------------------------------------

Ideal::Ideal(int q, int n) : q_(q), n_(n) {
  if (n < 0) throw Error(Errc::DomainError, "negative ambient dimension");
  levels_.reserve(n + 1);
  for (int k = 0; k <= n; ++k) levels_.emplace_back(q, n, k);
}

bool Ideal::contains(const Subspace& s) const {
  if (s.q() != q_ || s.ambient_dim() != n_) return false;
  return levels_[s.dim()].contains(s);
}

std::size_t Ideal::total_size() const noexcept {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  return total;
}

bool Ideal::is_nontrivial() const {
  return !levels_[0].empty() && levels_[n_].empty();
}

std::vector<Rational> Ideal::densities() const {
  std::vector<Rational> out;
  out.reserve(levels_.size());
  for (const auto& l : levels_) out.push_back(density(l));
  return out;
}

IdealCheck is_ideal(std::span<const SubspaceFamily> levels) {
  if (levels.empty())
    throw Error(Errc::DimensionMismatch, "an ideal needs levels 0..n");
  const int n = levels[0].n();
  const int q = levels[0].q();
  if (static_cast<int>(levels.size()) != n + 1)
    throw Error(Errc::DimensionMismatch, "an ideal needs exactly n+1 levels");
  for (int k = 0; k <= n; ++k)
    if (levels[k].k() != k || levels[k].n() != n || levels[k].q() != q)
      throw Error(Errc::DimensionMismatch,
                  "level " + std::to_string(k) + " has the wrong shape");
  for (int k = n; k >= 1; --k)
    for (const Subspace& a : levels[k])
      for (const Subspace& h : hyperplanes_of(a))
        if (!levels[k - 1].contains(h)) return {false, std::make_pair(a, h)};
  return {};
}

Ideal ideal_from_levels(std::vector<SubspaceFamily> levels) {
  const IdealCheck check = is_ideal(levels);
  if (!check.ok)
    throw Error(Errc::NotDownwardClosed,
                describe(check.witness->first) + " is present but its subspace " +
                    describe(check.witness->second) + " is not");
  Ideal out(levels[0].q(), levels[0].n());
  out.levels_ = std::move(levels);
  return out;
}

Ideal downward_closure(int q, int n, std::span<const Subspace> generators) {
  Ideal out(q, n);
  for (const Subspace& g : generators) {
    if (g.q() != q || g.ambient_dim() != n)
      throw Error(Errc::AmbientMismatch, "generator from another ambient space");
    out.levels_[g.dim()].insert(g);
  }
  for (int k = n; k >= 1; --k)
    for (const Subspace& a : out.levels_[k])
      for (const Subspace& h : hyperplanes_of(a)) out.levels_[k - 1].insert(h);
  return out;
}

Ideal dual_ideal(const Ideal& ideal) {
  const int n = ideal.n();
  const Field& f = Field::get(ideal.q());
  std::vector<SubspaceFamily> levels;
  for (int k = 0; k <= n; ++k) {
    SubspaceFamily level(ideal.q(), n, k);
    for (const Subspace& a : enumerate_grassmannian(f, n, k))
      if (!ideal.level(n - k).contains(orthogonal_complement(a))) level.insert(a);
    levels.push_back(std::move(level));
  }
  return ideal_from_levels(std::move(levels));
}

int meet_dim_with_flag(const Subspace& a, int j) {
  const int n = a.ambient_dim();
  if (j < 0 || j > n) throw Error(Errc::DomainError, "flag index out of range");
  // A cap V_j is the kernel of the projection of A onto coordinates j..n-1.
  const int width = n - j;
  std::vector<Elem> tail;
  tail.reserve(static_cast<std::size_t>(a.dim()) * width);
  for (int r = 0; r < a.dim(); ++r)
    for (int c = j; c < n; ++c) tail.push_back(a.at(r, c));
  return a.dim() - (width == 0 ? 0 : rank(a.field(), width, std::move(tail)));
}

Ideal flag_ideal(int q, int n, int j) {
  if (j < 1 || j > n)
    throw Error(Errc::DomainError, "flag ideal needs 1 <= j <= n");
  const Field& f = Field::get(q);
  std::vector<SubspaceFamily> levels;
  for (int k = 0; k <= n; ++k) {
    SubspaceFamily level(q, n, k);
    for (const Subspace& a : enumerate_grassmannian(f, n, k))
      if (meet_dim_with_flag(a, j) == meet_dim_with_flag(a, j - 1))
        level.insert(a);
    levels.push_back(std::move(level));
  }
  return ideal_from_levels(std::move(levels));
}

ThresholdProfile threshold_profile(const Ideal& ideal) {
  ThresholdProfile out;
  out.densities = ideal.densities();
  const int n = ideal.n();
  if (out.densities[0] != 1 || out.densities[n] != 0)
    throw Error(Errc::TrivialIdeal, "threshold profile needs mu_0 = 1, mu_n = 0");
  for (int k = 1; k <= n; ++k)
    if (out.densities[k] > out.densities[k - 1])
      throw std::logic_error("ideal densities increased at level " +
                             std::to_string(k));
  const Rational half(1, 2);
  out.t = 1;
  while (out.densities[out.t] >= half) ++out.t;
  return out;
}

// --- Sampling --------------------------------------------------------------

std::vector<int> sample_bernoulli(const LevelIndex& level, double p, Rng& rng) {
  std::vector<int> out;
  for (std::size_t i = 0; i < level.upper().size(); ++i)
    if (rng.bernoulli(p)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> sample_fixed_size(const LevelIndex& level, std::size_t size,
                                   Rng& rng) {
  const std::size_t total = level.upper().size();
  if (size > total)
    throw Error(Errc::DomainError, "sample larger than the level");
  // Partial Fisher-Yates.
  std::vector<int> pool(total);
  for (std::size_t i = 0; i < total; ++i) pool[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + rng.below(total - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Subspace random_subspace(int q, int n, int k, Rng& rng) {
  if (k < 0 || k > n)
    throw Error(Errc::DomainError, "random subspace needs 0 <= k <= n");
  const Field& f = Field::get(q);
  // Uniform full-rank k x n matrices give uniform k-spaces.
  while (true) {
    std::vector<Vector> rows(k, Vector(n));
    for (auto& row : rows)
      for (auto& e : row) e = static_cast<Elem>(rng.below(q));
    Subspace s = canonicalize(f, n, rows);
    if (s.dim() == k) return s;
  }
}

Ideal random_ideal(int q, int n, Rng& rng) {
  std::vector<Subspace> gens;
  if (n >= 2) {
    const int count = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < count; ++i) {
      const int d = 1 + static_cast<int>(rng.below(n - 1));
      gens.push_back(random_subspace(q, n, d, rng));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Subspace> antichain;
  for (const Subspace& g : gens) {
    const bool covered = std::any_of(gens.begin(), gens.end(), [&](const Subspace& h) {
      return !(h == g) && contains(h, g);
    });
    if (!covered) antichain.push_back(g);
  }
  if (antichain.empty()) antichain.push_back(Subspace::zero(q, n));
  return downward_closure(q, n, antichain);
}

}  // namespace qlattice
