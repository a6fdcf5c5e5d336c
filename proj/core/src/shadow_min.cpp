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
#include <cmath>

#include "json.hpp"
#include "qlattice/error.hpp"
#include "qlattice/rng.hpp"
#include "qlattice/serialize.hpp"
#include "qlattice/verify.hpp"

namespace qlattice {
namespace {

// C(n, m), or any value above `cap` once the partial product passes it.
BigInt binomial_capped(const BigInt& n, const BigInt& m_in, std::uint64_t cap) {
  const BigInt m = std::min(m_in, BigInt(n - m_in));
  BigInt r = 1;
  for (BigInt i = 1; i <= m; ++i) {
    r = r * (n - m + i) / i;
    if (r > cap) return r;
  }
  return r;
}

// Branch and bound over increasing index sequences. The shadow only grows as
// members are added, so any partial choice at or above the best is dropped.
class Exhaustive {
 public:
  Exhaustive(const LevelIndex& level, std::size_t size)
      : level_(level),
        size_(size),
        total_(level.upper().size()),
        counts_(level.lower().size(), 0),
        best_(level.lower().size() + 1) {}

  void run() { dfs(0); }
  std::size_t best() const { return best_; }
  const std::vector<int>& best_members() const { return best_members_; }
  std::uint64_t work() const { return work_; }

 private:
  void dfs(std::size_t next) {
    ++work_;
    if (chosen_.size() == size_) {
      if (current_ < best_) {
        best_ = current_;
        best_members_ = chosen_;
      }
      return;
    }
    const std::size_t need = size_ - chosen_.size();
    for (std::size_t i = next; i + need <= total_; ++i) {
      std::size_t added = 0;
      for (int b : level_.hyperplanes(static_cast<int>(i)))
        if (counts_[b]++ == 0) ++added;
      current_ += added;
      chosen_.push_back(static_cast<int>(i));
      if (current_ < best_) dfs(i + 1);
      chosen_.pop_back();
      current_ -= added;
      for (int b : level_.hyperplanes(static_cast<int>(i))) --counts_[b];
    }
  }

  const LevelIndex& level_;
  std::size_t size_;
  std::size_t total_;
  std::vector<std::uint32_t> counts_;
  std::vector<int> chosen_;
  std::size_t current_ = 0;
  std::size_t best_;
  std::vector<int> best_members_;
  std::uint64_t work_ = 0;
};

struct AnnealOutcome {
  std::size_t best;
  std::vector<int> members;
};

AnnealOutcome anneal(const LevelIndex& level, std::size_t size,
                     std::uint64_t steps, Rng& rng) {
  const std::size_t total = level.upper().size();
  std::vector<int> in = sample_fixed_size(level, size, rng);
  std::vector<int> out;
  {
    std::vector<char> member(total, 0);
    for (int v : in) member[v] = 1;
    for (std::size_t v = 0; v < total; ++v)
      if (!member[v]) out.push_back(static_cast<int>(v));
  }
  std::vector<std::uint32_t> counts(level.lower().size(), 0);
  std::size_t current = 0;
  for (int v : in)
    for (int b : level.hyperplanes(v))
      if (counts[b]++ == 0) ++current;

  AnnealOutcome best{current, in};
  if (out.empty()) return best;

  const double t_start = 1.0;
  const double t_end = 0.01;
  const double cooling =
      steps > 0 ? std::pow(t_end / t_start, 1.0 / static_cast<double>(steps)) : 1.0;
  double temperature = t_start;
  for (std::uint64_t step = 0; step < steps; ++step, temperature *= cooling) {
    const std::size_t iu = rng.below(in.size());
    const std::size_t iv = rng.below(out.size());
    const int u = in[iu];
    const int v = out[iv];
    const std::size_t previous = current;
    for (int b : level.hyperplanes(u))
      if (--counts[b] == 0) --current;
    for (int b : level.hyperplanes(v))
      if (counts[b]++ == 0) ++current;
    const double delta =
        static_cast<double>(current) - static_cast<double>(previous);
    const bool accept = delta <= 0 || rng.uniform() < std::exp(-delta / temperature);
    if (accept) {
      in[iu] = v;
      out[iv] = u;
      if (current < best.best) {
        best.best = current;
        best.members = in;
      }
    } else {
      for (int b : level.hyperplanes(v))
        if (--counts[b] == 0) --current;
      for (int b : level.hyperplanes(u))
        if (counts[b]++ == 0) ++current;
    }
  }
  std::sort(best.members.begin(), best.members.end());
  return best;
}

}  // namespace

std::string ShadowMinResult::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["q"] = q;
  j["n"] = n;
  j["k"] = k;
  j["size"] = size;
  j["mode"] = mode == SearchMode::Exhaustive ? "exhaustive" : "anneal";
  j["min_shadow"] = min_shadow;
  if (bound) {
    j["bound"] = bound->value;
    j["bound_case"] = bound_case_name(bound->attained);
    j["gap"] = *gap;
  } else {
    j["bound"] = nullptr;
  }
  j["work"] = work;
  j["witness"] = nlohmann::ordered_json::parse(family_to_json(witness));
  return j.dump(indent);
}

ShadowMinResult shadow_min_search(int q, int n, int k, std::size_t size,
                                  SearchMode mode, std::uint64_t seed,
                                  std::uint64_t budget) {
  if (k < 1 || k > n)
    throw Error(Errc::DomainError, "shadow search needs 1 <= k <= n");
  const BigInt total_count = q_binomial_exact(q, n, k);
  if (size < 1 || BigInt(size) > total_count)
    throw Error(Errc::DomainError, "shadow search needs 1 <= size <= [n,k]_q");
  if (mode == SearchMode::Exhaustive &&
      binomial_capped(total_count, BigInt(size), budget) > budget)
    throw Error(Errc::BudgetExceeded,
                "C(" + to_string(total_count) + ", " + std::to_string(size) +
                    ") subsets exceed the budget of " + std::to_string(budget));

  const LevelIndex level(q, n, k);
  ShadowMinResult r;
  r.q = q;
  r.n = n;
  r.k = k;
  r.size = size;
  r.mode = mode;
  std::vector<int> members;
  if (mode == SearchMode::Exhaustive) {
    Exhaustive search(level, size);
    search.run();
    r.min_shadow = search.best();
    members = search.best_members();
    r.work = search.work();
  } else {
    Rng rng(seed);
    AnnealOutcome a = anneal(level, size, budget, rng);
    r.min_shadow = a.best;
    members = std::move(a.members);
    r.work = budget;
  }
  r.witness = level.family_of(members);
  if (BigInt(size) < total_count) {
    r.bound = combined_shadow_lower_bound(q, n, k, BigInt(size));
    r.gap = static_cast<double>(r.min_shadow) - r.bound->value;
  }
  return r;
}

}  // namespace qlattice
