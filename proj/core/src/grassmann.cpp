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

#include "qlattice/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "qlattice/error.hpp"

namespace qlattice {
namespace {

LevelIndex checked_level(int q, int n, int k, std::size_t cap) {
  if (k < 1 || k > n - 1)
    throw Error(Errc::DomainError, "Grassmann graph needs 1 <= k <= n-1");
  const BigInt count = q_binomial_exact(q, n, k);
  if (count > cap)
    throw Error(Errc::TooLarge, "J_q(n,k) has " + to_string(count) +
                                    " vertices, cap is " + std::to_string(cap));
  return LevelIndex(q, n, k);
}

std::int64_t small(const BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace

GrassmannGraph::GrassmannGraph(int q, int n, int k, std::size_t vertex_cap)
    : level_(checked_level(q, n, k, vertex_cap)) {
  const std::size_t nv = level_.upper().size();
  words_ = (nv + 63) / 64;
  bits_.assign(nv * words_, 0);
  for (std::size_t b = 0; b < level_.lower().size(); ++b) {
    auto clique = level_.containing(static_cast<int>(b));
    for (int u : clique)
      for (int v : clique)
        if (u != v) bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  degree_ = small(q * q_int_exact(q, k) * q_int_exact(q, n - k));
  lambda_ = small(second_eigenvalue_abs(q, n, k));
  for (std::size_t i = 0; i < nv; ++i) {
    std::int64_t d = 0;
    for (std::uint64_t w : row(static_cast<int>(i))) d += std::popcount(w);
    if (d != degree_)
      throw std::logic_error("Grassmann graph is not regular at vertex " +
                             std::to_string(i));
  }
}

std::vector<int> GrassmannGraph::neighbors(int i) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < vertex_count(); ++j)
    if (adjacent(i, static_cast<int>(j))) out.push_back(static_cast<int>(j));
  return out;
}

std::string GrassmannGraph::edge_list() const {
  std::ostringstream os;
  const int nv = static_cast<int>(vertex_count());
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (adjacent(i, j)) os << i << ' ' << j << '\n';
  return os.str();
}

ExpansionReport edge_expansion(const GrassmannGraph& g,
                               std::span<const int> members) {
  if (members.empty()) throw Error(Errc::EmptyFamily, "expansion of an empty set");
  const int q = g.q();
  const int n = g.n();
  const int k = g.k();
  const std::size_t nv = g.vertex_count();

  std::vector<std::uint64_t> in_s(g.words_per_row(), 0);
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    const int v = members[idx];
    if (v < 0 || static_cast<std::size_t>(v) >= nv ||
        (idx > 0 && members[idx - 1] >= v))
      throw Error(Errc::MembershipError,
                  "vertex indices must be sorted, distinct and in range");
    in_s[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  ExpansionReport r;
  r.family_size = members.size();
  r.vertex_count = nv;
  for (int v : members) {
    auto row = g.row(v);
    for (std::size_t w = 0; w < row.size(); ++w)
      r.boundary_edges += std::popcount(row[w] & ~in_s[w]);
  }

  const LevelIndex& level = g.level();
  std::vector<std::size_t> fiber(level.lower().size(), 0);
  for (int v : members)
    for (int b : level.hyperplanes(v)) ++fiber[b];
  const std::size_t lines_per_hyperplane =
      static_cast<std::size_t>(small(q_int_exact(q, n - k + 1)));
  for (std::size_t c : fiber) {
    if (c == 0) continue;
    r.fiber_counts.push_back(c);
    r.fiber_boundary_sum += BigInt(c) * BigInt(lines_per_hyperplane - c);
    r.fiber_square_sum += BigInt(c) * BigInt(c);
  }
  std::sort(r.fiber_counts.begin(), r.fiber_counts.end());
  r.shadow_size = r.fiber_counts.size();

  const BigInt size(members.size());
  const BigInt qk = q_int_exact(q, k);
  r.cauchy_schwarz_bound = Rational(qk * size * qk * size, BigInt(r.shadow_size));

  const BigInt d(g.degree());
  r.phi = Rational(BigInt(r.boundary_edges), d * size);
  const Rational mu(size, BigInt(nv));
  const Rational ratio(BigInt(g.lambda()), d);
  r.eml_lower = (1 - ratio) * (1 - mu);
  r.eml_upper = (1 + ratio) * (1 - mu);

  if (k >= 2 && k <= n - 2)
    r.lemma_lower_bound =
        Rational(q_int_exact(q, n), q * qk * q_int_exact(q, n - k)) * (1 - mu);

  const Rational mu_shadow(BigInt(r.shadow_size), q_binomial_exact(q, n, k - 1));
  r.lemma_upper_bound =
      Rational(q_int_exact(q, n - k + 1), q * q_int_exact(q, n - k)) *
      (1 - mu / mu_shadow);
  return r;
}

ExpansionReport edge_expansion(const GrassmannGraph& g, const SubspaceFamily& s) {
  if (s.empty()) throw Error(Errc::EmptyFamily, "expansion of an empty family");
  const auto idx = g.level().indices_of(s);
  return edge_expansion(g, idx);
}

std::pair<double, double> eml_bounds(const GrassmannGraph& g,
                                     const SubspaceFamily& s) {
  if (s.empty()) throw Error(Errc::EmptyFamily, "EML bounds of an empty family");
  const double ratio = static_cast<double>(g.lambda()) / g.degree();
  const double frac = 1.0 - static_cast<double>(s.size()) / g.vertex_count();
  return {(1 - ratio) * frac, (1 + ratio) * frac};
}

CheckReport lemma_lower_check(const GrassmannGraph& g, const ExpansionReport& r) {
  if (!r.lemma_lower_bound)
    throw Error(Errc::DomainError, "lower expansion lemma needs 2 <= k <= n-2");
  CheckReport out;
  out.name = "lemma_lower";
  out.param("q", g.q()).param("n", g.n()).param("k", g.k());
  out.param("size", static_cast<std::int64_t>(r.family_size));
  out.bound = *r.lemma_lower_bound;
  out.actual = r.phi;
  out.slack = Rational(r.phi - *r.lemma_lower_bound);
  out.outcome = r.phi >= *r.lemma_lower_bound ? Outcome::Pass : Outcome::Fail;
  out.equalities = r.phi == *r.lemma_lower_bound ? 1 : 0;
  return out;
}

CheckReport lemma_upper_check(const GrassmannGraph& g, const ExpansionReport& r) {
  CheckReport out;
  out.name = "lemma_upper";
  out.param("q", g.q()).param("n", g.n()).param("k", g.k());
  out.param("size", static_cast<std::int64_t>(r.family_size));
  out.bound = r.lemma_upper_bound;
  out.actual = r.phi;
  out.slack = Rational(r.lemma_upper_bound - r.phi);
  out.outcome = r.phi <= r.lemma_upper_bound ? Outcome::Pass : Outcome::Fail;
  out.equalities = r.phi == r.lemma_upper_bound ? 1 : 0;
  return out;
}

CheckReport lemma_lower_check(const GrassmannGraph& g, const SubspaceFamily& s) {
  if (g.k() < 2 || g.k() > g.n() - 2)
    throw Error(Errc::DomainError, "lower expansion lemma needs 2 <= k <= n-2");
  return lemma_lower_check(g, edge_expansion(g, s));
}

CheckReport lemma_upper_check(const GrassmannGraph& g, const SubspaceFamily& s) {
  return lemma_upper_check(g, edge_expansion(g, s));
}

SpectrumCheck spectrum_check(const GrassmannGraph& g, double tol,
                             std::size_t cap) {
  const std::size_t nv = g.vertex_count();
  if (nv > cap)
    throw Error(Errc::TooLarge, "spectrum check limited to " +
                                    std::to_string(cap) + " vertices");
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(nv, nv);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j)
      if (g.adjacent(static_cast<int>(i), static_cast<int>(j))) adj(i, j) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(Errc::NumericFailure, "eigensolver did not converge");
  const Eigen::VectorXd values = solver.eigenvalues();  // ascending

  SpectrumCheck out;
  for (Eigen::Index i = 0; i < values.size();) {
    Eigen::Index j = i + 1;
    double total = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= tol) total += values[j++];
    out.clusters.emplace_back(total / static_cast<double>(j - i),
                              static_cast<std::size_t>(j - i));
    i = j;
  }

  const int q = g.q();
  const int n = g.n();
  const int k = g.k();
  for (int i = 0; i <= std::min(k, n - k); ++i) {
    const std::int64_t value = small(grassmann_eigenvalue(q, n, k, i));
    const std::int64_t mult = small(grassmann_multiplicity(q, n, i));
    auto it = std::find_if(out.expected.begin(), out.expected.end(),
                           [&](const auto& e) { return e.first == value; });
    if (it != out.expected.end())
      it->second += mult;
    else
      out.expected.emplace_back(value, mult);
  }
  std::sort(out.expected.begin(), out.expected.end());

  double max_dev = 0;
  bool match = out.clusters.size() == out.expected.size();
  for (std::size_t i = 0; match && i < out.clusters.size(); ++i) {
    const double dev = std::abs(out.clusters[i].first -
                                static_cast<double>(out.expected[i].first));
    max_dev = std::max(max_dev, dev);
    match = dev <= tol && out.clusters[i].second ==
                              static_cast<std::size_t>(out.expected[i].second);
  }
  out.pass = match;

  for (Eigen::Index i = 0; i + 1 < values.size(); ++i)
    out.numeric_second_abs = std::max(out.numeric_second_abs, std::abs(values[i]));

  std::ostringstream note;
  for (const auto& [v, m] : out.clusters) note << v << "x" << m << ' ';
  CheckReport& rep = out.report;
  rep.name = "spectrum";
  rep.param("q", q).param("n", n).param("k", k).param("tol", tol);
  rep.bound = Rational(BigInt(g.lambda()));
  rep.actual = out.numeric_second_abs;
  rep.slack = match ? tol - max_dev : -1.0;
  rep.outcome = match ? Outcome::Pass : Outcome::Fail;
  rep.note = note.str();
  if (!rep.note.empty()) rep.note.pop_back();
  return out;
}

}  // namespace qlattice
