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

#include "qlattice/verify.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "qlattice/error.hpp"
#include "qlattice/serialize.hpp"

namespace qlattice {
namespace {

using ojson = nlohmann::ordered_json;

// Tolerance-reduced real comparison: actual >= bound - tol * max(1, |bound|).
bool real_at_least(double actual, double bound) {
  return actual >= bound - kRealTolerance * std::max(1.0, std::abs(bound));
}

bool real_equal(double a, double b) {
  return std::abs(a - b) <= kRealTolerance * std::max(1.0, std::abs(b));
}

Rational rpow(const Rational& base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Tracks the tightest of several sub-comparisons inside one check.
struct Tightest {
  bool any = false;
  Number bound;
  Number actual;
  Number slack;
  bool ok = true;

  void consider(const Number& b, const Number& a, const Number& s, bool pass) {
    ok = ok && pass;
    if (!any || s < slack) {
      bound = b;
      actual = a;
      slack = s;
      any = true;
    }
  }
  void fill(CheckReport& r) const {
    if (any) {
      r.bound = bound;
      r.actual = actual;
      r.slack = slack;
    }
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  }
};

CheckReport base_report(const char* name, int q, int n, int k,
                        const BigInt& size) {
  CheckReport r;
  r.name = name;
  r.param("q", q).param("n", n).param("k", k);
  r.param("size", size.convert_to<std::int64_t>());
  return r;
}

void require_nontrivial(const Ideal& ideal) {
  if (!ideal.is_nontrivial())
    throw Error(Errc::TrivialIdeal, "check needs a nontrivial ideal");
}

}  // namespace

// --- Count-level instances ---------------------------------------------------

CheckReport density_instance(int q, int n, int k, const BigInt& size,
                             const BigInt& shadow_size) {
  if (size == 0) throw Error(Errc::EmptyFamily, "density bound needs |S| > 0");
  CheckReport r = base_report("thm_density", q, n, k, size);
  const Rational mu(size, q_binomial_exact(q, n, k));
  const Rational z = 1 / mu - 1;
  const Rational bound = 1 / (1 + thm1_coefficient(q, n, k) * z);
  const Rational weak = 1 / (1 + z / q);
  const Rational actual(shadow_size, q_binomial_exact(q, n, k - 1));
  r.bound = bound;
  r.actual = actual;
  r.slack = Rational(actual - bound);
  r.outcome = actual >= bound && bound >= weak ? Outcome::Pass : Outcome::Fail;
  r.equalities = actual == bound ? 1 : 0;
  r.note = "z=" + to_string(z) + " weak=" + to_string(weak);
  return r;
}

CheckReport kruskal_instance(int q, int n, int k, const BigInt& size,
                             const BigInt& shadow_size) {
  if (size == 0) throw Error(Errc::EmptyFamily, "Kruskal-Katona needs |S| > 0");
  CheckReport r = base_report("qkk", q, n, k, size);
  const double x = q_binomial_inverse_x(q, k, to_double(size));
  const double bound = q_binomial(q, x, k - 1);
  const double actual = to_double(shadow_size);
  r.param("x", x);
  r.bound = bound;
  r.actual = Rational(shadow_size);
  r.slack = actual - bound;
  r.outcome = real_at_least(actual, bound) ? Outcome::Pass : Outcome::Fail;
  r.equalities = real_equal(actual, bound) ? 1 : 0;
  return r;
}

CheckReport dual_kruskal_instance(int q, int n, int k, const BigInt& size,
                                  const BigInt& shadow_size) {
  if (size == 0)
    throw Error(Errc::EmptyFamily, "dual Kruskal-Katona needs |S| > 0");
  CheckReport r = base_report("dual_qkk", q, n, k, size);
  const int m = n - k;
  const BigInt cosize = q_binomial_exact(q, n, k) - size;
  if (m == 0 || cosize == 0) {
    r.outcome = Outcome::Skipped;
    r.note = "no y in [n-k+1, n]";
    return r;
  }
  const double y = q_binomial_inverse_x(q, m, to_double(cosize));
  r.param("y", y);
  if (y < m + 1 - kRealTolerance) {
    r.outcome = Outcome::Skipped;
    r.note = "y below n-k+1";
    return r;
  }
  const double bound =
      to_double(q_binomial_exact(q, n, k - 1)) - q_binomial(q, y, m + 1);
  const double actual = to_double(shadow_size);
  r.bound = bound;
  r.actual = Rational(shadow_size);
  r.slack = actual - bound;
  r.outcome = real_at_least(actual, bound) ? Outcome::Pass : Outcome::Fail;
  r.equalities = real_equal(actual, bound) ? 1 : 0;
  return r;
}

CheckReport corollary_instance(int q, int n, int k, const BigInt& size,
                               const BigInt& shadow_size) {
  CheckReport r = base_report("corollary", q, n, k, size);
  const CombinedBound cb = combined_shadow_lower_bound(q, n, k, size);
  const double actual = to_double(shadow_size);
  r.bound = cb.value;
  r.actual = Rational(shadow_size);
  r.slack = actual - cb.value;
  r.outcome = real_at_least(actual, cb.value) ? Outcome::Pass : Outcome::Fail;
  r.equalities = real_equal(actual, cb.value) ? 1 : 0;
  r.note = bound_case_name(cb.attained);
  return r;
}

// --- Family checkers -----------------------------------------------------------

namespace {

void attach_if_notable(CheckReport& r, const SubspaceFamily& s) {
  if (r.outcome == Outcome::Fail || r.equalities > 0)
    r.witnesses.push_back(family_to_json(s));
}

}  // namespace

CheckReport check_thm_density(const SubspaceFamily& s) {
  if (s.empty()) throw Error(Errc::EmptyFamily, "density check of an empty family");
  CheckReport r = density_instance(s.q(), s.n(), s.k(), BigInt(s.size()),
                                   BigInt(shadow(s).size()));
  attach_if_notable(r, s);
  return r;
}

CheckReport check_qkk(const SubspaceFamily& s) {
  if (s.empty()) throw Error(Errc::EmptyFamily, "Kruskal-Katona of an empty family");
  CheckReport r = kruskal_instance(s.q(), s.n(), s.k(), BigInt(s.size()),
                                   BigInt(shadow(s).size()));
  attach_if_notable(r, s);
  return r;
}

CheckReport check_dual_qkk(const SubspaceFamily& s) {
  if (s.empty())
    throw Error(Errc::EmptyFamily, "dual Kruskal-Katona of an empty family");
  CheckReport r = dual_kruskal_instance(s.q(), s.n(), s.k(), BigInt(s.size()),
                                        BigInt(shadow(s).size()));
  attach_if_notable(r, s);
  return r;
}

CheckReport check_corollary(const SubspaceFamily& s) {
  CheckReport r = corollary_instance(s.q(), s.n(), s.k(), BigInt(s.size()),
                                     BigInt(shadow(s).size()));
  attach_if_notable(r, s);
  return r;
}

CheckReport check_self_duality(const SubspaceFamily& s) {
  if (s.empty()) throw Error(Errc::EmptyFamily, "self-duality of an empty family");
  const int q = s.q();
  const int n = s.n();
  const int k = s.k();
  const SubspaceFamily sh = shadow(s);
  const SubspaceFamily t = dual_family(s);
  const SubspaceFamily sh_t = shadow(t);

  const Rational m = density(s);
  const Rational b = density(sh);
  const Rational a = 1 - density(sh_t);
  const Rational b_dual = 1 - density(t);
  const Rational c = thm1_coefficient(q, n, k);
  const Rational c_dual = thm1_coefficient(q, n, n - k + 1);

  // The density inequality with coefficient c, cleared of denominators:
  // value <= c b / (1 - b + c b).
  auto margin = [&](const Rational& value, const Rational& shadow_density) {
    return Rational(c * shadow_density -
                    value * (1 - shadow_density + c * shadow_density));
  };
  const Rational g_primal = margin(m, b);
  const Rational g_dual = margin(a, b_dual);

  CheckReport r = base_report("self_duality", q, n, k, BigInt(s.size()));
  const Rational denom = 1 - b + c * b;
  r.bound = denom == 0 ? Rational(1) : Rational(c * b / denom);
  r.actual = a;
  r.slack = std::min(g_primal, g_dual);
  const bool ok = c == c_dual && b == b_dual && g_primal >= 0 && g_dual >= 0 &&
                  m <= a;
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  r.equalities = (g_primal == 0 && g_dual == 0) ? 1 : 0;
  r.note = "primal=(" + to_string(m) + "," + to_string(b) + ") dual=(" +
           to_string(a) + "," + to_string(b_dual) + ")";
  if (!ok) r.witnesses.push_back(family_to_json(s));
  return r;
}

CheckReport check_eml(const GrassmannGraph& g, const ExpansionReport& e) {
  CheckReport r = base_report("eml_sandwich", g.q(), g.n(), g.k(),
                              BigInt(e.family_size));
  Tightest t;
  t.consider(e.eml_lower, e.phi, Rational(e.phi - e.eml_lower), e.phi >= e.eml_lower);
  t.consider(e.eml_upper, e.phi, Rational(e.eml_upper - e.phi), e.phi <= e.eml_upper);
  t.fill(r);
  r.equalities = (e.phi == e.eml_lower || e.phi == e.eml_upper) ? 1 : 0;
  return r;
}

CheckReport check_fiber_identity(const GrassmannGraph& g,
                                 const ExpansionReport& e) {
  CheckReport r = base_report("fiber_identity", g.q(), g.n(), g.k(),
                              BigInt(e.family_size));
  BigInt incidences = 0;
  for (std::size_t c : e.fiber_counts) incidences += c;
  const BigInt expected_incidences =
      q_int_exact(g.q(), g.k()) * BigInt(e.family_size);
  const BigInt boundary(e.boundary_edges);
  r.bound = Rational(e.fiber_boundary_sum);
  r.actual = Rational(boundary);
  const bool ok = boundary == e.fiber_boundary_sum &&
                  incidences == expected_incidences;
  r.slack = ok ? Rational(0) : Rational(-1);
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  r.equalities = ok ? 1 : 0;
  return r;
}

CheckReport check_cauchy_schwarz(const GrassmannGraph& g,
                                 const ExpansionReport& e) {
  CheckReport r = base_report("cauchy_schwarz", g.q(), g.n(), g.k(),
                              BigInt(e.family_size));
  const Rational sq(e.fiber_square_sum);
  r.bound = e.cauchy_schwarz_bound;
  r.actual = sq;
  r.slack = Rational(sq - e.cauchy_schwarz_bound);
  r.outcome = sq >= e.cauchy_schwarz_bound ? Outcome::Pass : Outcome::Fail;
  r.equalities = sq == e.cauchy_schwarz_bound ? 1 : 0;
  return r;
}

std::vector<Elem> fixed_invertible_map(int q, int n) {
  const Field& f = Field::get(q);
  // U: ones on the diagonal and superdiagonal, then shift columns cyclically.
  std::vector<Elem> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    m[i * n + (i + 1) % n] = f.add_u(m[i * n + (i + 1) % n], 1);
    if (i + 1 < n) m[i * n + (i + 2) % n] = f.add_u(m[i * n + (i + 2) % n], 1);
  }
  return m;
}

CheckReport check_gl_invariance(const GrassmannGraph& g,
                                const SubspaceFamily& s,
                                std::span<const Elem> map) {
  SubspaceFamily image(s.q(), s.n(), s.k());
  for (const Subspace& a : s) image.insert(apply_linear_map(a, map));
  const ExpansionReport before = edge_expansion(g, s);
  const ExpansionReport after = edge_expansion(g, image);
  CheckReport r = base_report("gl_invariance", g.q(), g.n(), g.k(),
                              BigInt(s.size()));
  const bool ok = image.size() == s.size() &&
                  before.shadow_size == after.shadow_size &&
                  shadow(image).size() == shadow(s).size() &&
                  before.phi == after.phi;
  r.bound = before.phi;
  r.actual = after.phi;
  r.slack = ok ? Rational(0) : Rational(-1);
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  if (!ok) r.witnesses.push_back(family_to_json(s));
  return r;
}

// --- Ideal checkers -------------------------------------------------------------

CheckReport check_thm_main(const Ideal& ideal, std::optional<Rational> epsilon) {
  require_nontrivial(ideal);
  const int q = ideal.q();
  const int n = ideal.n();
  const auto mu = ideal.densities();
  CheckReport r;
  r.name = "thm_main";
  r.param("q", q).param("n", n);
  r.cases = 0;
  Tightest t;
  for (int k = 1; k <= n - 1; ++k) {
    if (mu[k] == 0 || mu[k] == 1) continue;
    ++r.cases;
    const Rational z = 1 / mu[k] - 1;
    const Rational lower = 1 / (1 + z / q);
    const Rational upper = 1 / (1 + q * z);
    t.consider(lower, mu[k - 1], Rational(mu[k - 1] - lower), mu[k - 1] >= lower);
    t.consider(upper, mu[k + 1], Rational(upper - mu[k + 1]), mu[k + 1] <= upper);
    if (mu[k - 1] == lower || mu[k + 1] == upper) ++r.equalities;
  }
  if (epsilon) {
    const Rational& eps = *epsilon;
    if (eps <= 0 || eps > Rational(1, 2))
      throw Error(Errc::DomainError, "epsilon must lie in (0, 1/2]");
    int start = 0;
    while (mu[start] > 1 - eps) ++start;
    const int steps = sharp_threshold_steps(q, to_double(eps));
    const int target = std::min(n, start + steps);
    r.param("epsilon", to_string(eps));
    r.param("start", start).param("steps", steps);
    ++r.cases;
    t.consider(eps, mu[target], Rational(eps - mu[target]), mu[target] <= eps);
  }
  t.fill(r);
  return r;
}

namespace {

// The k-th root chain v_1 >= v_2^{1/2} >= ... >= v_m^{1/m}, compared exactly
// as v_k^{k+1} >= v_{k+1}^k.
void root_chain(const std::vector<Rational>& v, Tightest& t, CheckReport& r) {
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    ++r.cases;
    const bool ok = rpow(v[k], static_cast<int>(k + 1)) >=
                    rpow(v[k + 1], static_cast<int>(k));
    const double lhs = std::pow(to_double(v[k]), 1.0 / k);
    const double rhs = std::pow(to_double(v[k + 1]), 1.0 / (k + 1));
    t.consider(rhs, lhs, lhs - rhs, ok);
  }
}

}  // namespace

CheckReport check_qbt(const Ideal& ideal) {
  require_nontrivial(ideal);
  const int n = ideal.n();
  const auto profile = threshold_profile(ideal);
  const auto& mu = profile.densities;
  CheckReport r;
  r.name = "qbt";
  r.param("q", ideal.q()).param("n", n).param("t", profile.t);
  r.cases = 0;
  Tightest t;
  root_chain(mu, t, r);
  for (int c = 1; c <= 3; ++c) {
    const int lo = (profile.t - 1) / c;
    const double lo_bound = std::pow(2.0, -1.0 / c);
    ++r.cases;
    t.consider(lo_bound, mu[lo], to_double(mu[lo]) - lo_bound,
               real_at_least(to_double(mu[lo]), lo_bound));
    const int hi = c * profile.t;
    if (hi <= n) {
      ++r.cases;
      const double hi_bound = std::pow(2.0, -c);
      t.consider(hi_bound, mu[hi], hi_bound - to_double(mu[hi]),
                 real_at_least(hi_bound, to_double(mu[hi])));
    }
  }
  t.fill(r);
  return r;
}

CheckReport check_dual_qbt(const Ideal& ideal) {
  require_nontrivial(ideal);
  const int n = ideal.n();
  const auto profile = threshold_profile(ideal);
  const auto& mu = profile.densities;
  std::vector<Rational> nu(n + 1);
  for (int k = 0; k <= n; ++k) nu[k] = 1 - mu[n - k];
  CheckReport r;
  r.name = "dual_qbt";
  r.param("q", ideal.q()).param("n", n).param("t", profile.t);
  r.cases = 0;
  Tightest t;
  root_chain(nu, t, r);
  for (int c = 1; c <= 3; ++c) {
    const int lo = c * (profile.t - 1) + (1 - c) * n;
    if (lo >= 0) {
      ++r.cases;
      const double bound = 1 - std::pow(2.0, -c);
      t.consider(bound, mu[lo], to_double(mu[lo]) - bound,
                 real_at_least(to_double(mu[lo]), bound));
    }
    const int num = profile.t + (c - 1) * n;  // ceil(num / c)
    const int hi = (num + c - 1) / c;
    if (hi <= n) {
      ++r.cases;
      const double bound = 1 - std::pow(2.0, -1.0 / c);
      t.consider(bound, mu[hi], bound - to_double(mu[hi]),
                 real_at_least(bound, to_double(mu[hi])));
    }
  }
  t.fill(r);
  return r;
}

CheckReport check_dual_ideal(const Ideal& ideal) {
  const int n = ideal.n();
  const Ideal dual = dual_ideal(ideal);
  const auto mu = ideal.densities();
  const auto mu_dual = dual.densities();
  CheckReport r;
  r.name = "dual_ideal";
  r.param("q", ideal.q()).param("n", n);
  r.cases = 0;
  Tightest t;
  for (int k = 0; k <= n; ++k) {
    ++r.cases;
    const Rational expected = 1 - mu[n - k];
    t.consider(expected, mu_dual[k], Rational(-abs(mu_dual[k] - expected)),
               mu_dual[k] == expected);
  }
  ++r.cases;
  const bool involution = dual_ideal(dual) == ideal;
  t.consider(Rational(0), Rational(involution ? 0 : 1),
             Rational(involution ? 0 : -1), involution);
  t.fill(r);
  if (!involution) r.note = "(Q*)* differs from Q";
  return r;
}

CheckReport check_density_monotone(const Ideal& ideal) {
  const auto mu = ideal.densities();
  CheckReport r;
  r.name = "density_monotone";
  r.param("q", ideal.q()).param("n", ideal.n());
  r.cases = 0;
  Tightest t;
  for (std::size_t k = 1; k < mu.size(); ++k) {
    ++r.cases;
    t.consider(mu[k - 1], mu[k], Rational(mu[k - 1] - mu[k]), mu[k] <= mu[k - 1]);
  }
  t.fill(r);
  return r;
}

std::vector<CheckReport> check_flag_densities(int q, int n) {
  if (n < 2) throw Error(Errc::DomainError, "flag checks need n >= 2");
  const Rational half(1, 2);
  const Rational qn = Rational(q_int_exact(q, n));

  std::vector<Ideal> ideals;
  std::vector<std::vector<Rational>> mu;
  for (int j = 1; j <= n; ++j) {
    ideals.push_back(flag_ideal(q, n, j));
    mu.push_back(ideals.back().densities());
  }

  auto make = [&](const char* name) {
    CheckReport r;
    r.name = name;
    r.param("q", q).param("n", n);
    r.cases = 0;
    return r;
  };

  CheckReport claim_i = make("flag_threshold_position");
  {
    Tightest t;
    for (int j = 1; j <= n; ++j) {
      const auto& m = mu[j - 1];
      ++claim_i.cases;
      t.consider(half, m[n - j], Rational(m[n - j] - half), m[n - j] > half);
      t.consider(half, m[n - j + 1], Rational(half - m[n - j + 1]),
                 half > m[n - j + 1]);
    }
    t.fill(claim_i);
  }

  // Closed forms for Q_n (subspaces of V_{n-1}) and Q_1 (avoiding V_1).
  auto closed_form = [&](const char* name, int j, auto&& forms) {
    CheckReport r = make(name);
    Tightest t;
    const auto& m = mu[j - 1];
    for (int k = 0; k <= n; ++k) {
      for (const std::optional<Rational>& f : forms(k)) {
        if (!f) continue;
        ++r.cases;
        t.consider(*f, m[k], Rational(-abs(m[k] - *f)), m[k] == *f);
      }
    }
    t.fill(r);
    return r;
  };
  auto pw = [&](int e) { return Rational(ipow(q, e)); };

  CheckReport form_iii = closed_form("flag_closed_form_top", n, [&](int k) {
    std::vector<std::optional<Rational>> f;
    f.push_back(Rational(q_binomial_exact(q, n - 1, k)) /
                Rational(q_binomial_exact(q, n, k)));
    f.push_back(Rational(q_int_exact(q, n - k)) / qn);
    if (n - k >= 1)
      f.push_back(1 / (1 + pw(n - k) * (pw(k) - 1) / (pw(n - k) - 1)));
    return f;
  });
  CheckReport form_iv = closed_form("flag_closed_form_bottom", 1, [&](int k) {
    std::vector<std::optional<Rational>> f;
    const BigInt below = k == 0 ? BigInt(0) : q_binomial_exact(q, n - 1, k - 1);
    f.push_back(1 - Rational(below) / Rational(q_binomial_exact(q, n, k)));
    f.push_back(1 - Rational(q_int_exact(q, k)) / qn);
    if (n - k >= 1)
      f.push_back(1 / (1 + (pw(k) - 1) / (pw(k) * (pw(n - k) - 1))));
    return f;
  });

  CheckReport ii_lower = make("flag_near_tight_lower");
  CheckReport ii_upper = make("flag_near_tight_upper");
  {
    Tightest lower_t;
    Tightest upper_t;
    for (int j = 1; j <= n; ++j) {
      const auto& m = mu[j - 1];
      for (int k = 2; k <= n - 1; ++k) {
        if (m[k] == 0) continue;
        const Rational z = 1 / m[k] - 1;
        const Rational lower = 1 / (1 + z / q);
        const Rational upper = 1 / (1 + z / (q * q));
        ++ii_lower.cases;
        lower_t.consider(lower, m[k - 1], Rational(m[k - 1] - lower),
                         m[k - 1] >= lower);
        ++ii_upper.cases;
        const bool holds = upper >= m[k - 1];
        upper_t.consider(upper, m[k - 1], Rational(upper - m[k - 1]), holds);
        if (!holds) {
          ++ii_upper.reported;
          ojson w;
          w["q"] = q;
          w["n"] = n;
          w["j"] = j;
          w["k"] = k;
          w["z"] = to_string(z);
          w["bound"] = to_string(upper);
          w["mu_k_minus_1"] = to_string(m[k - 1]);
          ii_upper.witnesses.push_back(w.dump());
        }
      }
    }
    lower_t.fill(ii_lower);
    upper_t.fill(ii_upper);
    // The upper half is evaluated, never asserted.
    ii_upper.outcome = ii_upper.reported > 0 ? Outcome::Reported : Outcome::Pass;
    if (ii_lower.cases == 0) ii_lower.outcome = Outcome::Skipped;
    if (ii_upper.cases == 0) ii_upper.outcome = Outcome::Skipped;
  }

  return {claim_i, form_iii, form_iv, ii_lower, ii_upper};
}

}  // namespace qlattice
