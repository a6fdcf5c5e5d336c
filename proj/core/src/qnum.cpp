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

#include "qlattice/qnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "qlattice/error.hpp"

namespace qlattice {
namespace {

constexpr int kBisectionIterations = 200;
constexpr double kBisectionWidth = 1e-12;

void require_q(int q) {
  if (q < 2) throw Error(Errc::DomainError, "q must be at least 2");
}

// Tolerant range test for interpolated parameters.
bool within(double v, double lo, double hi) {
  return v >= lo - kRealTolerance && v <= hi + kRealTolerance;
}

}  // namespace

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const Rational& v) {
  return to_double(boost::multiprecision::numerator(v)) /
         to_double(boost::multiprecision::denominator(v));
}

Rational parse_rational(const std::string& text) {
  auto fail = [&] {
    return Error(Errc::ParseError, "not a rational number: '" + text + "'");
  };
  if (text.empty()) throw fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto read_digits = [&](std::size_t& i) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    return text.substr(start, i - start);
  };
  std::string whole = read_digits(pos);
  Rational value;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den = read_digits(pos);
    if (whole.empty() || den.empty() || pos != text.size()) throw fail();
    BigInt d(den);
    if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    value = Rational(BigInt(whole), d);
  } else {
    std::string frac;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      frac = read_digits(pos);
    }
    if ((whole.empty() && frac.empty()) || pos != text.size()) throw fail();
    BigInt num(whole.empty() ? "0" : whole);
    BigInt scale = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(num, scale);
  }
  return negative ? Rational(-value) : value;
}

BigInt ipow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double q_int(int q, double x) {
  require_q(q);
  return (std::pow(static_cast<double>(q), x) - 1.0) / (q - 1.0);
}

BigInt q_int_exact(int q, int x) {
  require_q(q);
  if (x < 0) throw Error(Errc::DomainError, "q-integer of a negative integer");
  return (ipow(q, x) - 1) / (q - 1);
}

double q_binomial(int q, double x, int k) {
  require_q(q);
  if (k < 0) throw Error(Errc::DomainError, "negative k");
  if (x < k - 1 - kRealTolerance)
    throw Error(Errc::DomainError, "q_binomial needs x >= k-1");
  double r = 1.0;
  for (int i = 0; i < k; ++i) {
    // Clamp the last factor so x == k-1 (up to rounding) gives exactly 0.
    const double top = std::max(0.0, q_int(q, x - i));
    r *= top / q_int(q, static_cast<double>(k - i));
  }
  return r;
}

BigInt q_binomial_exact(int q, int n, int k) {
  require_q(q);
  if (k < 0 || n < 0) throw Error(Errc::DomainError, "negative argument");
  if (n < k) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, k - i) - 1;
  }
  return num / den;
}

double q_binomial_inverse_x(int q, int k, double target) {
  require_q(q);
  if (k < 1) throw Error(Errc::DomainError, "inverse needs k >= 1");
  if (!(target >= 0)) throw Error(Errc::NoSolution, "negative target");
  if (target == 0) return k - 1;

  // Integer solutions first: they carry the tight cases and must be exact.
  if (target == std::floor(target) && target < 1e15) {
    const BigInt t(static_cast<long long>(target));
    for (int m = k;; ++m) {
      const BigInt v = q_binomial_exact(q, m, k);
      if (v == t) return m;
      if (v > t) break;
    }
  }

  double lo = k - 1;
  double hi = k;
  while (q_binomial(q, hi, k) < target) {
    lo = hi;
    hi = k - 1 + 2 * (hi - (k - 1));
  }
  for (int it = 0; it < kBisectionIterations && hi - lo > kBisectionWidth;
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (q_binomial(q, mid, k) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Rational thm1_coefficient(int q, int n, int k) {
  require_q(q);
  if (k < 1 || k > n)
    throw Error(Errc::DomainError, "coefficient needs 1 <= k <= n");
  if (k == 1 || k == n) return 0;
  const BigInt num = q * (ipow(q, k - 1) - 1) * (ipow(q, n - k) - 1);
  const BigInt den = (ipow(q, k) - 1) * (ipow(q, n - k + 1) - 1);
  return Rational(num, den);
}

BoundConstant density_bound_constant(int q, int n, int k) {
  return BoundConstant{q, n, k, thm1_coefficient(q, n, k)};
}

BigInt grassmann_eigenvalue(int q, int n, int k, int i) {
  require_q(q);
  if (k < 0 || k > n || i < 0 || i > std::min(k, n - k))
    throw Error(Errc::DomainError, "eigenvalue index out of range");
  return ipow(q, i + 1) * q_int_exact(q, k - i) * q_int_exact(q, n - k - i) -
         q_int_exact(q, i);
}

BigInt grassmann_multiplicity(int q, int n, int i) {
  require_q(q);
  if (i < 0 || 2 * i > n)
    throw Error(Errc::DomainError, "multiplicity index out of range");
  const BigInt prev = i == 0 ? BigInt(0) : q_binomial_exact(q, n, i - 1);
  return q_binomial_exact(q, n, i) - prev;
}

BigInt second_eigenvalue_abs(int q, int n, int k) {
  require_q(q);
  if (k < 1 || k > n - 1)
    throw Error(Errc::DomainError, "second eigenvalue needs 1 <= k <= n-1");
  if (k == 1 || k == n - 1) return 1;
  return ipow(q, 2) * q_int_exact(q, k - 1) * q_int_exact(q, n - k - 1) - 1;
}

const char* bound_case_name(BoundCase c) noexcept {
  switch (c) {
    case BoundCase::Kruskal: return "kruskal_katona";
    case BoundCase::Density: return "density";
    case BoundCase::Dual: return "dual_kruskal_katona";
    case BoundCase::None: return "none";
  }
  return "none";
}

std::array<Rational, 2> density_case_multipliers(int q, int n, int k) {
  require_q(q);
  if (k < 1 || k >= n)
    throw Error(Errc::DomainError, "density case needs 1 <= k <= n-1");
  const Rational a(ipow(q, k) - 1, ipow(q, k) * (ipow(q, n - k) - 1));
  const Rational b(ipow(q, k - 1) - 1,
                   ipow(q, k - 1) * (ipow(q, n - k + 1) - 1));
  return {a, b};
}

CombinedBound combined_shadow_lower_bound(int q, int n, int k,
                                          const BigInt& family_size) {
  require_q(q);
  if (k < 1 || k > n)
    throw Error(Errc::DomainError, "combined bound needs 1 <= k <= n");
  const BigInt level = q_binomial_exact(q, n, k);
  if (family_size <= 0 || family_size >= level)
    throw Error(Errc::DomainError,
                "combined bound needs 0 < |S| < [n,k]_q");
  const double lower_level = to_double(q_binomial_exact(q, n, k - 1));
  const double size = to_double(family_size);

  CombinedBound out;

  // Kruskal-Katona: |S| = [x,k], bound [x,k-1], k <= x <= n-1.
  {
    CaseBound& c = out.cases[static_cast<int>(BoundCase::Kruskal)];
    c.defined = true;
    c.parameter = q_binomial_inverse_x(q, k, size);
    c.value = q_binomial(q, c.parameter, k - 1);
    c.in_range = within(c.parameter, k, n - 1);
  }

  // Density case: exact in rationals. k < n holds since a proper nonempty
  // family exists.
  {
    CaseBound& c = out.cases[static_cast<int>(BoundCase::Density)];
    const auto [a, b] = density_case_multipliers(q, n, k);
    const Rational mu(family_size, level);
    const Rational z = (1 / mu - 1) / a;
    const Rational bound =
        Rational(q_binomial_exact(q, n, k - 1)) / (1 + b * z);
    c.defined = true;
    c.parameter = to_double(z);
    c.value = to_double(bound);
    c.in_range = z >= 1 && z <= Rational(ipow(q, n));
  }

  // Dual Kruskal-Katona: |S| = [n,k] - [y,n-k], bound [n,k-1] - [y,n-k+1],
  // n-k+1 <= y <= n-1.
  {
    CaseBound& c = out.cases[static_cast<int>(BoundCase::Dual)];
    const double cosize = to_double(BigInt(level - family_size));
    c.defined = true;
    c.parameter = q_binomial_inverse_x(q, n - k, cosize);
    c.value = lower_level - q_binomial(q, c.parameter, n - k + 1);
    c.in_range = within(c.parameter, n - k + 1, n - 1);
  }

  // Ties prefer the integer-parameter cases, which are the known tight ones.
  constexpr std::array<BoundCase, 3> preference = {
      BoundCase::Kruskal, BoundCase::Dual, BoundCase::Density};
  for (BoundCase bc : preference) {
    const CaseBound& c = out.cases[static_cast<int>(bc)];
    if (!c.in_range) continue;
    if (out.attained == BoundCase::None ||
        c.value > out.value * (1 + kRealTolerance) + kRealTolerance) {
      out.value = c.value;
      out.attained = bc;
    }
  }
  if (out.attained == BoundCase::None) {
    out.attained = BoundCase::Kruskal;
    out.value = out.cases[0].value;
  }
  return out;
}

bool qbt_interpolation_check(int q, int n, int k, double x) {
  require_q(q);
  if (k < 1 || !within(x, k, n))
    throw Error(Errc::DomainError, "interpolation check needs k <= x <= n");
  x = std::clamp(x, static_cast<double>(k), static_cast<double>(n));
  const double left =
      std::pow(q_binomial(q, x, k - 1) / q_binomial(q, n, k - 1), k);
  const double right =
      std::pow(q_binomial(q, x, k) / q_binomial(q, n, k), k - 1);
  return left >= right * (1 - kRealTolerance);
}

int sharp_threshold_steps(int q, double epsilon) {
  require_q(q);
  if (!(epsilon > 0 && epsilon <= 0.5))
    throw Error(Errc::DomainError, "epsilon must lie in (0, 1/2]");
  const double v =
      2.0 * std::log((1.0 - epsilon) / epsilon) / std::log(static_cast<double>(q));
  // Absorb rounding so exact powers of q do not round up a step.
  return std::max(0, static_cast<int>(std::ceil(v - kRealTolerance)));
}

}  // namespace qlattice
