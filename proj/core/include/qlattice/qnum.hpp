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

// q-integers, Gaussian binomials and the closed-form constants used by the
// shadow and threshold bounds. Integer-argument paths are exact; real
// arguments are evaluated in double precision.

#ifndef QLATTICE_QNUM_HPP
#define QLATTICE_QNUM_HPP

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlattice {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Relative tolerance applied to every real-valued (interpolated) comparison.
inline constexpr double kRealTolerance = 1e-9;

std::string to_string(const BigInt& v);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);
double to_double(const Rational& v);
double to_double(const BigInt& v);
/// Parses "p", "p/q" or a finite decimal such as "0.25" exactly.
/// Throws Error(ParseError).
Rational parse_rational(const std::string& text);

BigInt ipow(int base, int exp);

/// [x]_q = (q^x - 1)/(q - 1).
double q_int(int q, double x);
BigInt q_int_exact(int q, int x);

/// Gaussian binomial prod_{i<k} [x-i]_q / [k-i]_q for real x >= k-1.
/// Throws Error(DomainError) when x < k-1.
double q_binomial(int q, double x, int k);
/// Exact count |L(n,k)| for integers; 0 when 0 <= n < k.
BigInt q_binomial_exact(int q, int n, int k);

/// The unique x >= k-1 with q_binomial(q, x, k) == target (to 1e-9 relative).
/// Integer solutions are returned exactly. Throws Error(NoSolution) when
/// target < 0 and Error(DomainError) when k < 1.
double q_binomial_inverse_x(int q, int k, double target);

/// The multiplier of z in the density bound for shadows,
/// q(q^{k-1}-1)(q^{n-k}-1) / ((q^k-1)(q^{n-k+1}-1)); exactly 0 for k in {1,n}.
Rational thm1_coefficient(int q, int n, int k);

struct BoundConstant {
  int q = 0;
  int n = 0;
  int k = 0;
  Rational value;
};
BoundConstant density_bound_constant(int q, int n, int k);

/// i-th eigenvalue q^{i+1}[k-i]_q[n-k-i]_q - [i]_q of J_q(n,k),
/// 0 <= i <= min(k, n-k).
BigInt grassmann_eigenvalue(int q, int n, int k, int i);
/// Multiplicity [n choose i]_q - [n choose i-1]_q.
BigInt grassmann_multiplicity(int q, int n, int i);
/// Second largest absolute eigenvalue of J_q(n,k), 1 <= k <= n-1.
BigInt second_eigenvalue_abs(int q, int n, int k);

enum class BoundCase { Kruskal = 0, Density = 1, Dual = 2, None = 3 };
const char* bound_case_name(BoundCase c) noexcept;

struct CaseBound {
  bool defined = false;   // parameter could be computed at all
  bool in_range = false;  // parameter inside the combined bound's range
  double parameter = 0;   // x, z or y
  double value = 0;
};

struct CombinedBound {
  double value = 0;
  BoundCase attained = BoundCase::None;
  std::array<CaseBound, 3> cases;  // indexed by BoundCase
};

/// Size multiplier a and shadow multiplier b of the middle case: a family of
/// size [n,k](1 + a z)^{-1} has shadow at least [n,k-1](1 + b z)^{-1}.
/// b / a equals thm1_coefficient(q, n, k).
std::array<Rational, 2> density_case_multipliers(int q, int n, int k);

/// Maximum of the in-range Kruskal-Katona, density and dual Kruskal-Katona
/// lower bounds on |shadow(S)| for |S| = family_size, 0 < |S| < [n,k].
/// Falls back to the Kruskal-Katona value when no case is in range.
/// Throws Error(DomainError) on an empty or full family size.
CombinedBound combined_shadow_lower_bound(int q, int n, int k,
                                          const BigInt& family_size);

/// ([x,k-1]/[n,k-1])^k >= ([x,k]/[n,k])^{k-1} within relative 1e-9.
/// Throws Error(DomainError) outside k <= x <= n.
bool qbt_interpolation_check(int q, int n, int k, double x);

/// c = ceil(2 log_q((1-eps)/eps)). Throws Error(DomainError) outside
/// 0 < eps <= 1/2.
int sharp_threshold_steps(int q, double epsilon);

}  // namespace qlattice

#endif  // QLATTICE_QNUM_HPP
