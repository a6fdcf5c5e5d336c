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

#ifndef QLATTICE_GFQ_HPP
#define QLATTICE_GFQ_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace qlattice {

/// Element of a small finite field, identified by its code in 0..q-1.
/// The code's base-p digits are the polynomial coefficients of the element,
/// least significant first; code 0 is zero and code 1 is one.
using Elem = std::uint8_t;

/// Table-driven arithmetic in F_q for the supported orders
/// {2,3,4,5,7,8,9,11,13,16,25,27}.
///
/// Extension fields are built over fixed irreducible polynomials so that
/// element codes (and everything serialized from them) are reproducible:
///   F_4: x^2+x+1, F_8: x^3+x+1, F_9: x^2+1, F_16: x^4+x+1,
///   F_25: x^2+x+1, F_27: x^3+2x+1.
///
/// A Field is immutable after construction.
class Field {
 public:
  /// Builds the tables for order q. Throws Error(UnsupportedOrder).
  static Field make(int q);

  /// Shared, lazily built instance for order q; the reference stays valid for
  /// the program lifetime. Throws Error(UnsupportedOrder).
  static const Field& get(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  /// Coefficients over F_p, constant term first; empty for prime fields.
  std::span<const int> reduction_polynomial() const noexcept { return poly_; }

  // Checked operations: throw Error(CodeOutOfRange) / Error(DivisionByZero).
  Elem add(int a, int b) const;
  Elem sub(int a, int b) const;
  Elem mul(int a, int b) const;
  Elem neg(int a) const;
  Elem inv(int a) const;

  // Unchecked table lookups for inner loops; callers guarantee codes < q.
  Elem add_u(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem mul_u(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg_u(Elem a) const noexcept { return neg_[a]; }
  Elem inv_u(Elem a) const noexcept { return inv_[a]; }

  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }
  std::span<const Elem> inv_table() const noexcept { return inv_; }

 private:
  Field() = default;
  void check_code(int a) const;

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> poly_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

/// Free-function spelling of Field::make.
inline Field make_field(int q) { return Field::make(q); }

/// The supported orders, ascending.
std::span<const int> supported_orders() noexcept;

}  // namespace qlattice

#endif  // QLATTICE_GFQ_HPP
