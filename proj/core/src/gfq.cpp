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

#include "qlattice/gfq.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qlattice/error.hpp"

namespace qlattice {
namespace {

struct OrderInfo {
  int q;
  int p;
  int e;
  // Monic reduction polynomial, constant term first, leading 1 included.
  std::vector<int> poly;
};

const std::array<OrderInfo, 12>& order_table() {
  static const std::array<OrderInfo, 12> table = {{
      {2, 2, 1, {}},
      {3, 3, 1, {}},
      {4, 2, 2, {1, 1, 1}},
      {5, 5, 1, {}},
      {7, 7, 1, {}},
      {8, 2, 3, {1, 1, 0, 1}},
      {9, 3, 2, {1, 0, 1}},
      {11, 11, 1, {}},
      {13, 13, 1, {}},
      {16, 2, 4, {1, 1, 0, 0, 1}},
      {25, 5, 2, {1, 1, 1}},
      {27, 3, 3, {1, 2, 0, 1}},
  }};
  return table;
}

const std::array<int, 12> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

std::vector<int> digits(int code, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

// Product of two residues modulo the monic polynomial `poly` over F_p.
int poly_mul(int a, int b, const OrderInfo& info) {
  const int p = info.p;
  const int e = info.e;
  if (e == 1) return (a * b) % p;
  auto da = digits(a, p, e);
  auto db = digits(b, p, e);
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // x^e = -(poly[0] + ... + poly[e-1] x^{e-1})
  for (int deg = 2 * e - 2; deg >= e; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < e; ++i) {
      const int idx = deg - e + i;
      prod[idx] = ((prod[idx] - c * info.poly[i]) % p + p) % p;
    }
  }
  prod.resize(e);
  return undigits(prod, p);
}

}  // namespace

std::span<const int> supported_orders() noexcept { return kOrders; }

Field Field::make(int q) {
  const auto& table = order_table();
  auto it = std::find_if(table.begin(), table.end(),
                         [q](const OrderInfo& o) { return o.q == q; });
  if (it == table.end())
    throw Error(Errc::UnsupportedOrder,
                "field order " + std::to_string(q) + " is not supported");
  const OrderInfo& info = *it;

  Field f;
  f.q_ = info.q;
  f.p_ = info.p;
  f.e_ = info.e;
  f.poly_ = info.poly;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, info.p, info.e);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, info.p, info.e);
      std::vector<int> sum(info.e);
      for (int i = 0; i < info.e; ++i) sum[i] = (da[i] + db[i]) % info.p;
      f.add_[a * q + b] = static_cast<Elem>(undigits(sum, info.p));
      f.mul_[a * q + b] = static_cast<Elem>(poly_mul(a, b, info));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = static_cast<Elem>(b);
      if (a != 0 && f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<Elem>(b);
    }
  }
  return f;
}

const Field& Field::get(int q) {
  static const std::vector<Field> fields = [] {
    std::vector<Field> all;
    for (int order : kOrders) all.push_back(Field::make(order));
    return all;
  }();
  for (const Field& f : fields)
    if (f.q_ == q) return f;
  throw Error(Errc::UnsupportedOrder,
              "field order " + std::to_string(q) + " is not supported");
}

void Field::check_code(int a) const {
  if (a < 0 || a >= q_)
    throw Error(Errc::CodeOutOfRange, "element code " + std::to_string(a) +
                                          " outside 0.." +
                                          std::to_string(q_ - 1));
}

Elem Field::add(int a, int b) const {
  check_code(a);
  check_code(b);
  return add_u(static_cast<Elem>(a), static_cast<Elem>(b));
}

Elem Field::sub(int a, int b) const {
  check_code(a);
  check_code(b);
  return add_u(static_cast<Elem>(a), neg_u(static_cast<Elem>(b)));
}

Elem Field::mul(int a, int b) const {
  check_code(a);
  check_code(b);
  return mul_u(static_cast<Elem>(a), static_cast<Elem>(b));
}

Elem Field::neg(int a) const {
  check_code(a);
  return neg_u(static_cast<Elem>(a));
}

Elem Field::inv(int a) const {
  check_code(a);
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return inv_u(static_cast<Elem>(a));
}

}  // namespace qlattice
