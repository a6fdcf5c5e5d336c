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

#include "qlattice/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "qlattice/error.hpp"

namespace qlattice {

// Grants the free functions below access to the trusted constructor.
class SubspaceBuilder {
 public:
  static Subspace make(const Field& f, int n, int k, std::vector<Elem> basis,
                       std::vector<int> pivots) {
    return Subspace(f, n, k, std::move(basis), std::move(pivots));
  }
};

namespace {

struct Reduced {
  std::vector<Elem> rows;  // rank x cols, RREF
  std::vector<int> pivots;
};

// In-place reduced row echelon form of an m x cols matrix.
Reduced rref(const Field& f, int cols, std::vector<Elem> m) {
  const int nrows = cols == 0 ? 0 : static_cast<int>(m.size()) / cols;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < nrows; ++c) {
    int sel = -1;
    for (int i = r; i < nrows; ++i)
      if (m[i * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      std::swap_ranges(m.begin() + sel * cols, m.begin() + (sel + 1) * cols,
                       m.begin() + r * cols);
    const Elem scale = f.inv_u(m[r * cols + c]);
    for (int j = c; j < cols; ++j) m[r * cols + j] = f.mul_u(scale, m[r * cols + j]);
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const Elem factor = m[i * cols + c];
      if (factor == 0) continue;
      const Elem nf = f.neg_u(factor);
      for (int j = c; j < cols; ++j)
        m[i * cols + j] = f.add_u(m[i * cols + j], f.mul_u(nf, m[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(static_cast<std::size_t>(r) * cols);
  return {std::move(m), std::move(pivots)};
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.q() != b.q() || a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::AmbientMismatch,
                "subspaces live in different ambient spaces");
}

std::vector<Elem> flat_rows(const Subspace& a) {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(a.dim()) * a.ambient_dim());
  for (int r = 0; r < a.dim(); ++r) {
    auto row = a.row(r);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

Subspace from_flat(const Field& f, int n, std::vector<Elem> m) {
  Reduced red = rref(f, n, std::move(m));
  const int k = static_cast<int>(red.pivots.size());
  return SubspaceBuilder::make(f, n, k, std::move(red.rows),
                               std::move(red.pivots));
}

// Colex order on equal-size ascending index sets.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

Subspace::Subspace() : Subspace(Field::get(2), 0, 0, {}, {}) {}

Subspace::Subspace(const Field& f, int n, int k, std::vector<Elem> basis,
                   std::vector<int> pivots)
    : field_(&Field::get(f.order())),
      n_(n),
      k_(k),
      basis_(std::move(basis)),
      pivots_(std::move(pivots)) {
  key_.reserve(3 + basis_.size());
  key_.push_back(static_cast<char>(field_->order()));
  key_.push_back(static_cast<char>(n_));
  key_.push_back(static_cast<char>(k_));
  for (Elem e : basis_) key_.push_back(static_cast<char>(e));
}

Subspace Subspace::zero(int q, int n) {
  return SubspaceBuilder::make(Field::get(q), n, 0, {}, {});
}

Subspace Subspace::whole(int q, int n) { return coordinate(q, n, n); }

Subspace Subspace::coordinate(int q, int n, int j) {
  if (j < 0 || j > n)
    throw Error(Errc::DomainError, "coordinate subspace index out of range");
  std::vector<Elem> basis(static_cast<std::size_t>(j) * n, 0);
  std::vector<int> pivots(j);
  for (int r = 0; r < j; ++r) {
    basis[r * n + r] = 1;
    pivots[r] = r;
  }
  return SubspaceBuilder::make(Field::get(q), n, j, std::move(basis),
                               std::move(pivots));
}

std::vector<Vector> Subspace::rows() const {
  std::vector<Vector> out;
  out.reserve(k_);
  for (int r = 0; r < k_; ++r) {
    auto s = row(r);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

Subspace canonicalize(const Field& field, int n, std::span<const Vector> rows) {
  if (n < 0) throw Error(Errc::DimensionMismatch, "negative ambient dimension");
  std::vector<Elem> m;
  m.reserve(rows.size() * n);
  for (const Vector& v : rows) {
    if (static_cast<int>(v.size()) != n)
      throw Error(Errc::DimensionMismatch,
                  "row of length " + std::to_string(v.size()) +
                      " in ambient dimension " + std::to_string(n));
    for (Elem e : v) {
      if (e >= field.order())
        throw Error(Errc::CodeOutOfRange, "entry outside the field");
      m.push_back(e);
    }
  }
  return from_flat(field, n, std::move(m));
}

std::vector<Subspace> enumerate_grassmannian(const Field& field, int n, int k) {
  if (k < 0 || k > n)
    throw Error(Errc::DomainError, "enumeration needs 0 <= k <= n");
  const int q = field.order();

  std::vector<std::vector<int>> pivot_sets;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    pivot_sets.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(pivot_sets.begin(), pivot_sets.end(), colex_less);

  std::vector<Subspace> out;
  for (const auto& piv : pivot_sets) {
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<int> free_pos;  // flat indices, row-major
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.push_back(r * n + c);

    std::vector<Elem> base(static_cast<std::size_t>(k) * n, 0);
    for (int r = 0; r < k; ++r) base[r * n + piv[r]] = 1;

    std::vector<Elem> counter(free_pos.size(), 0);
    while (true) {
      std::vector<Elem> basis = base;
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        basis[free_pos[i]] = counter[i];
      out.push_back(SubspaceBuilder::make(field, n, k, std::move(basis), piv));
      std::size_t i = 0;
      for (; i < counter.size(); ++i) {
        if (++counter[i] < q) break;
        counter[i] = 0;
      }
      if (i == counter.size()) break;
    }
  }
  return out;
}

bool contains(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (b.dim() > a.dim()) return false;
  const Field& f = a.field();
  const int n = a.ambient_dim();
  auto piv = a.pivots();
  Vector v(n);
  for (int r = 0; r < b.dim(); ++r) {
    auto src = b.row(r);
    std::copy(src.begin(), src.end(), v.begin());
    for (int i = 0; i < a.dim(); ++i) {
      const Elem c = v[piv[i]];
      if (c == 0) continue;
      const Elem nc = f.neg_u(c);
      for (int j = 0; j < n; ++j) v[j] = f.add_u(v[j], f.mul_u(nc, a.at(i, j)));
    }
    if (std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; }))
      return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Elem> m = flat_rows(a);
  std::vector<Elem> mb = flat_rows(b);
  m.insert(m.end(), mb.begin(), mb.end());
  return from_flat(a.field(), a.ambient_dim(), std::move(m));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // The form is nondegenerate, so (a^perp + b^perp)^perp = a cap b.
  return orthogonal_complement(
      sum(orthogonal_complement(a), orthogonal_complement(b)));
}

Subspace orthogonal_complement(const Subspace& a) {
  const Field& f = a.field();
  const int n = a.ambient_dim();
  const int k = a.dim();
  auto piv = a.pivots();
  std::vector<bool> is_pivot(n, false);
  for (int c : piv) is_pivot[c] = true;
  // Null space of the RREF basis: one vector per free column.
  std::vector<Elem> m;
  m.reserve(static_cast<std::size_t>(n - k) * n);
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vector v(n, 0);
    v[c] = 1;
    for (int r = 0; r < k; ++r) v[piv[r]] = f.neg_u(a.at(r, c));
    m.insert(m.end(), v.begin(), v.end());
  }
  return from_flat(f, n, std::move(m));
}

std::vector<Subspace> hyperplanes_of(const Subspace& a) {
  const int k = a.dim();
  if (k == 0) throw Error(Errc::DomainError, "zero subspace has no hyperplanes");
  const Field& f = a.field();
  const int n = a.ambient_dim();
  std::vector<Subspace> out;
  for (const Subspace& c : enumerate_grassmannian(f, k, k - 1)) {
    // rows of c (in a's coordinates) times a's basis
    std::vector<Elem> m(static_cast<std::size_t>(k - 1) * n, 0);
    for (int r = 0; r < k - 1; ++r)
      for (int i = 0; i < k; ++i) {
        const Elem coef = c.at(r, i);
        if (coef == 0) continue;
        for (int j = 0; j < n; ++j)
          m[r * n + j] = f.add_u(m[r * n + j], f.mul_u(coef, a.at(i, j)));
      }
    out.push_back(from_flat(f, n, std::move(m)));
  }
  return out;
}

Subspace apply_linear_map(const Subspace& a, std::span<const Elem> matrix) {
  const Field& f = a.field();
  const int n = a.ambient_dim();
  if (static_cast<int>(matrix.size()) != n * n)
    throw Error(Errc::DimensionMismatch, "linear map must be n x n");
  std::vector<Elem> m(static_cast<std::size_t>(a.dim()) * n, 0);
  for (int r = 0; r < a.dim(); ++r)
    for (int i = 0; i < n; ++i) {
      const Elem coef = a.at(r, i);
      if (coef == 0) continue;
      for (int j = 0; j < n; ++j)
        m[r * n + j] = f.add_u(m[r * n + j], f.mul_u(coef, matrix[i * n + j]));
    }
  Subspace image = from_flat(f, n, std::move(m));
  if (image.dim() != a.dim())
    throw Error(Errc::DomainError, "linear map is singular on the subspace");
  return image;
}

int rank(const Field& field, int cols, std::vector<Elem> entries) {
  return static_cast<int>(rref(field, cols, std::move(entries)).pivots.size());
}

char code_digit(Elem code) {
  return code < 10 ? static_cast<char>('0' + code)
                   : static_cast<char>('a' + (code - 10));
}

Elem digit_code(char c, int q) {
  int v = -1;
  if (c >= '0' && c <= '9') v = c - '0';
  if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
  if (v < 0 || v >= q)
    throw Error(Errc::ParseError,
                std::string("invalid digit '") + c + "' for q=" +
                    std::to_string(q));
  return static_cast<Elem>(v);
}

std::string format_row(std::span<const Elem> row) {
  std::string s;
  s.reserve(row.size());
  for (Elem e : row) s.push_back(code_digit(e));
  return s;
}

Vector parse_row(const std::string& text, int q) {
  Vector v;
  v.reserve(text.size());
  for (char c : text) v.push_back(digit_code(c, q));
  return v;
}

}  // namespace qlattice
