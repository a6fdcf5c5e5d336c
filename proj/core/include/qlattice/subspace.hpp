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

#ifndef QLATTICE_SUBSPACE_HPP
#define QLATTICE_SUBSPACE_HPP

#include <span>
#include <string>
#include <vector>

#include "qlattice/gfq.hpp"

namespace qlattice {

/// A vector of (F_q)^n as element codes.
using Vector = std::vector<Elem>;

/// A linear subspace of (F_q)^n held in its unique reduced row echelon form.
///
/// Two Subspace values denote the same subspace iff their keys are equal; the
/// key is the byte string (q, n, k, basis entries row-major). Ordering and
/// hashing go through the key.
class Subspace {
 public:
  /// The zero subspace of F_2^0; mainly so containers can default-construct.
  Subspace();

  static Subspace zero(int q, int n);
  static Subspace whole(int q, int n);
  /// Coordinate subspace spanned by e_1..e_j (the first j coordinates).
  static Subspace coordinate(int q, int n, int j);

  const Field& field() const noexcept { return *field_; }
  int q() const noexcept { return field_->order(); }
  int ambient_dim() const noexcept { return n_; }
  int dim() const noexcept { return k_; }

  Elem at(int row, int col) const noexcept { return basis_[row * n_ + col]; }
  std::span<const Elem> row(int r) const noexcept {
    return {basis_.data() + r * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const int> pivots() const noexcept { return pivots_; }
  std::vector<Vector> rows() const;
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.key_ == b.key_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) noexcept {
    return a.key_ < b.key_;
  }

 private:
  friend class SubspaceBuilder;
  Subspace(const Field& f, int n, int k, std::vector<Elem> basis,
           std::vector<int> pivots);

  const Field* field_;
  int n_ = 0;
  int k_ = 0;
  std::vector<Elem> basis_;
  std::vector<int> pivots_;
  std::string key_;
};

/// Row-reduces the span of `rows` to its canonical form. Zero, repeated and
/// dependent rows are dropped. Throws Error(DimensionMismatch) on a row whose
/// length differs from n and Error(CodeOutOfRange) on a bad entry.
Subspace canonicalize(const Field& field, int n, std::span<const Vector> rows);

/// Every k-dimensional subspace exactly once. Pivot sets run in colex order;
/// within a pivot set the free entries (row-major) count in base q with the
/// first free entry varying fastest. Throws Error(DomainError) unless
/// 0 <= k <= n.
std::vector<Subspace> enumerate_grassmannian(const Field& field, int n, int k);

/// True iff b is a subspace of a. Throws Error(AmbientMismatch).
bool contains(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Annihilator under the standard dot product sum_i a_i b_i.
Subspace orthogonal_complement(const Subspace& a);

/// The [k]_q subspaces of codimension one in a, canonical in the ambient
/// space. Throws Error(DomainError) when dim a == 0.
std::vector<Subspace> hyperplanes_of(const Subspace& a);

/// Image {v M : v in a} under an n x n matrix given row-major. Throws
/// Error(DomainError) if the map drops the dimension of a.
Subspace apply_linear_map(const Subspace& a, std::span<const Elem> matrix);

/// Rank of a row-major matrix with `cols` columns.
int rank(const Field& field, int cols, std::vector<Elem> entries);

/// Digit character for an element code: 0-9 then a-z.
char code_digit(Elem code);
/// Inverse of code_digit. Throws Error(ParseError).
Elem digit_code(char c, int q);

std::string format_row(std::span<const Elem> row);
Vector parse_row(const std::string& text, int q);

}  // namespace qlattice

template <>
struct std::hash<qlattice::Subspace> {
  std::size_t operator()(const qlattice::Subspace& s) const noexcept {
    return std::hash<std::string>{}(s.key());
  }
};

#endif  // QLATTICE_SUBSPACE_HPP
