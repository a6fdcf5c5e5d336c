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
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "qlattice/error.hpp"
#include "qlattice/qnum.hpp"
#include "qlattice/subspace.hpp"

using namespace qlattice;
using qlattice::testing::kPropertySeed;

namespace {

template <typename Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qlattice::Error");
  return Errc::ParseError;
}

Subspace span_of(int q, int n, std::vector<Vector> rows) {
  return canonicalize(Field::get(q), n, rows);
}

// All points of a subspace, by brute force over coefficient vectors.
std::set<Vector> points(const Subspace& s) {
  const Field& f = s.field();
  const int q = s.q();
  const int n = s.ambient_dim();
  std::set<Vector> out;
  std::vector<int> coeff(s.dim(), 0);
  while (true) {
    Vector v(n, 0);
    for (int r = 0; r < s.dim(); ++r)
      for (int c = 0; c < n; ++c)
        v[c] = f.add_u(v[c], f.mul_u(static_cast<Elem>(coeff[r]), s.at(r, c)));
    out.insert(v);
    int i = 0;
    while (i < s.dim() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == s.dim()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("canonical form") {
  const Subspace s = span_of(2, 3, {{1, 1, 0}, {1, 0, 0}});
  CHECK(s.dim() == 2);
  CHECK(s.rows() == std::vector<Vector>{{1, 0, 0}, {0, 1, 0}});
  CHECK(s.pivots().size() == 2);

  const Subspace z = span_of(3, 4, {});
  CHECK(z.dim() == 0);
  CHECK(z == Subspace::zero(3, 4));

  // Idempotent on RREF input, and independent of the spanning list.
  CHECK(span_of(2, 3, s.rows()) == s);
  CHECK(span_of(2, 3, {{0, 1, 0}, {1, 1, 0}, {1, 0, 0}}) == s);
  CHECK(span_of(5, 3, {{2, 4, 1}}) == span_of(5, 3, {{1, 2, 3}}));
  CHECK(code_of([] { span_of(2, 3, {{1, 0}}); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { span_of(3, 2, {{3, 0}}); }) == Errc::CodeOutOfRange);
}

TEST_CASE("enumeration counts and distinctness") {
  CHECK(enumerate_grassmannian(Field::get(2), 3, 1).size() == 7);
  CHECK(enumerate_grassmannian(Field::get(2), 4, 2).size() == 35);
  CHECK(enumerate_grassmannian(Field::get(3), 4, 2).size() == 130);
  const auto zero = enumerate_grassmannian(Field::get(4), 3, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Subspace::zero(4, 3));
  CHECK(code_of([] { enumerate_grassmannian(Field::get(2), 3, 4); }) == Errc::DomainError);

  for (int q : {2, 3, 4, 5, 9})
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto all = enumerate_grassmannian(Field::get(q), n, k);
        CHECK(BigInt(all.size()) == q_binomial_exact(q, n, k));
        std::set<Subspace> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const Subspace& s : all) {
          CHECK(s.dim() == k);
          CHECK(span_of(q, n, s.rows()) == s);
        }
      }
}

TEST_CASE("enumeration agrees with point-set spans") {
  // Every k-space of F_2^4 from random spanning sets appears in the listing.
  const auto all = enumerate_grassmannian(Field::get(2), 4, 2);
  std::set<std::set<Vector>> listed;
  for (const Subspace& s : all) listed.insert(points(s));
  CHECK(listed.size() == 35);
  Rng rng(kPropertySeed);
  for (int i = 0; i < 200; ++i) {
    const Subspace s = qlattice::testing::random_span(2, 4, rng);
    if (s.dim() == 2) CHECK(listed.count(points(s)) == 1);
  }
}

TEST_CASE("containment") {
  const Subspace plane = span_of(2, 3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace line = span_of(2, 3, {{1, 1, 0}});
  CHECK(contains(plane, line));
  CHECK_FALSE(contains(line, plane));
  CHECK(contains(plane, plane));
  CHECK(contains(Subspace::whole(2, 3), line));
  CHECK(contains(line, Subspace::zero(2, 3)));
  CHECK(code_of([&] { contains(plane, Subspace::zero(2, 4)); }) ==
        Errc::AmbientMismatch);
  CHECK(code_of([&] { contains(plane, Subspace::zero(3, 3)); }) ==
        Errc::AmbientMismatch);

  Rng rng(kPropertySeed + 1);
  for (int i = 0; i < 300; ++i) {
    const int q = i % 2 ? 3 : 4;
    const Subspace a = qlattice::testing::random_span(q, 3, rng);
    const Subspace b = qlattice::testing::random_span(q, 3, rng);
    const auto pa = points(a);
    const auto pb = points(b);
    CHECK(contains(a, b) == std::includes(pa.begin(), pa.end(), pb.begin(), pb.end()));
  }
}

TEST_CASE("meet and join") {
  const auto planes = enumerate_grassmannian(Field::get(2), 3, 2);
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j)
      CHECK(intersect(planes[i], planes[j]).dim() == 1);

  Rng rng(kPropertySeed + 2);
  for (int i = 0; i < 300; ++i) {
    const int q = std::vector<int>{2, 3, 4, 5, 8}[i % 5];
    const int n = 1 + static_cast<int>(rng.below(4));
    const Subspace a = qlattice::testing::random_span(q, n, rng);
    const Subspace b = qlattice::testing::random_span(q, n, rng);
    const Subspace m = intersect(a, b);
    const Subspace s = sum(a, b);
    CHECK(m.dim() + s.dim() == a.dim() + b.dim());
    CHECK(contains(a, m));
    CHECK(contains(b, m));
    CHECK(contains(s, a));
    CHECK(contains(s, b));
    if (q <= 3 && n <= 3) {
      const auto pa = points(a);
      const auto pb = points(b);
      std::set<Vector> both;
      std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                            std::inserter(both, both.end()));
      CHECK(points(m) == both);
    }
  }
}

TEST_CASE("orthogonal complement") {
  const Subspace e1 = span_of(2, 3, {{1, 0, 0}});
  CHECK(orthogonal_complement(e1) == span_of(2, 3, {{0, 1, 0}, {0, 0, 1}}));
  const Subspace iso = span_of(2, 3, {{1, 1, 0}});
  CHECK(contains(orthogonal_complement(iso), iso));
  CHECK(orthogonal_complement(Subspace::zero(3, 2)) == Subspace::whole(3, 2));

  for (int q : {2, 3, 4})
    for (int k = 0; k <= 3; ++k)
      for (const Subspace& a : enumerate_grassmannian(Field::get(q), 3, k)) {
        const Subspace p = orthogonal_complement(a);
        CHECK(p.dim() == 3 - k);
        CHECK(orthogonal_complement(p) == a);
        // Every basis pair is orthogonal.
        const Field& f = a.field();
        for (int r = 0; r < a.dim(); ++r)
          for (int s = 0; s < p.dim(); ++s) {
            Elem d = 0;
            for (int c = 0; c < 3; ++c) d = f.add_u(d, f.mul_u(a.at(r, c), p.at(s, c)));
            CHECK(d == 0);
          }
      }

  // Inclusion reverses.
  Rng rng(kPropertySeed + 3);
  for (int i = 0; i < 200; ++i) {
    const Subspace a = qlattice::testing::random_span(5, 4, rng);
    const Subspace b = qlattice::testing::random_span(5, 4, rng);
    CHECK(contains(a, b) ==
          contains(orthogonal_complement(b), orthogonal_complement(a)));
  }
}

TEST_CASE("hyperplanes of a subspace") {
  CHECK(hyperplanes_of(Subspace::coordinate(2, 3, 1)).size() == 1);
  CHECK(hyperplanes_of(Subspace::coordinate(2, 3, 1))[0] == Subspace::zero(2, 3));
  CHECK(hyperplanes_of(Subspace::coordinate(2, 3, 2)).size() == 3);
  CHECK(hyperplanes_of(Subspace::coordinate(3, 3, 2)).size() == 4);
  CHECK(code_of([] { hyperplanes_of(Subspace::zero(2, 3)); }) == Errc::DomainError);
  for (int q : {2, 3, 4}) {
    for (const Subspace& a : enumerate_grassmannian(Field::get(q), 4, 3)) {
      const auto hs = hyperplanes_of(a);
      CHECK(BigInt(hs.size()) == q_int_exact(q, 3));
      std::set<Subspace> distinct(hs.begin(), hs.end());
      CHECK(distinct.size() == hs.size());
      for (const Subspace& h : hs) {
        CHECK(h.dim() == 2);
        CHECK(contains(a, h));
      }
    }
  }
}

TEST_CASE("linear maps") {
  Rng rng(kPropertySeed + 4);
  for (int i = 0; i < 100; ++i) {
    const int q = i % 2 ? 2 : 7;
    const auto m = qlattice::testing::random_invertible(q, 4, rng);
    const Subspace a = qlattice::testing::random_span(q, 4, rng);
    const Subspace b = intersect(a, qlattice::testing::random_span(q, 4, rng));
    const Subspace ma = apply_linear_map(a, m);
    CHECK(ma.dim() == a.dim());
    CHECK(contains(ma, apply_linear_map(b, m)));
  }
  CHECK(code_of([] {
          std::vector<Elem> zero(9, 0);
          apply_linear_map(Subspace::whole(2, 3), zero);
        }) == Errc::DomainError);
  CHECK(code_of([] {
          std::vector<Elem> bad(4, 0);
          apply_linear_map(Subspace::whole(2, 3), bad);
        }) == Errc::DimensionMismatch);
}

TEST_CASE("rank") {
  CHECK(rank(Field::get(2), 3, {1, 1, 0, 0, 1, 1, 1, 0, 1}) == 2);
  CHECK(rank(Field::get(3), 3, {1, 1, 0, 0, 1, 1, 1, 0, 1}) == 3);
  CHECK(rank(Field::get(5), 2, {}) == 0);
}

TEST_CASE("row text") {
  CHECK(format_row(Vector{1, 0, 2}) == "102");
  CHECK(parse_row("102", 3) == Vector{1, 0, 2});
  CHECK(format_row(Vector{10, 24}) == "ao");
  CHECK(parse_row("ao", 25) == Vector{10, 24});
  CHECK(code_of([] { parse_row("13", 3); }) == Errc::ParseError);
  CHECK(code_of([] { parse_row("1 0", 2); }) == Errc::ParseError);
  for (int c = 0; c < 27; ++c) CHECK(digit_code(code_digit(static_cast<Elem>(c)), 27) == c);
}

TEST_CASE("keys order and hash") {
  const auto lines = enumerate_grassmannian(Field::get(3), 3, 1);
  std::set<std::string> keys;
  for (const Subspace& s : lines) keys.insert(s.key());
  CHECK(keys.size() == lines.size());
  CHECK(std::hash<Subspace>{}(lines[0]) == std::hash<Subspace>{}(lines[0]));
  // Keys include the ambient space.
  CHECK(Subspace::zero(2, 3).key() != Subspace::zero(2, 4).key());
  CHECK(Subspace::zero(2, 3).key() != Subspace::zero(3, 3).key());
  CHECK(Subspace().dim() == 0);
}
