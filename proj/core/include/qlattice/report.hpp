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

#ifndef QLATTICE_REPORT_HPP
#define QLATTICE_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qlattice/qnum.hpp"

namespace qlattice {

/// PASS / FAIL are asserted outcomes. REPORTED marks an evaluated claim that
/// is surfaced but never fails a run; SKIPPED marks an instance outside the
/// checked statement's hypotheses.
enum class Outcome { Pass, Fail, Reported, Skipped };
const char* outcome_name(Outcome o) noexcept;

/// A bound or measured value: exact rational, or real when it came from an
/// interpolated (irrational) expression.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational r) : value_(std::move(r)) {}  // NOLINT: implicit by intent
  Number(double d) : value_(d) {}               // NOLINT

  bool is_exact() const noexcept {
    return std::holds_alternative<Rational>(value_);
  }
  const Rational& exact() const { return std::get<Rational>(value_); }
  double as_double() const;
  /// "p/q" for exact values, shortest round-trip decimal for reals.
  std::string str() const;

  friend Number operator-(const Number& a, const Number& b);
  friend bool operator<(const Number& a, const Number& b);

 private:
  std::variant<Rational, double> value_;
};

using ParamValue = std::variant<std::int64_t, double, std::string>;

/// Outcome of one theorem check, or of a check aggregated over a corpus (then
/// bound/actual/slack describe the tightest instance seen).
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, ParamValue>> parameters;
  Number bound;
  Number actual;
  Number slack;
  Outcome outcome = Outcome::Pass;
  std::uint64_t cases = 1;
  std::uint64_t failures = 0;
  std::uint64_t equalities = 0;
  std::uint64_t skipped = 0;
  std::uint64_t reported = 0;
  /// Serialized families (JSON text) for failures, equalities or
  /// counterexamples.
  std::vector<std::string> witnesses;
  std::string note;
  double elapsed_seconds = 0;

  CheckReport& param(std::string key, ParamValue value);
  bool passed() const noexcept { return outcome != Outcome::Fail; }
  /// Stable JSON text; timing is left out unless requested so that reports
  /// are byte-identical across runs.
  std::string to_json(bool include_timing = false) const;
  /// Sort key: name, then serialized parameters.
  std::string sort_key() const;
};

/// Folds single-instance reports into one aggregated report per check/cell.
class CheckAccumulator {
 public:
  CheckAccumulator(std::string name, std::size_t witness_cap);
  CheckAccumulator& param(std::string key, ParamValue value);
  void add(const CheckReport& one);
  /// An aggregate over zero cases reports SKIPPED.
  CheckReport finish() const;

 private:
  CheckReport agg_;
  std::size_t witness_cap_;
  bool have_tightest_ = false;
  std::uint64_t seen_ = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;

  bool passed() const noexcept;
  std::uint64_t count(Outcome o) const noexcept;
  /// Sorts checks into their canonical order.
  void normalize();
  std::string to_json(bool include_timing = false) const;
};

}  // namespace qlattice

#endif  // QLATTICE_REPORT_HPP
