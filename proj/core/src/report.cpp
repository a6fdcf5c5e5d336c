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

#include "qlattice/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace qlattice {
namespace {

using ojson = nlohmann::ordered_json;

ojson number_json(const Number& v) {
  if (v.is_exact()) return to_string(v.exact());
  return v.as_double();
}

ojson param_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return ojson(x); }, v);
}

ojson report_json(const CheckReport& r, bool include_timing) {
  ojson j;
  j["name"] = r.name;
  ojson params = ojson::object();
  for (const auto& [k, v] : r.parameters) params[k] = param_json(v);
  j["parameters"] = params;
  j["outcome"] = outcome_name(r.outcome);
  j["bound"] = number_json(r.bound);
  j["actual"] = number_json(r.actual);
  j["slack"] = number_json(r.slack);
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["equalities"] = r.equalities;
  j["skipped"] = r.skipped;
  j["reported"] = r.reported;
  ojson wit = ojson::array();
  for (const auto& w : r.witnesses) wit.push_back(ojson::parse(w));
  j["witnesses"] = wit;
  if (!r.note.empty()) j["note"] = r.note;
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace

const char* outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Reported: return "REPORTED";
    case Outcome::Skipped: return "SKIPPED";
  }
  return "FAIL";
}

double Number::as_double() const {
  if (is_exact()) return to_double(exact());
  return std::get<double>(value_);
}

std::string Number::str() const {
  if (is_exact()) return to_string(exact());
  return ojson(std::get<double>(value_)).dump();
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(Rational(a.exact() - b.exact()));
  return Number(a.as_double() - b.as_double());
}

bool operator<(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.as_double() < b.as_double();
}

CheckReport& CheckReport::param(std::string key, ParamValue value) {
  parameters.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string CheckReport::to_json(bool include_timing) const {
  return report_json(*this, include_timing).dump(2);
}

std::string CheckReport::sort_key() const {
  ojson params = ojson::object();
  for (const auto& [k, v] : parameters) params[k] = param_json(v);
  return name + '\x1f' + params.dump();
}

CheckAccumulator::CheckAccumulator(std::string name, std::size_t witness_cap)
    : witness_cap_(witness_cap) {
  agg_.name = std::move(name);
  agg_.cases = 0;
}

CheckAccumulator& CheckAccumulator::param(std::string key, ParamValue value) {
  agg_.param(std::move(key), std::move(value));
  return *this;
}

void CheckAccumulator::add(const CheckReport& one) {
  ++seen_;
  agg_.elapsed_seconds += one.elapsed_seconds;
  agg_.equalities += one.equalities;
  switch (one.outcome) {
    case Outcome::Fail: ++agg_.failures; break;
    case Outcome::Reported: ++agg_.reported; break;
    case Outcome::Skipped: ++agg_.skipped; break;
    case Outcome::Pass: break;
  }
  for (const auto& w : one.witnesses) {
    if (agg_.witnesses.size() >= witness_cap_) break;
    agg_.witnesses.push_back(w);
  }
  if (one.outcome == Outcome::Skipped) return;
  if (!have_tightest_ || one.slack < agg_.slack) {
    agg_.bound = one.bound;
    agg_.actual = one.actual;
    agg_.slack = one.slack;
    if (!one.note.empty()) agg_.note = one.note;
    have_tightest_ = true;
  }
}

CheckReport CheckAccumulator::finish() const {
  CheckReport out = agg_;
  out.cases = seen_;
  if (out.failures > 0)
    out.outcome = Outcome::Fail;
  else if (out.reported > 0)
    out.outcome = Outcome::Reported;
  else if (out.skipped == seen_)
    out.outcome = Outcome::Skipped;
  else
    out.outcome = Outcome::Pass;
  return out;
}

bool SuiteReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckReport& r) {
    return r.outcome == Outcome::Fail;
  });
}

std::uint64_t SuiteReport::count(Outcome o) const noexcept {
  return static_cast<std::uint64_t>(
      std::count_if(checks.begin(), checks.end(),
                    [o](const CheckReport& r) { return r.outcome == o; }));
}

void SuiteReport::normalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     return a.sort_key() < b.sort_key();
                   });
}

std::string SuiteReport::to_json(bool include_timing) const {
  ojson j;
  j["seed"] = seed;
  j["pass"] = passed();
  ojson counts;
  for (Outcome o :
       {Outcome::Pass, Outcome::Fail, Outcome::Reported, Outcome::Skipped})
    counts[outcome_name(o)] = count(o);
  j["counts"] = counts;
  ojson arr = ojson::array();
  for (const auto& r : checks) arr.push_back(report_json(r, include_timing));
  j["checks"] = arr;
  return j.dump(2);
}

}  // namespace qlattice
