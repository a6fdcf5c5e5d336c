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

#include <set>

#include "doctest.h"
#include "json.hpp"
#include "qlattice/error.hpp"
#include "qlattice/verify.hpp"

using namespace qlattice;

namespace {

Errc config_error(const SuiteConfig& cfg) {
  try {
    run_suite(cfg);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qlattice::Error");
  return Errc::ParseError;
}

const CheckReport* find(const SuiteReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("invalid configurations") {
  CHECK(config_error(SuiteConfig{}) == Errc::ConfigError);
  SuiteConfig too_big;
  too_big.exhaustive = {{2, 4, 2}};  // 35 members, beyond the exhaustive cap
  CHECK(config_error(too_big) == Errc::ConfigError);
  SuiteConfig bad_k;
  bad_k.sampled = {{2, 3, 4}};
  CHECK(config_error(bad_k) == Errc::ConfigError);
}

TEST_CASE("a single space") {
  const SuiteReport r = run_suite(SuiteConfig::for_space(2, 3, 42));
  CHECK(r.passed());
  CHECK(r.seed == 42);
  CHECK(r.count(Outcome::Reported) >= 1);
  const CheckReport* upper = find(r, "flag_near_tight_upper");
  REQUIRE(upper != nullptr);
  CHECK(upper->outcome == Outcome::Reported);
  for (const char* name : {"thm_density", "qkk", "corollary", "self_duality",
                           "eml_sandwich", "fiber_identity", "cauchy_schwarz",
                           "spectrum", "thm_main", "qbt", "dual_qbt",
                           "qbt_interpolation", "enumeration_count"})
    CHECK_MESSAGE(find(r, name) != nullptr, name);

  std::vector<std::string> keys;
  for (const auto& c : r.checks) keys.push_back(c.sort_key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("small spaces run cleanly") {
  for (auto [q, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
    const SuiteReport r = run_suite(SuiteConfig::for_space(q, n, 1));
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("reports are deterministic and seed dependent") {
  SuiteConfig cfg = SuiteConfig::for_space(2, 3, 7);
  cfg.sampled = {{2, 4, 2}};
  cfg.samples = 300;
  const std::string a = run_suite(cfg).to_json();
  const std::string b = run_suite(cfg).to_json();
  CHECK(a == b);
  cfg.seed = 8;
  CHECK(run_suite(cfg).to_json() != a);
  CHECK(nlohmann::json::parse(a)["checks"][0].contains("elapsed_seconds") == false);
}

TEST_CASE("default corpus has no failures") {
  const SuiteReport r = run_suite(SuiteConfig::defaults(42));
  CHECK(r.passed());
  CHECK(r.count(Outcome::Fail) == 0);
  CHECK(r.count(Outcome::Pass) > 100);
  std::set<std::string> names;
  for (const auto& c : r.checks) names.insert(c.name);
  for (const char* name : {"shadow_min", "gl_invariance", "dual_ideal",
                           "density_monotone", "thm_main_sharp_threshold",
                           "lemma_upper", "lemma_lower", "dual_qkk"})
    CHECK_MESSAGE(names.count(name) == 1, name);
}
