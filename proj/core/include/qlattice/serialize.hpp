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

// JSON text formats. A subspace is {"q","n","k","rows":[...]} where each row
// is a string of n digits (0-9 then a-z) in canonical order. A family is
// {"q","n","k","members":[[rows...], ...]} with members in key order; an
// ideal is {"q","n","levels":[family, ...]} for k = 0..n. Output is
// byte-stable for equal inputs.

#ifndef QLATTICE_SERIALIZE_HPP
#define QLATTICE_SERIALIZE_HPP

#include <string>
#include <vector>

#include "qlattice/family.hpp"

namespace qlattice {

std::string subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const std::string& text);

/// `indent` < 0 gives single-line output.
std::string family_to_json(const SubspaceFamily& s, int indent = -1);
/// Rows need not be canonical but must span a k-space; throws
/// Error(ParseError) or Error(DimensionMismatch).
SubspaceFamily family_from_json(const std::string& text);

std::string ideal_to_json(const Ideal& ideal, int indent = -1);
/// Throws Error(NotDownwardClosed) for levels that are not an ideal.
Ideal ideal_from_json(const std::string& text);

struct GeneratorSpec {
  int q = 0;
  int n = 0;
  std::vector<Subspace> generators;
};
/// {"q","n","generators":[[rows...], ...]}; generators may mix dimensions.
GeneratorSpec generators_from_json(const std::string& text);

std::string profile_to_json(int q, int n, const ThresholdProfile& profile,
                            int indent = 2);
/// Columns k,numerator,denominator with a header line.
std::string profile_to_csv(const ThresholdProfile& profile);

}  // namespace qlattice

#endif  // QLATTICE_SERIALIZE_HPP
