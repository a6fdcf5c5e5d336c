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

#include "qlattice/serialize.hpp"

#include "json.hpp"
#include "qlattice/error.hpp"

namespace qlattice {
namespace {

using ojson = nlohmann::ordered_json;

ojson rows_json(const Subspace& s) {
  ojson rows = ojson::array();
  for (int r = 0; r < s.dim(); ++r) rows.push_back(format_row(s.row(r)));
  return rows;
}

ojson family_json(const SubspaceFamily& s) {
  ojson j;
  j["q"] = s.q();
  j["n"] = s.n();
  j["k"] = s.k();
  ojson members = ojson::array();
  for (const Subspace& a : s) members.push_back(rows_json(a));
  j["members"] = members;
  return j;
}

ojson parse(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

int get_int(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw Error(Errc::ParseError, std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

Subspace parse_rows(const ojson& rows, int q, int n) {
  if (!rows.is_array()) throw Error(Errc::ParseError, "rows must be an array");
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    if (!r.is_string()) throw Error(Errc::ParseError, "row must be a string");
    vs.push_back(parse_row(r.get<std::string>(), q));
  }
  return canonicalize(Field::get(q), n, vs);
}

SubspaceFamily parse_family(const ojson& j) {
  const int q = get_int(j, "q");
  const int n = get_int(j, "n");
  const int k = get_int(j, "k");
  if (!j.contains("members") || !j["members"].is_array())
    throw Error(Errc::ParseError, "missing 'members' array");
  SubspaceFamily out(q, n, k);
  for (const auto& m : j["members"]) {
    Subspace s = parse_rows(m, q, n);
    if (s.dim() != k)
      throw Error(Errc::DimensionMismatch, "member rows do not span a " +
                                               std::to_string(k) + "-space");
    out.insert(s);
  }
  return out;
}

}  // namespace

std::string subspace_to_json(const Subspace& s) {
  ojson j;
  j["q"] = s.q();
  j["n"] = s.ambient_dim();
  j["k"] = s.dim();
  j["rows"] = rows_json(s);
  return j.dump();
}

Subspace subspace_from_json(const std::string& text) {
  const ojson j = parse(text);
  const int q = get_int(j, "q");
  const int n = get_int(j, "n");
  const int k = get_int(j, "k");
  if (!j.contains("rows")) throw Error(Errc::ParseError, "missing 'rows'");
  Subspace s = parse_rows(j["rows"], q, n);
  if (s.dim() != k)
    throw Error(Errc::DimensionMismatch, "rows do not span a " +
                                             std::to_string(k) + "-space");
  return s;
}

std::string family_to_json(const SubspaceFamily& s, int indent) {
  return family_json(s).dump(indent);
}

SubspaceFamily family_from_json(const std::string& text) {
  return parse_family(parse(text));
}

std::string ideal_to_json(const Ideal& ideal, int indent) {
  ojson j;
  j["q"] = ideal.q();
  j["n"] = ideal.n();
  ojson levels = ojson::array();
  for (const auto& l : ideal.levels()) levels.push_back(family_json(l));
  j["levels"] = levels;
  return j.dump(indent);
}

Ideal ideal_from_json(const std::string& text) {
  const ojson j = parse(text);
  const int q = get_int(j, "q");
  const int n = get_int(j, "n");
  if (!j.contains("levels") || !j["levels"].is_array())
    throw Error(Errc::ParseError, "missing 'levels' array");
  std::vector<SubspaceFamily> levels;
  for (const auto& l : j["levels"]) levels.push_back(parse_family(l));
  if (static_cast<int>(levels.size()) != n + 1)
    throw Error(Errc::DimensionMismatch, "ideal needs n+1 levels");
  for (const auto& l : levels)
    if (l.q() != q || l.n() != n)
      throw Error(Errc::AmbientMismatch, "level from another ambient space");
  return ideal_from_levels(std::move(levels));
}

GeneratorSpec generators_from_json(const std::string& text) {
  const ojson j = parse(text);
  GeneratorSpec out;
  out.q = get_int(j, "q");
  out.n = get_int(j, "n");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw Error(Errc::ParseError, "missing 'generators' array");
  for (const auto& g : j["generators"])
    out.generators.push_back(parse_rows(g, out.q, out.n));
  return out;
}

std::string profile_to_json(int q, int n, const ThresholdProfile& profile,
                            int indent) {
  ojson j;
  j["q"] = q;
  j["n"] = n;
  ojson dens = ojson::array();
  for (std::size_t k = 0; k < profile.densities.size(); ++k) {
    ojson d;
    d["k"] = k;
    d["numerator"] = to_string(BigInt(boost::multiprecision::numerator(profile.densities[k])));
    d["denominator"] =
        to_string(BigInt(boost::multiprecision::denominator(profile.densities[k])));
    dens.push_back(d);
  }
  j["densities"] = dens;
  j["t"] = profile.t;
  return j.dump(indent);
}

std::string profile_to_csv(const ThresholdProfile& profile) {
  std::string out = "k,numerator,denominator\n";
  for (std::size_t k = 0; k < profile.densities.size(); ++k) {
    out += std::to_string(k) + "," +
           to_string(BigInt(boost::multiprecision::numerator(profile.densities[k]))) +
           "," +
           to_string(BigInt(boost::multiprecision::denominator(profile.densities[k]))) +
           "\n";
  }
  return out;
}

}  // namespace qlattice
