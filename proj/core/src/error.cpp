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

#include "qlattice/error.hpp"

namespace qlattice {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CodeOutOfRange: return "CodeOutOfRange";
    case Errc::DomainError: return "DomainError";
    case Errc::NoSolution: return "NoSolution";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::MembershipError: return "MembershipError";
    case Errc::NotDownwardClosed: return "NotDownwardClosed";
    case Errc::TrivialIdeal: return "TrivialIdeal";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NumericFailure: return "NumericFailure";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ConfigError: return "ConfigError";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qlattice
