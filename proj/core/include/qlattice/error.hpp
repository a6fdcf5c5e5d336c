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

#ifndef QLATTICE_ERROR_HPP
#define QLATTICE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlattice {

enum class Errc {
  UnsupportedOrder,
  DivisionByZero,
  CodeOutOfRange,
  DomainError,
  NoSolution,
  DimensionMismatch,
  AmbientMismatch,
  EmptyFamily,
  MembershipError,
  NotDownwardClosed,
  TrivialIdeal,
  TooLarge,
  NumericFailure,
  BudgetExceeded,
  ConfigError,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this exception; `code()` names
/// the failure kind and `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qlattice

#endif  // QLATTICE_ERROR_HPP
