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

#ifndef QLATTICE_CLI_CLI_HPP
#define QLATTICE_CLI_CLI_HPP

#include <ostream>

namespace qlattice::cli {

/// Runs the command line `argv[1..]` and returns the exit status: 0 on
/// success, 1 when a verification reports FAIL, 2 on usage or domain errors.
/// Results go to `out` (or the --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlattice::cli

#endif  // QLATTICE_CLI_CLI_HPP
