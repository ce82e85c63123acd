// SPDX-License-Identifier: Apache-2.0
//
// ristwin - ray-traced digital twin for 1-bit RIS phase configuration
// Copyright (C) 2026 The ristwin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// The `ristwin` command line as a library, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace ristwin::cli
{

/// Process exit codes.
enum ExitCode : int
{
    exit_ok = 0,
    exit_failure = 1, ///< validation, guard, argument or parse failure
    exit_io = 2,      ///< missing input or unwritable output
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"optimize", "--scene", "office.json", "--method", "dt-cir"}.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "ristwin <version>"
std::string tool_version();

} // namespace ristwin::cli
