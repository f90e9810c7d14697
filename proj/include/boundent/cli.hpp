// Copyright 2026 The boundent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Subcommands: build, diagnose, simulate, noise-sweep,
// bell, upb-check. Global flags: --out PATH, --seed U64, --tol FLOAT.
//
// Every command prints its JSON report on `out`. --out names the primary
// artifact: the state file for build and simulate, the report for the others.
// Failures print "error: <invariant>: <detail>" on `err` and return nonzero.

#include <ostream>
#include <string>
#include <vector>

namespace boundent::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boundent::cli
