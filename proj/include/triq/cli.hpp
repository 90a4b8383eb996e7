// Copyright 2026 the triq authors
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

#ifndef TRIQ_CLI_HPP
#define TRIQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace triq {

/// Dispatches one command line (without the program name) and writes all
/// output to the given streams. Exit codes: 0 success, 1 crosscheck
/// disagreements, 2 usage or input errors, 3 decide/falsify mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triq

#endif  // TRIQ_CLI_HPP
