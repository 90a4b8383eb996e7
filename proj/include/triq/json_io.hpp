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

#ifndef TRIQ_JSON_IO_HPP
#define TRIQ_JSON_IO_HPP

#include <string>

#include "triq/characterize.hpp"
#include "triq/oracle.hpp"

namespace triq {

/// One-line JSON form of a verdict. Infinite margins are encoded as the
/// strings "+inf" / "-inf"; everything else keeps full double precision.
std::string verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const std::string& text);

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);

}  // namespace triq

#endif  // TRIQ_JSON_IO_HPP
