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

#include "triq/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace triq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json margin_to_json(double margin) {
  if (std::isinf(margin)) return margin > 0 ? "+inf" : "-inf";
  return margin;
}

double margin_from_json(const ordered_json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("verdict json: bad margin string '" + s + "'");
  }
  return j.get<double>();
}

Probe probe_from_name(const std::string& name) {
  for (Probe p : {Probe::collinear, Probe::basis, Probe::cancellation, Probe::lagrange,
                  Probe::random_search, Probe::grid})
    if (name == probe_name(p)) return p;
  throw std::invalid_argument("witness json: unknown probe '" + name + "'");
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["set"] = std::string(1, set_letter(v.set_id));
  j["p"] = v.p;
  j["mu"] = v.mu;
  j["n"] = v.mu.size();
  j["k_negative"] = v.k_negative;
  j["member"] = v.member;
  j["boundary"] = v.boundary;
  j["clause"] = v.clause;
  j["margin"] = margin_to_json(v.margin);
  return j.dump();
}

Verdict verdict_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  Verdict v;
  v.set_id = set_from_letter(j.at("set").get<std::string>().at(0));
  v.p = j.at("p").get<double>();
  v.mu = j.at("mu").get<std::vector<double>>();
  v.k_negative = j.at("k_negative").get<int>();
  v.member = j.at("member").get<bool>();
  v.boundary = j.at("boundary").get<bool>();
  v.clause = j.at("clause").get<std::string>();
  v.margin = margin_from_json(j.at("margin"));
  return v;
}

std::string witness_to_json(const Witness& w) {
  ordered_json j;
  j["space"] = w.space.to_string();
  j["probe"] = probe_name(w.probe);
  j["vectors"] = w.vectors;
  j["norms"] = w.norms;
  j["sum_norm"] = w.sum_norm;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["gap"] = w.gap;
  return j.dump();
}

Witness witness_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  Witness w;
  w.space = SpaceDescriptor::parse(j.at("space").get<std::string>());
  w.probe = probe_from_name(j.at("probe").get<std::string>());
  w.vectors = j.at("vectors").get<std::vector<Vector>>();
  w.norms = j.at("norms").get<std::vector<double>>();
  w.sum_norm = j.at("sum_norm").get<double>();
  w.lhs = j.at("lhs").get<double>();
  w.rhs = j.at("rhs").get<double>();
  w.gap = j.at("gap").get<double>();
  return w;
}

}  // namespace triq
