// Copyright 2026 The qwteleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwteleport/procedure_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qwt {

namespace {

using nlohmann::json;

Complex parse_complex(const json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
    throw ConfigError(field, "expected a [re, im] pair of numbers");
  return {node[0].get<double>(), node[1].get<double>()};
}

Vec2 parse_vec2(const json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2)
    throw ConfigError(field, "expected 2 complex entries");
  Vec2 v;
  for (int i = 0; i < 2; ++i)
    v[i] = parse_complex(node[static_cast<std::size_t>(i)],
                         field + "[" + std::to_string(i) + "]");
  return v;
}

Mat2 parse_mat2(const json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2)
    throw ConfigError(field, "expected a 2x2 matrix (2 rows)");
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    const json& row = node[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 2)
      throw ConfigError(field + "[" + std::to_string(r) + "]", "expected 2 complex entries");
    for (int c = 0; c < 2; ++c)
      m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                              field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Mat3 parse_mat3(const json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 3)
    throw ConfigError(field, "expected a 3x3 matrix (3 rows)");
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    const json& row = node[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 3)
      throw ConfigError(field + "[" + std::to_string(r) + "]", "expected 3 complex entries");
    for (int c = 0; c < 3; ++c)
      m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                              field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

const json& require_key(const json& root, const std::string& key) {
  const auto it = root.find(key);
  if (it == root.end()) throw ConfigError(key, "missing required key");
  return *it;
}

json dump_complex(const Complex& z) { return json::array({z.real(), z.imag()}); }

json dump_vec2(const Vec2& v) { return json::array({dump_complex(v[0]), dump_complex(v[1])}); }

json dump_mat2(const Mat2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r)
    rows.push_back(json::array({dump_complex(m(r, 0)), dump_complex(m(r, 1))}));
  return rows;
}

json dump_mat3(const Mat3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(json::array({dump_complex(m(r, 0)), dump_complex(m(r, 1)),
                                dump_complex(m(r, 2))}));
  return rows;
}

}  // namespace

ProcedureConfig parse_procedure_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("json", e.what());
  }
  if (!root.is_object()) throw ConfigError("json", "top level must be an object");

  ProcedureConfig config;
  config.procedure.psi = parse_vec2(require_key(root, "psi"), "psi");
  config.procedure.c1 = parse_mat2(require_key(root, "c1"), "c1");
  config.procedure.c2 = parse_mat2(require_key(root, "c2"), "c2");
  config.procedure.h1 = parse_mat2(require_key(root, "h1"), "h1");
  config.procedure.h2_tilde = parse_mat3(require_key(root, "h2_tilde"), "h2_tilde");
  if (const auto it = root.find("phi"); it != root.end()) {
    config.phi = parse_vec2(*it, "phi");
    if (!is_finite(*config.phi) || std::abs(norm(*config.phi) - 1.0) > 1e-10)
      throw ConfigError("phi", "target state must be unit norm");
  }
  if (const auto it = root.find("comment"); it != root.end()) {
    if (!it->is_string()) throw ConfigError("comment", "expected a string");
    config.comment = it->get<std::string>();
  }

  if (const auto violation = procedure_invariant_violation(config.procedure)) {
    const std::string msg = *violation;
    const std::size_t colon = msg.find(':');
    throw ConfigError(msg.substr(0, colon), msg.substr(colon + 2));
  }
  return config;
}

ProcedureConfig load_procedure_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("file", "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_procedure_config(buffer.str());
}

std::string serialize_procedure_config(const ProcedureConfig& config) {
  json root;
  root["psi"] = dump_vec2(config.procedure.psi);
  root["c1"] = dump_mat2(config.procedure.c1);
  root["c2"] = dump_mat2(config.procedure.c2);
  root["h1"] = dump_mat2(config.procedure.h1);
  root["h2_tilde"] = dump_mat3(config.procedure.h2_tilde);
  if (config.phi) root["phi"] = dump_vec2(*config.phi);
  if (!config.comment.empty()) root["comment"] = config.comment;
  return root.dump(2) + "\n";
}

}  // namespace qwt
