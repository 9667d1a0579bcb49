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

#ifndef QWTELEPORT_PROCEDURE_IO_HPP
#define QWTELEPORT_PROCEDURE_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "qwteleport/teleport.hpp"

namespace qwt {

// Config file format: a JSON object with keys `psi` (2 x [re, im]), `c1`,
// `c2`, `h1` (2 x 2 x [re, im], row-major, basis order R then L), `h2_tilde`
// (3 x 3 x [re, im], rows/columns in basis order 2, 0, -2), an optional
// `phi` target (2 x [re, im]) and an optional free-text `comment`. Complex
// numbers are always two-element arrays.

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ProcedureConfig {
  Procedure procedure;
  std::optional<Vec2> phi;
  std::string comment;
};

/// Parses and validates (unitarity at 1e-10, unit psi/phi). Throws
/// ConfigError naming the offending field.
ProcedureConfig parse_procedure_config(const std::string& json_text);

/// Reads the file then parses. Throws ConfigError ("file") when unreadable.
ProcedureConfig load_procedure_config(const std::string& path);

/// Inverse of parse: emits the same schema; parsing the result reproduces
/// the config entrywise.
std::string serialize_procedure_config(const ProcedureConfig& config);

}  // namespace qwt

#endif  // QWTELEPORT_PROCEDURE_IO_HPP
