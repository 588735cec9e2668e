// Copyright 2026 The spinsim authors
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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spinsim/spin_system.hpp"

namespace spinsim {

struct ConfigError : std::runtime_error {
  int line = 0;
  int col = 0;
  ConfigError(int line_no, int col_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ", col " +
                           std::to_string(col_no) + ": " + msg),
        line(line_no), col(col_no) {}
};

struct ConfigDefaults {
  double epsilon = 1.0;
  int points = 8192;
  double line_broadening_hz = 0.2;
  double tolerance = 1e-10;
};

/// Parsed spin-system configuration. The file format is a sectioned key-value
/// text format; see README for the schema. All SpinSystem invariants are
/// enforced at load time, with line/column diagnostics on failure.
struct Config {
  SpinSystem system;
  ConfigDefaults defaults;
};

Config parse_config(std::istream& in);
Config parse_config_file(const std::string& path);

}  // namespace spinsim
