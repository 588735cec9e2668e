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

#include "spinsim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "spinsim/spin_ops.hpp"

namespace spinsim {

namespace {

struct Cursor {
  int line = 0;
  int col = 1;
};

double parse_double_at(const std::string& tok, const Cursor& at) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ConfigError(at.line, at.col, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ConfigError(at.line, at.col, "expected a number, got '" + tok + "'");
  }
  return v;
}

long parse_int_at(const std::string& tok, const Cursor& at) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ConfigError(at.line, at.col, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ConfigError(at.line, at.col, "expected an integer, got '" + tok + "'");
  }
  return v;
}

}  // namespace

Config parse_config(std::istream& in) {
  std::string section;
  std::string line;
  int line_no = 0;
  int system_line = 0;

  int n = -1;
  double reference_mhz = 0.0;
  std::vector<double> offsets;
  std::vector<std::string> labels;
  struct JEntry { int k, l; double v; Cursor at; };
  std::vector<JEntry> j_entries;
  ConfigDefaults defaults;

  bool have_offsets = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    // locate first non-space for column reporting
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    Cursor key_at{line_no, static_cast<int>(first) + 1};

    if (line[first] == '[') {
      size_t close = line.find(']', first);
      if (close == std::string::npos) {
        throw ConfigError(line_no, key_at.col, "unterminated section header");
      }
      section = line.substr(first + 1, close - first - 1);
      if (section != "system" && section != "defaults") {
        throw ConfigError(line_no, key_at.col,
                          "unknown section [" + section + "]");
      }
      if (section == "system") system_line = line_no;
      continue;
    }

    size_t eq = line.find('=', first);
    if (eq == std::string::npos) {
      throw ConfigError(line_no, key_at.col, "expected 'key = value'");
    }
    std::string key = line.substr(first, eq - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) {
      key.pop_back();
    }
    std::string value = line.substr(eq + 1);
    size_t vfirst = value.find_first_not_of(" \t");
    Cursor val_at{line_no, static_cast<int>(eq + 2 +
                                            (vfirst == std::string::npos
                                                 ? 0
                                                 : vfirst))};
    std::vector<std::string> toks;
    {
      std::istringstream is(value);
      std::string t;
      while (is >> t) toks.push_back(t);
    }
    if (toks.empty()) {
      throw ConfigError(line_no, val_at.col, "missing value for '" + key + "'");
    }

    if (section == "system") {
      if (key == "n") {
        n = static_cast<int>(parse_int_at(toks[0], val_at));
        if (n < 1 || n > kMaxSpins) {
          throw ConfigError(line_no, val_at.col, "n must be in [1, 10]");
        }
      } else if (key == "reference_mhz") {
        reference_mhz = parse_double_at(toks[0], val_at);
      } else if (key == "labels") {
        labels = toks;
      } else if (key == "offsets_hz") {
        offsets.clear();
        for (const std::string& t : toks) {
          offsets.push_back(parse_double_at(t, val_at));
        }
        have_offsets = true;
      } else if (key == "j_hz") {
        if (toks.size() != 3) {
          throw ConfigError(line_no, val_at.col,
                            "j_hz takes: <spin_k> <spin_l> <value>");
        }
        JEntry e;
        e.k = static_cast<int>(parse_int_at(toks[0], val_at));
        e.l = static_cast<int>(parse_int_at(toks[1], val_at));
        e.v = parse_double_at(toks[2], val_at);
        e.at = val_at;
        j_entries.push_back(e);
      } else {
        throw ConfigError(line_no, key_at.col,
                          "unknown key '" + key + "' in [system]");
      }
    } else if (section == "defaults") {
      if (key == "epsilon") {
        defaults.epsilon = parse_double_at(toks[0], val_at);
      } else if (key == "points") {
        defaults.points = static_cast<int>(parse_int_at(toks[0], val_at));
      } else if (key == "line_broadening_hz") {
        defaults.line_broadening_hz = parse_double_at(toks[0], val_at);
      } else if (key == "tolerance") {
        defaults.tolerance = parse_double_at(toks[0], val_at);
      } else {
        throw ConfigError(line_no, key_at.col,
                          "unknown key '" + key + "' in [defaults]");
      }
    } else {
      throw ConfigError(line_no, key_at.col,
                        "key outside of a [section]");
    }
  }

  if (n < 0) throw ConfigError(system_line, 1, "missing 'n' in [system]");
  if (!have_offsets) {
    throw ConfigError(system_line, 1, "missing 'offsets_hz' in [system]");
  }
  if (static_cast<int>(offsets.size()) != n) {
    throw ConfigError(system_line, 1,
                      "offsets_hz must list exactly n values");
  }
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (const JEntry& e : j_entries) {
    if (e.k < 1 || e.k > n || e.l < 1 || e.l > n || e.k == e.l) {
      throw ConfigError(e.at.line, e.at.col, "j_hz spin indices invalid");
    }
    j(e.k - 1, e.l - 1) = e.v;
    j(e.l - 1, e.k - 1) = e.v;
  }
  try {
    SpinSystem sys(n, offsets, j, labels, reference_mhz);
    return Config{std::move(sys), defaults};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(system_line, 1, e.what());
  }
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace spinsim
