// Copyright 2026 The sondenet Authors
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

#include "analytic_cp.hpp"
#include "monte_carlo.hpp"
#include "params.hpp"

#include <string>
#include <string_view>

namespace sondenet {

/// Everything a run reads from a config file. Keys are the field names of
/// NetworkParams and McConfig, plus sphere_radius_km and
/// quad_abs_tol, quad_rel_tol, quad_max_subdivisions.
struct RunConfig {
    NetworkParams params;
    McConfig mc;
    /// Spherical-baseline radius; <= 0 selects sqrt(r_max^2 + h_max^2).
    double sphere_radius_km = 0.0;
    /// Outermost tolerances of the analytic CP integrals.
    QuadratureControl quad = cp_default_control();
};

/// Parses `key = value` lines on top of `base`. '#' starts a comment; blank
/// lines are skipped. Unknown keys, repeated keys and unparsable values throw
/// ConfigError with the key and 1-based line. Cross-field invariants are not
/// checked here.
RunConfig parse_config(std::string_view text, const RunConfig& base = {});

RunConfig load_config(const std::string& path, const RunConfig& base = {});

/// One line per key, shortest round-trip number formatting.
std::string emit_config(const RunConfig& cfg);

/// Applies a single key=value override (line 0) as a flag would.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Shortest decimal text that parses back to exactly v.
std::string format_double(double v);

}  // namespace sondenet
