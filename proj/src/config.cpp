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

#include "config.hpp"

#include "error.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

namespace sondenet {

namespace {

struct Field {
    const char* key;
    std::function<void(RunConfig&, const std::string&, int)> set;
    std::function<std::string(const RunConfig&)> get;
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v, int line) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(key, line, "key '" + key + "': '" + v + "' is not a number");
    }
    return out;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& v, int line) {
    Int out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(key, line, "key '" + key + "': '" + v + "' is not an integer");
    }
    return out;
}

template <class Parse>
auto parse_enum(const std::string& key, const std::string& v, int line, Parse parse) {
    try {
        return parse(v);
    } catch (const InvalidParams& e) {
        throw ConfigError(key, line, "key '" + key + "': " + e.what());
    }
}

#define SN_DOUBLE(name)                                                                         \
    Field {                                                                                     \
        #name,                                                                                  \
            [](RunConfig& c, const std::string& v, int line) {                                  \
                c.params.name = to_double(#name, v, line);                                      \
            },                                                                                  \
            [](const RunConfig& c) { return format_double(c.params.name); }                     \
    }

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        SN_DOUBLE(lambda_n),
        SN_DOUBLE(alpha),
        SN_DOUBLE(epsilon),
        SN_DOUBLE(mu),
        SN_DOUBLE(p_t_dbm),
        SN_DOUBLE(g_t_db),
        SN_DOUBLE(g_r_db),
        SN_DOUBLE(sigma2_dbm),
        SN_DOUBLE(f_ghz),
        SN_DOUBLE(rain_rate_mm_h),
        SN_DOUBLE(r_corr),
        SN_DOUBLE(r_max_km),
        SN_DOUBLE(h_min_km),
        SN_DOUBLE(h_max_km),
        SN_DOUBLE(case1_k_s),
        SN_DOUBLE(case1_lambda_s),
        SN_DOUBLE(case2_k_s),
        SN_DOUBLE(case2_lambda_s),
        SN_DOUBLE(p1),
        SN_DOUBLE(p2),
        {"sphere_radius_km",
         [](RunConfig& c, const std::string& v, int line) {
             c.sphere_radius_km = to_double("sphere_radius_km", v, line);
         },
         [](const RunConfig& c) { return format_double(c.sphere_radius_km); }},
        {"quad_abs_tol",
         [](RunConfig& c, const std::string& v, int line) {
             c.quad.abs_tol = to_double("quad_abs_tol", v, line);
         },
         [](const RunConfig& c) { return format_double(c.quad.abs_tol); }},
        {"quad_rel_tol",
         [](RunConfig& c, const std::string& v, int line) {
             c.quad.rel_tol = to_double("quad_rel_tol", v, line);
         },
         [](const RunConfig& c) { return format_double(c.quad.rel_tol); }},
        {"quad_max_subdivisions",
         [](RunConfig& c, const std::string& v, int line) {
             c.quad.max_subdivisions = to_integer<int>("quad_max_subdivisions", v, line);
         },
         [](const RunConfig& c) { return std::to_string(c.quad.max_subdivisions); }},
        {"n_trials",
         [](RunConfig& c, const std::string& v, int line) {
             c.mc.n_trials = to_integer<long long>("n_trials", v, line);
         },
         [](const RunConfig& c) { return std::to_string(c.mc.n_trials); }},
        {"seed",
         [](RunConfig& c, const std::string& v, int line) {
             c.mc.seed = to_integer<std::uint64_t>("seed", v, line);
         },
         [](const RunConfig& c) { return std::to_string(c.mc.seed); }},
        {"mode",
         [](RunConfig& c, const std::string& v, int line) {
             c.mc.mode = parse_enum("mode", v, line, parse_attenuation_mode);
         },
         [](const RunConfig& c) { return std::string(attenuation_mode_name(c.mc.mode)); }},
        {"min_nodes_policy",
         [](RunConfig& c, const std::string& v, int line) {
             c.mc.min_nodes_policy = parse_enum("min_nodes_policy", v, line, parse_min_nodes_policy);
         },
         [](const RunConfig& c) {
             return std::string(min_nodes_policy_name(c.mc.min_nodes_policy));
         }},
        {"threads",
         [](RunConfig& c, const std::string& v, int line) {
             c.mc.threads = to_integer<int>("threads", v, line);
         },
         [](const RunConfig& c) { return std::to_string(c.mc.threads); }},
    };
    return table;
}

#undef SN_DOUBLE

const Field& field(const std::string& key, int line) {
    for (const auto& f : fields()) {
        if (key == f.key) return f;
    }
    throw ConfigError(key, line, "unknown key '" + key + "'" +
                                     (line > 0 ? " on line " + std::to_string(line) : ""));
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    field(key, 0).set(cfg, value, 0);
}

RunConfig parse_config(std::string_view text, const RunConfig& base) {
    RunConfig cfg = base;
    std::set<std::string> seen;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            const std::string key(line);
            throw ConfigError(key, line_no,
                              "line " + std::to_string(line_no) + ": expected key = value, got '" +
                                  key + "'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        const auto& f = field(key, line_no);
        if (!seen.insert(key).second) {
            throw ConfigError(key, line_no, "key '" + key + "' repeated on line " +
                                                std::to_string(line_no));
        }
        try {
            f.set(cfg, value, line_no);
        } catch (const ConfigError& e) {
            throw ConfigError(key, line_no,
                              std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path, const RunConfig& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", 0, "cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), base);
}

std::string emit_config(const RunConfig& cfg) {
    std::string out;
    for (const auto& f : fields()) {
        out += f.key;
        out += " = ";
        out += f.get(cfg);
        out += '\n';
    }
    return out;
}

}  // namespace sondenet
