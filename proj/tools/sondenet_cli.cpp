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

// Command-line front end. Talks to the library only through the C API.

#include "sondenet/sondenet.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(sn_status s) {
    switch (s) {
        case SN_OK: return kExitOk;
        case SN_ERR_CONFIG:
        case SN_ERR_INVALID_ARGUMENT:
        case SN_ERR_DOMAIN: return kExitConfig;
        case SN_ERR_CONVERGENCE: return kExitConvergence;
        default: return kExitFailure;
    }
}

void check(sn_status s, const std::string& context = {}) {
    if (s == SN_OK) return;
    std::string msg = context.empty() ? "" : context + ": ";
    msg += sn_last_error();
    if (s == SN_ERR_CONVERGENCE) {
        msg += " (best estimate " + std::to_string(sn_last_error_estimate()) + ")";
    }
    throw CliError{exit_code_for(s), msg};
}

struct Buffer {
    sn_buffer b{};
    ~Buffer() { sn_buffer_free(&b); }
    std::string str() const { return b.data ? std::string(b.data, b.size) : std::string(); }
};

using ParamsPtr = std::unique_ptr<sn_params, decltype(&sn_params_destroy)>;

ParamsPtr make_params() {
    sn_params* p = nullptr;
    check(sn_params_create(&p));
    return {p, &sn_params_destroy};
}

std::string number(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

// Options shared by every subcommand. Scalars become key=value overrides;
// lists drive sweep grids.
struct Options {
    std::string config;
    std::vector<std::string> cases;
    std::vector<double> ts_db, lambda_n, alpha, epsilon;
    std::optional<double> p1, rain_rate, sphere_radius;
    std::optional<std::string> atten_mode;
    std::optional<long long> trials;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::vector<std::string> methods;
    std::vector<std::string> sets;
    std::string out;
    std::string preset;
    int grid = 200;
    std::string table = "l";
};

void apply(sn_params* p, const std::string& flag, const std::string& key, const std::string& value) {
    check(sn_params_set(p, key.c_str(), value.c_str()), flag + " (" + key + ")");
}

// Config file first, then flags on top.
ParamsPtr build_params(const Options& o, bool scalar_grids) {
    auto params = make_params();
    sn_params* p = params.get();
    if (!o.config.empty()) check(sn_params_load_file(p, o.config.c_str()), "--config " + o.config);
    for (const auto& kv : o.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw CliError{kExitConfig, "--set: expected key=value, got '" + kv + "'"};
        apply(p, "--set", kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (o.p1) {
        apply(p, "--p1", "p1", number(*o.p1));
        apply(p, "--p1", "p2", number(1.0 - *o.p1));
    }
    if (o.rain_rate) apply(p, "--rain-rate", "rain_rate_mm_h", number(*o.rain_rate));
    if (o.sphere_radius) apply(p, "--sphere-radius", "sphere_radius_km", number(*o.sphere_radius));
    if (o.atten_mode) apply(p, "--atten-mode", "mode", *o.atten_mode);
    if (o.trials) apply(p, "--trials", "n_trials", std::to_string(*o.trials));
    if (o.seed) apply(p, "--seed", "seed", std::to_string(*o.seed));
    if (o.threads) apply(p, "--threads", "threads", std::to_string(*o.threads));
    if (scalar_grids) {
        const std::pair<const char*, const std::vector<double>*> scalars[] = {
            {"lambda_n", &o.lambda_n}, {"alpha", &o.alpha}, {"epsilon", &o.epsilon}};
        for (const auto& [key, values] : scalars) {
            if (values->size() > 1) {
                throw CliError{kExitConfig, std::string("--") + key + ": this subcommand takes one value"};
            }
            if (values->size() == 1) apply(p, std::string("--") + key, key, number(values->front()));
        }
    }
    check(sn_params_validate(p), "parameters");
    return params;
}

sn_method parse_method(const std::string& m) {
    if (m == "analytic") return SN_METHOD_ANALYTIC;
    if (m == "upper_bound") return SN_METHOD_UPPER_BOUND;
    if (m == "monte_carlo" || m == "mc") return SN_METHOD_MONTE_CARLO;
    throw CliError{kExitConfig, "--methods: unknown method '" + m + "' (analytic, upper_bound, monte_carlo)"};
}

sn_case parse_case(const std::string& name, const Options& o) {
    sn_case c{};
    c.p1 = o.p1.value_or(0.5);
    c.p2 = 1.0 - c.p1;
    if (name == "case1" || name == "1") c.kind = SN_CASE1;
    else if (name == "case2" || name == "2") c.kind = SN_CASE2;
    else if (name == "case3" || name == "3") c.kind = SN_CASE3;
    else if (name == "sphere" || name == "spherical") c.kind = SN_SPHERE;
    else throw CliError{kExitConfig, "--case: unknown case '" + name + "' (case1, case2, case3, sphere)"};
    return c;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliError{kExitFailure, "--out: cannot open '" + path + "' for writing"};
    f << text;
    if (!f) throw CliError{kExitFailure, "--out: write to '" + path + "' failed"};
}

// Lists backing an sn_sweep_spec; empty vectors leave the preset's list.
struct SpecStorage {
    std::vector<std::string> case_names;
    std::vector<const char*> cases;
    std::vector<double> ts, lambda, alpha, epsilon;
    std::vector<sn_method> methods;
    bool methods_given = false;
    sn_sweep_spec spec{};

    void bind(const std::string& preset) {
        spec = {};
        spec.preset = preset.empty() ? nullptr : preset.c_str();
        for (const auto& n : case_names) cases.push_back(n.c_str());
        if (!cases.empty()) {
            spec.cases = cases.data();
            spec.n_cases = cases.size();
        }
        auto set = [](const std::vector<double>& v, const double*& ptr, size_t& n) {
            if (!v.empty()) {
                ptr = v.data();
                n = v.size();
            }
        };
        set(ts, spec.ts_db, spec.n_ts);
        set(lambda, spec.lambda_n, spec.n_lambda);
        set(alpha, spec.alpha, spec.n_alpha);
        set(epsilon, spec.epsilon, spec.n_epsilon);
        if (methods_given) {
            static const sn_method none = SN_METHOD_ANALYTIC;
            spec.methods = methods.empty() ? &none : methods.data();
            spec.n_methods = methods.size();
        }
    }
};

SpecStorage spec_from(const Options& o, const CLI::App& sub) {
    SpecStorage s;
    s.case_names = o.cases;
    s.ts = o.ts_db;
    s.lambda = o.lambda_n;
    s.alpha = o.alpha;
    s.epsilon = o.epsilon;
    const auto* opt = sub.get_option_no_throw("--methods");
    s.methods_given = opt != nullptr && opt->count() > 0;
    for (const auto& m : o.methods) {
        if (!m.empty()) s.methods.push_back(parse_method(m));
    }
    return s;
}

void add_common(CLI::App& app, Options& o) {
    app.add_option("--config", o.config, "key = value config file")->envname("SONDENET_CONFIG");
    app.add_option("--case", o.cases, "case1, case2, case3 or sphere (comma list for sweeps)")
        ->delimiter(',');
    app.add_option("--ts-db", o.ts_db, "SINR threshold(s) in dB")->delimiter(',')->allow_extra_args(false);
    app.add_option("--lambda-n", o.lambda_n, "node density per km^3")->delimiter(',');
    app.add_option("--alpha", o.alpha, "path-loss exponent")->delimiter(',');
    app.add_option("--epsilon", o.epsilon, "power-control factor")->delimiter(',');
    app.add_option("--p1", o.p1, "Case 3 weight of Case 1 (p2 = 1 - p1)");
    app.add_option("--rain-rate", o.rain_rate, "rain rate in mm/h");
    app.add_option("--atten-mode", o.atten_mode, "paper-linear or db-exact");
    app.add_option("--trials", o.trials, "Monte Carlo trials");
    app.add_option("--seed", o.seed, "Monte Carlo master seed");
    app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
    app.add_option("--sphere-radius", o.sphere_radius, "spherical baseline radius in km");
    app.add_option("--set", o.sets, "extra key=value override (repeatable)");
    app.add_option("--out", o.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uplink coverage of a 3D radiosonde network: analytic and Monte Carlo"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sn_version());

    Options o;
    auto* cp = app.add_subcommand("cp", "coverage at one threshold");
    auto* sweep = app.add_subcommand("sweep", "coverage over a parameter grid");
    auto* compare = app.add_subcommand("compare", "Case 3 against the spherical baseline");
    auto* dist = app.add_subcommand("dist", "slant-distance and altitude density tables");
    auto* mc = app.add_subcommand("mc", "Monte Carlo coverage curve");
    auto* config = app.add_subcommand("config", "print the effective configuration");
    for (auto* sub : {cp, sweep, compare, dist, mc, config}) add_common(*sub, o);
    for (auto* sub : {cp, sweep, compare}) {
        sub->add_option("--methods", o.methods, "analytic, upper_bound, monte_carlo")->delimiter(',');
    }
    for (auto* sub : {sweep, compare}) {
        sub->add_option("--preset", o.preset, "fig-lambda, fig-alpha, fig-epsilon or fig-sphere");
    }
    dist->add_option("--grid", o.grid, "grid points")->check(CLI::Range(2, 100000));
    dist->add_option("--table", o.table, "l (slant distance) or h (altitude)")
        ->check(CLI::IsMember({"l", "h"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (config->parsed()) {
            auto params = build_params(o, true);
            Buffer b;
            check(sn_params_emit(params.get(), &b.b));
            write_out(o.out, b.str());
        } else if (cp->parsed() || mc->parsed()) {
            auto* sub = cp->parsed() ? cp : mc;
            if (o.cases.size() > 1) throw CliError{kExitConfig, "--case: this subcommand takes one case"};
            if (cp->parsed() && o.ts_db.size() > 1) {
                throw CliError{kExitConfig, "--ts-db: cp takes one threshold (use sweep or mc for grids)"};
            }
            if (cp->parsed() && o.ts_db.empty()) o.ts_db = {-40.0};
            auto params = build_params(o, true);
            auto s = spec_from(o, *sub);
            s.lambda.clear();
            s.alpha.clear();
            s.epsilon.clear();
            // The sweep grid takes its single variant from the resolved params.
            Buffer v;
            for (const auto& [key, list] : {std::pair{"lambda_n", &s.lambda}, {"alpha", &s.alpha},
                                            {"epsilon", &s.epsilon}}) {
                sn_buffer_free(&v.b);
                check(sn_params_get(params.get(), key, &v.b));
                list->push_back(std::stod(v.str()));
            }
            if (s.case_names.empty()) s.case_names = {"case3"};
            if (mc->parsed()) {
                s.methods = {SN_METHOD_MONTE_CARLO};
                s.methods_given = true;
            }
            s.bind("");
            Buffer csv;
            check(sn_sweep(params.get(), &s.spec, &csv.b));
            write_out(o.out, csv.str());
        } else if (sweep->parsed()) {
            auto params = build_params(o, false);
            auto s = spec_from(o, *sweep);
            s.bind(o.preset);
            Buffer csv;
            check(sn_sweep(params.get(), &s.spec, &csv.b));
            write_out(o.out, csv.str());
        } else if (compare->parsed()) {
            auto params = build_params(o, false);
            auto s = spec_from(o, *compare);
            s.case_names.clear();
            s.bind(o.preset);
            Buffer csv;
            double fraction = 0.0;
            check(sn_compare(params.get(), &s.spec, &csv.b, &fraction));
            write_out(o.out, csv.str());
            std::cerr << "case3 >= sphere at " << fraction * 100.0 << "% of grid points\n";
        } else if (dist->parsed()) {
            if (o.cases.size() > 1) throw CliError{kExitConfig, "--case: dist takes one case"};
            auto params = build_params(o, true);
            const sn_case c = parse_case(o.cases.empty() ? "case1" : o.cases.front(), o);
            Buffer l, h;
            check(sn_dist_tables(params.get(), c, o.grid, &l.b, &h.b));
            write_out(o.out, o.table == "l" ? l.str() : h.str());
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
