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

#include "sondenet/sondenet.h"

#include "config.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "monte_carlo.hpp"
#include "propagation.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct sn_params {
    sondenet::RunConfig cfg;
};

namespace {

using namespace sondenet;

thread_local std::string g_error;
thread_local std::string g_error_key;
thread_local double g_error_estimate = 0.0;

sn_status fail(sn_status s, std::string msg, std::string key = {}, double estimate = 0.0) {
    g_error = std::move(msg);
    g_error_key = std::move(key);
    g_error_estimate = estimate;
    return s;
}

template <class F>
sn_status guarded(F&& f) {
    try {
        f();
        return SN_OK;
    } catch (const ConfigError& e) {
        return fail(SN_ERR_CONFIG, e.what(), e.key());
    } catch (const ConvergenceError& e) {
        return fail(SN_ERR_CONVERGENCE, e.what(), {}, e.estimate());
    } catch (const InvalidParams& e) {
        return fail(SN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const DomainError& e) {
        return fail(SN_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SN_ERR_NO_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(SN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SN_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* name) {
    if (!p) throw InvalidParams(std::string(name) + " must not be NULL");
}

void fill(sn_buffer* buf, const std::string& s) {
    auto* data = static_cast<char*>(std::malloc(s.size() + 1));
    if (!data) throw std::bad_alloc();
    std::memcpy(data, s.data(), s.size() + 1);
    buf->data = data;
    buf->size = s.size();
}

SpatialCase to_case(const sn_case& c, const RunConfig& cfg) {
    switch (c.kind) {
        case SN_CASE1: return cases::Case1{};
        case SN_CASE2: return cases::Case2{};
        case SN_CASE3: return cases::Case3{c.p1, c.p2};
        case SN_SPHERE:
            return make_sphere(cfg.params, c.sphere_radius_km > 0.0 ? c.sphere_radius_km
                                                                     : cfg.sphere_radius_km);
    }
    throw InvalidParams("unknown case kind " + std::to_string(static_cast<int>(c.kind)));
}

CpMethod to_method(sn_method m) {
    switch (m) {
        case SN_METHOD_ANALYTIC: return CpMethod::Analytic;
        case SN_METHOD_UPPER_BOUND: return CpMethod::UpperBound;
        case SN_METHOD_MONTE_CARLO: return CpMethod::MonteCarlo;
    }
    throw InvalidParams("unknown method " + std::to_string(static_cast<int>(m)));
}

sn_cp_result to_result(const CpResult& r) {
    sn_cp_result out{};
    out.cp = r.cp;
    out.error_estimate = r.error_estimate;
    out.ci_low = r.ci_low;
    out.ci_high = r.ci_high;
    out.n_trials = r.n_trials;
    out.method = r.method == CpMethod::Analytic     ? SN_METHOD_ANALYTIC
                 : r.method == CpMethod::UpperBound ? SN_METHOD_UPPER_BOUND
                                                    : SN_METHOD_MONTE_CARLO;
    return out;
}

template <class T>
std::vector<T> list(const T* data, std::size_t n, const std::vector<T>& keep) {
    if (!data) return keep;
    return std::vector<T>(data, data + n);
}

SweepSpec to_spec(const sn_sweep_spec* s) {
    require(s, "spec");
    SweepSpec out = s->preset ? sweep_preset(s->preset) : SweepSpec{};
    if (s->cases) {
        out.cases.clear();
        for (std::size_t i = 0; i < s->n_cases; ++i) {
            require(s->cases[i], "case name");
            out.cases.emplace_back(s->cases[i]);
        }
    }
    out.ts_db = list(s->ts_db, s->n_ts, out.ts_db);
    out.lambda_n = list(s->lambda_n, s->n_lambda, out.lambda_n);
    out.alpha = list(s->alpha, s->n_alpha, out.alpha);
    out.epsilon = list(s->epsilon, s->n_epsilon, out.epsilon);
    if (s->methods) {
        out.methods.clear();
        for (std::size_t i = 0; i < s->n_methods; ++i) out.methods.push_back(to_method(s->methods[i]));
    }
    return out;
}

}  // namespace

extern "C" {

sn_status sn_params_create(sn_params** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sn_params{};
    });
}

void sn_params_destroy(sn_params* params) { delete params; }

sn_status sn_params_clone(const sn_params* params, sn_params** out) {
    return guarded([&] {
        require(params, "params");
        require(out, "out");
        *out = new sn_params{*params};
    });
}

sn_status sn_params_load_file(sn_params* params, const char* path) {
    return guarded([&] {
        require(params, "params");
        require(path, "path");
        params->cfg = load_config(path, params->cfg);
    });
}

sn_status sn_params_load_text(sn_params* params, const char* text) {
    return guarded([&] {
        require(params, "params");
        require(text, "text");
        params->cfg = parse_config(text, params->cfg);
    });
}

sn_status sn_params_set(sn_params* params, const char* key, const char* value) {
    return guarded([&] {
        require(params, "params");
        require(key, "key");
        require(value, "value");
        set_config_value(params->cfg, key, value);
    });
}

sn_status sn_params_get(const sn_params* params, const char* key, sn_buffer* value) {
    return guarded([&] {
        require(params, "params");
        require(key, "key");
        require(value, "value");
        const std::string text = emit_config(params->cfg);
        const std::string prefix = std::string(key) + " = ";
        std::size_t pos = 0;
        while (pos < text.size()) {
            const auto end = text.find('\n', pos);
            const auto line = text.substr(pos, end - pos);
            if (line.rfind(prefix, 0) == 0) {
                fill(value, line.substr(prefix.size()));
                return;
            }
            pos = end + 1;
        }
        throw ConfigError(key, 0, std::string("unknown key '") + key + "'");
    });
}

sn_status sn_params_emit(const sn_params* params, sn_buffer* out) {
    return guarded([&] {
        require(params, "params");
        require(out, "out");
        fill(out, emit_config(params->cfg));
    });
}

sn_status sn_params_validate(const sn_params* params) {
    return guarded([&] {
        require(params, "params");
        params->cfg.params.validate();
        params->cfg.mc.validate();
        params->cfg.quad.validate();
    });
}

sn_status sn_cp(const sn_params* params, sn_case c, sn_method method, double ts_db,
                sn_cp_result* out) {
    return guarded([&] {
        require(params, "params");
        require(out, "out");
        const auto& cfg = params->cfg;
        const auto sc = to_case(c, cfg);
        switch (to_method(method)) {
            case CpMethod::Analytic: *out = to_result(cp_exact(sc, cfg.params, ts_db, cfg.quad)); break;
            case CpMethod::UpperBound:
                *out = to_result(cp_upper_bound(sc, cfg.params, ts_db, cfg.quad));
                break;
            case CpMethod::MonteCarlo: *out = to_result(estimate_cp(sc, cfg.params, ts_db, cfg.mc)); break;
        }
    });
}

sn_status sn_mc_curve(const sn_params* params, sn_case c, const double* ts_db, size_t n,
                      sn_cp_result* out) {
    return guarded([&] {
        require(params, "params");
        if (n > 0) {
            require(ts_db, "ts_db");
            require(out, "out");
        }
        const auto& cfg = params->cfg;
        const auto r = estimate_cp_curve(to_case(c, cfg), cfg.params, std::span(ts_db, n), cfg.mc);
        for (std::size_t i = 0; i < n; ++i) out[i] = to_result(r[i]);
    });
}

sn_status sn_distance_law(const sn_params* params, sn_case c, double l_km, double* pdf_closed,
                          double* cdf_closed, double* pdf_oracle, double* cdf_oracle) {
    return guarded([&] {
        require(params, "params");
        const auto& p = params->cfg.params;
        p.validate();
        const auto sc = to_case(c, params->cfg);
        if (pdf_closed) *pdf_closed = closed_pdf(sc, l_km, p).value;
        if (cdf_closed) *cdf_closed = closed_cdf(sc, l_km, p).value;
        if (pdf_oracle) *pdf_oracle = numeric_pdf(sc, l_km, p).value;
        if (cdf_oracle) *cdf_oracle = numeric_cdf(sc, l_km, p).value;
    });
}

sn_status sn_sweep(const sn_params* params, const sn_sweep_spec* spec, sn_buffer* csv) {
    return guarded([&] {
        require(params, "params");
        require(csv, "csv");
        fill(csv, sweep_csv(run_sweep(to_spec(spec), params->cfg)));
    });
}

sn_status sn_compare(const sn_params* params, const sn_sweep_spec* spec, sn_buffer* csv,
                     double* fraction) {
    return guarded([&] {
        require(params, "params");
        require(csv, "csv");
        const auto cmp = compare_models(to_spec(spec), params->cfg);
        fill(csv, comparison_csv(cmp));
        if (fraction) *fraction = cmp.case3_at_least_sphere;
    });
}

sn_status sn_dist_tables(const sn_params* params, sn_case c, int grid_size, sn_buffer* l_csv,
                         sn_buffer* h_csv) {
    return guarded([&] {
        require(params, "params");
        require(l_csv, "l_csv");
        require(h_csv, "h_csv");
        const auto t = emit_distribution_tables(to_case(c, params->cfg), params->cfg.params, grid_size);
        fill(l_csv, t.l_csv);
        try {
            fill(h_csv, t.h_csv);
        } catch (...) {
            sn_buffer_free(l_csv);
            throw;
        }
    });
}

void sn_buffer_free(sn_buffer* buf) {
    if (!buf) return;
    std::free(buf->data);
    buf->data = nullptr;
    buf->size = 0;
}

const char* sn_last_error(void) { return g_error.c_str(); }

const char* sn_last_error_key(void) { return g_error_key.c_str(); }

double sn_last_error_estimate(void) { return g_error_estimate; }

const char* sn_status_name(sn_status status) {
    switch (status) {
        case SN_OK: return "ok";
        case SN_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SN_ERR_DOMAIN: return "domain error";
        case SN_ERR_CONFIG: return "config error";
        case SN_ERR_CONVERGENCE: return "convergence error";
        case SN_ERR_IO: return "i/o error";
        case SN_ERR_NO_MEMORY: return "out of memory";
        case SN_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sn_version(void) { return "0.1.0"; }

}  // extern "C"
