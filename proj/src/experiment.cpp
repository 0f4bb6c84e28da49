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

#include "experiment.hpp"

#include "distributions.hpp"
#include "error.hpp"
#include "monte_carlo.hpp"
#include "parallel.hpp"
#include "propagation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sondenet {

namespace {

void require_nonempty(bool empty, const char* what) {
    if (empty) throw InvalidParams(std::string("sweep ") + what + " must not be empty");
}

struct Variant {
    double lambda_n, alpha, epsilon;
};

std::vector<Variant> variants(const SweepSpec& spec) {
    std::vector<Variant> out;
    for (double l : spec.lambda_n)
        for (double a : spec.alpha)
            for (double e : spec.epsilon) out.push_back({l, a, e});
    return out;
}

NetworkParams with_variant(NetworkParams p, const Variant& v) {
    p.lambda_n = v.lambda_n;
    p.alpha = v.alpha;
    p.epsilon = v.epsilon;
    return p;
}

// One CP curve over the threshold grid for a (case, method, variant) triple.
std::vector<CpResult> curve(const SpatialCase& c, CpMethod method, const NetworkParams& p,
                            const std::vector<double>& ts_db, const RunConfig& cfg) {
    if (method == CpMethod::MonteCarlo) {
        McConfig inner = cfg.mc;
        inner.threads = 1;
        return estimate_cp_curve(c, p, ts_db, inner);
    }
    return cp_curve(c, p, ts_db, method, cfg.quad);
}

std::string join(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out + '\n';
}

}  // namespace

std::vector<double> default_threshold_grid() {
    std::vector<double> g;
    for (int t = -40; t <= 0; t += 2) g.push_back(t);
    return g;
}

void SweepSpec::validate() const {
    require_nonempty(cases.empty(), "case list");
    require_nonempty(ts_db.empty(), "threshold grid");
    require_nonempty(lambda_n.empty(), "lambda_n list");
    require_nonempty(alpha.empty(), "alpha list");
    require_nonempty(epsilon.empty(), "epsilon list");
    require_nonempty(methods.empty(), "method set");
    const NetworkParams p;
    for (const auto& c : cases) parse_case(c, p);
}

SweepSpec sweep_preset(const std::string& name) {
    SweepSpec s;
    s.methods = {CpMethod::Analytic, CpMethod::MonteCarlo};
    if (name == "fig-lambda") {
        s.lambda_n = {0.01, 0.05};
    } else if (name == "fig-alpha") {
        s.alpha = {2.0, 4.0};
    } else if (name == "fig-epsilon") {
        s.epsilon = {0.0, 0.5};
    } else if (name == "fig-sphere") {
        s.cases = {"case3", "sphere"};
        s.lambda_n = {0.01, 0.05};
    } else {
        throw InvalidParams("unknown preset '" + name + "' (fig-lambda, fig-alpha, fig-epsilon, fig-sphere)");
    }
    return s;
}

std::vector<std::string> sweep_preset_names() {
    return {"fig-lambda", "fig-alpha", "fig-epsilon", "fig-sphere"};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunConfig& cfg) {
    spec.validate();
    cfg.mc.validate();
    const auto vars = variants(spec);

    struct Task {
        std::string case_name;
        CpMethod method;
        Variant v;
    };
    std::vector<Task> tasks;
    for (const auto& c : spec.cases)
        for (CpMethod m : spec.methods)
            for (const auto& v : vars) tasks.push_back({c, m, v});
    for (const auto& t : tasks) with_variant(cfg.params, t.v).validate();

    // Parallelise across curves; each curve then runs on one thread so the
    // pool is not oversubscribed. Results land in per-task slots.
    std::vector<std::vector<CpResult>> results(tasks.size());
    parallel_for(tasks.size(), cfg.mc.threads, [&](std::size_t i) {
        const auto& t = tasks[i];
        const auto p = with_variant(cfg.params, t.v);
        const auto c = parse_case(t.case_name, p, cfg.sphere_radius_km);
        results[i] = curve(c, t.method, p, spec.ts_db, cfg);
    });

    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& t = tasks[i];
        for (std::size_t k = 0; k < spec.ts_db.size(); ++k) {
            SweepRow r;
            r.case_name = case_name(parse_case(t.case_name, cfg.params, cfg.sphere_radius_km));
            r.method = t.method;
            r.ts_db = spec.ts_db[k];
            r.lambda_n = t.v.lambda_n;
            r.alpha = t.v.alpha;
            r.epsilon = t.v.epsilon;
            r.cp = results[i][k].cp;
            r.err_or_ci = results[i][k].error_estimate;
            if (t.method == CpMethod::MonteCarlo) r.seed = cfg.mc.seed;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string sweep_csv_header() { return "case,method,ts_db,lambda_n,alpha,epsilon,cp,err_or_ci,seed\n"; }

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = sweep_csv_header();
    for (const auto& r : rows) {
        out += join({r.case_name, cp_method_name(r.method), format_double(r.ts_db),
                     format_double(r.lambda_n), format_double(r.alpha), format_double(r.epsilon),
                     format_double(r.cp), format_double(r.err_or_ci),
                     r.seed ? std::to_string(*r.seed) : std::string()});
    }
    return out;
}

Comparison compare_models(const SweepSpec& spec, const RunConfig& cfg) {
    SweepSpec both = spec;
    both.cases = {"case3", "sphere"};
    const auto rows = run_sweep(both, cfg);
    // run_sweep emits all case3 rows, then the sphere rows in the same order.
    const std::size_t half = rows.size() / 2;
    Comparison cmp;
    std::size_t wins = 0;
    for (std::size_t i = 0; i < half; ++i) {
        const auto& a = rows[i];
        const auto& b = rows[half + i];
        ComparisonRow r{a.method, a.ts_db, a.lambda_n, a.alpha, a.epsilon, a.cp, b.cp, a.cp - b.cp};
        if (r.delta >= 0.0) ++wins;
        cmp.rows.push_back(r);
    }
    cmp.case3_at_least_sphere = half ? static_cast<double>(wins) / static_cast<double>(half) : 0.0;
    return cmp;
}

std::string comparison_csv(const Comparison& cmp) {
    std::string out = "method,ts_db,lambda_n,alpha,epsilon,cp_case3,cp_sphere,delta\n";
    for (const auto& r : cmp.rows) {
        out += join({cp_method_name(r.method), format_double(r.ts_db), format_double(r.lambda_n),
                     format_double(r.alpha), format_double(r.epsilon), format_double(r.cp_case3),
                     format_double(r.cp_sphere), format_double(r.delta)});
    }
    out += "# case3_at_least_sphere_fraction," + format_double(cmp.case3_at_least_sphere) + '\n';
    return out;
}

DistributionTables emit_distribution_tables(const SpatialCase& c, const NetworkParams& p,
                                            int grid_size) {
    if (grid_size < 2) throw InvalidParams("grid_size must be >= 2");
    p.validate();
    validate_case(c, p);
    const CaseLaw law(c, p);
    const Support sup = law.support();
    const QuadratureControl oracle{1e-9, 1e-9, 400};

    DistributionTables t;
    const auto n = static_cast<std::size_t>(grid_size);
    std::vector<double> ls(n), pdf_c(n), pdf_o(n), cdf_c(n), cdf_o(n);
    for (std::size_t i = 0; i < n; ++i) {
        ls[i] = std::min(sup.l_max, sup.l_min + (sup.l_max - sup.l_min) * static_cast<double>(i) / (n - 1));
    }
    std::vector<char> fallback(n, 0);
    parallel_for(n, 0, [&](std::size_t i) {
        const auto pc = closed_pdf(c, ls[i], p);
        const auto cc = closed_cdf(c, ls[i], p);
        pdf_c[i] = pc.value;
        cdf_c[i] = cc.value;
        fallback[i] = pc.used_fallback || cc.used_fallback;
        pdf_o[i] = numeric_pdf(c, ls[i], p, oracle).value;
        cdf_o[i] = numeric_cdf(c, ls[i], p, oracle).value;
    });

    auto trapezoid = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
        return s;
    };
    auto argmax = [](const std::vector<double>& x, const std::vector<double>& y) {
        return x[static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin())];
    };

    t.l_csv = "l_km,pdf_closed,pdf_oracle,cdf_closed,cdf_oracle\n";
    for (std::size_t i = 0; i < n; ++i) {
        t.l_csv += join({format_double(ls[i]), format_double(pdf_c[i]), format_double(pdf_o[i]),
                         format_double(cdf_c[i]), format_double(cdf_o[i])});
        t.used_fallback = t.used_fallback || fallback[i];
    }
    t.l_pdf_peak_km = argmax(ls, pdf_c);
    t.l_pdf_closed_mass = trapezoid(ls, pdf_c);
    t.l_pdf_oracle_mass = trapezoid(ls, pdf_o);

    std::vector<double> hs(n), fh(n);
    t.h_csv = "h_km,vertical_pdf\n";
    const double h_top = std::min(sup.h_max, sup.l_max);
    for (std::size_t i = 0; i < n; ++i) {
        hs[i] = std::min(h_top, sup.h_min + (h_top - sup.h_min) * static_cast<double>(i) / (n - 1));
        fh[i] = law.vertical_pdf(hs[i]);
        t.h_csv += join({format_double(hs[i]), format_double(fh[i])});
    }
    t.h_pdf_peak_km = argmax(hs, fh);
    t.h_pdf_mass = trapezoid(hs, fh);
    return t;
}

}  // namespace sondenet
