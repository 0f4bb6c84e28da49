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

#include <doctest.h>

#include "error.hpp"
#include "experiment.hpp"
#include "propagation.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

using namespace sondenet;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<double> columns(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
    return out;
}

RunConfig quick_config(int threads = 1) {
    RunConfig cfg;
    cfg.mc.n_trials = 200;
    cfg.mc.threads = threads;
    return cfg;
}

}  // namespace

TEST_CASE("default threshold grid") {
    const auto g = default_threshold_grid();
    REQUIRE(g.size() == 21);
    CHECK(g.front() == -40.0);
    CHECK(g.back() == 0.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] - g[i - 1] == 2.0);
}

TEST_CASE("presets expand to the full grid") {
    for (const auto& name : sweep_preset_names()) CHECK_NOTHROW(sweep_preset(name).validate());
    CHECK_THROWS_AS(sweep_preset("fig-zeta"), InvalidParams);

    auto spec = sweep_preset("fig-lambda");
    const auto rows = run_sweep(spec, quick_config(0));
    const auto analytic = std::count_if(rows.begin(), rows.end(),
                                        [](const SweepRow& r) { return r.method == CpMethod::Analytic; });
    const auto mc = std::count_if(rows.begin(), rows.end(),
                                  [](const SweepRow& r) { return r.method == CpMethod::MonteCarlo; });
    CHECK(analytic == 3 * 2 * 21);
    CHECK(mc == 3 * 2 * 21);
    for (const auto& r : rows) {
        CHECK(r.cp >= 0.0);
        CHECK(r.cp <= 1.0);
        CHECK(r.seed.has_value() == (r.method == CpMethod::MonteCarlo));
    }
    CHECK(lines_of(sweep_csv(rows)).size() == rows.size() + 1);
    CHECK(lines_of(sweep_csv(rows)).front() + "\n" == sweep_csv_header());
}

TEST_CASE("sweep validation") {
    SweepSpec s;
    s.methods.clear();
    CHECK_THROWS_AS(s.validate(), InvalidParams);
    CHECK_THROWS_AS(run_sweep(s, quick_config()), InvalidParams);
    s = SweepSpec{};
    s.ts_db.clear();
    CHECK_THROWS_AS(s.validate(), InvalidParams);
    s = SweepSpec{};
    s.cases = {"case4"};
    CHECK_THROWS_AS(s.validate(), InvalidParams);
}

TEST_CASE("sweep output is byte-identical across runs and thread counts") {
    SweepSpec s;
    s.cases = {"case1", "case3"};
    s.ts_db = {-40, -20, 0};
    s.lambda_n = {0.01, 0.05};
    s.methods = {CpMethod::Analytic, CpMethod::MonteCarlo};
    const auto a = sweep_csv(run_sweep(s, quick_config(1)));
    const auto b = sweep_csv(run_sweep(s, quick_config(1)));
    const auto c = sweep_csv(run_sweep(s, quick_config(4)));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("comparison pairs Case 3 with the baseline") {
    SweepSpec s;
    s.ts_db = {-40, -20, 0};
    const auto cmp = compare_models(s, quick_config());
    REQUIRE(cmp.rows.size() == 3);
    int at_least = 0;
    for (const auto& r : cmp.rows) {
        CHECK(r.delta == r.cp_case3 - r.cp_sphere);
        at_least += r.cp_case3 >= r.cp_sphere;
    }
    CHECK(cmp.case3_at_least_sphere == doctest::Approx(at_least / 3.0));
    const auto csv = lines_of(comparison_csv(cmp));
    CHECK(csv.size() == 5);
    CHECK(csv.back().rfind("# case3_at_least_sphere_fraction,", 0) == 0);

    auto wide = quick_config();
    wide.sphere_radius_km = 40.0;
    const auto cmp2 = compare_models(s, wide);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(cmp2.rows[i].cp_case3 == cmp.rows[i].cp_case3);
        CHECK(cmp2.rows[i].cp_sphere != cmp.rows[i].cp_sphere);
    }
}

TEST_CASE("distribution tables") {
    NetworkParams p;
    const int n = 400;
    DistributionTables t1, t2;
    for (auto* pair : {&t1, &t2}) {
        const SpatialCase c = pair == &t1 ? SpatialCase{cases::Case1{}} : SpatialCase{cases::Case2{}};
        *pair = emit_distribution_tables(c, p, n);
        const auto l = lines_of(pair->l_csv);
        const auto h = lines_of(pair->h_csv);
        REQUIRE(l.size() == n + 1);
        REQUIRE(h.size() == n + 1);
        CHECK(l.front() == "l_km,pdf_closed,pdf_oracle,cdf_closed,cdf_oracle");
        CHECK(h.front() == "h_km,vertical_pdf");
        for (std::size_t i = 1; i < l.size(); ++i) {
            const auto v = columns(l[i]);
            CHECK(v[1] >= 0.0);
            CHECK(v[2] >= 0.0);
        }
        for (std::size_t i = 1; i < h.size(); ++i) CHECK(columns(h[i])[1] >= 0.0);
        CHECK(pair->l_pdf_closed_mass == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(pair->l_pdf_oracle_mass == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(pair->h_pdf_mass == doctest::Approx(1.0).epsilon(1e-3));
        CHECK_FALSE(pair->used_fallback);

        // The reported peak is the grid argmax of the oracle density.
        const auto s = support_of(c, p);
        double best = -1.0, arg = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = std::min(s.l_max, s.l_min + (s.l_max - s.l_min) * i / (n - 1));
            const double f = numeric_pdf(c, x, p).value;
            if (f > best) best = f, arg = x;
        }
        CHECK(pair->l_pdf_peak_km == doctest::Approx(arg).epsilon(1e-9));
    }
    CHECK(std::abs(t1.l_pdf_peak_km - t2.l_pdf_peak_km) > 1.0);
    CHECK_THROWS_AS(emit_distribution_tables(cases::Case1{}, p, 1), InvalidParams);
}
