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

#include <sondenet/sondenet.h>

#include <cmath>
#include <algorithm>
#include <cstring>
#include <string>
#include <thread>

namespace {

struct Params {
    sn_params* h = nullptr;
    Params() { REQUIRE(sn_params_create(&h) == SN_OK); }
    ~Params() { sn_params_destroy(h); }
};

std::string take(sn_buffer& b) {
    std::string s(b.data, b.size);
    sn_buffer_free(&b);
    return s;
}

sn_case case_of(sn_case_kind k) { return sn_case{k, 0.5, 0.5, 0.0}; }

}  // namespace

TEST_CASE("handles and versions") {
    Params p;
    sn_params* copy = nullptr;
    REQUIRE(sn_params_clone(p.h, &copy) == SN_OK);
    sn_params_destroy(copy);
    sn_params_destroy(nullptr);
    CHECK(std::string(sn_version()) == "0.1.0");
    CHECK(std::string(sn_status_name(SN_ERR_CONFIG)).size() > 0);
    CHECK(sn_params_create(nullptr) == SN_ERR_INVALID_ARGUMENT);
    CHECK(sn_params_validate(p.h) == SN_OK);
}

TEST_CASE("setting, getting and emitting parameters") {
    Params p;
    REQUIRE(sn_params_set(p.h, "alpha", "4") == SN_OK);
    sn_buffer b{};
    REQUIRE(sn_params_get(p.h, "alpha", &b) == SN_OK);
    CHECK(take(b) == "4");

    CHECK(sn_params_set(p.h, "lamda_n", "0.1") == SN_ERR_CONFIG);
    CHECK(std::string(sn_last_error_key()) == "lamda_n");
    CHECK(std::string(sn_last_error()).find("lamda_n") != std::string::npos);
    CHECK(sn_params_get(p.h, "nope", &b) == SN_ERR_CONFIG);

    REQUIRE(sn_params_emit(p.h, &b) == SN_OK);
    const std::string text = take(b);
    Params q;
    REQUIRE(sn_params_load_text(q.h, text.c_str()) == SN_OK);
    REQUIRE(sn_params_emit(q.h, &b) == SN_OK);
    CHECK(take(b) == text);

    CHECK(sn_params_load_text(q.h, "alpha = 2\nbogus = 1\n") == SN_ERR_CONFIG);
    CHECK(std::string(sn_last_error_key()) == "bogus");
    CHECK(sn_params_load_file(q.h, "/nonexistent/file.conf") == SN_ERR_CONFIG);

    REQUIRE(sn_params_set(q.h, "h_min_km", "30") == SN_OK);
    CHECK(sn_params_validate(q.h) == SN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("coverage probability through the C boundary") {
    Params p;
    sn_cp_result r{};
    REQUIRE(sn_cp(p.h, case_of(SN_CASE3), SN_METHOD_ANALYTIC, -30.0, &r) == SN_OK);
    CHECK(r.cp > 0.0);
    CHECK(r.cp < 1.0);
    CHECK(r.method == SN_METHOD_ANALYTIC);
    sn_cp_result ub{};
    REQUIRE(sn_cp(p.h, case_of(SN_CASE3), SN_METHOD_UPPER_BOUND, -30.0, &ub) == SN_OK);
    CHECK(ub.cp >= r.cp - 1e-12);

    REQUIRE(sn_params_set(p.h, "n_trials", "500") == SN_OK);
    const double ts[] = {-40.0, -20.0, 0.0};
    sn_cp_result curve[3];
    REQUIRE(sn_mc_curve(p.h, case_of(SN_CASE1), ts, 3, curve) == SN_OK);
    CHECK(curve[0].n_trials == 500);
    CHECK(curve[0].cp >= curve[1].cp);
    CHECK(curve[1].cp >= curve[2].cp);

    CHECK(sn_cp(p.h, case_of(SN_CASE3), SN_METHOD_ANALYTIC, NAN, &r) == SN_ERR_DOMAIN);
    CHECK(sn_cp(nullptr, case_of(SN_CASE3), SN_METHOD_ANALYTIC, -30.0, &r) ==
          SN_ERR_INVALID_ARGUMENT);
    CHECK(sn_cp(p.h, case_of(SN_CASE3), SN_METHOD_ANALYTIC, -30.0, nullptr) ==
          SN_ERR_INVALID_ARGUMENT);
    CHECK(sn_cp(p.h, sn_case{SN_CASE3, 0.7, 0.7, 0.0}, SN_METHOD_ANALYTIC, -30.0, &r) ==
          SN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("tight tolerances surface a convergence error with its estimate") {
    Params p;
    REQUIRE(sn_params_set(p.h, "quad_rel_tol", "1e-15") == SN_OK);
    REQUIRE(sn_params_set(p.h, "quad_abs_tol", "1e-17") == SN_OK);
    REQUIRE(sn_params_set(p.h, "quad_max_subdivisions", "2") == SN_OK);
    sn_cp_result r{};
    CHECK(sn_cp(p.h, case_of(SN_CASE1), SN_METHOD_ANALYTIC, -30.0, &r) == SN_ERR_CONVERGENCE);
    CHECK(std::isfinite(sn_last_error_estimate()));
}

TEST_CASE("distance law and tables") {
    Params p;
    double pc = 0, cc = 0, po = 0, co = 0;
    REQUIRE(sn_distance_law(p.h, case_of(SN_CASE2), 18.0, &pc, &cc, &po, &co) == SN_OK);
    CHECK(pc == doctest::Approx(po).epsilon(1e-8));
    CHECK(cc == doctest::Approx(co).epsilon(1e-8));
    REQUIRE(sn_distance_law(p.h, case_of(SN_CASE1), 10.0, &pc, nullptr, nullptr, nullptr) == SN_OK);
    CHECK(sn_distance_law(p.h, case_of(SN_CASE1), 40.0, &pc, nullptr, nullptr, nullptr) ==
          SN_ERR_DOMAIN);

    sn_buffer l{}, h{};
    REQUIRE(sn_dist_tables(p.h, case_of(SN_CASE2), 20, &l, &h) == SN_OK);
    CHECK(take(l).rfind("l_km,", 0) == 0);
    CHECK(take(h).rfind("h_km,", 0) == 0);
}

TEST_CASE("sweeps and comparisons") {
    Params p;
    REQUIRE(sn_params_set(p.h, "n_trials", "200") == SN_OK);
    const char* cases[] = {"case2"};
    const double ts[] = {-30.0, -10.0};
    const sn_method methods[] = {SN_METHOD_ANALYTIC, SN_METHOD_MONTE_CARLO};
    sn_sweep_spec spec{};
    spec.cases = cases;
    spec.n_cases = 1;
    spec.ts_db = ts;
    spec.n_ts = 2;
    spec.methods = methods;
    spec.n_methods = 2;
    sn_buffer csv{};
    REQUIRE(sn_sweep(p.h, &spec, &csv) == SN_OK);
    const std::string out = take(csv);
    CHECK(out.rfind("case,method,ts_db,lambda_n,alpha,epsilon,cp,err_or_ci,seed\n", 0) == 0);
    CHECK(std::count(out.begin(), out.end(), '\n') == 5);

    double fraction = -1.0;
    spec.methods = methods;
    spec.n_methods = 1;
    REQUIRE(sn_compare(p.h, &spec, &csv, &fraction) == SN_OK);
    sn_buffer_free(&csv);
    CHECK(fraction >= 0.0);
    CHECK(fraction <= 1.0);

    spec.n_methods = 0;
    CHECK(sn_sweep(p.h, &spec, &csv) == SN_ERR_INVALID_ARGUMENT);
    spec.methods = nullptr;
    spec.preset = "fig-unknown";
    CHECK(sn_sweep(p.h, &spec, &csv) == SN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
    Params p;
    CHECK(sn_params_set(p.h, "zzz", "1") == SN_ERR_CONFIG);
    std::string other;
    std::thread([&] {
        Params q;
        sn_params_set(q.h, "yyy", "1");
        other = sn_last_error_key();
    }).join();
    CHECK(other == "yyy");
    CHECK(std::string(sn_last_error_key()) == "zzz");
}
