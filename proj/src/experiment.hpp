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
#include "config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sondenet {

/// [-40 : 2 : 0] dB.
std::vector<double> default_threshold_grid();

struct SweepSpec {
    /// Case names as accepted by parse_case.
    std::vector<std::string> cases = {"case1", "case2", "case3"};
    std::vector<double> ts_db = default_threshold_grid();
    std::vector<double> lambda_n = {0.01};
    std::vector<double> alpha = {2.0};
    std::vector<double> epsilon = {0.0};
    std::vector<CpMethod> methods = {CpMethod::Analytic};
    std::string output_path;

    /// Throws InvalidParams on empty grids, an empty method set or unknown cases.
    void validate() const;
};

/// fig-lambda, fig-alpha, fig-epsilon, fig-sphere. Throws InvalidParams.
SweepSpec sweep_preset(const std::string& name);
std::vector<std::string> sweep_preset_names();

struct SweepRow {
    std::string case_name;
    CpMethod method = CpMethod::Analytic;
    double ts_db = 0.0;
    double lambda_n = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;
    double cp = 0.0;
    double err_or_ci = 0.0;
    std::optional<std::uint64_t> seed;
};

/// Rows in grid order: case, method, lambda_n, alpha, epsilon, then threshold.
/// Points are evaluated on a worker pool sized by cfg.mc.threads; Monte Carlo
/// curves all use cfg.mc.seed, so variants share random numbers.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunConfig& cfg);

std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct ComparisonRow {
    CpMethod method = CpMethod::Analytic;
    double ts_db = 0.0;
    double lambda_n = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;
    double cp_case3 = 0.0;
    double cp_sphere = 0.0;
    double delta = 0.0;  // cp_case3 - cp_sphere
};

struct Comparison {
    std::vector<ComparisonRow> rows;
    /// Share of rows with cp_case3 >= cp_sphere.
    double case3_at_least_sphere = 0.0;
};

/// Case 3 against the spherical baseline over the spec's grid; spec.cases is
/// ignored.
Comparison compare_models(const SweepSpec& spec, const RunConfig& cfg);

/// Paired rows then a trailing '#' summary line.
std::string comparison_csv(const Comparison& cmp);

struct DistributionTables {
    /// l, pdf_closed, pdf_oracle, cdf_closed, cdf_oracle
    std::string l_csv;
    /// h, vertical_pdf
    std::string h_csv;
    double l_pdf_peak_km = 0.0;
    double h_pdf_peak_km = 0.0;
    /// Trapezoid integrals of the emitted density columns.
    double l_pdf_closed_mass = 0.0;
    double l_pdf_oracle_mass = 0.0;
    double h_pdf_mass = 0.0;
    bool used_fallback = false;
};

/// Slant-distance and altitude densities on uniform grids of grid_size points
/// over the case's support. grid_size >= 2.
DistributionTables emit_distribution_tables(const SpatialCase& c, const NetworkParams& p,
                                            int grid_size);

}  // namespace sondenet
