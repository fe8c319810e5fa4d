// rydoa - robust DoA estimation from magnitude-only atomic-receiver measurements
// Copyright (C) 2026 the rydoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rydoa/atomic_model.hpp"
#include "rydoa/music.hpp"
#include "rydoa/retrieval.hpp"

namespace rydoa {

enum class Algorithm { kQMusic, kRobQMusic };

const char* algorithm_name(Algorithm algorithm);  // "qmusic" / "robqmusic"

/// Baseline or robust estimator entry of a paired run.
struct AlgorithmSpec {
    Algorithm algorithm;
    RetrievalConfig config;
};

/// QMUSIC (kL2) and RobQMUSIC (kL1Irls) sharing every budget/tolerance.
std::vector<AlgorithmSpec> paired_algorithms(const RetrievalConfig& base);

struct DiagnosticSummary {
    int degenerate_inits = 0;
    int ridge_fallbacks = 0;
    int failed_sensors = 0;
};

struct TrialOutcome {
    int trial_index = 0;
    Algorithm algorithm = Algorithm::kQMusic;
    std::vector<double> doa_estimates_deg;
    DiagnosticSummary diagnostics;
};

struct SweepResult {
    std::string sweep_name;  // "eta_percent" or "snr_db"
    double sweep_value = 0.0;
    std::vector<std::pair<Algorithm, double>> rmse_deg;
    int num_trials = 0;
    std::uint64_t master_seed = 0;
};

struct SpectrumCurves {
    AngularGrid grid;
    // Pseudo-spectrum per algorithm in dB, normalized so the maximum is 0 dB.
    std::vector<std::pair<Algorithm, Eigen::VectorXd>> pq_db;
};

/// One paired Monte-Carlo trial: synthesize a measurement realization
/// (substreams keyed by trial_index), inject outliers once, and run every
/// algorithm on the identical corrupted matrix. Estimator failures are
/// recorded in the diagnostics; the trial itself never throws for them.
std::vector<TrialOutcome> run_trial(const Scene& scene,
                                    const OutlierSpec& outliers,
                                    const std::vector<AlgorithmSpec>& algorithms,
                                    const AngularGrid& grid,
                                    std::uint64_t trial_index,
                                    int workers = 1);

/// RMSE over trials after matching each trial's estimates to the true DoAs
/// by minimum-total-absolute-error assignment:
/// sqrt( (1/(MC*K)) * sum_t sum_k (theta_hat_k - theta_k)^2 ).
double rmse(const std::vector<std::vector<double>>& estimates_per_trial,
            const std::vector<double>& truth_deg);

/// RMSE as a function of the outlier fraction at fixed delta.
/// eta values are fractions in [0, 1]; results report them in percent.
std::vector<SweepResult> sweep_corruption(const Scene& base_scene,
                                          const std::vector<double>& eta_fractions,
                                          double delta,
                                          const std::vector<AlgorithmSpec>& algorithms,
                                          const AngularGrid& grid, int num_trials,
                                          int workers = 0);

/// RMSE as a function of SNR; each point sets the scene noise variance via
/// noise_var_for_snr and runs num_trials paired trials at the given eta.
std::vector<SweepResult> sweep_snr(const Scene& base_scene,
                                   const std::vector<double>& snr_db_list,
                                   double eta_fraction, double delta,
                                   const std::vector<AlgorithmSpec>& algorithms,
                                   const AngularGrid& grid, int num_trials,
                                   int workers = 0);

/// Single-realization pseudo-spectrum curves for plotting, one per algorithm,
/// normalized to a 0 dB maximum.
SpectrumCurves spectrum_snapshot(const Scene& scene, double eta_fraction,
                                 double delta,
                                 const std::vector<AlgorithmSpec>& algorithms,
                                 const AngularGrid& grid, int workers = 0);

struct OpCountReport {
    OpCounts base;        // full budgets (breaks disabled) at T and G
    OpCounts t_doubled;   // same with 2T inner iterations
    OpCounts g_doubled;   // same with a 2G-point search grid
    double irls_t_ratio = 0.0;   // t_doubled.irls_macs / base.irls_macs
    double music_g_ratio = 0.0;  // g_doubled.music_macs / base.music_macs
    bool linear_in_t = false;    // ratio within [1.9, 2.1]
    bool linear_in_g = false;
};

/// Instrumented complexity check: runs the retrieval and search stages with
/// iteration breaks disabled, then repeats with T doubled and the grid
/// doubled, asserting near-linear scaling of the counted MAC totals.
OpCountReport op_count_report(const Scene& scene, const RetrievalConfig& config,
                              const AngularGrid& grid);

}  // namespace rydoa
