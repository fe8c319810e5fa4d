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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace rydoa {

enum class Penalty {
    kL2,      // single unweighted least-squares amplitude update (baseline)
    kL1Irls,  // iteratively reweighted least squares, weights 1/(|residual|+eps)
};

/// Weights used when building the spectral-initialization covariance.
/// Raw |z| is the default; squared magnitudes are exposed as an option.
enum class InitWeightMode { kAbs, kSquared };

struct RetrievalConfig {
    Penalty penalty = Penalty::kL1Irls;
    int outer_iters = 100;   // N, alternating-minimization budget
    int inner_iters = 20;    // T, IRLS budget per outer iteration
    double epsilon = 1e-8;   // weight smoothing and convergence-denominator guard
    double inner_tol = 1e-8; // relative-change break for the inner loop
    double outer_tol = 1e-9; // rotated-target relative-change break; 0 = run all N
    InitWeightMode init_weight_mode = InitWeightMode::kAbs;
    bool disable_breaks = false;     // instrumentation: run the full N and T budgets
    bool record_irls_trace = false;  // capture per-inner-iteration objectives

    void validate() const;  // throws std::invalid_argument
};

/// Multiply-accumulate counters for the instrumented complexity mode.
/// Incremented by the known MAC cost of each operation actually executed.
struct OpCounts {
    std::uint64_t init_macs = 0;
    std::uint64_t phase_macs = 0;
    std::uint64_t irls_macs = 0;
    std::uint64_t music_macs = 0;

    OpCounts& operator+=(const OpCounts& other) {
        init_macs += other.init_macs;
        phase_macs += other.phase_macs;
        irls_macs += other.irls_macs;
        music_macs += other.music_macs;
        return *this;
    }
};

/// Weighted objective sum_p w_p |rho_p|^2 evaluated before and after one
/// weighted least-squares solve, at the weights used by that solve.
struct IrlsStep {
    double weighted_obj_before = 0.0;
    double weighted_obj_after = 0.0;
};

struct SensorDiagnostics {
    int outer_iters = 0;             // amplitude updates performed
    double final_residual_l1 = 0.0;  // ||z~ - |S^H h + b|||_1
    bool init_degenerate = false;    // trailing init entry below 1e-12
    bool ridge_fallback = false;     // at least one WLS solve needed the ridge
    bool failed = false;             // sensor row fell back to its init
    std::vector<IrlsStep> irls_trace;
};

/// Recovered channel matrix. Row m holds the recovered channel of sensor m
/// (the row-stacked manifold convention, H_hat estimates A).
struct ChannelEstimate {
    Eigen::MatrixXcd h_hat;  // M x K
    std::vector<SensorDiagnostics> sensors;

    int degenerate_init_count() const;
    int ridge_fallback_count() const;
    int failed_sensor_count() const;
};

/// Normal matrix S W S^H was singular or had condition estimate > 1e12.
class SingularNormalMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spectral initialization of one sensor channel from magnitude-only data.
/// Builds the expanded pilot matrix [S^H, b*1]^H, weights snapshot outer
/// products by |z~| (or |z~|^2), and rescales the principal eigenvector so
/// its trailing entry equals 1 before truncating to the first K entries.
/// If that trailing entry is below 1e-12 in modulus the scaled eigenvector
/// is truncated unnormalized and *degenerate is set. Requires P >= K+1.
Eigen::VectorXcd spectral_init(const Eigen::MatrixXcd& pilots,
                               std::complex<double> bias,
                               const Eigen::VectorXd& z_tilde,
                               InitWeightMode mode = InitWeightMode::kAbs,
                               bool* degenerate = nullptr,
                               OpCounts* counts = nullptr);

/// Rotated target z~ .* exp(j*angle(S^H h + b)). Entries where the model is
/// exactly zero take phase 0; negative measurement entries keep their sign.
Eigen::VectorXcd phase_update(const Eigen::VectorXcd& channel,
                              const Eigen::MatrixXcd& pilots,
                              std::complex<double> bias,
                              const Eigen::VectorXd& z_tilde,
                              OpCounts* counts = nullptr);

/// w_p = 1 / (|residual_p| + epsilon); all weights lie in (0, 1/epsilon].
Eigen::VectorXd irls_weights(const Eigen::VectorXcd& residual, double epsilon);

/// Minimizer of sum_p w_p |target_p - s_p^H h|^2, i.e.
/// (S W S^H)^{-1} S W target. Throws SingularNormalMatrix when the K x K
/// normal matrix has eigenvalue condition estimate above 1e12.
Eigen::VectorXcd wls_solve(const Eigen::MatrixXcd& pilots,
                           const Eigen::VectorXd& weights,
                           const Eigen::VectorXcd& target,
                           OpCounts* counts = nullptr);

struct SensorRecovery {
    Eigen::VectorXcd channel;
    SensorDiagnostics diagnostics;
};

/// Full per-sensor recovery: spectral init, then up to N outer iterations of
/// phase update followed by the amplitude update (T-step IRLS for kL1Irls,
/// one unit-weight solve for kL2). The bias is subtracted from the rotated
/// target before solving. Singular solves are retried once with a diagonal
/// ridge of 1e-10 * trace/K; a second failure propagates.
SensorRecovery recover_channel(const Eigen::VectorXd& z_tilde,
                               const Eigen::MatrixXcd& pilots,
                               std::complex<double> bias,
                               const RetrievalConfig& config,
                               OpCounts* counts = nullptr);

/// Applies recover_channel independently to every sensor row, optionally in
/// parallel (workers = 0 means RYDOA_THREADS / hardware). The output is
/// identical for any worker count. A sensor whose solve fails even with the
/// ridge keeps its spectral initialization and is flagged.
ChannelEstimate recover_channel_matrix(const Eigen::MatrixXd& z_tilde,
                                       const Eigen::MatrixXcd& pilots,
                                       std::complex<double> bias,
                                       const RetrievalConfig& config,
                                       int workers = 1,
                                       OpCounts* counts = nullptr);

}  // namespace rydoa
