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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rydoa/constants.hpp"
#include "rydoa/rng.hpp"

namespace rydoa {

/// Ground-truth physical scenario for one simulated estimation window.
struct Scene {
    int num_users = 2;        // K
    int num_sensors = 32;     // M
    int num_snapshots = 100;  // P
    std::vector<double> doas_deg{40.0, -60.0};
    double user_power = 1e-18;     // P_k, W, shared across users
    double lo_power_ratio = 10.0;  // P_b = lo_power_ratio * P_k
    std::vector<double> path_loss;  // rho_k per user; empty = all 1
    double noise_var = 7.943282347242789e-20;  // sigma_n^2 (= 10^-19.1)
    std::uint64_t seed = 1;

    double path_loss_for(int user) const {
        return path_loss.empty() ? 1.0 : path_loss.at(static_cast<std::size_t>(user));
    }

    /// Throws std::invalid_argument on any violated invariant
    /// (K >= M, nonpositive dimensions, duplicate DoAs, bad powers).
    void validate() const;
};

/// Sparse corruption model: round(fraction*M*P) entries perturbed by
/// +magnitude or -magnitude with independent fair signs.
struct OutlierSpec {
    double fraction = 0.0;   // eta in [0, 1]
    double magnitude = 0.0;  // delta, same units as the measurement matrix
};

/// One synthesized measurement realization. `corrupted` starts equal to
/// `clean` with an empty support; corruption is applied separately by
/// inject_outliers so that paired sweeps reuse identical clean data.
struct MeasurementSet {
    Eigen::MatrixXcd pilots;           // S, K x P
    std::complex<double> bias;         // b, identical for every sensor
    Eigen::MatrixXcd manifold;         // A, M x K; row m is the channel h_m^T
    Eigen::VectorXd user_gains;        // alpha_k baked into the manifold columns
    Eigen::MatrixXd clean;             // Z, M x P, entrywise nonnegative
    Eigen::MatrixXd corrupted;         // Z~, M x P; may go negative under outliers
    std::vector<std::pair<int, int>> outlier_support;  // (sensor, snapshot)
};

/// ULA steering vector, element m = alpha * exp(-j*pi*m*sin(theta)).
/// Half-wavelength spacing is implicit. Requires -90 <= theta_deg <= 90.
Eigen::VectorXcd steering_vector(double theta_deg, int num_sensors,
                                 std::complex<double> alpha);

/// Channel gain alpha = (1/hbar) * mu_eg . polarization * sqrt(P_k) * rho_k.
/// Real-valued because the dipole moment and polarization draws are real.
double compute_gain(double user_power, double path_loss,
                    const Eigen::Vector3d& polarization,
                    const PhysicalConstants& constants = {});

/// LO reference bias b = (1/hbar) * mu_eg . polarization_lo * sqrt(P_b),
/// identical for all sensors.
double compute_bias(double lo_power, const Eigen::Vector3d& lo_polarization,
                    const PhysicalConstants& constants = {});

/// Three i.i.d. N(0, 1/3) components.
Eigen::Vector3d draw_polarization(RngStream& stream);

/// Builds pilots, manifold, bias, and the magnitude-only measurement matrix
/// Z with z_{m,p} = |s_p^H h_m + b + n_{m,p}|, h_m the m-th manifold row.
///
/// Substreams are derived from (scene.seed, label, trial_index) for pilots
/// and noise; the polarization draw is keyed by the scene seed alone, so all
/// trials of one scene share a single polarization realization (one epsilon
/// per user, one epsilon_LO per scene).
MeasurementSet synthesize_measurements(const Scene& scene,
                                       std::uint64_t trial_index = 0,
                                       const PhysicalConstants& constants = {});

struct OutlierInjection {
    Eigen::MatrixXd corrupted;
    std::vector<std::pair<int, int>> support;  // sorted by (sensor, snapshot)
};

/// Picks round(eta*M*P) distinct positions uniformly without replacement and
/// perturbs each by +delta or -delta with a fair sign. No clamping: entries
/// may become negative. All other entries are bit-identical to the input.
OutlierInjection inject_outliers(const Eigen::MatrixXd& clean,
                                 const OutlierSpec& spec, RngStream& stream);

/// SNR in dB of the sweep parameterization,
/// 10*log10(P_k * mu_eg(2) / (3*hbar) / sigma_n^2).
/// Returns +infinity when sigma_n^2 == 0.
double snr_db(const Scene& scene, const PhysicalConstants& constants = {});

/// Inverse map of snr_db: the noise variance that realizes a given SNR.
double noise_var_for_snr(double snr_db_value, double user_power,
                         const PhysicalConstants& constants = {});

/// Plain power-to-noise ratio 10*log10(P_k / sigma_n^2); the quantity the
/// corruption-sweep operating point is quoted in (about 11 dB).
double power_noise_ratio_db(const Scene& scene);

}  // namespace rydoa
