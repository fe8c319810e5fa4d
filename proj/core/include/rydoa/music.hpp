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

#include <vector>

#include <Eigen/Dense>

#include "rydoa/retrieval.hpp"

namespace rydoa {

/// Uniform angular search grid over [-90, 90] degrees, endpoints included.
struct AngularGrid {
    Eigen::VectorXd points;

    static AngularGrid uniform(int num_points);  // num_points >= 2
    int size() const { return static_cast<int>(points.size()); }
};

struct NoiseSubspace {
    Eigen::MatrixXcd basis;       // M x (M-K), orthonormal columns
    Eigen::VectorXd eigenvalues;  // all M eigenvalues, descending
    bool ill_separated = false;   // eigenvalues K and K+1 within 1e-10 relative
};

struct PeakSelection {
    std::vector<double> angles_deg;  // grid angles of the K strongest peaks
    std::vector<int> indices;
    bool fallback = false;  // fewer than K local maxima existed
};

struct MusicResult {
    Eigen::VectorXd spectrum;             // pseudo-spectrum over the grid
    Eigen::VectorXd eigenvalues;          // covariance eigenvalues, descending
    std::vector<double> doa_estimates_deg;
    std::vector<int> peak_indices;
    bool peak_fallback = false;
    bool subspace_ill_separated = false;
};

/// Sample covariance R = (1/P) H H^H, exactly Hermitian by construction.
Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd& h_matrix,
                                   int num_snapshots);

/// Orthonormal eigenvectors of the M-K smallest eigenvalues of a Hermitian
/// covariance. Flags (non-fatally) when the signal/noise eigenvalue gap is
/// below 1e-10 relative to the largest eigenvalue. Requires K < M.
NoiseSubspace noise_subspace(const Eigen::MatrixXcd& covariance, int num_users);

/// Search steering vector (1/sqrt(M)) [1, e^{j pi sin t}, ..., e^{j(M-1) pi sin t}]^T.
/// Note the +j sign: it pairs with the conjugated channel stacking used by
/// estimate_doas, so the spectrum peaks at the true DoAs.
Eigen::VectorXcd probe_steering(double theta_deg, int num_sensors);

/// P(theta_g) = 1 / max(a^H U_N U_N^H a, 1e-18) over the grid.
Eigen::VectorXd music_spectrum(const Eigen::MatrixXcd& noise_basis,
                               const AngularGrid& grid,
                               OpCounts* counts = nullptr);

/// Strict local maxima (endpoints qualify against their single neighbor),
/// ordered by value descending with leftmost-index tie-break. When fewer
/// than K local maxima exist the remaining slots are filled with the
/// globally largest not-yet-selected grid values and `fallback` is set.
PeakSelection pick_peaks(const Eigen::VectorXd& spectrum,
                         const AngularGrid& grid, int num_users);

/// Complete DoA pipeline on a recovered channel matrix whose rows hold the
/// per-sensor channels: stacks as [h_1, ..., h_M]^H (i.e. conjugates the row
/// stacking), forms the sample covariance, and scans the pseudo-spectrum.
MusicResult estimate_doas(const Eigen::MatrixXcd& h_hat, int num_users,
                          int num_snapshots, const AngularGrid& grid,
                          OpCounts* counts = nullptr);

}  // namespace rydoa
