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

#include <Eigen/Dense>

namespace rydoa {

/// Physical constants of the Caesium 52D_{5/2} -> 53P_{3/2} sensing transition.
/// The transition dipole moment has a single nonzero component along the
/// second axis, mu_eg = [0, dipole_scale * q * a0, 0].
struct PhysicalConstants {
    double hbar = 1.0546e-34;      // reduced Planck constant, J*s
    double q = 1.602e-19;          // elementary charge, C
    double a0 = 5.292e-11;         // Bohr radius, m
    double dipole_scale = 1785.9;  // mu_eg magnitude in units of q*a0

    Eigen::Vector3d dipole_moment() const {
        return Eigen::Vector3d(0.0, dipole_scale * q * a0, 0.0);
    }
};

}  // namespace rydoa
