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

#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace rydoa {

/// Counter-free splitmix64 stream keyed by (master seed, component label,
/// trial index). Every stochastic component of the simulator draws from its
/// own stream, so e.g. changing the outlier fraction never perturbs the
/// noise realization of the same trial. Bit-reproducible across platforms:
/// no <random> distributions are involved.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::string_view label, std::uint64_t index = 0) {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the label
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        state_ = mix(master_seed + 0x9e3779b97f4a7c15ull);
        state_ = mix(state_ ^ h);
        state_ = mix(state_ ^ (index * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; the sine companion is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Circularly-symmetric complex Gaussian CN(0, variance).
    std::complex<double> complex_normal(double variance) {
        const double s = std::sqrt(variance * 0.5);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    /// Unbiased uniform integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x > limit);
        return x % n;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace rydoa
