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

#include <string>
#include <vector>

#include "rydoa/config.hpp"
#include "rydoa/experiments.hpp"

namespace rydoa {

/// Output file write failed; the partial file has been removed.
class CsvWriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes `sweep_var,sweep_value,algorithm,rmse_deg,mc,seed` rows (header
/// always present, full-precision decimals) and returns the file path.
std::string emit_sweep_csv(const std::vector<SweepResult>& results,
                           const std::string& out_dir,
                           const std::string& filename = "sweep.csv");

/// Writes `theta_deg,algorithm,pq_db` rows and returns the file path.
std::string emit_spectrum_csv(const SpectrumCurves& curves,
                              const std::string& out_dir,
                              const std::string& filename = "spectrum.csv");

/// Sidecar with the complete resolved RunConfig plus the artifact version,
/// itself a valid config file (re-feeding it reproduces the run).
std::string write_run_meta(const RunConfig& config, const std::string& out_dir,
                           const std::string& filename = "run.meta");

/// Gnuplot script stub referencing the emitted CSV, for reviewer-side plots.
std::string write_gnuplot_stub(ExperimentKind kind, const std::string& csv_name,
                               const std::string& out_dir,
                               const std::string& filename = "plot.gp");

}  // namespace rydoa
