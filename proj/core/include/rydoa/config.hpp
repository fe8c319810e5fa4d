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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rydoa/atomic_model.hpp"
#include "rydoa/retrieval.hpp"

namespace rydoa {

enum class ExperimentKind { kSpectrum, kSweepCorruption, kSweepSnr };
enum class ScalePreset { kDesk, kPaper };
enum class PenaltySelection { kL1, kL2, kBoth };

const char* experiment_name(ExperimentKind kind);

/// Malformed config input (bad syntax, unknown key, unparsable value).
/// Carries the 1-based line and column of the offending token.
class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Structurally valid config whose values violate a model precondition.
class ConfigSemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fully resolved run description: experiment selector, scene, estimator
/// parameters, sweep lists, and output destination. Defaults are the paper
/// presets of the selected experiment; a config file overrides defaults and
/// command-line flags override the file.
struct RunConfig {
    ExperimentKind experiment = ExperimentKind::kSpectrum;
    ScalePreset scale = ScalePreset::kPaper;
    PenaltySelection penalty = PenaltySelection::kBoth;
    Scene scene;
    RetrievalConfig retrieval;
    int grid_points = 2000;
    int num_trials = 1;
    double delta = 3.0;
    double eta_percent = 0.0;               // spectrum and sweep-snr corruption level
    std::vector<double> eta_percent_list;   // sweep-corruption points
    std::vector<double> snr_db_list;        // sweep-snr points
    std::string out_dir = ".";

    /// Throws ConfigSemanticError on violated preconditions (K >= M,
    /// eta outside [0, 100], empty sweep lists, bad budgets, ...).
    void validate() const;

    /// Serializes every resolved value in the config-file syntax; feeding the
    /// text back through parse_config reproduces this RunConfig exactly.
    std::string to_config_text() const;
};

/// Key=value override, e.g. {"eta", "20"} for a --eta flag.
using ConfigOverride = std::pair<std::string, std::string>;

/// Paper presets for one experiment (Table-style defaults); desk scale
/// shrinks the Monte-Carlo budgets and sweep lists to CI-friendly sizes.
RunConfig default_config(ExperimentKind kind, ScalePreset scale = ScalePreset::kPaper);

/// Parses flat key=value text with one optional [section] per experiment and
/// applies flag overrides on top. Unknown keys are rejected by name with
/// their position. The result is validated before being returned.
RunConfig parse_config(const std::string& text,
                       const std::vector<ConfigOverride>& overrides = {});

/// parse_config over the contents of a file; a missing or unreadable file is
/// a parse error.
RunConfig parse_config_file(const std::string& path,
                            const std::vector<ConfigOverride>& overrides = {});

}  // namespace rydoa
