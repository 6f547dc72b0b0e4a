// Copyright 2026 The duality-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command implementations behind the duality-lab executable.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "duality/relations.hpp"
#include "duality/table.hpp"

namespace duality::cli {

/// Stable process exit codes.
enum ExitCode : int { kOk = 0, kViolations = 1, kUsage = 2 };

enum class Command { Check, Example, Sweep, Report };
enum class Format { Csv, Json };

/// One grid axis "param:start:stop:steps"; steps evenly spaced points, both ends included.
struct GridSpec {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 1;

    std::vector<double> values() const;
};

/// Throws UsageError on malformed text.
GridSpec parse_grid(const std::string& text);

/// Invalid configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::Check;
    std::vector<RelationId> relations;
    std::size_t n = 2;
    std::size_t memory_dim = 2;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    bool pure = false;
    bool oracle = false;
    /// example/sweep family: werner, example1 or threepath.
    std::string family;
    std::vector<GridSpec> grids;
    std::map<std::string, double> fixed;
    std::string state_file;
    std::string detector_file;
    std::string output;
    Format format = Format::Csv;
    /// 0 = DUALITY_LAB_THREADS or hardware concurrency.
    std::size_t threads = 0;
};

/// Rejects configurations no command can run; throws UsageError.
void validate(const RunConfig& cfg);

struct CheckSummary {
    std::size_t evaluations = 0;
    std::size_t violations = 0;
    /// Smallest residual over inequality relations (+inf when none ran).
    double min_residual;
    /// Largest |residual| over identity relations (0 when none ran).
    double max_identity_residual = 0.0;
};

/// Monte Carlo verification: `trials` random (state, detector) pairs per
/// selected relation, one row each.
CheckSummary cmd_check(const RunConfig& cfg, Table& rows);

/// Closed-form versus pipeline values for a worked example; returns the
/// largest absolute disagreement among rows where the closed form applies.
double cmd_example(const RunConfig& cfg, Table& rows);

/// Relation reports over a parameter grid of one example family.
void cmd_sweep(const RunConfig& cfg, Table& rows);

/// Every applicable relation for a state/detector pair loaded from JSON
/// files (or sampled from the seed). Returns the number of violated relations.
std::size_t cmd_report(const RunConfig& cfg, Table& rows, std::ostream& log);

/// Parses argv and runs the command; summary lines go to `log`, table output
/// to `out` unless --output names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

/// Worker count from DUALITY_LAB_THREADS, capped by hardware concurrency.
std::size_t worker_count(std::size_t requested);

}  // namespace duality::cli
