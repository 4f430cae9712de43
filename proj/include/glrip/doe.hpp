#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "glrip/decoder.hpp"
#include "glrip/instance.hpp"
#include "glrip/moea.hpp"

namespace glrip {

// A tunable parameter with exactly three candidate values (low/medium/high).
struct TaguchiFactor {
    std::string name;
    std::array<double, 3> levels{};
};

// Fractional-factorial plan: each row assigns one level index per factor.
struct TaguchiDesign {
    std::vector<TaguchiFactor> factors;
    std::vector<std::vector<int>> rows;
};

// Builds the three-level plan: 9 rows for up to 4 factors, 27 rows for up to
// 13. Throws std::invalid_argument outside that range.
TaguchiDesign taguchi_design(const std::vector<TaguchiFactor>& factors);

// Exhaustive pair-count check: every ordered level pair appears equally often
// in every pair of columns.
bool is_orthogonal(const TaguchiDesign& design);

enum class Direction { Maximize, Minimize };

// Rescales a column into [0,1]; a constant column maps to all zeros.
std::vector<double> normalize(const std::vector<double>& column, Direction dir);

// Weighted goal-programming response of one normalized row, in the order
// (QM, MID, SM, DM) with weights (100, 10, 1, 1).
double response(const std::array<double, 4>& normalized);

enum class SnrForm { SmallerBetter, LargerBetter };

// Signal-to-noise ratio in decibels over repeated-run values.
double snr(const std::vector<double>& values,
           SnrForm form = SnrForm::SmallerBetter);

// Per factor, the level index with the maximal mean S/N over its rows; ties
// resolve to the lowest index.
std::vector<int> best_levels(const TaguchiDesign& design,
                             const std::vector<double>& row_snr);

struct TuningOptions {
    int repetitions = 3;
    std::uint64_t fe_budget = 30000;
    std::uint64_t seed = 1;
    int threads = 1;
    DecodeParams decode{};
    SnrForm snr_form = SnrForm::SmallerBetter;
    // Empty: use tuning_factors(algorithm); otherwise a custom level grid.
    std::vector<TaguchiFactor> factors;
};

struct TuningExperiment {
    std::vector<int> levels;          // level index per factor
    double qm = 0, sm = 0, mid = 0, dm = 0; // metric means over repetitions
    double response_value = 0;
    double snr_value = 0;
};

struct TuningResult {
    Algorithm algorithm{};
    TaguchiDesign design;
    std::vector<TuningExperiment> experiments;
    std::vector<int> best;    // chosen level index per factor
    AlgorithmConfig config;   // defaults overwritten with the chosen levels
};

// The three-level grids used for each algorithm's tunable parameters.
std::vector<TaguchiFactor> tuning_factors(Algorithm algorithm);

// Applies one row's (or the winning) level values onto a base configuration.
AlgorithmConfig config_from_levels(const TaguchiDesign& design,
                                   const std::vector<int>& levels,
                                   AlgorithmConfig base);

// Full tuning pipeline on one instance: run every design row `repetitions`
// times, average the metrics, normalize, score, and pick the best levels.
TuningResult run_tuning(const Instance& inst, Algorithm algorithm,
                        const TuningOptions& opts = {});

// Report: one CSV row per experiment (levels, metric means, response, S/N).
std::string tuning_csv(const TuningResult& result);

// Chosen parameter values as a JSON object mirroring AlgorithmConfig fields.
std::string tuning_config_json(const TuningResult& result);

} // namespace glrip
