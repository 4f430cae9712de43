#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "glrip/evaluation.hpp"
#include "glrip/metrics.hpp"
#include "glrip/rng.hpp"

namespace glrip {

enum class Algorithm { NSGA2, NRGA, SPEA2, PESA2 };

std::string algorithm_name(Algorithm a);
bool parse_algorithm(const std::string& name, Algorithm& out);

struct AlgorithmConfig {
    Algorithm algorithm = Algorithm::NSGA2;
    int population_size = 100;
    int archive_size = 0; // SPEA2 / PESA2 only
    double crossover_fraction = 0.7;
    double mutation_fraction = 0.3;
    double mutation_rate = 0.03;
    int selection_pressure = 3; // PESA2
    int deletion_pressure = 3;  // PESA2
    int grid_divisions = 10;    // PESA2
    std::uint64_t fe_budget = 300000;
    std::uint64_t seed = 1;
};

// Tuned defaults per algorithm.
AlgorithmConfig default_config(Algorithm a);

// Throws std::invalid_argument when fractions leave [0,1], population < 2,
// or fe_budget < population.
void validate_config(const AlgorithmConfig& cfg);

struct Individual {
    Chromosome genes;
    ObjectivePair obj;
    // per-generation scratch
    int rank = 0;
    double crowding = 0;
    double fitness = 0;
};

std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<ObjectivePair>& points);

// Distances for the given front (indices into points); same order as front.
std::vector<double> crowding_distance(const std::vector<ObjectivePair>& points,
                                      const std::vector<std::size_t>& front);

// Ranked-based roulette-wheel probability; rank N (the best) gets the
// largest share 2N/(N(N+1)).
double rbrw_probability(int rank, int population_size);

// Arithmetic blend with an independent lambda per gene; returns both
// complementary children.
std::pair<Chromosome, Chromosome> blend_crossover(const Chromosome& a,
                                                  const Chromosome& b, Rng& rng);

// Resamples each key with probability rate.
void mutate(Chromosome& genes, double rate, Rng& rng);

struct GenLogRow {
    int generation = 0;
    std::uint64_t evaluations = 0;
    std::size_t archive_size = 0;
    double best_z1 = 0;
    double best_z2 = 0;
    double hypervolume = 0;
};

std::string run_log_csv(const std::vector<GenLogRow>& rows);

struct RunResult {
    Front front;                       // mutually non-dominated
    std::vector<Individual> solutions; // one carrier per front point
    std::uint64_t evaluations = 0;
    std::vector<GenLogRow> log;
    std::vector<Front> audit_fronts;   // per-generation best-ever fronts (optional)
};

RunResult run_moea(const Instance& inst, const AlgorithmConfig& cfg,
                   const DecodeParams& decode_params = {},
                   bool record_audit = false);

} // namespace glrip
