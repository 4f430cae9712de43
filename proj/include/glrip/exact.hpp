#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "glrip/decoder.hpp"
#include "glrip/evaluation.hpp"
#include "glrip/metrics.hpp"

namespace glrip {

struct EnumOptions {
    int n_max = 0;           // 0: default_n_max(instance)
    double time_limit = 0;   // seconds; 0 = unlimited
    int threads = 1;
    double max_space = 1e8;  // raw decision-space guard
};

struct EnumeratedFront {
    Front front;
    std::vector<Plan> plans;   // aligned with front
    std::uint64_t evaluated = 0;
    bool truncated = false;    // hit the time limit
};

// Walks the whole decision space the decoder can reach (priority permutations
// of DCs, retailers, and both fleets crossed with every feasible frequency
// choice) and keeps the non-dominated feasible plans.
EnumeratedFront enumerate_pareto_plans(const Instance& inst,
                                       const EnumOptions& opts = {});
Front enumerate_pareto(const Instance& inst, int n_max = 0);

// Raw size of the space the enumerator would walk.
double enumeration_space(const Instance& inst, int n_max = 0);

struct ExactQuery {
    int minimize = 0; // 0: z1, 1: z2
    double z1_cap = std::numeric_limits<double>::infinity();
    double z2_cap = std::numeric_limits<double>::infinity();
    // Augmented term: minimize obj - aug_delta * slack(capped other) / aug_range.
    double aug_delta = 0;
    double aug_range = 1;
};

struct ExactSolution {
    bool feasible = false;
    double value = 0;
    ObjectivePair obj;
    Plan plan;
};

class ExactBackend {
  public:
    virtual ~ExactBackend() = default;
    virtual ExactSolution solve(const ExactQuery& query) = 0;
};

/// Proven-optimal single-objective answers over the enumerated space: the
// optimum of any monotone query lies on the cached non-dominated front.
class EnumerationBackend : public ExactBackend {
  public:
    EnumerationBackend(const Instance& inst, const EnumOptions& opts = {});
    ExactSolution solve(const ExactQuery& query) override;
    const EnumeratedFront& enumerated() const { return cache_; }

  private:
    EnumeratedFront cache_;
};

/// LP-file + external-solver backend: interface stub only.
class LpFileBackend : public ExactBackend {
  public:
    explicit LpFileBackend(std::string lp_path) : path_(std::move(lp_path)) {}
    ExactSolution solve(const ExactQuery&) override; // always throws

  private:
    std::string path_;
};

// Augmented epsilon-constraint sweep over grid_points values of the z2 cap.
Front augmented_eps_constraint(ExactBackend& backend, int grid_points,
                               double delta = 1e-4);

} // namespace glrip
