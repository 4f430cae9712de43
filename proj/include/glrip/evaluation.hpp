#pragma once

#include <cstdint>
#include <vector>

#include "glrip/decoder.hpp"
#include "glrip/instance.hpp"

namespace glrip {

struct ObjectivePair {
    double z1 = 0; // annual cost
    double z2 = 0; // annual emissions
};

struct CostBreakdown {
    double fixed_dc = 0;       // opening costs of used DCs
    double fixed_fleet = 0;    // fixed charges of dispatched vehicles
    double shipping_inbound = 0;  // per-shipment + per-unit inbound transport
    double shipping_outbound = 0; // distance-based delivery transport
    double ordering = 0;       // DC ordering cost x frequency
    double inventory = 0;      // expected on-hand stock x holding cost
    double penalty = 0;        // unserved-retailer surcharge
    double total() const {
        return fixed_dc + fixed_fleet + shipping_inbound + shipping_outbound +
               ordering + inventory + penalty;
    }
};

struct EmissionBreakdown {
    double inbound = 0;  // supplier -> DC round trips
    double outbound = 0; // delivery tours
    double dc = 0;       // stock-dependent emissions at DCs
    double penalty = 0;
    double total() const { return inbound + outbound + dc + penalty; }
};

// Load-dependent fuel burn per unit distance for one vehicle.
double fuel_rate(const Vehicle& v, double load);

CostBreakdown evaluate_cost(const Instance& inst, const Plan& plan,
                            double penalty_rate = 1e6);
EmissionBreakdown evaluate_emission(const Instance& inst, const Plan& plan,
                                    double penalty_rate = 1e6);
ObjectivePair evaluate(const Instance& inst, const Plan& plan,
                       double penalty_rate = 1e6);

// Convenience wrapper counting decode+evaluate calls (drives budget checks).
class Evaluator {
  public:
    Evaluator(const Instance& inst, const DecodeParams& params)
        : inst_(inst), params_(params) {}

    ObjectivePair operator()(const Chromosome& chrom) {
        ++count_;
        Plan p = decode(inst_, chrom, params_);
        return evaluate(inst_, p, params_.penalty_rate);
    }
    Plan decode_only(const Chromosome& chrom) const {
        return decode(inst_, chrom, params_);
    }
    std::uint64_t count() const { return count_; }
    const Instance& instance() const { return inst_; }
    const DecodeParams& params() const { return params_; }

  private:
    const Instance& inst_;
    DecodeParams params_;
    std::uint64_t count_ = 0;
};

} // namespace glrip
