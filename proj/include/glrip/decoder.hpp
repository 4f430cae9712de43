#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glrip/instance.hpp"
#include "glrip/rng.hpp"

namespace glrip {

// Random-key chromosome: |K| DC keys, |I| retailer keys, |V_in| + |V_out|
// vehicle keys, all strictly inside (0,1).
using Chromosome = std::vector<double>;

struct DecodeParams {
    int n_max = 0;             // 0: use default_n_max(instance)
    double penalty_rate = 1e6; // objective surcharge per unserved retailer
    bool two_opt = false;      // optional intra-tour improvement pass
};

int default_n_max(const Instance& inst);

struct InboundTrip {
    int vehicle = -1; // index into instance.vehicles_in
    double load = 0;  // per-cycle shipment on the supplier->DC leg
};

struct DcOrder {
    int dc = -1;
    int n = 0;      // order cycles per year
    double q = 0;   // per-cycle order quantity
    std::vector<InboundTrip> inbound;
};

struct Tour {
    int dc = -1;
    int vehicle = -1;            // index into instance.vehicles_out
    std::vector<int> stops;      // retailer indices in visit order
    std::vector<double> arc_loads; // stops.size()+1 loads; last (return) is 0
};

struct Plan {
    std::vector<int> open_dcs;
    std::vector<int> assignment; // retailer -> DC index, or -1
    std::vector<DcOrder> orders; // one per open DC, in open_dcs order
    std::vector<Tour> tours;
    std::vector<int> unassigned; // retailers left unserved (sorted)
    bool feasible = true;

    const DcOrder* order_for(int dc) const;
};

// Ascending stable sort of key indices; the smallest key gets first priority.
std::vector<std::size_t> priority_order(const double* keys, std::size_t n);
std::vector<std::size_t> priority_order(const std::vector<double>& keys);

struct AssignResult {
    std::vector<int> assignment;
    std::vector<int> unassigned;
};

// Greedy packing: walk DCs in priority order, pack retailers in priority
// order while capacity allows; a violation closes the current DC for good and
// the violating retailer is tried at the next one.
AssignResult assign_retailers(const std::vector<std::size_t>& retailer_order,
                              const std::vector<std::size_t>& dc_order,
                              const Instance& inst);

// Per-frequency minimum vehicle counts: entry[n] vehicles (greedy
// largest-first) cover annual_demand/n, or -1 when the whole fleet cannot.
// entry[0] is unused and set to -1.
std::vector<int> vehicle_count_table(double annual_demand,
                                     const std::vector<Vehicle>& fleet, int n_max);

// Priority orders driving a decode; the chromosome path derives them from
// keys, the exhaustive enumerator feeds explicit permutations.
struct PriorityOrders {
    std::vector<std::size_t> dc, retailer, veh_in, veh_out;
};

// Frequency choice per DC: either mapped from the DC's key (keys != nullptr)
// or picked by explicit per-DC values (explicit_n != nullptr, entries matched
// against the feasible set; a value absent from the set marks the plan
// infeasible). Exactly one source must be set.
struct FreqSelector {
    const double* keys = nullptr;
    const int* explicit_n = nullptr;
};

Plan decode_with_orders(const Instance& inst, const PriorityOrders& orders,
                        const FreqSelector& freq, const DecodeParams& params);

Plan decode(const Instance& inst, const Chromosome& chrom, const DecodeParams& params);

// Feasible-frequency set for one DC against both fleets (helper shared with
// the enumerator).
std::vector<int> feasible_frequencies(const Instance& inst, double annual_demand,
                                      int n_max);

Chromosome random_chromosome(const Instance& inst, Rng& rng);
std::size_t chromosome_length(const Instance& inst);

// Penalty added to both objectives: rate x |unassigned|.
double penalty_value(const Plan& plan, double penalty_rate);

// Re-derives the structural constraints from a decoded plan; returns human-
// readable violation descriptions (empty = clean).
std::vector<std::string> validate_plan(const Instance& inst, const Plan& plan);

std::string plan_to_json(const Plan& plan, double z1, double z2);

} // namespace glrip
