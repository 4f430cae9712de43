#include "glrip/evaluation.hpp"

#include <cmath>

#include "glrip/inventory.hpp"

namespace glrip {

double fuel_rate(const Vehicle& v, double load) {
    if (v.capacity <= 0) return v.fuel_rate_empty;
    return v.fuel_rate_empty +
           (v.fuel_rate_full - v.fuel_rate_empty) * (load / v.capacity);
}

namespace {

struct DcAccum {
    double mu_sum = 0;
    double var_sum = 0;
};

std::vector<DcAccum> accumulate_demand(const Instance& inst, const Plan& plan) {
    std::vector<DcAccum> acc(inst.num_dcs());
    for (std::size_t r = 0; r < plan.assignment.size(); ++r) {
        int k = plan.assignment[r];
        if (k < 0) continue;
        acc[k].mu_sum += inst.retailers[r].demand_mean;
        acc[k].var_sum += inst.retailers[r].demand_var;
    }
    return acc;
}

double dc_expected_inventory(const Instance& inst, const DcOrder& o,
                             const DcAccum& acc) {
    double z = z_quantile(inst.weights.alpha);
    return expected_inventory_auto(acc.mu_sum, acc.var_sum, o.n, o.q,
                                   inst.dcs[o.dc].lead_time, z);
}

} // namespace

CostBreakdown evaluate_cost(const Instance& inst, const Plan& plan,
                            double penalty_rate) {
    CostBreakdown cb;
    const double beta = inst.weights.beta;
    const double theta = inst.weights.theta;
    auto acc = accumulate_demand(inst, plan);

    for (int k : plan.open_dcs) cb.fixed_dc += inst.dcs[k].fixed_cost;

    for (const auto& o : plan.orders) {
        const DcSite& dc = inst.dcs[o.dc];
        cb.shipping_inbound += beta * (dc.ship_fixed_cost + dc.ship_unit_cost * o.q) * o.n;
        cb.ordering += dc.order_cost * o.n;
        cb.inventory += theta * dc.holding_cost * dc_expected_inventory(inst, o, acc[o.dc]);
        for (const auto& t : o.inbound)
            cb.fixed_fleet += inst.vehicles_in[t.vehicle].fixed_cost;
    }

    for (const auto& t : plan.tours) {
        cb.fixed_fleet += inst.vehicles_out[t.vehicle].fixed_cost;
        const DcOrder* o = plan.order_for(t.dc);
        double n = o ? (double)o->n : 1.0;
        double dist = inst.dist_dc_retailer(t.dc, t.stops.front());
        for (std::size_t i = 0; i + 1 < t.stops.size(); ++i)
            dist += inst.dist_retailers(t.stops[i], t.stops[i + 1]);
        dist += inst.dist_dc_retailer(t.dc, t.stops.back());
        cb.shipping_outbound += beta * inst.unit_ship_rate * dist * n;
    }

    cb.penalty = penalty_value(plan, penalty_rate);
    return cb;
}

EmissionBreakdown evaluate_emission(const Instance& inst, const Plan& plan,
                                    double penalty_rate) {
    EmissionBreakdown eb;
    auto acc = accumulate_demand(inst, plan);

    for (const auto& o : plan.orders) {
        const DcSite& dc = inst.dcs[o.dc];
        double d_in = inst.dist_supplier_dc(o.dc);
        for (const auto& t : o.inbound) {
            const Vehicle& v = inst.vehicles_in[t.vehicle];
            // Loaded leg out plus empty return leg each cycle.
            double burn = fuel_rate(v, t.load) + fuel_rate(v, 0.0);
            eb.inbound += v.emission_factor * burn * d_in * o.n;
        }
        eb.dc += dc.emission_weight * dc.holding_cost *
                 dc_expected_inventory(inst, o, acc[o.dc]);
    }

    for (const auto& t : plan.tours) {
        const Vehicle& v = inst.vehicles_out[t.vehicle];
        const DcOrder* o = plan.order_for(t.dc);
        double n = o ? (double)o->n : 1.0;
        double e = fuel_rate(v, t.arc_loads.front()) *
                   inst.dist_dc_retailer(t.dc, t.stops.front());
        for (std::size_t i = 0; i + 1 < t.stops.size(); ++i)
            e += fuel_rate(v, t.arc_loads[i + 1]) *
                 inst.dist_retailers(t.stops[i], t.stops[i + 1]);
        e += fuel_rate(v, t.arc_loads.back()) *
             inst.dist_dc_retailer(t.dc, t.stops.back());
        eb.outbound += v.emission_factor * e * n;
    }

    eb.penalty = penalty_value(plan, penalty_rate);
    return eb;
}

ObjectivePair evaluate(const Instance& inst, const Plan& plan, double penalty_rate) {
    ObjectivePair z;
    z.z1 = evaluate_cost(inst, plan, penalty_rate).total();
    z.z2 = evaluate_emission(inst, plan, penalty_rate).total();
    return z;
}

} // namespace glrip
