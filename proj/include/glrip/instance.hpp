#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glrip {

// One candidate distribution-center site and its cost/inventory parameters.
struct DcSite {
    double x = 0, y = 0;
    double fixed_cost = 0;      // annual establishment cost
    double ship_fixed_cost = 0; // fixed shipping cost per order cycle
    double order_cost = 0;      // fixed ordering (administrative) cost per cycle
    double ship_unit_cost = 0;  // shipping cost per unit per cycle
    double lead_time = 0;       // replenishment lead time
    double holding_cost = 0;    // per-unit annual holding cost
    double capacity = 0;        // max annual demand the site can host
    double emission_weight = 0; // site emission factor applied to held inventory
};

struct Retailer {
    double x = 0, y = 0;
    double demand_mean = 0; // annual demand, normal mean
    double demand_var = 0;  // annual demand, normal variance
};

struct Vehicle {
    double capacity = 0;
    double fixed_cost = 0;      // per-dispatch fixed cost
    double fuel_rate_empty = 0; // fuel use per distance, empty
    double fuel_rate_full = 0;  // fuel use per distance, fully loaded
    double emission_factor = 0; // CO2 mass per fuel unit
};

struct Weights {
    double beta = 1.0;   // shipping-cost weight
    double theta = 1.0;  // inventory-cost weight
    double alpha = 0.95; // cycle service level
    double big_m = 0;    // big-M used by the scenario logic / exported model
};

struct Instance {
    std::vector<DcSite> dcs;
    std::vector<Retailer> retailers;
    std::vector<Vehicle> vehicles_in;
    std::vector<Vehicle> vehicles_out;
    double supplier_x = 0, supplier_y = 0;
    Weights weights;
    double unit_ship_rate = 1.0; // arc shipping cost per unit distance
    std::uint64_t seed = 0;

    std::size_t num_dcs() const { return dcs.size(); }
    std::size_t num_retailers() const { return retailers.size(); }

    double total_mean_demand() const;

    // Euclidean distances between network nodes.
    double dist_supplier_dc(std::size_t k) const;
    double dist_dc_retailer(std::size_t k, std::size_t i) const;
    double dist_retailers(std::size_t i, std::size_t j) const;
    // Arc shipping cost c is unit_ship_rate x distance.
    double arc_cost_dc_retailer(std::size_t k, std::size_t i) const {
        return unit_ship_rate * dist_dc_retailer(k, i);
    }
    double arc_cost_retailers(std::size_t i, std::size_t j) const {
        return unit_ship_rate * dist_retailers(i, j);
    }
};

double euclid(double ax, double ay, double bx, double by);

struct GenSizes {
    std::size_t dcs = 0, retailers = 0, vehicles_in = 0, vehicles_out = 0;
};

// Distribution knobs with paper-scale defaults; everything generate() draws is
// overridable here.
struct GenParams {
    double dc_fixed_lo = 500, dc_fixed_hi = 1000;
    double ship_fixed_lo = 10, ship_fixed_hi = 15;
    double order_cost_lo = 10, order_cost_hi = 15;
    double ship_unit_lo = 5, ship_unit_hi = 10;
    double lead_lo = 6, lead_hi = 10;
    double holding_lo = 5, holding_hi = 10;
    double mu_lo = 400, mu_hi = 1500;
    double var_lo = 10, var_hi = 100;
    double coord_lo = 0, coord_hi = 100;
    double veh_in_cap_lo = 800, veh_in_cap_hi = 1500;
    double veh_out_cap_lo = 400, veh_out_cap_hi = 900;
    double veh_fixed_lo = 50, veh_fixed_hi = 100;
    double fuel_empty_lo = 0.1, fuel_empty_hi = 0.2;
    double fuel_full_factor_lo = 1.5, fuel_full_factor_hi = 2.5;
    double emission_factor = 2.6;
    double eta_lo = 0.5, eta_hi = 1.5;
    double beta = 1.0, theta = 1.0, alpha = 0.95;
    double unit_ship_rate = 1.0;
    // DC capacities are random shares of capacity_ratio x total mean demand,
    // so sum(capacity) >= sum(mu) always holds.
    double capacity_ratio = 1.4;
};

Instance generate(const GenSizes& sizes, std::uint64_t seed,
                  const GenParams& params = {});

// The twelve benchmark sizes, smallest to largest.
std::vector<GenSizes> benchmark_sizes();

void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

} // namespace glrip
