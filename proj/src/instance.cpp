#include "glrip/instance.hpp"
#include "glrip/rng.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace glrip {

using nlohmann::json;

double euclid(double ax, double ay, double bx, double by) {
    return std::hypot(ax - bx, ay - by);
}

double Instance::total_mean_demand() const {
    double s = 0;
    for (const auto& r : retailers) s += r.demand_mean;
    return s;
}

double Instance::dist_supplier_dc(std::size_t k) const {
    const auto& d = dcs.at(k);
    return euclid(supplier_x, supplier_y, d.x, d.y);
}

double Instance::dist_dc_retailer(std::size_t k, std::size_t i) const {
    const auto& d = dcs.at(k);
    const auto& r = retailers.at(i);
    return euclid(d.x, d.y, r.x, r.y);
}

double Instance::dist_retailers(std::size_t i, std::size_t j) const {
    const auto& a = retailers.at(i);
    const auto& b = retailers.at(j);
    return euclid(a.x, a.y, b.x, b.y);
}

Instance generate(const GenSizes& sizes, std::uint64_t seed, const GenParams& p) {
    if (sizes.dcs == 0 || sizes.retailers == 0 || sizes.vehicles_in == 0 ||
        sizes.vehicles_out == 0) {
        throw std::invalid_argument("generate: all size counts must be >= 1");
    }
    Rng rng(seed);
    Instance inst;
    inst.seed = seed;
    inst.unit_ship_rate = p.unit_ship_rate;
    inst.supplier_x = rng.uniform(p.coord_lo, p.coord_hi);
    inst.supplier_y = rng.uniform(p.coord_lo, p.coord_hi);

    inst.retailers.reserve(sizes.retailers);
    for (std::size_t i = 0; i < sizes.retailers; ++i) {
        Retailer r;
        r.x = rng.uniform(p.coord_lo, p.coord_hi);
        r.y = rng.uniform(p.coord_lo, p.coord_hi);
        r.demand_mean = rng.uniform(p.mu_lo, p.mu_hi);
        r.demand_var = rng.uniform(p.var_lo, p.var_hi);
        inst.retailers.push_back(r);
    }
    const double total_mu = inst.total_mean_demand();

    // Random shares of capacity_ratio x total demand; keeps the fleet of sites
    // collectively able to host every retailer.
    std::vector<double> share(sizes.dcs);
    double share_sum = 0;
    for (auto& s : share) {
        s = rng.uniform(0.5, 1.5);
        share_sum += s;
    }
    inst.dcs.reserve(sizes.dcs);
    for (std::size_t k = 0; k < sizes.dcs; ++k) {
        DcSite d;
        d.x = rng.uniform(p.coord_lo, p.coord_hi);
        d.y = rng.uniform(p.coord_lo, p.coord_hi);
        d.fixed_cost = rng.uniform(p.dc_fixed_lo, p.dc_fixed_hi);
        d.ship_fixed_cost = rng.uniform(p.ship_fixed_lo, p.ship_fixed_hi);
        d.order_cost = rng.uniform(p.order_cost_lo, p.order_cost_hi);
        d.ship_unit_cost = rng.uniform(p.ship_unit_lo, p.ship_unit_hi);
        d.lead_time = rng.uniform(p.lead_lo, p.lead_hi);
        d.holding_cost = rng.uniform(p.holding_lo, p.holding_hi);
        d.capacity = share[k] / share_sum * p.capacity_ratio * total_mu;
        d.emission_weight = rng.uniform(p.eta_lo, p.eta_hi);
        inst.dcs.push_back(d);
    }

    auto gen_vehicle = [&](double cap_lo, double cap_hi) {
        Vehicle v;
        v.capacity = rng.uniform(cap_lo, cap_hi);
        v.fixed_cost = rng.uniform(p.veh_fixed_lo, p.veh_fixed_hi);
        v.fuel_rate_empty = rng.uniform(p.fuel_empty_lo, p.fuel_empty_hi);
        v.fuel_rate_full =
            v.fuel_rate_empty * rng.uniform(p.fuel_full_factor_lo, p.fuel_full_factor_hi);
        v.emission_factor = p.emission_factor;
        return v;
    };
    inst.vehicles_in.reserve(sizes.vehicles_in);
    for (std::size_t v = 0; v < sizes.vehicles_in; ++v)
        inst.vehicles_in.push_back(gen_vehicle(p.veh_in_cap_lo, p.veh_in_cap_hi));
    inst.vehicles_out.reserve(sizes.vehicles_out);
    for (std::size_t v = 0; v < sizes.vehicles_out; ++v)
        inst.vehicles_out.push_back(gen_vehicle(p.veh_out_cap_lo, p.veh_out_cap_hi));

    inst.weights.beta = p.beta;
    inst.weights.theta = p.theta;
    inst.weights.alpha = p.alpha;
    inst.weights.big_m = 2.0 * total_mu;
    return inst;
}

std::vector<GenSizes> benchmark_sizes() {
    return {
        {2, 4, 3, 3},   {2, 4, 4, 3},   {2, 4, 3, 4},   {3, 5, 3, 3},
        {3, 5, 4, 4},   {3, 7, 3, 3},   {4, 10, 5, 5},  {5, 15, 7, 7},
        {6, 20, 9, 9},  {7, 25, 11, 11}, {8, 30, 13, 13}, {10, 50, 15, 15},
    };
}

namespace {

// Pull a finite number out of a JSON object, naming the field on failure.
double num_field(const json& obj, const char* field, const std::string& where) {
    if (!obj.contains(field))
        throw std::runtime_error("instance schema: missing field '" + where + field + "'");
    const auto& v = obj.at(field);
    if (!v.is_number())
        throw std::runtime_error("instance schema: field '" + where + field +
                                 "' must be a number");
    return v.get<double>();
}

double nonneg_field(const json& obj, const char* field, const std::string& where) {
    double x = num_field(obj, field, where);
    if (x < 0)
        throw std::runtime_error("instance schema: field '" + where + field +
                                 "' must be >= 0");
    return x;
}

json vehicle_to_json(const Vehicle& v) {
    return json{{"capacity", v.capacity},
                {"fixed_cost", v.fixed_cost},
                {"fuel_rate_empty", v.fuel_rate_empty},
                {"fuel_rate_full", v.fuel_rate_full},
                {"emission_factor", v.emission_factor}};
}

Vehicle vehicle_from_json(const json& j, const std::string& where) {
    Vehicle v;
    v.capacity = nonneg_field(j, "capacity", where);
    v.fixed_cost = nonneg_field(j, "fixed_cost", where);
    v.fuel_rate_empty = nonneg_field(j, "fuel_rate_empty", where);
    v.fuel_rate_full = nonneg_field(j, "fuel_rate_full", where);
    v.emission_factor = nonneg_field(j, "emission_factor", where);
    return v;
}

} // namespace

std::string instance_to_json(const Instance& inst) {
    json j;
    j["schema"] = 1;
    j["seed"] = inst.seed;
    j["supplier"] = {inst.supplier_x, inst.supplier_y};
    j["weights"] = {{"beta", inst.weights.beta},
                    {"theta", inst.weights.theta},
                    {"alpha", inst.weights.alpha},
                    {"big_m", inst.weights.big_m},
                    {"unit_ship_rate", inst.unit_ship_rate}};
    j["dcs"] = json::array();
    for (const auto& d : inst.dcs) {
        j["dcs"].push_back({{"coord", {d.x, d.y}},
                            {"fixed_cost", d.fixed_cost},
                            {"ship_fixed_cost", d.ship_fixed_cost},
                            {"order_cost", d.order_cost},
                            {"ship_unit_cost", d.ship_unit_cost},
                            {"lead_time", d.lead_time},
                            {"holding_cost", d.holding_cost},
                            {"capacity", d.capacity},
                            {"emission_weight", d.emission_weight}});
    }
    j["retailers"] = json::array();
    for (const auto& r : inst.retailers) {
        j["retailers"].push_back({{"coord", {r.x, r.y}},
                                  {"demand_mean", r.demand_mean},
                                  {"demand_var", r.demand_var}});
    }
    j["vehicles_in"] = json::array();
    for (const auto& v : inst.vehicles_in) j["vehicles_in"].push_back(vehicle_to_json(v));
    j["vehicles_out"] = json::array();
    for (const auto& v : inst.vehicles_out) j["vehicles_out"].push_back(vehicle_to_json(v));
    return j.dump(2);
}

Instance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("instance schema: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("instance schema: root must be an object");
    if (!j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != 1)
        throw std::runtime_error("instance schema: field 'schema' must be 1");
    for (const char* key : {"dcs", "retailers", "vehicles_in", "vehicles_out"}) {
        if (!j.contains(key) || !j[key].is_array() || j[key].empty())
            throw std::runtime_error("instance schema: field '" + std::string(key) +
                                     "' must be a nonempty array");
    }
    if (!j.contains("supplier") || !j["supplier"].is_array() || j["supplier"].size() != 2)
        throw std::runtime_error("instance schema: field 'supplier' must be [x, y]");
    if (!j.contains("weights") || !j["weights"].is_object())
        throw std::runtime_error("instance schema: field 'weights' must be an object");

    Instance inst;
    inst.seed = j.value("seed", 0ull);
    inst.supplier_x = j["supplier"][0].get<double>();
    inst.supplier_y = j["supplier"][1].get<double>();
    const auto& w = j["weights"];
    inst.weights.beta = num_field(w, "beta", "weights.");
    inst.weights.theta = num_field(w, "theta", "weights.");
    inst.weights.alpha = num_field(w, "alpha", "weights.");
    inst.weights.big_m = num_field(w, "big_m", "weights.");
    inst.unit_ship_rate = num_field(w, "unit_ship_rate", "weights.");
    if (inst.weights.alpha <= 0 || inst.weights.alpha >= 1)
        throw std::runtime_error("instance schema: field 'weights.alpha' must be in (0,1)");

    std::size_t idx = 0;
    for (const auto& dj : j["dcs"]) {
        const std::string where = "dcs[" + std::to_string(idx++) + "].";
        if (!dj.contains("coord") || !dj["coord"].is_array() || dj["coord"].size() != 2)
            throw std::runtime_error("instance schema: field '" + where +
                                     "coord' must be [x, y]");
        DcSite d;
        d.x = dj["coord"][0].get<double>();
        d.y = dj["coord"][1].get<double>();
        d.fixed_cost = nonneg_field(dj, "fixed_cost", where);
        d.ship_fixed_cost = nonneg_field(dj, "ship_fixed_cost", where);
        d.order_cost = nonneg_field(dj, "order_cost", where);
        d.ship_unit_cost = nonneg_field(dj, "ship_unit_cost", where);
        d.lead_time = nonneg_field(dj, "lead_time", where);
        d.holding_cost = nonneg_field(dj, "holding_cost", where);
        d.capacity = nonneg_field(dj, "capacity", where);
        d.emission_weight = nonneg_field(dj, "emission_weight", where);
        inst.dcs.push_back(d);
    }
    idx = 0;
    for (const auto& rj : j["retailers"]) {
        const std::string where = "retailers[" + std::to_string(idx++) + "].";
        if (!rj.contains("coord") || !rj["coord"].is_array() || rj["coord"].size() != 2)
            throw std::runtime_error("instance schema: field '" + where +
                                     "coord' must be [x, y]");
        Retailer r;
        r.x = rj["coord"][0].get<double>();
        r.y = rj["coord"][1].get<double>();
        r.demand_mean = nonneg_field(rj, "demand_mean", where);
        r.demand_var = nonneg_field(rj, "demand_var", where);
        inst.retailers.push_back(r);
    }
    idx = 0;
    for (const auto& vj : j["vehicles_in"])
        inst.vehicles_in.push_back(
            vehicle_from_json(vj, "vehicles_in[" + std::to_string(idx++) + "]."));
    idx = 0;
    for (const auto& vj : j["vehicles_out"])
        inst.vehicles_out.push_back(
            vehicle_from_json(vj, "vehicles_out[" + std::to_string(idx++) + "]."));
    return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << instance_to_json(inst) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

} // namespace glrip
