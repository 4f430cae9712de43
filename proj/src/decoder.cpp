#include "glrip/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glrip {

const DcOrder* Plan::order_for(int dc) const {
    for (const auto& o : orders)
        if (o.dc == dc) return &o;
    return nullptr;
}

int default_n_max(const Instance& inst) {
    double min_cap = 0;
    for (const auto& v : inst.vehicles_out)
        if (min_cap == 0 || v.capacity < min_cap) min_cap = v.capacity;
    if (min_cap <= 0) return 1;
    int by_cap = (int)std::ceil(inst.total_mean_demand() / min_cap);
    return std::max(1, std::min(20, by_cap));
}

std::vector<std::size_t> priority_order(const double* keys, std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    return idx;
}

std::vector<std::size_t> priority_order(const std::vector<double>& keys) {
    return priority_order(keys.data(), keys.size());
}

AssignResult assign_retailers(const std::vector<std::size_t>& retailer_order,
                              const std::vector<std::size_t>& dc_order,
                              const Instance& inst) {
    AssignResult res;
    res.assignment.assign(inst.num_retailers(), -1);
    if (dc_order.empty()) {
        for (std::size_t r : retailer_order) res.unassigned.push_back((int)r);
        std::sort(res.unassigned.begin(), res.unassigned.end());
        return res;
    }
    std::size_t d = 0; // pointer into dc_order; earlier DCs never reopen
    std::vector<double> load(inst.num_dcs(), 0.0);
    for (std::size_t r : retailer_order) {
        double mu = inst.retailers[r].demand_mean;
        bool placed = false;
        while (d < dc_order.size()) {
            int k = (int)dc_order[d];
            if (load[k] + mu <= inst.dcs[k].capacity) {
                load[k] += mu;
                res.assignment[r] = k;
                placed = true;
                break;
            }
            ++d; // close this DC, try the next
        }
        if (!placed) res.unassigned.push_back((int)r);
    }
    std::sort(res.unassigned.begin(), res.unassigned.end());
    return res;
}

std::vector<int> vehicle_count_table(double annual_demand,
                                     const std::vector<Vehicle>& fleet, int n_max) {
    std::vector<double> caps;
    caps.reserve(fleet.size());
    for (const auto& v : fleet) caps.push_back(v.capacity);
    std::sort(caps.begin(), caps.end(), std::greater<double>());
    double total = std::accumulate(caps.begin(), caps.end(), 0.0);

    std::vector<int> table(n_max + 1, -1);
    for (int n = 1; n <= n_max; ++n) {
        double q = annual_demand / n;
        if (q > total) continue; // stays -1: whole fleet cannot cover a cycle
        double acc = 0;
        int cnt = 0;
        for (double c : caps) {
            acc += c;
            ++cnt;
            if (acc >= q) break;
        }
        table[n] = cnt;
    }
    return table;
}

std::vector<int> feasible_frequencies(const Instance& inst, double annual_demand,
                                      int n_max) {
    std::vector<int> in_tab = vehicle_count_table(annual_demand, inst.vehicles_in, n_max);
    std::vector<int> out_tab = vehicle_count_table(annual_demand, inst.vehicles_out, n_max);
    std::vector<int> feas;
    for (int n = 1; n <= n_max; ++n)
        if (in_tab[n] >= 0 && out_tab[n] >= 0) feas.push_back(n);
    return feas;
}

namespace {

struct VehicleQueue {
    std::deque<int> q;
    explicit VehicleQueue(const std::vector<std::size_t>& order) {
        for (std::size_t v : order) q.push_back((int)v);
    }
    bool empty() const { return q.empty(); }
    int peek() const { return q.front(); }
    int pop() {
        int v = q.front();
        q.pop_front();
        return v;
    }
    // Reinsert unused vehicles at the front, preserving their relative order.
    void restore_front(const std::vector<int>& vs) {
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) q.push_front(*it);
    }
};

void mark_unserved(Plan& plan, const Instance& inst, int dc,
                   std::vector<std::vector<int>>& by_dc) {
    for (int r : by_dc[dc]) {
        plan.assignment[r] = -1;
        plan.unassigned.push_back(r);
    }
    by_dc[dc].clear();
    (void)inst;
}

double tour_length(const Instance& inst, int dc, const std::vector<int>& stops) {
    if (stops.empty()) return 0;
    double len = inst.dist_dc_retailer(dc, stops.front());
    for (std::size_t i = 0; i + 1 < stops.size(); ++i)
        len += inst.dist_retailers(stops[i], stops[i + 1]);
    len += inst.dist_dc_retailer(dc, stops.back());
    return len;
}

void two_opt_tour(const Instance& inst, int dc, std::vector<int>& stops) {
    if (stops.size() < 3) return;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
            for (std::size_t j = i + 1; j < stops.size(); ++j) {
                std::reverse(stops.begin() + i, stops.begin() + j + 1);
                double after = tour_length(inst, dc, stops);
                std::reverse(stops.begin() + i, stops.begin() + j + 1);
                double before = tour_length(inst, dc, stops);
                if (after + 1e-12 < before) {
                    std::reverse(stops.begin() + i, stops.begin() + j + 1);
                    improved = true;
                }
            }
        }
    }
}

} // namespace

Plan decode_with_orders(const Instance& inst, const PriorityOrders& orders,
                        const FreqSelector& freq, const DecodeParams& params) {
    if ((freq.keys == nullptr) == (freq.explicit_n == nullptr))
        throw std::invalid_argument("decode: exactly one frequency source required");
    DecodeParams p = params;
    if (p.n_max <= 0) p.n_max = default_n_max(inst);

    Plan plan;
    AssignResult ar = assign_retailers(orders.retailer, orders.dc, inst);
    plan.assignment = std::move(ar.assignment);
    plan.unassigned = std::move(ar.unassigned);

    std::vector<std::vector<int>> by_dc(inst.num_dcs());
    // Group retailers per DC in retailer-priority order (drives tour order).
    for (std::size_t r : orders.retailer)
        if (plan.assignment[r] >= 0) by_dc[plan.assignment[r]].push_back((int)r);

    // Frequency choice per open DC, walking DCs in priority order.
    struct Open {
        int dc;
        int n;
        double demand;
        double q;
    };
    std::vector<Open> open;
    for (std::size_t kk : orders.dc) {
        int k = (int)kk;
        if (by_dc[k].empty()) continue;
        double demand = 0;
        for (int r : by_dc[k]) demand += inst.retailers[r].demand_mean;
        std::vector<int> feas = feasible_frequencies(inst, demand, p.n_max);
        int n = 0;
        if (!feas.empty()) {
            if (freq.keys) {
                auto pos = (std::size_t)((double)feas.size() * freq.keys[k]);
                if (pos >= feas.size()) pos = feas.size() - 1;
                n = feas[pos];
            } else {
                int want = freq.explicit_n[k];
                if (std::find(feas.begin(), feas.end(), want) != feas.end()) n = want;
            }
        }
        if (n == 0) {
            mark_unserved(plan, inst, k, by_dc);
            continue;
        }
        open.push_back({k, n, demand, demand / n});
    }

    VehicleQueue inq(orders.veh_in);
    VehicleQueue outq(orders.veh_out);

    // Inbound: each DC takes vehicles from the head of the shared queue until
    // their combined capacity covers q, then splits q largest-first.
    std::vector<Open> kept;
    for (const Open& o : open) {
        std::vector<int> taken;
        double cap_sum = 0;
        while (cap_sum < o.q && !inq.empty()) {
            int v = inq.pop();
            taken.push_back(v);
            cap_sum += inst.vehicles_in[v].capacity;
        }
        if (cap_sum < o.q) {
            // Fleet exhausted: DC cannot be replenished. Taken vehicles stay
            // consumed; its retailers go unserved.
            mark_unserved(plan, inst, o.dc, by_dc);
            continue;
        }
        std::vector<int> split = taken;
        std::stable_sort(split.begin(), split.end(), [&](int a, int b) {
            return inst.vehicles_in[a].capacity > inst.vehicles_in[b].capacity;
        });
        DcOrder ord;
        ord.dc = o.dc;
        ord.n = o.n;
        ord.q = o.q;
        double rem = o.q;
        std::vector<int> unused;
        for (int v : split) {
            double load = std::min(rem, inst.vehicles_in[v].capacity);
            rem -= load;
            if (load > 0)
                ord.inbound.push_back({v, load});
            else
                unused.push_back(v);
        }
        if (!unused.empty()) {
            // Keep queue priority for vehicles the split left empty.
            std::vector<int> back;
            for (int v : taken)
                if (std::find(unused.begin(), unused.end(), v) != unused.end())
                    back.push_back(v);
            inq.restore_front(back);
        }
        plan.orders.push_back(std::move(ord));
        kept.push_back(o);
    }

    // Outbound: first-fit packing of per-cycle chunks (mu_i / n) in retailer
    // priority order; a new bin is the vehicle at the head of the shared
    // queue, opened only when the chunk fits it.
    for (const Open& o : kept) {
        struct Bin {
            int vehicle;
            double load;
            std::vector<int> stops;
        };
        std::vector<Bin> bins;
        std::vector<int> still; // retailers that found a bin
        std::vector<int> dropped;
        for (int r : by_dc[o.dc]) {
            double chunk = inst.retailers[r].demand_mean / o.n;
            bool placed = false;
            for (auto& b : bins) {
                if (b.load + chunk <= inst.vehicles_out[b.vehicle].capacity + 1e-9) {
                    b.load += chunk;
                    b.stops.push_back(r);
                    placed = true;
                    break;
                }
            }
            if (!placed && !outq.empty() &&
                chunk <= inst.vehicles_out[outq.peek()].capacity + 1e-9) {
                int v = outq.pop();
                bins.push_back({v, chunk, {r}});
                placed = true;
            }
            if (placed)
                still.push_back(r);
            else
                dropped.push_back(r);
        }
        for (int r : dropped) {
            plan.assignment[r] = -1;
            plan.unassigned.push_back(r);
        }
        if (still.empty()) {
            // Whole DC lost its retailers to packing failures: retract order.
            plan.orders.erase(std::remove_if(plan.orders.begin(), plan.orders.end(),
                                             [&](const DcOrder& d) { return d.dc == o.dc; }),
                              plan.orders.end());
            continue;
        }
        if (!dropped.empty()) {
            // Shrink the order to the demand actually served.
            double demand = 0;
            for (int r : still) demand += inst.retailers[r].demand_mean;
            for (auto& d : plan.orders)
                if (d.dc == o.dc) {
                    d.q = demand / d.n;
                    double rem = d.q;
                    for (auto& trip : d.inbound) {
                        trip.load = std::min(rem, trip.load);
                        rem -= trip.load;
                    }
                    d.inbound.erase(std::remove_if(d.inbound.begin(), d.inbound.end(),
                                                   [](const InboundTrip& t) {
                                                       return t.load <= 0;
                                                   }),
                                    d.inbound.end());
                }
            by_dc[o.dc] = still;
        }
        for (auto& b : bins) {
            Tour t;
            t.dc = o.dc;
            t.vehicle = b.vehicle;
            t.stops = b.stops;
            if (p.two_opt) two_opt_tour(inst, o.dc, t.stops);
            double total = 0;
            for (int r : t.stops) total += inst.retailers[r].demand_mean / o.n;
            t.arc_loads.resize(t.stops.size() + 1);
            double carry = total;
            for (std::size_t i = 0; i < t.stops.size(); ++i) {
                t.arc_loads[i] = carry;
                carry -= inst.retailers[t.stops[i]].demand_mean / o.n;
            }
            t.arc_loads.back() = std::max(0.0, carry);
            plan.tours.push_back(std::move(t));
        }
    }

    std::sort(plan.unassigned.begin(), plan.unassigned.end());
    plan.unassigned.erase(std::unique(plan.unassigned.begin(), plan.unassigned.end()),
                          plan.unassigned.end());
    for (const auto& o : plan.orders) plan.open_dcs.push_back(o.dc);
    plan.feasible = plan.unassigned.empty();
    return plan;
}

std::size_t chromosome_length(const Instance& inst) {
    return inst.num_dcs() + inst.num_retailers() + inst.vehicles_in.size() +
           inst.vehicles_out.size();
}

Chromosome random_chromosome(const Instance& inst, Rng& rng) {
    Chromosome c(chromosome_length(inst));
    for (double& g : c) g = rng.unit();
    return c;
}

Plan decode(const Instance& inst, const Chromosome& chrom, const DecodeParams& params) {
    if (chrom.size() != chromosome_length(inst))
        throw std::invalid_argument("decode: chromosome length mismatch");
    std::size_t K = inst.num_dcs(), I = inst.num_retailers();
    std::size_t Vin = inst.vehicles_in.size();
    PriorityOrders ord;
    ord.dc = priority_order(chrom.data(), K);
    ord.retailer = priority_order(chrom.data() + K, I);
    ord.veh_in = priority_order(chrom.data() + K + I, Vin);
    ord.veh_out = priority_order(chrom.data() + K + I + Vin, inst.vehicles_out.size());
    FreqSelector freq;
    freq.keys = chrom.data(); // DC keys double as frequency keys
    return decode_with_orders(inst, ord, freq, params);
}

double penalty_value(const Plan& plan, double penalty_rate) {
    return penalty_rate * (double)plan.unassigned.size();
}

std::vector<std::string> validate_plan(const Instance& inst, const Plan& plan) {
    std::vector<std::string> errs;
    auto err = [&](const std::string& s) { errs.push_back(s); };
    std::vector<char> is_open(inst.num_dcs(), 0);
    for (int k : plan.open_dcs) {
        if (k < 0 || k >= (int)inst.num_dcs()) {
            err("open DC index out of range");
            continue;
        }
        if (is_open[k]) err("DC listed open twice");
        is_open[k] = 1;
    }

    std::vector<double> dc_demand(inst.num_dcs(), 0.0);
    std::vector<int> served_count(inst.num_retailers(), 0);
    for (std::size_t r = 0; r < plan.assignment.size(); ++r) {
        int k = plan.assignment[r];
        if (k < 0) continue;
        if (k >= (int)inst.num_dcs()) {
            err("assignment to DC out of range");
            continue;
        }
        if (!is_open[k]) err("retailer assigned to a closed DC");
        dc_demand[k] += inst.retailers[r].demand_mean;
    }
    for (std::size_t k = 0; k < inst.num_dcs(); ++k)
        if (dc_demand[k] > inst.dcs[k].capacity + 1e-6)
            err("DC demand exceeds capacity");

    std::vector<char> in_used(inst.vehicles_in.size(), 0);
    for (const auto& o : plan.orders) {
        if (o.dc < 0 || o.dc >= (int)inst.num_dcs() || !is_open[o.dc]) {
            err("order for a DC that is not open");
            continue;
        }
        if (o.n < 1) err("order frequency below one");
        double q_expected = dc_demand[o.dc] / std::max(1, o.n);
        if (std::abs(o.q - q_expected) > 1e-6 * std::max(1.0, q_expected))
            err("order quantity does not equal demand / frequency");
        double in_sum = 0;
        if (o.inbound.empty()) err("open DC without inbound trips");
        for (const auto& t : o.inbound) {
            if (t.vehicle < 0 || t.vehicle >= (int)inst.vehicles_in.size()) {
                err("inbound vehicle out of range");
                continue;
            }
            if (in_used[t.vehicle]) err("inbound vehicle used twice");
            in_used[t.vehicle] = 1;
            if (t.load > inst.vehicles_in[t.vehicle].capacity + 1e-6)
                err("inbound load exceeds vehicle capacity");
            if (t.load <= 0) err("inbound trip with no load");
            in_sum += t.load;
        }
        if (std::abs(in_sum - o.q) > 1e-6 * std::max(1.0, o.q))
            err("inbound loads do not sum to order quantity");
    }
    for (int k : plan.open_dcs)
        if (!plan.order_for(k)) err("open DC without an order");

    std::vector<char> out_used(inst.vehicles_out.size(), 0);
    for (const auto& t : plan.tours) {
        if (t.dc < 0 || t.dc >= (int)inst.num_dcs() || !is_open[t.dc]) {
            err("tour from a DC that is not open");
            continue;
        }
        if (t.vehicle < 0 || t.vehicle >= (int)inst.vehicles_out.size()) {
            err("tour vehicle out of range");
            continue;
        }
        if (out_used[t.vehicle]) err("outbound vehicle used twice");
        out_used[t.vehicle] = 1;
        if (t.stops.empty()) {
            err("empty tour");
            continue;
        }
        if (t.arc_loads.size() != t.stops.size() + 1) {
            err("arc load vector length mismatch");
            continue;
        }
        const DcOrder* ord = plan.order_for(t.dc);
        int n = ord ? ord->n : 1;
        double expect = 0;
        for (int r : t.stops) {
            if (r < 0 || r >= (int)inst.num_retailers()) {
                err("tour stop out of range");
                continue;
            }
            if (plan.assignment[r] != t.dc) err("tour visits retailer of another DC");
            ++served_count[r];
            expect += inst.retailers[r].demand_mean / n;
        }
        if (t.arc_loads.front() > inst.vehicles_out[t.vehicle].capacity + 1e-6)
            err("tour load exceeds vehicle capacity");
        if (std::abs(t.arc_loads.front() - expect) > 1e-6 * std::max(1.0, expect))
            err("departure load does not match served demand");
        double carry = t.arc_loads.front();
        for (std::size_t i = 0; i < t.stops.size(); ++i) {
            if (std::abs(t.arc_loads[i] - carry) > 1e-6 * std::max(1.0, carry))
                err("arc load does not decrease by the delivered amount");
            carry -= inst.retailers[t.stops[i]].demand_mean / n;
        }
        if (std::abs(t.arc_loads.back()) > 1e-6) err("return arc carries load");
    }
    for (std::size_t r = 0; r < inst.num_retailers(); ++r) {
        bool assigned = r < plan.assignment.size() && plan.assignment[r] >= 0;
        bool listed =
            std::find(plan.unassigned.begin(), plan.unassigned.end(), (int)r) !=
            plan.unassigned.end();
        if (assigned && listed) err("retailer both assigned and unassigned");
        if (!assigned && !listed) err("retailer neither assigned nor unassigned");
        if (assigned && served_count[r] != 1) err("assigned retailer not visited exactly once");
    }
    if (plan.feasible != plan.unassigned.empty())
        err("feasible flag contradicts unassigned list");
    return errs;
}

std::string plan_to_json(const Plan& plan, double z1, double z2) {
    std::ostringstream os;
    os.precision(17);
    os << "{\n  \"open_dcs\": [";
    for (std::size_t i = 0; i < plan.open_dcs.size(); ++i)
        os << (i ? ", " : "") << plan.open_dcs[i];
    os << "],\n  \"assignment\": [";
    for (std::size_t i = 0; i < plan.assignment.size(); ++i)
        os << (i ? ", " : "") << plan.assignment[i];
    os << "],\n  \"orders\": [";
    for (std::size_t i = 0; i < plan.orders.size(); ++i) {
        const auto& o = plan.orders[i];
        os << (i ? ",\n    " : "\n    ") << "{\"dc\": " << o.dc << ", \"n\": " << o.n
           << ", \"q\": " << o.q << ", \"inbound\": [";
        for (std::size_t j = 0; j < o.inbound.size(); ++j)
            os << (j ? ", " : "") << "{\"vehicle\": " << o.inbound[j].vehicle
               << ", \"load\": " << o.inbound[j].load << "}";
        os << "]}";
    }
    os << (plan.orders.empty() ? "]" : "\n  ]") << ",\n  \"tours\": [";
    for (std::size_t i = 0; i < plan.tours.size(); ++i) {
        const auto& t = plan.tours[i];
        os << (i ? ",\n    " : "\n    ") << "{\"dc\": " << t.dc
           << ", \"vehicle\": " << t.vehicle << ", \"stops\": [";
        for (std::size_t j = 0; j < t.stops.size(); ++j)
            os << (j ? ", " : "") << t.stops[j];
        os << "], \"arc_loads\": [";
        for (std::size_t j = 0; j < t.arc_loads.size(); ++j)
            os << (j ? ", " : "") << t.arc_loads[j];
        os << "]}";
    }
    os << (plan.tours.empty() ? "]" : "\n  ]") << ",\n  \"unassigned\": [";
    for (std::size_t i = 0; i < plan.unassigned.size(); ++i)
        os << (i ? ", " : "") << plan.unassigned[i];
    os << "],\n  \"feasible\": " << (plan.feasible ? "true" : "false")
       << ",\n  \"objectives\": {\"z1\": " << z1 << ", \"z2\": " << z2 << "}\n}\n";
    return os.str();
}

} // namespace glrip
