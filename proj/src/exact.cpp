#include "glrip/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace glrip {

namespace {

double factorial(std::size_t n) {
    double f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= (double)i;
    return f;
}

struct Candidate {
    ObjectivePair obj;
    Plan plan;
};

bool near_pair(const ObjectivePair& a, const ObjectivePair& b) {
    return std::abs(a.z1 - b.z1) <= 1e-9 && std::abs(a.z2 - b.z2) <= 1e-9;
}

void insert_candidate(std::vector<Candidate>& cands, const ObjectivePair& obj,
                      const Plan& plan) {
    for (const auto& c : cands)
        if (near_pair(c.obj, obj) || dominates(c.obj, obj)) return;
    cands.erase(std::remove_if(cands.begin(), cands.end(),
                               [&](const Candidate& c) {
                                   return dominates(obj, c.obj);
                               }),
                cands.end());
    cands.push_back({obj, plan});
}

void merge_candidates(std::vector<Candidate>& into,
                      const std::vector<Candidate>& from) {
    for (const auto& c : from) insert_candidate(into, c.obj, c.plan);
}

struct WorkerState {
    std::vector<Candidate> cands;
    std::uint64_t evaluated = 0;
    bool truncated = false;
};

// Enumerates everything reachable from one DC priority order.
void enumerate_for_dc_perm(const Instance& inst, const DecodeParams& params,
                           const std::vector<std::size_t>& dc_perm,
                           std::chrono::steady_clock::time_point deadline,
                           bool has_deadline, WorkerState& st) {
    std::size_t I = inst.num_retailers();
    std::size_t Vin = inst.vehicles_in.size();
    std::size_t Vout = inst.vehicles_out.size();

    PriorityOrders ord;
    ord.dc = dc_perm;
    ord.retailer.resize(I);
    std::iota(ord.retailer.begin(), ord.retailer.end(), 0);
    int check = 0;
    do {
        AssignResult ar = assign_retailers(ord.retailer, ord.dc, inst);
        // Frequency alternatives per open DC under the current assignment.
        std::vector<int> open_dcs;
        std::vector<std::vector<int>> choices;
        bool dead_end = false;
        for (std::size_t kk : ord.dc) {
            double demand = 0;
            for (std::size_t r = 0; r < I; ++r)
                if (ar.assignment[r] == (int)kk)
                    demand += inst.retailers[r].demand_mean;
            if (demand <= 0) continue;
            auto feas = feasible_frequencies(inst, demand, params.n_max);
            if (feas.empty()) {
                dead_end = true; // plan cannot serve everyone; still walk it once
                break;
            }
            open_dcs.push_back((int)kk);
            choices.push_back(std::move(feas));
        }
        if (dead_end || !ar.unassigned.empty()) continue;

        std::vector<std::size_t> pick(choices.size(), 0);
        bool more = true;
        while (more) {
            std::vector<int> explicit_n(inst.num_dcs(), 0);
            for (std::size_t c = 0; c < choices.size(); ++c)
                explicit_n[open_dcs[c]] = choices[c][pick[c]];
            FreqSelector freq;
            freq.explicit_n = explicit_n.data();

            ord.veh_in.resize(Vin);
            std::iota(ord.veh_in.begin(), ord.veh_in.end(), 0);
            do {
                ord.veh_out.resize(Vout);
                std::iota(ord.veh_out.begin(), ord.veh_out.end(), 0);
                do {
                    Plan plan = decode_with_orders(inst, ord, freq, params);
                    ++st.evaluated;
                    if (plan.feasible) {
                        ObjectivePair z =
                            evaluate(inst, plan, params.penalty_rate);
                        insert_candidate(st.cands, z, plan);
                    }
                    if (has_deadline && ((++check & 0xFF) == 0) &&
                        std::chrono::steady_clock::now() > deadline) {
                        st.truncated = true;
                        return;
                    }
                } while (std::next_permutation(ord.veh_out.begin(),
                                               ord.veh_out.end()));
            } while (std::next_permutation(ord.veh_in.begin(), ord.veh_in.end()));

            // advance the mixed-radix frequency counter
            more = false;
            for (std::size_t c = 0; c < pick.size(); ++c) {
                if (++pick[c] < choices[c].size()) {
                    more = true;
                    break;
                }
                pick[c] = 0;
            }
            if (choices.empty()) break;
        }
    } while (std::next_permutation(ord.retailer.begin(), ord.retailer.end()));
}

} // namespace

double enumeration_space(const Instance& inst, int n_max) {
    int NM = n_max > 0 ? n_max : default_n_max(inst);
    return factorial(inst.num_dcs()) * factorial(inst.num_retailers()) *
           factorial(inst.vehicles_in.size()) *
           factorial(inst.vehicles_out.size()) *
           std::pow((double)NM, (double)inst.num_dcs());
}

EnumeratedFront enumerate_pareto_plans(const Instance& inst,
                                       const EnumOptions& opts) {
    DecodeParams params;
    params.n_max = opts.n_max > 0 ? opts.n_max : default_n_max(inst);
    double space = enumeration_space(inst, params.n_max);
    if (space > opts.max_space) {
        std::ostringstream os;
        os << "enumeration space too large: " << space << " > " << opts.max_space;
        throw std::length_error(os.str());
    }

    auto deadline = std::chrono::steady_clock::now();
    bool has_deadline = opts.time_limit > 0;
    if (has_deadline)
        deadline += std::chrono::microseconds(
            (long long)(opts.time_limit * 1e6));

    // One job per DC priority order; workers keep private fronts that merge
    // associatively at the end.
    std::vector<std::vector<std::size_t>> dc_perms;
    std::vector<std::size_t> dc(inst.num_dcs());
    std::iota(dc.begin(), dc.end(), 0);
    do dc_perms.push_back(dc);
    while (std::next_permutation(dc.begin(), dc.end()));

    int workers = std::max(1, std::min<int>(opts.threads, (int)dc_perms.size()));
    std::vector<WorkerState> states(dc_perms.size());
    if (workers <= 1) {
        for (std::size_t j = 0; j < dc_perms.size(); ++j)
            enumerate_for_dc_perm(inst, params, dc_perms[j], deadline,
                                  has_deadline, states[j]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                for (std::size_t j = (std::size_t)w; j < dc_perms.size();
                     j += (std::size_t)workers)
                    enumerate_for_dc_perm(inst, params, dc_perms[j], deadline,
                                          has_deadline, states[j]);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<Candidate> all;
    EnumeratedFront out;
    for (const auto& st : states) {
        merge_candidates(all, st.cands);
        out.evaluated += st.evaluated;
        out.truncated = out.truncated || st.truncated;
    }
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
        if (a.obj.z1 != b.obj.z1) return a.obj.z1 < b.obj.z1;
        return a.obj.z2 < b.obj.z2;
    });
    for (auto& c : all) {
        out.front.push_back(c.obj);
        out.plans.push_back(std::move(c.plan));
    }
    return out;
}

Front enumerate_pareto(const Instance& inst, int n_max) {
    EnumOptions opts;
    opts.n_max = n_max;
    return enumerate_pareto_plans(inst, opts).front;
}

EnumerationBackend::EnumerationBackend(const Instance& inst,
                                       const EnumOptions& opts)
    : cache_(enumerate_pareto_plans(inst, opts)) {}

ExactSolution EnumerationBackend::solve(const ExactQuery& q) {
    if (q.aug_delta != 0) {
        double cap = q.minimize == 0 ? q.z2_cap : q.z1_cap;
        if (!std::isfinite(cap))
            throw std::invalid_argument(
                "augmented query requires a finite cap on the other objective");
    }
    ExactSolution best;
    for (std::size_t i = 0; i < cache_.front.size(); ++i) {
        const ObjectivePair& p = cache_.front[i];
        if (p.z1 > q.z1_cap || p.z2 > q.z2_cap) continue;
        double value = q.minimize == 0 ? p.z1 : p.z2;
        if (q.aug_delta != 0) {
            double slack = q.minimize == 0 ? q.z2_cap - p.z2 : q.z1_cap - p.z1;
            value -= q.aug_delta * slack / q.aug_range;
        }
        if (!best.feasible || value < best.value) {
            best.feasible = true;
            best.value = value;
            best.obj = p;
            best.plan = cache_.plans[i];
        }
    }
    return best;
}

ExactSolution LpFileBackend::solve(const ExactQuery&) {
    throw std::logic_error(
        "external LP solver backend is a stub: export the model with the LP "
        "writer and run a solver out of band (" +
        path_ + ")");
}

Front augmented_eps_constraint(ExactBackend& backend, int grid_points,
                               double delta) {
    if (grid_points < 2)
        throw std::invalid_argument("grid_points must be at least 2");
    if (!(delta > 1e-6 && delta < 1e-3))
        throw std::invalid_argument("delta must lie inside (1e-6, 1e-3)");

    ExactQuery q1;
    q1.minimize = 0;
    ExactSolution s1 = backend.solve(q1);
    if (!s1.feasible) throw std::runtime_error("instance infeasible");
    ExactQuery q1b;
    q1b.minimize = 1;
    q1b.z1_cap = s1.obj.z1;
    ExactSolution lex1 = backend.solve(q1b); // best z2 at optimal z1

    ExactQuery q2;
    q2.minimize = 1;
    ExactSolution s2 = backend.solve(q2);
    ExactQuery q2b;
    q2b.minimize = 0;
    q2b.z2_cap = s2.obj.z2;
    ExactSolution lex2 = backend.solve(q2b); // best z1 at optimal z2

    Front collected{lex1.obj, lex2.obj};
    double z2_lo = lex2.obj.z2;
    double z2_hi = lex1.obj.z2;
    double r2 = z2_hi - z2_lo;
    if (r2 <= 0) return pareto_filter(collected);

    for (int i = 0; i < grid_points; ++i) {
        double e2 = z2_lo + r2 * (double)i / (double)(grid_points - 1);
        ExactQuery q;
        q.minimize = 0;
        q.z2_cap = e2;
        q.aug_delta = delta;
        q.aug_range = r2;
        ExactSolution s = backend.solve(q);
        if (s.feasible) collected.push_back(s.obj);
    }
    return pareto_filter(collected);
}

} // namespace glrip
