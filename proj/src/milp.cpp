#include "glrip/milp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "glrip/inventory.hpp"

namespace glrip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<LinTerm> consolidate(std::vector<LinTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
    std::vector<LinTerm> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().var == t.var) out.back().coef += t.coef;
        else out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const LinTerm& t) { return t.coef == 0.0; }),
              out.end());
    return out;
}

std::string cat(const char* base, std::initializer_list<long long> idx) {
    std::string s = base;
    for (long long v : idx) {
        s += '_';
        s += std::to_string(v);
    }
    return s;
}

} // namespace

int MilpModel::add_var(const std::string& name, VarKind kind, double lo, double hi) {
    if (index.count(name)) throw std::invalid_argument("duplicate variable " + name);
    int id = (int)vars.size();
    vars.push_back({name, kind, lo, hi});
    index.emplace(name, id);
    return id;
}

int MilpModel::var(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw std::out_of_range("unknown variable " + name);
    return it->second;
}

bool MilpModel::has_var(const std::string& name) const {
    return index.count(name) != 0;
}

void MilpModel::add_con(const std::string& name, std::vector<LinTerm> terms,
                        Sense sense, double rhs) {
    for (const auto& t : terms)
        if (t.var < 0 || t.var >= (int)vars.size())
            throw std::out_of_range("constraint " + name + " uses unknown variable");
    cons.push_back({name, consolidate(std::move(terms)), sense, rhs});
}

double row_value(const MilpModel& m, const std::vector<LinTerm>& row,
                 const MilpAssignment& a) {
    if (a.values.size() != m.vars.size())
        throw std::invalid_argument("assignment size mismatch");
    double v = 0;
    for (const auto& t : row) v += t.coef * a.values[t.var];
    return v;
}

void linearize_bilinear(MilpModel& m, int q, int n, int sig, double q_bound,
                        double n_bound, const std::string& tag) {
    if (q_bound <= 0 || n_bound <= 0)
        throw std::invalid_argument("bilinear bounds must be positive");
    m.add_con(tag + "_ub1", {{sig, 1.0}, {q, -n_bound}}, Sense::LE, 0.0);
    m.add_con(tag + "_ub2", {{sig, 1.0}, {n, -q_bound}}, Sense::LE, 0.0);
    m.add_con(tag + "_lb", {{sig, 1.0}, {q, -n_bound}, {n, -q_bound}}, Sense::GE,
              -q_bound * n_bound);
}

int linearize_binary_product(MilpModel& m, const std::vector<int>& xs,
                             const std::string& name) {
    if (xs.size() < 2)
        throw std::invalid_argument("binary product needs at least two factors");
    int z = m.add_var(name, VarKind::Binary, 0, 1);
    std::vector<LinTerm> lower{{z, 1.0}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        m.add_con(name + "_le" + std::to_string(i), {{z, 1.0}, {xs[i], -1.0}},
                  Sense::LE, 0.0);
        lower.push_back({xs[i], -1.0});
    }
    m.add_con(name + "_ge", std::move(lower), Sense::GE, -((double)xs.size() - 1.0));
    return z;
}

int linearize_scaled_product(MilpModel& m, int cont, int bin, double ubound,
                             const std::string& name) {
    if (ubound <= 0) throw std::invalid_argument("product bound must be positive");
    int p = m.add_var(name, VarKind::Continuous, 0, ubound);
    m.add_con(name + "_cap", {{p, 1.0}, {bin, -ubound}}, Sense::LE, 0.0);
    m.add_con(name + "_le", {{p, 1.0}, {cont, -1.0}}, Sense::LE, 0.0);
    m.add_con(name + "_ge", {{p, 1.0}, {cont, -1.0}, {bin, -ubound}}, Sense::GE,
              -ubound);
    return p;
}

std::vector<double> subset_sums(const std::vector<double>& sigma2) {
    std::size_t n = sigma2.size();
    std::vector<double> b((std::size_t)1 << n, 0.0);
    for (std::size_t mask = 1; mask < b.size(); ++mask) {
        std::size_t low = mask & (mask - 1);
        std::size_t bit = mask ^ low;
        int i = 0;
        while (((std::size_t)1 << i) != bit) ++i;
        b[mask] = b[low] + sigma2[i];
    }
    return b;
}

std::vector<int> linearize_sqrt(MilpModel& m, const std::vector<int>& y_vars,
                                const std::vector<double>& sigma2, double lead,
                                const std::string& tag, std::size_t subset_cap) {
    if (sigma2.size() != y_vars.size())
        throw std::invalid_argument("sqrt linearization: list size mismatch");
    if (sigma2.size() > subset_cap)
        throw std::length_error(
            "sqrt linearization: retailer list exceeds subset cap; "
            "use the evolutionary path for instances this large");
    std::size_t n = sigma2.size();
    std::size_t count = (std::size_t)1 << n;
    std::vector<int> tau(count);
    for (std::size_t mask = 0; mask < count; ++mask)
        tau[mask] = m.add_var(cat((tag + "").c_str(), {(long long)mask}),
                              VarKind::Binary, 0, 1);
    std::vector<LinTerm> one;
    for (int t : tau) one.push_back({t, 1.0});
    m.add_con(tag + "_one", std::move(one), Sense::EQ, 1.0);
    if (n == 0) return tau;
    double nn = (double)n;
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<LinTerm> lhs;
        int card = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool inside = (mask >> i) & 1;
            lhs.push_back({y_vars[i], inside ? 1.0 : -1.0});
            if (inside) ++card;
        }
        lhs.push_back({tau[mask], -nn});
        auto lhs2 = lhs;
        m.add_con(tag + "_lo_" + std::to_string(mask), std::move(lhs), Sense::GE,
                  (double)card - nn);
        m.add_con(tag + "_hi_" + std::to_string(mask), std::move(lhs2), Sense::LE,
                  (double)card - 1.0);
    }
    (void)lead;
    return tau;
}

namespace {

// Shared naming scheme: node 0 is the supplier, 1..K the DCs, K+1..K+I the
// retailers; vehicles are numbered 1..Vin then Vin+1..Vin+Vout.
struct Names {
    std::size_t K, I, Vin;
    long long dc(int k) const { return k + 1; }
    long long ret(int i) const { return (long long)K + 1 + i; }
    long long vin(int v) const { return v + 1; }
    long long vout(int v) const { return (long long)Vin + 1 + v; }
};

struct OutArc {
    int from_dc = -1;  // DC endpoint when the arc leaves a DC
    int from_ret = -1; // retailer endpoint otherwise
    int to_dc = -1;
    int to_ret = -1;
    long long a, b; // node ids
    double dist = 0;
};

std::vector<OutArc> outbound_arcs(const Instance& inst, const Names& nm) {
    std::vector<OutArc> arcs;
    int K = (int)inst.num_dcs(), I = (int)inst.num_retailers();
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < I; ++i) {
            OutArc a;
            a.from_dc = k;
            a.to_ret = i;
            a.a = nm.dc(k);
            a.b = nm.ret(i);
            a.dist = inst.dist_dc_retailer(k, i);
            arcs.push_back(a);
        }
    for (int i = 0; i < I; ++i)
        for (int j = 0; j < I; ++j) {
            if (i == j) continue;
            OutArc a;
            a.from_ret = i;
            a.to_ret = j;
            a.a = nm.ret(i);
            a.b = nm.ret(j);
            a.dist = inst.dist_retailers(i, j);
            arcs.push_back(a);
        }
    for (int i = 0; i < I; ++i)
        for (int k = 0; k < K; ++k) {
            OutArc a;
            a.from_ret = i;
            a.to_dc = k;
            a.a = nm.ret(i);
            a.b = nm.dc(k);
            a.dist = inst.dist_dc_retailer(k, i);
            arcs.push_back(a);
        }
    return arcs;
}

} // namespace

MilpModel build_milp(const Instance& inst, std::size_t subset_cap, int n_max) {
    if (inst.num_retailers() > subset_cap)
        throw std::length_error(
            "model build: retailer count exceeds the subset cap for the exact "
            "square-root expansion; use the evolutionary path instead");
    MilpModel m;
    int K = (int)inst.num_dcs();
    int I = (int)inst.num_retailers();
    int Vin = (int)inst.vehicles_in.size();
    int Vout = (int)inst.vehicles_out.size();
    int NM = n_max > 0 ? n_max : default_n_max(inst);
    Names nm{(std::size_t)K, (std::size_t)I, (std::size_t)Vin};

    double total_mu = inst.total_mean_demand();
    double M = std::max(inst.weights.big_m, 2.0 * total_mu);
    if (M <= 0) M = 1.0;
    double zq = z_quantile(inst.weights.alpha);
    double in_fleet_cap = 0;
    for (const auto& v : inst.vehicles_in) in_fleet_cap += v.capacity;

    // --- location & assignment ---
    std::vector<int> x(K);
    for (int k = 0; k < K; ++k)
        x[k] = m.add_var(cat("x", {nm.dc(k)}), VarKind::Binary, 0, 1);
    std::vector<std::vector<int>> y(I, std::vector<int>(K));
    for (int i = 0; i < I; ++i)
        for (int k = 0; k < K; ++k)
            y[i][k] = m.add_var(cat("y", {nm.ret(i), nm.dc(k)}), VarKind::Binary, 0, 1);

    // --- frequency one-hot, n, q, sigma ---
    std::vector<std::vector<int>> nb(K, std::vector<int>(NM));
    std::vector<int> nvar(K), qvar(K), sig(K), dvar(K), ssvar(K), eivar(K);
    std::vector<int> tvar(K), tpvar(K), thvar(K);
    std::vector<double> a_bound(K), ss_bound(K), sig_bound(K);
    for (int k = 0; k < K; ++k) {
        for (int mth = 1; mth <= NM; ++mth)
            nb[k][mth - 1] =
                m.add_var(cat("nb", {nm.dc(k), mth}), VarKind::Binary, 0, 1);
        a_bound[k] = std::min(inst.dcs[k].capacity, total_mu);
        if (a_bound[k] <= 0) a_bound[k] = 1.0;
        sig_bound[k] = a_bound[k] * NM;
        double var_all = 0;
        for (const auto& r : inst.retailers) var_all += r.demand_var;
        ss_bound[k] = zq * std::sqrt(inst.dcs[k].lead_time * var_all);
        if (ss_bound[k] <= 0) ss_bound[k] = 1.0;
        nvar[k] = m.add_var(cat("n", {nm.dc(k)}), VarKind::Integer, 0, NM);
        qvar[k] = m.add_var(cat("q", {nm.dc(k)}), VarKind::Continuous, 0,
                            std::max(in_fleet_cap, 1.0));
        sig[k] = m.add_var(cat("sig", {nm.dc(k)}), VarKind::Continuous, 0,
                           sig_bound[k]);
        dvar[k] = m.add_var(cat("d", {nm.dc(k)}), VarKind::Continuous, 0, a_bound[k]);
        ssvar[k] = m.add_var(cat("ss", {nm.dc(k)}), VarKind::Continuous, 0,
                             ss_bound[k]);
        eivar[k] = m.add_var(cat("ei", {nm.dc(k)}), VarKind::Continuous, 0,
                             sig_bound[k] + ss_bound[k] + a_bound[k]);
        tvar[k] = m.add_var(cat("t", {nm.dc(k)}), VarKind::Binary, 0, 1);
        tpvar[k] = m.add_var(cat("tp", {nm.dc(k)}), VarKind::Binary, 0, 1);
    }

    // --- routing variables ---
    std::vector<std::vector<int>> w_in(K, std::vector<int>(Vin));
    std::vector<std::vector<int>> w_ret(K, std::vector<int>(Vin));
    std::vector<std::vector<int>> u_in(K, std::vector<int>(Vin));
    for (int k = 0; k < K; ++k)
        for (int v = 0; v < Vin; ++v) {
            w_in[k][v] =
                m.add_var(cat("w", {0, nm.dc(k), nm.vin(v)}), VarKind::Binary, 0, 1);
            w_ret[k][v] =
                m.add_var(cat("w", {nm.dc(k), 0, nm.vin(v)}), VarKind::Binary, 0, 1);
            u_in[k][v] = m.add_var(cat("u", {0, nm.dc(k), nm.vin(v)}),
                                   VarKind::Continuous, 0,
                                   inst.vehicles_in[v].capacity);
        }
    auto arcs = outbound_arcs(inst, nm);
    std::vector<std::vector<int>> w_arc(arcs.size(), std::vector<int>(Vout));
    std::vector<std::vector<int>> u_arc(arcs.size(), std::vector<int>(Vout));
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (int v = 0; v < Vout; ++v) {
            w_arc[a][v] = m.add_var(cat("w", {arcs[a].a, arcs[a].b, nm.vout(v)}),
                                    VarKind::Binary, 0, 1);
            u_arc[a][v] = m.add_var(cat("u", {arcs[a].a, arcs[a].b, nm.vout(v)}),
                                    VarKind::Continuous, 0,
                                    inst.vehicles_out[v].capacity);
        }
    std::vector<std::vector<int>> mtz(I, std::vector<int>(Vout));
    for (int i = 0; i < I; ++i)
        for (int v = 0; v < Vout; ++v)
            mtz[i][v] = m.add_var(cat("m", {nm.ret(i), nm.vout(v)}),
                                  VarKind::Continuous, 0, (double)I);
    std::vector<std::vector<int>> r_in(K, std::vector<int>(Vin));
    std::vector<std::vector<int>> r_out(K, std::vector<int>(Vout));
    for (int k = 0; k < K; ++k) {
        for (int v = 0; v < Vin; ++v)
            r_in[k][v] =
                m.add_var(cat("r", {nm.dc(k), nm.vin(v)}), VarKind::Binary, 0, 1);
        for (int v = 0; v < Vout; ++v)
            r_out[k][v] =
                m.add_var(cat("r", {nm.dc(k), nm.vout(v)}), VarKind::Binary, 0, 1);
    }

    // --- scenario product (Prop. 2) and the other inventory products ---
    std::vector<int> ptd(K), ptsig(K), ppss(K), ppsig(K), ppd(K), phss(K), phsig(K),
        phd(K);
    for (int k = 0; k < K; ++k) {
        thvar[k] = linearize_binary_product(m, {tvar[k], tpvar[k]},
                                            cat("th", {nm.dc(k)}));
        ptd[k] = linearize_scaled_product(m, dvar[k], tvar[k], a_bound[k],
                                          cat("ptd", {nm.dc(k)}));
        ptsig[k] = linearize_scaled_product(m, sig[k], tvar[k], sig_bound[k],
                                            cat("ptsig", {nm.dc(k)}));
        ppss[k] = linearize_scaled_product(m, ssvar[k], tpvar[k], ss_bound[k],
                                           cat("ppss", {nm.dc(k)}));
        ppsig[k] = linearize_scaled_product(m, sig[k], tpvar[k], sig_bound[k],
                                            cat("ppsig", {nm.dc(k)}));
        ppd[k] = linearize_scaled_product(m, dvar[k], tpvar[k], a_bound[k],
                                          cat("ppd", {nm.dc(k)}));
        phss[k] = linearize_scaled_product(m, ssvar[k], thvar[k], ss_bound[k],
                                           cat("phss", {nm.dc(k)}));
        phsig[k] = linearize_scaled_product(m, sig[k], thvar[k], sig_bound[k],
                                            cat("phsig", {nm.dc(k)}));
        phd[k] = linearize_scaled_product(m, dvar[k], thvar[k], a_bound[k],
                                          cat("phd", {nm.dc(k)}));
    }

    // --- square-root expansion per DC ---
    std::vector<double> sigma2;
    for (const auto& r : inst.retailers) sigma2.push_back(r.demand_var);
    std::vector<double> btab = subset_sums(sigma2);
    std::vector<std::vector<int>> tau(K);
    for (int k = 0; k < K; ++k) {
        std::vector<int> ys;
        for (int i = 0; i < I; ++i) ys.push_back(y[i][k]);
        tau[k] = linearize_sqrt(m, ys, sigma2, inst.dcs[k].lead_time,
                                "tau_" + std::to_string(nm.dc(k)), subset_cap);
        std::vector<LinTerm> row{{ssvar[k], 1.0}};
        for (std::size_t mask = 0; mask < btab.size(); ++mask)
            row.push_back({tau[k][mask],
                           -zq * std::sqrt(inst.dcs[k].lead_time * btab[mask])});
        m.add_con(cat("cdef_ss", {nm.dc(k)}), std::move(row), Sense::EQ, 0.0);
    }

    // --- emission products ---
    std::vector<std::vector<std::vector<int>>> g(
        K, std::vector<std::vector<int>>(Vout, std::vector<int>(NM)));
    std::vector<std::vector<int>> nu(Vout, std::vector<int>(NM));
    std::vector<std::vector<std::vector<int>>> wif(
        K, std::vector<std::vector<int>>(Vin, std::vector<int>(NM)));
    std::vector<std::vector<std::vector<int>>> uif(
        K, std::vector<std::vector<int>>(Vin, std::vector<int>(NM)));
    for (int k = 0; k < K; ++k)
        for (int v = 0; v < Vout; ++v)
            for (int mm = 1; mm <= NM; ++mm)
                g[k][v][mm - 1] = linearize_binary_product(
                    m, {r_out[k][v], nb[k][mm - 1]},
                    cat("g", {nm.dc(k), nm.vout(v), mm}));
    for (int v = 0; v < Vout; ++v)
        for (int mm = 1; mm <= NM; ++mm) {
            nu[v][mm - 1] =
                m.add_var(cat("nu", {nm.vout(v), mm}), VarKind::Binary, 0, 1);
            std::vector<LinTerm> row{{nu[v][mm - 1], 1.0}};
            for (int k = 0; k < K; ++k) row.push_back({g[k][v][mm - 1], -1.0});
            m.add_con(cat("cdef_nu", {nm.vout(v), mm}), std::move(row), Sense::EQ,
                      0.0);
        }
    std::vector<std::vector<std::vector<int>>> wf(
        arcs.size(), std::vector<std::vector<int>>(Vout, std::vector<int>(NM)));
    std::vector<std::vector<std::vector<int>>> uf(
        arcs.size(), std::vector<std::vector<int>>(Vout, std::vector<int>(NM)));
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (int v = 0; v < Vout; ++v)
            for (int mm = 1; mm <= NM; ++mm) {
                wf[a][v][mm - 1] = linearize_binary_product(
                    m, {w_arc[a][v], nu[v][mm - 1]},
                    cat("wf", {arcs[a].a, arcs[a].b, nm.vout(v), mm}));
                uf[a][v][mm - 1] = linearize_scaled_product(
                    m, u_arc[a][v], nu[v][mm - 1], inst.vehicles_out[v].capacity,
                    cat("uf", {arcs[a].a, arcs[a].b, nm.vout(v), mm}));
            }
    for (int k = 0; k < K; ++k)
        for (int v = 0; v < Vin; ++v)
            for (int mm = 1; mm <= NM; ++mm) {
                wif[k][v][mm - 1] = linearize_binary_product(
                    m, {w_in[k][v], nb[k][mm - 1]},
                    cat("wif", {nm.dc(k), nm.vin(v), mm}));
                uif[k][v][mm - 1] = linearize_scaled_product(
                    m, u_in[k][v], nb[k][mm - 1], inst.vehicles_in[v].capacity,
                    cat("uif", {nm.dc(k), nm.vin(v), mm}));
            }

    // --- constraints (3) .. (24) ---
    for (int i = 0; i < I; ++i)
        for (int k = 0; k < K; ++k)
            m.add_con(cat("c3", {nm.ret(i), nm.dc(k)}),
                      {{y[i][k], 1.0}, {x[k], -1.0}}, Sense::LE, 0.0);
    for (int i = 0; i < I; ++i) {
        std::vector<LinTerm> row;
        for (int k = 0; k < K; ++k) row.push_back({y[i][k], 1.0});
        m.add_con(cat("c4", {nm.ret(i)}), std::move(row), Sense::EQ, 1.0);
    }
    for (int i = 0; i < I; ++i) {
        std::vector<LinTerm> row;
        for (std::size_t a = 0; a < arcs.size(); ++a)
            if (arcs[a].from_ret == i)
                for (int v = 0; v < Vout; ++v) row.push_back({w_arc[a][v], 1.0});
        m.add_con(cat("c5", {nm.ret(i)}), std::move(row), Sense::EQ, 1.0);
    }
    for (int k = 0; k < K; ++k) {
        std::vector<LinTerm> row;
        for (int v = 0; v < Vin; ++v) row.push_back({w_in[k][v], 1.0});
        row.push_back({x[k], -1.0});
        m.add_con(cat("c6", {nm.dc(k)}), std::move(row), Sense::GE, 0.0);
    }
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        if (arcs[a].from_ret < 0 || arcs[a].to_ret < 0) continue;
        int i = arcs[a].from_ret, j = arcs[a].to_ret;
        for (int v = 0; v < Vout; ++v)
            m.add_con(cat("c7", {nm.ret(i), nm.ret(j), nm.vout(v)}),
                      {{mtz[i][v], 1.0}, {mtz[j][v], -1.0}, {w_arc[a][v], (double)I}},
                      Sense::LE, (double)I - 1.0);
    }
    for (int i = 0; i < I; ++i)
        for (int v = 0; v < Vout; ++v) {
            std::vector<LinTerm> row;
            for (std::size_t a = 0; a < arcs.size(); ++a) {
                if (arcs[a].from_ret == i) row.push_back({w_arc[a][v], 1.0});
                if (arcs[a].to_ret == i) row.push_back({w_arc[a][v], -1.0});
            }
            m.add_con(cat("c8", {nm.ret(i), nm.vout(v)}), std::move(row), Sense::EQ,
                      0.0);
        }
    for (int k = 0; k < K; ++k)
        for (int v = 0; v < Vin; ++v)
            m.add_con(cat("c8in", {nm.dc(k), nm.vin(v)}),
                      {{w_in[k][v], 1.0}, {w_ret[k][v], -1.0}}, Sense::EQ, 0.0);
    for (int v = 0; v < Vin; ++v) {
        std::vector<LinTerm> row;
        for (int k = 0; k < K; ++k) row.push_back({w_ret[k][v], 1.0});
        m.add_con(cat("c9", {nm.vin(v)}), std::move(row), Sense::LE, 1.0);
    }
    for (int v = 0; v < Vout; ++v) {
        std::vector<LinTerm> row;
        for (std::size_t a = 0; a < arcs.size(); ++a)
            if (arcs[a].from_dc >= 0) row.push_back({w_arc[a][v], 1.0});
        m.add_con(cat("c10", {nm.vout(v)}), std::move(row), Sense::LE, 1.0);
    }
    for (int i = 0; i < I; ++i)
        for (int k = 0; k < K; ++k)
            for (int v = 0; v < Vout; ++v) {
                std::vector<LinTerm> row;
                for (std::size_t a = 0; a < arcs.size(); ++a) {
                    if (arcs[a].from_ret == i) row.push_back({w_arc[a][v], 1.0});
                    if (arcs[a].from_dc == k) row.push_back({w_arc[a][v], 1.0});
                }
                row.push_back({y[i][k], -1.0});
                m.add_con(cat("c11", {nm.ret(i), nm.dc(k), nm.vout(v)}),
                          std::move(row), Sense::LE, 1.0);
            }
    for (int i = 0; i < I; ++i) {
        double mu = inst.retailers[i].demand_mean;
        for (int k = 0; k < K; ++k) {
            std::vector<LinTerm> base;
            for (std::size_t a = 0; a < arcs.size(); ++a)
                for (int v = 0; v < Vout; ++v) {
                    if (arcs[a].to_ret == i) base.push_back({u_arc[a][v], 1.0});
                    if (arcs[a].from_ret == i) base.push_back({u_arc[a][v], -1.0});
                }
            for (int mm = 1; mm <= NM; ++mm)
                base.push_back({nb[k][mm - 1], -mu / (double)mm});
            auto hi = base;
            hi.push_back({y[i][k], M});
            m.add_con(cat("c12a", {nm.ret(i), nm.dc(k)}), std::move(hi), Sense::LE,
                      M);
            auto lo = base;
            lo.push_back({y[i][k], -M});
            m.add_con(cat("c12b", {nm.ret(i), nm.dc(k)}), std::move(lo), Sense::GE,
                      -M);
        }
    }
    for (int k = 0; k < K; ++k)
        for (int v = 0; v < Vin; ++v)
            m.add_con(cat("c13", {nm.dc(k), nm.vin(v)}),
                      {{u_in[k][v], 1.0},
                       {w_in[k][v], -inst.vehicles_in[v].capacity}},
                      Sense::LE, 0.0);
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (int v = 0; v < Vout; ++v)
            m.add_con(cat("c14", {arcs[a].a, arcs[a].b, nm.vout(v)}),
                      {{u_arc[a][v], 1.0},
                       {w_arc[a][v], -inst.vehicles_out[v].capacity}},
                      Sense::LE, 0.0);
    for (int k = 0; k < K && I > 0; ++k) {
        std::vector<LinTerm> row;
        for (int i = 0; i < I; ++i)
            row.push_back({y[i][k], inst.retailers[i].demand_mean});
        m.add_con(cat("c15", {nm.dc(k)}), std::move(row), Sense::LE,
                  inst.dcs[k].capacity);
    }
    for (int k = 0; k < K; ++k) {
        std::vector<LinTerm> row{{qvar[k], 1.0}};
        for (int v = 0; v < Vin; ++v) row.push_back({u_in[k][v], -1.0});
        m.add_con(cat("c16", {nm.dc(k)}), std::move(row), Sense::EQ, 0.0);
    }
    for (int k = 0; k < K; ++k) {
        for (int v = 0; v < Vin; ++v)
            m.add_con(cat("c17", {nm.dc(k), nm.vin(v)}),
                      {{r_in[k][v], 1.0}, {w_in[k][v], -1.0}}, Sense::EQ, 0.0);
        for (int v = 0; v < Vout; ++v) {
            std::vector<LinTerm> row{{r_out[k][v], 1.0}};
            for (std::size_t a = 0; a < arcs.size(); ++a)
                if (arcs[a].from_dc == k) row.push_back({w_arc[a][v], -1.0});
            m.add_con(cat("c18", {nm.dc(k), nm.vout(v)}), std::move(row), Sense::EQ,
                      0.0);
        }
    }
    for (int k = 0; k < K; ++k) {
        m.add_con(cat("c19", {nm.dc(k)}),
                  {{tvar[k], M}, {dvar[k], -1.0}, {sig[k], 1.0}}, Sense::GE, 0.0);
        m.add_con(cat("c20", {nm.dc(k)}),
                  {{dvar[k], 1.0}, {sig[k], -1.0}, {tvar[k], -M}}, Sense::GE, -M);
        m.add_con(cat("c21", {nm.dc(k)}),
                  {{tpvar[k], M}, {sig[k], -1.0}, {dvar[k], 1.0}, {ssvar[k], 1.0}},
                  Sense::GE, 0.0);
        m.add_con(cat("c22", {nm.dc(k)}),
                  {{sig[k], 1.0}, {dvar[k], -1.0}, {ssvar[k], -1.0}, {tpvar[k], -M}},
                  Sense::GE, -M);
    }

    // helper definitions
    for (int k = 0; k < K; ++k) {
        std::vector<LinTerm> row{{dvar[k], 1.0}};
        for (int i = 0; i < I; ++i)
            row.push_back({y[i][k], -inst.retailers[i].demand_mean});
        m.add_con(cat("cdef_d", {nm.dc(k)}), std::move(row), Sense::EQ, 0.0);

        std::vector<LinTerm> hot{{x[k], -1.0}};
        for (int mm = 1; mm <= NM; ++mm) hot.push_back({nb[k][mm - 1], 1.0});
        m.add_con(cat("cnb", {nm.dc(k)}), std::move(hot), Sense::LE, 0.0);

        std::vector<LinTerm> ndef{{nvar[k], 1.0}};
        for (int mm = 1; mm <= NM; ++mm)
            ndef.push_back({nb[k][mm - 1], -(double)mm});
        m.add_con(cat("cdef_n", {nm.dc(k)}), std::move(ndef), Sense::EQ, 0.0);

        for (int i = 0; i < I; ++i) {
            std::vector<LinTerm> row2{{y[i][k], 1.0}};
            for (int mm = 1; mm <= NM; ++mm) row2.push_back({nb[k][mm - 1], -1.0});
            m.add_con(cat("cyn", {nm.ret(i), nm.dc(k)}), std::move(row2), Sense::LE,
                      0.0);
        }

        linearize_bilinear(m, qvar[k], nvar[k], sig[k], a_bound[k], (double)NM,
                           cat("csig", {nm.dc(k)}));

        m.add_con(cat("cdef_ei", {nm.dc(k)}),
                  {{eivar[k], 1.0},
                   {ptd[k], -1.0},
                   {ptsig[k], 1.0},
                   {ssvar[k], -1.0},
                   {ppss[k], 1.0},
                   {ppsig[k], -1.0},
                   {ppd[k], 1.0},
                   {phss[k], -1.0},
                   {phsig[k], 1.0},
                   {phd[k], -1.0}},
                  Sense::EQ, 0.0);
    }

    // --- objective rows ---
    std::vector<LinTerm> z1, z2;
    const double beta = inst.weights.beta;
    const double theta = inst.weights.theta;
    for (int k = 0; k < K; ++k) {
        z1.push_back({x[k], inst.dcs[k].fixed_cost});
        z1.push_back({nvar[k], beta * inst.dcs[k].ship_fixed_cost});
        z1.push_back({sig[k], beta * inst.dcs[k].ship_unit_cost});
        z1.push_back({nvar[k], inst.dcs[k].order_cost});
        z1.push_back({eivar[k], theta * inst.dcs[k].holding_cost});
        z2.push_back({eivar[k],
                      inst.dcs[k].emission_weight * inst.dcs[k].holding_cost});
        for (int v = 0; v < Vin; ++v) {
            z1.push_back({w_in[k][v], inst.vehicles_in[v].fixed_cost});
            const Vehicle& veh = inst.vehicles_in[v];
            double slope = veh.capacity > 0
                               ? (veh.fuel_rate_full - veh.fuel_rate_empty) /
                                     veh.capacity
                               : 0.0;
            double dist = inst.dist_supplier_dc(k);
            for (int mm = 1; mm <= NM; ++mm) {
                z2.push_back({wif[k][v][mm - 1], veh.emission_factor * dist *
                                                     (double)mm * 2.0 *
                                                     veh.fuel_rate_empty});
                z2.push_back({uif[k][v][mm - 1],
                              veh.emission_factor * dist * (double)mm * slope});
            }
        }
    }
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (int v = 0; v < Vout; ++v) {
            if (arcs[a].from_dc >= 0)
                z1.push_back({w_arc[a][v], inst.vehicles_out[v].fixed_cost});
            const Vehicle& veh = inst.vehicles_out[v];
            double slope =
                veh.capacity > 0
                    ? (veh.fuel_rate_full - veh.fuel_rate_empty) / veh.capacity
                    : 0.0;
            for (int mm = 1; mm <= NM; ++mm) {
                z1.push_back({wf[a][v][mm - 1],
                              beta * inst.unit_ship_rate * arcs[a].dist * (double)mm});
                z2.push_back({wf[a][v][mm - 1], veh.emission_factor * arcs[a].dist *
                                                    (double)mm *
                                                    veh.fuel_rate_empty});
                z2.push_back({uf[a][v][mm - 1],
                              veh.emission_factor * arcs[a].dist * (double)mm * slope});
            }
        }
    m.obj_z1 = consolidate(std::move(z1));
    m.obj_z2 = consolidate(std::move(z2));
    return m;
}

namespace {

void format_row(std::ostringstream& os, const MilpModel& m,
                const std::vector<LinTerm>& row) {
    std::size_t line_len = os.str().size();
    bool first = true;
    std::size_t last_break = 0;
    std::string acc;
    for (const auto& t : row) {
        std::ostringstream term;
        term.precision(17);
        double c = t.coef;
        if (first) {
            if (c < 0) term << "- ";
            first = false;
        } else {
            term << (c < 0 ? " - " : " + ");
        }
        term << std::abs(c) << ' ' << m.vars[t.var].name;
        acc += term.str();
        if (acc.size() - last_break > 200) {
            acc += "\n   ";
            last_break = acc.size();
        }
    }
    (void)line_len;
    os << acc;
}

} // namespace

std::string lp_string(const MilpModel& m) {
    std::ostringstream os;
    os.precision(17);
    os << "\\ bi-objective location-routing-inventory model\n";
    os << "Minimize\n obj: ";
    format_row(os, m, m.obj_z1);
    os << "\nSubject To\n";
    for (const auto& c : m.cons) {
        os << ' ' << c.name << ": ";
        format_row(os, m, c.terms);
        const char* sense = c.sense == Sense::LE ? "<=" : c.sense == Sense::GE ? ">=" : "=";
        os << ' ' << sense << ' ' << c.rhs << '\n';
    }
    if (!m.obj_z2.empty()) {
        os << " z2_level: ";
        format_row(os, m, m.obj_z2);
        os << " <= 1e+30\n";
    }
    os << "Bounds\n";
    for (const auto& v : m.vars) {
        if (v.kind == VarKind::Binary) continue;
        if (v.lo == 0.0 && v.hi == kInf) continue;
        if (v.hi == kInf) os << ' ' << v.name << " >= " << v.lo << '\n';
        else os << ' ' << v.lo << " <= " << v.name << " <= " << v.hi << '\n';
    }
    bool any_int = false;
    for (const auto& v : m.vars)
        if (v.kind == VarKind::Integer) any_int = true;
    if (any_int) {
        os << "Generals\n";
        std::string line = " ";
        for (const auto& v : m.vars)
            if (v.kind == VarKind::Integer) {
                line += v.name + ' ';
                if (line.size() > 200) {
                    os << line << '\n';
                    line = " ";
                }
            }
        if (line.size() > 1) os << line << '\n';
    }
    bool any_bin = false;
    for (const auto& v : m.vars)
        if (v.kind == VarKind::Binary) any_bin = true;
    if (any_bin) {
        os << "Binaries\n";
        std::string line = " ";
        for (const auto& v : m.vars)
            if (v.kind == VarKind::Binary) {
                line += v.name + ' ';
                if (line.size() > 200) {
                    os << line << '\n';
                    line = " ";
                }
            }
        if (line.size() > 1) os << line << '\n';
    }
    os << "End\n";
    return os.str();
}

void export_lp(const MilpModel& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write LP file: " + path);
    f << lp_string(m);
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

MilpAssignment extend_plan(const MilpModel& m, const Instance& inst,
                           const Plan& plan) {
    if (!plan.feasible)
        throw std::invalid_argument("extension requires a feasible plan");
    int K = (int)inst.num_dcs();
    int I = (int)inst.num_retailers();
    int Vin = (int)inst.vehicles_in.size();
    Names nm{(std::size_t)K, (std::size_t)I, (std::size_t)Vin};
    MilpAssignment a;
    a.values.assign(m.vars.size(), 0.0);
    auto set = [&](const std::string& name, double v) { a.values[m.var(name)] = v; };
    auto get = [&](const std::string& name) { return a.values[m.var(name)]; };

    double zq = z_quantile(inst.weights.alpha);
    // number of one-hot slots, recovered from the model itself
    int NM = 0;
    while (m.has_var(cat("nb", {nm.dc(0), NM + 1}))) ++NM;

    for (std::size_t r = 0; r < plan.assignment.size(); ++r)
        if (plan.assignment[r] >= 0)
            set(cat("y", {nm.ret((int)r), nm.dc(plan.assignment[r])}), 1.0);

    std::vector<int> n_of(K, 0);
    for (const auto& o : plan.orders) {
        int k = o.dc;
        n_of[k] = o.n;
        set(cat("x", {nm.dc(k)}), 1.0);
        if (o.n > NM)
            throw std::invalid_argument("plan frequency exceeds model range");
        set(cat("nb", {nm.dc(k), o.n}), 1.0);
        set(cat("n", {nm.dc(k)}), (double)o.n);
        set(cat("q", {nm.dc(k)}), o.q);
        set(cat("sig", {nm.dc(k)}), o.q * (double)o.n);
        for (const auto& trip : o.inbound) {
            set(cat("w", {0, nm.dc(k), nm.vin(trip.vehicle)}), 1.0);
            set(cat("w", {nm.dc(k), 0, nm.vin(trip.vehicle)}), 1.0);
            set(cat("u", {0, nm.dc(k), nm.vin(trip.vehicle)}), trip.load);
            set(cat("r", {nm.dc(k), nm.vin(trip.vehicle)}), 1.0);
            set(cat("wif", {nm.dc(k), nm.vin(trip.vehicle), o.n}), 1.0);
            set(cat("uif", {nm.dc(k), nm.vin(trip.vehicle), o.n}), trip.load);
        }
    }

    // demand, subset indicator, safety stock, inventory level per DC
    for (int k = 0; k < K; ++k) {
        double mu = 0, var = 0;
        std::size_t mask = 0;
        for (int i = 0; i < I; ++i)
            if (plan.assignment[i] == k) {
                mu += inst.retailers[i].demand_mean;
                var += inst.retailers[i].demand_var;
                mask |= (std::size_t)1 << i;
            }
        set(cat("d", {nm.dc(k)}), mu);
        set("tau_" + std::to_string(nm.dc(k)) + "_" + std::to_string(mask), 1.0);
        double ss = zq * std::sqrt(inst.dcs[k].lead_time * var);
        set(cat("ss", {nm.dc(k)}), ss);
        set(cat("ei", {nm.dc(k)}), ss);
        // t, tp, th and their products all stay zero: decoded plans order
        // exactly the assigned demand per cycle.
    }

    for (const auto& t : plan.tours) {
        int k = t.dc;
        int n = n_of[k];
        long long gv = nm.vout(t.vehicle);
        set(cat("r", {nm.dc(k), gv}), 1.0);
        set(cat("g", {nm.dc(k), gv, n}), 1.0);
        set(cat("nu", {gv, n}), 1.0);
        long long prev = nm.dc(k);
        for (std::size_t s = 0; s < t.stops.size(); ++s) {
            long long node = nm.ret(t.stops[s]);
            set(cat("w", {prev, node, gv}), 1.0);
            set(cat("u", {prev, node, gv}), t.arc_loads[s]);
            set(cat("wf", {prev, node, gv, n}), 1.0);
            set(cat("uf", {prev, node, gv, n}), t.arc_loads[s]);
            set(cat("m", {node, gv}), (double)s);
            prev = node;
        }
        set(cat("w", {prev, nm.dc(k), gv}), 1.0);
        set(cat("u", {prev, nm.dc(k), gv}), t.arc_loads.back());
        set(cat("wf", {prev, nm.dc(k), gv, n}), 1.0);
        set(cat("uf", {prev, nm.dc(k), gv, n}), t.arc_loads.back());
    }
    (void)get;
    return a;
}

std::vector<std::string> check_assignment(const MilpModel& m,
                                          const MilpAssignment& a, double tol) {
    std::vector<std::string> errs;
    if (a.values.size() != m.vars.size()) {
        errs.push_back("assignment length mismatch");
        return errs;
    }
    for (std::size_t i = 0; i < m.vars.size(); ++i) {
        const auto& v = m.vars[i];
        double val = a.values[i];
        double scale = std::max({1.0, std::abs(v.lo),
                                 v.hi == kInf ? 1.0 : std::abs(v.hi)});
        if (val < v.lo - tol * scale || (v.hi != kInf && val > v.hi + tol * scale))
            errs.push_back("bound violated: " + v.name);
        if (v.kind != VarKind::Continuous &&
            std::abs(val - std::round(val)) > tol)
            errs.push_back("integrality violated: " + v.name);
    }
    for (const auto& c : m.cons) {
        double lhs = row_value(m, c.terms, a);
        double scale = std::max({1.0, std::abs(lhs), std::abs(c.rhs)});
        bool ok = true;
        switch (c.sense) {
        case Sense::LE: ok = lhs <= c.rhs + tol * scale; break;
        case Sense::GE: ok = lhs >= c.rhs - tol * scale; break;
        case Sense::EQ: ok = std::abs(lhs - c.rhs) <= tol * scale; break;
        }
        if (!ok) {
            std::ostringstream os;
            os.precision(17);
            os << "constraint violated: " << c.name << " lhs=" << lhs
               << " rhs=" << c.rhs;
            errs.push_back(os.str());
        }
    }
    return errs;
}

} // namespace glrip
