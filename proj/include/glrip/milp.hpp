#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "glrip/decoder.hpp"
#include "glrip/instance.hpp"

namespace glrip {

enum class VarKind { Continuous, Integer, Binary };
enum class Sense { LE, GE, EQ };

struct MilpVar {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lo = 0;
    double hi = 0;
};

struct LinTerm {
    int var = -1;
    double coef = 0;
};

struct MilpConstraint {
    std::string name;
    std::vector<LinTerm> terms;
    Sense sense = Sense::LE;
    double rhs = 0;
};

struct MilpModel {
    std::vector<MilpVar> vars;
    std::vector<MilpConstraint> cons;
    std::vector<LinTerm> obj_z1, obj_z2;
    std::unordered_map<std::string, int> index;

    int add_var(const std::string& name, VarKind kind, double lo, double hi);
    int var(const std::string& name) const; // throws when absent
    bool has_var(const std::string& name) const;
    void add_con(const std::string& name, std::vector<LinTerm> terms, Sense sense,
                 double rhs);
};

// Dense assignment of values to every model variable.
struct MilpAssignment {
    std::vector<double> values;
};

double row_value(const MilpModel& m, const std::vector<LinTerm>& row,
                 const MilpAssignment& a);

// Standard McCormick envelope for sig = q*n with q in [0, q_bound] and
// n in [0, n_bound].
void linearize_bilinear(MilpModel& m, int q, int n, int sig, double q_bound,
                        double n_bound, const std::string& tag);

// z = product of binaries; returns the index of the new binary z.
int linearize_binary_product(MilpModel& m, const std::vector<int>& xs,
                             const std::string& name);

// p = cont * bin with cont in [0, ubound]; returns the index of p.
int linearize_scaled_product(MilpModel& m, int cont, int bin, double ubound,
                             const std::string& name);

// All 2^n subset sums of sigma2 (index = bitmask).
std::vector<double> subset_sums(const std::vector<double>& sigma2);

// Emits tau binaries for every sigma2 subset plus the indicator rows tying
// the active tau to the y-pattern; returns the tau indices (by bitmask).
// Contribution of the replaced root: sum_j sqrt(lead * b_j) * tau_j.
std::vector<int> linearize_sqrt(MilpModel& m, const std::vector<int>& y_vars,
                                const std::vector<double>& sigma2, double lead,
                                const std::string& tag, std::size_t subset_cap);

// Full linearized bi-objective model. Throws std::length_error when the
// retailer count exceeds subset_cap (use the evolutionary path instead).
MilpModel build_milp(const Instance& inst, std::size_t subset_cap = 16,
                     int n_max = 0);

void export_lp(const MilpModel& m, const std::string& path);
std::string lp_string(const MilpModel& m);

// Lifts a decoded plan onto every model variable (auxiliaries included).
MilpAssignment extend_plan(const MilpModel& m, const Instance& inst,
                           const Plan& plan);

// Constraint / bound / integrality violations at the given point.
std::vector<std::string> check_assignment(const MilpModel& m,
                                          const MilpAssignment& a,
                                          double tol = 1e-6);

} // namespace glrip
