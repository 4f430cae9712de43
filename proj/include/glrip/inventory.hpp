#pragma once

namespace glrip {

// Per-DC inventory state for one ordering cycle configuration.
struct DcInventoryState {
    double mu_sum = 0;   // total assigned mean demand per year
    double var_sum = 0;  // total assigned demand variance
    int n = 1;           // orders per year
    double q = 0;        // order quantity per cycle
    double lead_time = 0;
    double z_alpha = 0;  // service-level normal quantile
    bool t = false;      // shortage scenario bit
    bool t_prime = false; // surplus-beyond-safety-stock bit
};

// Standard normal quantile: returns z with Phi(z) = alpha, |error| < 1e-8.
double z_quantile(double alpha);

struct ScenarioBits {
    bool t = false;
    bool t_prime = false;
};

// Scenario classification. Ties (equalities) resolve to (0,0).
ScenarioBits classify(double mu_sum, double var_sum, int n, double q, double lead,
                      double z_alpha);

// Safety stock z * sqrt(lead * var_sum).
double safety_stock(double var_sum, double lead, double z_alpha);

// The literal four-term expected-inventory expression for the state's bits.
double expected_inventory(const DcInventoryState& s);

// Piecewise equivalent: max(SS, |nq - mu|) when nq >= mu, else (mu - nq) + SS.
double expected_inventory_closed(double mu_sum, double var_sum, int n, double q,
                                 double lead, double z_alpha);

// Classify, then evaluate; the path every objective evaluation takes.
double expected_inventory_auto(double mu_sum, double var_sum, int n, double q,
                               double lead, double z_alpha);

} // namespace glrip
