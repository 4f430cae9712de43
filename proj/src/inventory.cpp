#include "glrip/inventory.hpp"

#include <cmath>
#include <stdexcept>

namespace glrip {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Acklam's rational approximation to the inverse normal CDF (~1e-9 accurate
// before refinement).
double inv_normal_approx(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        double q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > 1 - plow) {
        double q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

} // namespace

double z_quantile(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("z_quantile: alpha must be in (0,1)");
    double z = inv_normal_approx(alpha);
    // One Halley step against the erfc-based CDF pushes the error well under 1e-8.
    for (int it = 0; it < 2; ++it) {
        const double e = normal_cdf(z) - alpha;
        const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
        if (pdf == 0) break;
        const double u = e / pdf;
        z -= u / (1 + 0.5 * z * u);
    }
    return z;
}

double safety_stock(double var_sum, double lead, double z_alpha) {
    return z_alpha * std::sqrt(lead * var_sum);
}

ScenarioBits classify(double mu_sum, double var_sum, int n, double q, double lead,
                      double z_alpha) {
    ScenarioBits bits;
    const double nq = static_cast<double>(n) * q;
    if (mu_sum - nq > 0) {
        bits.t = true; // shortage: annual supply under annual demand
        bits.t_prime = false;
    } else {
        bits.t = false;
        // surplus strictly beyond the safety stock flips the second bit
        bits.t_prime = (nq - mu_sum) > safety_stock(var_sum, lead, z_alpha);
    }
    return bits;
}

double expected_inventory(const DcInventoryState& s) {
    const double nq = static_cast<double>(s.n) * s.q;
    const double ss = safety_stock(s.var_sum, s.lead_time, s.z_alpha);
    const double t = s.t ? 1.0 : 0.0;
    const double tp = s.t_prime ? 1.0 : 0.0;
    return t * (s.mu_sum - nq) + t * ss + (1 - t) * (nq - s.mu_sum) +
           (1 - t) * (1 - tp) * (ss - (nq - s.mu_sum));
}

double expected_inventory_closed(double mu_sum, double var_sum, int n, double q,
                                 double lead, double z_alpha) {
    const double nq = static_cast<double>(n) * q;
    const double ss = safety_stock(var_sum, lead, z_alpha);
    if (nq >= mu_sum) return std::max(ss, std::abs(nq - mu_sum));
    return (mu_sum - nq) + ss;
}

double expected_inventory_auto(double mu_sum, double var_sum, int n, double q,
                               double lead, double z_alpha) {
    DcInventoryState s;
    s.mu_sum = mu_sum;
    s.var_sum = var_sum;
    s.n = n;
    s.q = q;
    s.lead_time = lead;
    s.z_alpha = z_alpha;
    const ScenarioBits bits = classify(mu_sum, var_sum, n, q, lead, z_alpha);
    s.t = bits.t;
    s.t_prime = bits.t_prime;
    return expected_inventory(s);
}

} // namespace glrip
