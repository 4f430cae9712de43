#include "glrip/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glrip {

namespace {

struct RankedPool {
    std::vector<double> ranks; // aligned with the pooled input order, 1-based
    double tie_sum = 0;        // sum over tie runs of t^3 - t
};

RankedPool mid_ranks(const std::vector<double>& pooled) {
    std::vector<std::size_t> idx(pooled.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    RankedPool out;
    out.ranks.resize(pooled.size());
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        while (j + 1 < idx.size() && pooled[idx[j + 1]] == pooled[idx[i]]) ++j;
        double rank = 0.5 * (double)(i + 1 + j + 1); // average of 1-based span
        for (std::size_t k = i; k <= j; ++k) out.ranks[idx[k]] = rank;
        double t = (double)(j - i + 1);
        out.tie_sum += t * t * t - t;
        i = j + 1;
    }
    return out;
}

void validate_groups(const std::vector<SampleGroup>& groups) {
    if (groups.size() < 2)
        throw std::invalid_argument("need at least two groups");
    for (const auto& g : groups)
        if (g.values.empty())
            throw std::invalid_argument("group '" + g.name + "' is empty");
}

std::vector<double> pool_values(const std::vector<SampleGroup>& groups) {
    std::vector<double> pooled;
    for (const auto& g : groups)
        pooled.insert(pooled.end(), g.values.begin(), g.values.end());
    return pooled;
}

bool all_identical(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](double x) { return x == v.front(); });
}

// Regularized lower incomplete gamma P(a,x) by series, for x < a+1.
double gamma_series_p(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + (double)n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a,x) by continued fraction, x >= a+1.
double gamma_cf_q(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -(double)i * ((double)i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double normal_two_sided_p(double z) {
    return std::erfc(std::abs(z) / std::sqrt(2.0));
}

} // namespace

double chi_square_sf(double x, int df) {
    if (x < 0) throw std::invalid_argument("chi_square_sf: x must be >= 0");
    if (df < 1) throw std::invalid_argument("chi_square_sf: df must be >= 1");
    if (x == 0) return 1.0;
    double a = 0.5 * (double)df;
    double xx = 0.5 * x;
    if (xx < a + 1.0) return 1.0 - gamma_series_p(a, xx);
    return gamma_cf_q(a, xx);
}

KruskalWallisResult kruskal_wallis(const std::vector<SampleGroup>& groups) {
    validate_groups(groups);
    std::vector<double> pooled = pool_values(groups);
    KruskalWallisResult res;
    res.df = (int)groups.size() - 1;
    if (all_identical(pooled)) return res; // h=0, p=1
    if (pooled.size() < 3)
        throw std::invalid_argument("need at least three observations in total");

    RankedPool rp = mid_ranks(pooled);
    double n = (double)pooled.size();
    double stat = 0;
    std::size_t at = 0;
    for (const auto& g : groups) {
        double rank_sum = 0;
        for (std::size_t i = 0; i < g.values.size(); ++i)
            rank_sum += rp.ranks[at + i];
        at += g.values.size();
        stat += rank_sum * rank_sum / (double)g.values.size();
    }
    double h = 12.0 / (n * (n + 1.0)) * stat - 3.0 * (n + 1.0);
    double correction = 1.0 - rp.tie_sum / (n * n * n - n);
    res.h = h / correction;
    res.p = chi_square_sf(res.h, res.df);
    return res;
}

std::vector<DunnRow> pairwise_dunn(const std::vector<SampleGroup>& groups,
                                   double alpha) {
    validate_groups(groups);
    std::vector<double> pooled = pool_values(groups);
    RankedPool rp = mid_ranks(pooled);
    double n = (double)pooled.size();

    std::vector<double> mean_rank(groups.size(), 0);
    std::size_t at = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        double rank_sum = 0;
        for (std::size_t i = 0; i < groups[g].values.size(); ++i)
            rank_sum += rp.ranks[at + i];
        at += groups[g].values.size();
        mean_rank[g] = rank_sum / (double)groups[g].values.size();
    }

    double variance_base =
        n * (n + 1.0) / 12.0 - rp.tie_sum / (12.0 * (n - 1.0));
    std::size_t pairs = groups.size() * (groups.size() - 1) / 2;

    std::vector<DunnRow> table;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            DunnRow row;
            row.group_a = groups[i].name;
            row.group_b = groups[j].name;
            row.mean_rank_a = mean_rank[i];
            row.mean_rank_b = mean_rank[j];
            double inv = 1.0 / (double)groups[i].values.size() +
                         1.0 / (double)groups[j].values.size();
            row.std_error = std::sqrt(std::max(0.0, variance_base * inv));
            if (row.std_error > 0) {
                row.z = (mean_rank[i] - mean_rank[j]) / row.std_error;
                row.p_raw = normal_two_sided_p(row.z);
            } else {
                row.z = 0;
                row.p_raw = 1;
            }
            row.p_adjusted = std::min(1.0, row.p_raw * (double)pairs);
            row.significant = row.p_adjusted < alpha;
            table.push_back(row);
        }
    }
    return table;
}

std::string dunn_csv(const std::vector<DunnRow>& rows) {
    std::ostringstream os;
    os.precision(12);
    os << "group_a,group_b,mean_rank_a,mean_rank_b,std_error,z,p_raw,"
          "p_adjusted,significant\n";
    for (const auto& r : rows)
        os << r.group_a << ',' << r.group_b << ',' << r.mean_rank_a << ','
           << r.mean_rank_b << ',' << r.std_error << ',' << r.z << ','
           << r.p_raw << ',' << r.p_adjusted << ','
           << (r.significant ? 1 : 0) << '\n';
    return os.str();
}

} // namespace glrip
