#pragma once

#include <string>
#include <vector>

namespace glrip {

// One algorithm's observations of a single metric.
struct SampleGroup {
    std::string name;
    std::vector<double> values;
};

struct KruskalWallisResult {
    double h = 0;  // rank statistic, tie-corrected
    double p = 1;  // chi-square upper tail with (groups-1) dof
    int df = 0;
};

// Omnibus rank test across >= 2 nonempty groups. All-identical data is the
// degenerate case and reports (h=0, p=1).
KruskalWallisResult kruskal_wallis(const std::vector<SampleGroup>& groups);

struct DunnRow {
    std::string group_a;
    std::string group_b;
    double mean_rank_a = 0;
    double mean_rank_b = 0;
    double std_error = 0;
    double z = 0;           // (mean_rank_a - mean_rank_b) / std_error
    double p_raw = 1;       // two-sided normal tail
    double p_adjusted = 1;  // Bonferroni: min(1, raw * pairs)
    bool significant = false;
};

// Pairwise follow-up comparisons on the pooled mid-ranks.
std::vector<DunnRow> pairwise_dunn(const std::vector<SampleGroup>& groups,
                                   double alpha = 0.05);

// Upper-tail probability of the chi-square distribution (regularized upper
// incomplete gamma function).
double chi_square_sf(double x, int df);

// CSV report of the pairwise table (one row per group pair).
std::string dunn_csv(const std::vector<DunnRow>& rows);

} // namespace glrip
