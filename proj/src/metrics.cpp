#include "glrip/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace glrip {

bool dominates(const ObjectivePair& a, const ObjectivePair& b) {
    return a.z1 <= b.z1 && a.z2 <= b.z2 && (a.z1 < b.z1 || a.z2 < b.z2);
}

namespace {

bool near(const ObjectivePair& a, const ObjectivePair& b) {
    return std::abs(a.z1 - b.z1) <= 1e-9 && std::abs(a.z2 - b.z2) <= 1e-9;
}

bool lex_less(const ObjectivePair& a, const ObjectivePair& b) {
    if (a.z1 != b.z1) return a.z1 < b.z1;
    return a.z2 < b.z2;
}

} // namespace

Front pareto_filter(const Front& points) {
    Front sorted = points;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    Front out;
    double best_z2 = std::numeric_limits<double>::infinity();
    for (const auto& p : sorted) {
        if (!out.empty() && near(out.back(), p)) continue;
        if (p.z2 < best_z2) {
            out.push_back(p);
            best_z2 = p.z2;
        }
    }
    return out;
}

std::vector<double> quality_metric(const std::vector<Front>& fronts) {
    Front merged;
    for (const auto& f : fronts) merged.insert(merged.end(), f.begin(), f.end());
    Front star = pareto_filter(merged);
    std::vector<double> share(fronts.size(), 0.0);
    if (star.empty())
        throw std::invalid_argument("quality_metric: no points to merge");
    for (const auto& p : star) {
        for (std::size_t a = 0; a < fronts.size(); ++a) {
            bool found = false;
            for (const auto& q : fronts[a])
                if (near(p, q)) {
                    found = true;
                    break;
                }
            if (found) share[a] += 1.0;
        }
    }
    for (double& s : share) s /= (double)star.size();
    return share;
}

std::optional<double> spacing_metric(const Front& front) {
    if (front.size() < 3) return std::nullopt;
    Front s = front;
    std::sort(s.begin(), s.end(), lex_less);
    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        double dx = s[i + 1].z1 - s[i].z1;
        double dy = s[i + 1].z2 - s[i].z2;
        gaps.push_back(std::sqrt(dx * dx + dy * dy));
    }
    double mean = 0;
    for (double g : gaps) mean += g;
    mean /= (double)gaps.size();
    if (mean <= 0) return 0.0;
    double dev = 0;
    for (double g : gaps) dev += std::abs(mean - g);
    // normalized by (count-1) x mean gap, counting the gaps
    return dev / ((double)(gaps.size() - 1) * mean);
}

double mean_ideal_distance(const Front& front, const ObjectivePair& ideal,
                           const ObjectivePair& range) {
    if (front.empty()) return 0.0;
    double r1 = range.z1 > 0 ? range.z1 : 1.0;
    double r2 = range.z2 > 0 ? range.z2 : 1.0;
    double sum = 0;
    for (const auto& p : front) {
        double dx = (p.z1 - ideal.z1) / r1;
        double dy = (p.z2 - ideal.z2) / r2;
        sum += std::sqrt(dx * dx + dy * dy);
    }
    return sum / (double)front.size();
}

MidBasis mid_basis(const std::vector<Front>& fronts) {
    MidBasis b;
    b.ideal = {std::numeric_limits<double>::infinity(),
               std::numeric_limits<double>::infinity()};
    ObjectivePair hi{-std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
    bool any = false;
    for (const auto& f : fronts)
        for (const auto& p : f) {
            any = true;
            b.ideal.z1 = std::min(b.ideal.z1, p.z1);
            b.ideal.z2 = std::min(b.ideal.z2, p.z2);
            hi.z1 = std::max(hi.z1, p.z1);
            hi.z2 = std::max(hi.z2, p.z2);
        }
    if (!any) {
        b.ideal = {0, 0};
        b.range = {1, 1};
        return b;
    }
    b.range.z1 = hi.z1 - b.ideal.z1 > 0 ? hi.z1 - b.ideal.z1 : 1.0;
    b.range.z2 = hi.z2 - b.ideal.z2 > 0 ? hi.z2 - b.ideal.z2 : 1.0;
    return b;
}

double diversity_metric(const Front& front) {
    if (front.empty()) return 0.0;
    double min1 = front[0].z1, max1 = front[0].z1;
    double min2 = front[0].z2, max2 = front[0].z2;
    for (const auto& p : front) {
        min1 = std::min(min1, p.z1);
        max1 = std::max(max1, p.z1);
        min2 = std::min(min2, p.z2);
        max2 = std::max(max2, p.z2);
    }
    double dx = max1 - min1, dy = max2 - min2;
    return std::sqrt(dx * dx + dy * dy);
}

double hypervolume(const Front& front, const ObjectivePair& ref) {
    Front nd = pareto_filter(front);
    for (const auto& p : nd)
        if (p.z1 > ref.z1 || p.z2 > ref.z2)
            throw std::invalid_argument("hypervolume: point beyond reference");
    // Sweep by ascending z2; each point closes a rectangle against prev z1.
    std::sort(nd.begin(), nd.end(),
              [](const ObjectivePair& a, const ObjectivePair& b) { return a.z2 < b.z2; });
    double hv = 0;
    double prev_z1 = ref.z1;
    for (const auto& p : nd) {
        hv += (prev_z1 - p.z1) * (ref.z2 - p.z2);
        prev_z1 = p.z1;
    }
    return hv;
}

} // namespace glrip
