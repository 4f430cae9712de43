#pragma once

#include <optional>
#include <vector>

#include "glrip/evaluation.hpp"

namespace glrip {

// Minimization in both coordinates: a dominates b when a is no worse in both
// and strictly better in at least one.
bool dominates(const ObjectivePair& a, const ObjectivePair& b);

using Front = std::vector<ObjectivePair>;

// Non-dominated subset, sorted by (z1, z2), near-duplicates (within 1e-9 in
// both coordinates) collapsed.
Front pareto_filter(const Front& points);

// Fraction of the combined non-dominated front contributed by each input
// front; a point found by several algorithms credits each of them.
std::vector<double> quality_metric(const std::vector<Front>& fronts);

// Spacing: mean absolute deviation of consecutive gaps (sorted by z1),
// normalized by the mean gap. Undefined for fronts with fewer than 3 points.
std::optional<double> spacing_metric(const Front& front);

// Mean normalized Euclidean distance to the experiment-wide ideal point.
double mean_ideal_distance(const Front& front, const ObjectivePair& ideal,
                           const ObjectivePair& range);

// Ideal point and per-objective value ranges over the union of several
// fronts; zero ranges are lifted to 1 so normalized distances stay finite.
struct MidBasis {
    ObjectivePair ideal;
    ObjectivePair range;
};
MidBasis mid_basis(const std::vector<Front>& fronts);

// Diagonal of the bounding box spanned by the front.
double diversity_metric(const Front& front);

// 2-D hypervolume dominated by `front` relative to `ref` (all points must be
// <= ref in both coordinates; throws otherwise).
double hypervolume(const Front& front, const ObjectivePair& ref);

} // namespace glrip
