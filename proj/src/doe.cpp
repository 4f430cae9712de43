#include "glrip/doe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "glrip/metrics.hpp"

namespace glrip {

namespace {

// Column c of the plan as a linear form over the base-3 row counter. The
// forms are pairwise independent, which is what makes the arrays orthogonal.
int l9_entry(int row, int col) {
    int a = row / 3, b = row % 3;
    switch (col) {
        case 0: return a;
        case 1: return b;
        case 2: return (a + b) % 3;
        default: return (a + 2 * b) % 3;
    }
}

int l27_entry(int row, int col) {
    int a = row / 9, b = (row / 3) % 3, c = row % 3;
    switch (col) {
        case 0: return a;
        case 1: return b;
        case 2: return c;
        case 3: return (a + b) % 3;
        case 4: return (a + 2 * b) % 3;
        case 5: return (a + c) % 3;
        case 6: return (a + 2 * c) % 3;
        case 7: return (b + c) % 3;
        case 8: return (b + 2 * c) % 3;
        case 9: return (a + b + c) % 3;
        case 10: return (a + b + 2 * c) % 3;
        case 11: return (a + 2 * b + c) % 3;
        default: return (a + 2 * b + 2 * c) % 3;
    }
}

} // namespace

TaguchiDesign taguchi_design(const std::vector<TaguchiFactor>& factors) {
    if (factors.empty() || factors.size() > 13)
        throw std::invalid_argument("need between 1 and 13 factors");
    TaguchiDesign d;
    d.factors = factors;
    int nf = (int)factors.size();
    int rows = nf <= 4 ? 9 : 27;
    for (int r = 0; r < rows; ++r) {
        std::vector<int> levels(nf);
        for (int c = 0; c < nf; ++c)
            levels[c] = rows == 9 ? l9_entry(r, c) : l27_entry(r, c);
        d.rows.push_back(std::move(levels));
    }
    return d;
}

bool is_orthogonal(const TaguchiDesign& design) {
    int nf = (int)design.factors.size();
    int rows = (int)design.rows.size();
    if (rows == 0 || rows % 9 != 0) return false;
    int expected = rows / 9;
    for (int c1 = 0; c1 < nf; ++c1)
        for (int c2 = c1 + 1; c2 < nf; ++c2) {
            int count[3][3] = {};
            for (const auto& row : design.rows)
                ++count[row[c1]][row[c2]];
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (count[a][b] != expected) return false;
        }
    return true;
}

std::vector<double> normalize(const std::vector<double>& column,
                              Direction dir) {
    if (column.empty()) throw std::invalid_argument("empty column");
    double lo = *std::min_element(column.begin(), column.end());
    double hi = *std::max_element(column.begin(), column.end());
    std::vector<double> out(column.size(), 0.0);
    if (hi == lo) return out; // constant column carries no information
    for (std::size_t i = 0; i < column.size(); ++i)
        out[i] = dir == Direction::Maximize ? (column[i] - lo) / (hi - lo)
                                            : (hi - column[i]) / (hi - lo);
    return out;
}

double response(const std::array<double, 4>& normalized) {
    return 100.0 * normalized[0] + 10.0 * normalized[1] + normalized[2] +
           normalized[3];
}

double snr(const std::vector<double>& values, SnrForm form) {
    if (values.empty()) throw std::invalid_argument("empty sample");
    double acc = 0;
    for (double y : values) {
        if (y == 0)
            throw std::domain_error("zero value makes the ratio unbounded");
        acc += form == SnrForm::SmallerBetter ? y * y : 1.0 / (y * y);
    }
    return -10.0 * std::log10(acc / (double)values.size());
}

std::vector<int> best_levels(const TaguchiDesign& design,
                             const std::vector<double>& row_snr) {
    if (row_snr.size() != design.rows.size())
        throw std::invalid_argument("one S/N value per design row required");
    std::vector<int> best(design.factors.size(), 0);
    for (std::size_t f = 0; f < design.factors.size(); ++f) {
        double mean[3] = {};
        int count[3] = {};
        for (std::size_t r = 0; r < design.rows.size(); ++r) {
            int level = design.rows[r][f];
            mean[level] += row_snr[r];
            ++count[level];
        }
        int pick = 0;
        double pick_mean = -std::numeric_limits<double>::infinity();
        for (int l = 0; l < 3; ++l) {
            if (count[l] == 0) continue;
            double m = mean[l] / (double)count[l];
            if (m > pick_mean) {
                pick_mean = m;
                pick = l;
            }
        }
        best[f] = pick;
    }
    return best;
}

std::vector<TaguchiFactor> tuning_factors(Algorithm algorithm) {
    TaguchiFactor pop{"population_size", {50, 100, 150}};
    TaguchiFactor archive{"archive_size", {100, 200, 300}};
    TaguchiFactor cross{"crossover_fraction", {0.7, 0.8, 0.9}};
    TaguchiFactor mut{"mutation_fraction", {0.3, 0.2, 0.1}};
    TaguchiFactor rate{"mutation_rate", {0.03, 0.05, 0.07}};
    TaguchiFactor sel{"selection_pressure", {2, 3, 4}};
    TaguchiFactor del{"deletion_pressure", {1, 2, 3}};
    switch (algorithm) {
        case Algorithm::NSGA2:
        case Algorithm::NRGA:
            return {pop, cross, mut, rate};
        case Algorithm::SPEA2:
            return {pop, archive, cross, mut, rate};
        default:
            return {pop, archive, cross, mut, rate, sel, del};
    }
}

AlgorithmConfig config_from_levels(const TaguchiDesign& design,
                                   const std::vector<int>& levels,
                                   AlgorithmConfig base) {
    if (levels.size() != design.factors.size())
        throw std::invalid_argument("one level per factor required");
    for (std::size_t f = 0; f < design.factors.size(); ++f) {
        double v = design.factors[f].levels[(std::size_t)levels[f]];
        const std::string& name = design.factors[f].name;
        if (name == "population_size")
            base.population_size = (int)std::llround(v);
        else if (name == "archive_size")
            base.archive_size = (int)std::llround(v);
        else if (name == "crossover_fraction")
            base.crossover_fraction = v;
        else if (name == "mutation_fraction")
            base.mutation_fraction = v;
        else if (name == "mutation_rate")
            base.mutation_rate = v;
        else if (name == "selection_pressure")
            base.selection_pressure = (int)std::llround(v);
        else if (name == "deletion_pressure")
            base.deletion_pressure = (int)std::llround(v);
        else
            throw std::invalid_argument("unknown factor '" + name + "'");
    }
    return base;
}

TuningResult run_tuning(const Instance& inst, Algorithm algorithm,
                        const TuningOptions& opts) {
    TuningResult res;
    res.algorithm = algorithm;
    res.design = taguchi_design(opts.factors.empty() ? tuning_factors(algorithm)
                                                     : opts.factors);
    std::size_t rows = res.design.rows.size();
    if (opts.repetitions < 1)
        throw std::invalid_argument("repetitions must be positive");

    // metric accumulators per design row
    std::vector<double> qm(rows, 0), sm(rows, 0), mid(rows, 0), dm(rows, 0);
    for (int rep = 0; rep < opts.repetitions; ++rep) {
        std::vector<Front> fronts(rows);
        auto run_row = [&](std::size_t r) {
            AlgorithmConfig cfg = config_from_levels(
                res.design, res.design.rows[r], default_config(algorithm));
            cfg.fe_budget = opts.fe_budget;
            cfg.seed = opts.seed + 1000003ULL * (std::uint64_t)r +
                       (std::uint64_t)rep;
            fronts[r] = run_moea(inst, cfg, opts.decode).front;
        };
        if (opts.threads > 1) {
            std::vector<std::thread> pool;
            int workers = std::min<int>(opts.threads, (int)rows);
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w]() {
                    for (std::size_t r = (std::size_t)w; r < rows;
                         r += (std::size_t)workers)
                        run_row(r);
                });
            for (auto& t : pool) t.join();
        } else {
            for (std::size_t r = 0; r < rows; ++r) run_row(r);
        }

        std::vector<double> shares = quality_metric(fronts);
        MidBasis basis = mid_basis(fronts);
        for (std::size_t r = 0; r < rows; ++r) {
            qm[r] += shares[r];
            sm[r] += spacing_metric(fronts[r]).value_or(0.0);
            mid[r] += mean_ideal_distance(fronts[r], basis.ideal, basis.range);
            dm[r] += diversity_metric(fronts[r]);
        }
    }
    double reps = (double)opts.repetitions;
    for (std::size_t r = 0; r < rows; ++r) {
        qm[r] /= reps;
        sm[r] /= reps;
        mid[r] /= reps;
        dm[r] /= reps;
    }

    std::vector<double> qm_n = normalize(qm, Direction::Maximize);
    std::vector<double> sm_n = normalize(sm, Direction::Minimize);
    std::vector<double> mid_n = normalize(mid, Direction::Minimize);
    std::vector<double> dm_n = normalize(dm, Direction::Maximize);

    std::vector<double> row_snr(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        TuningExperiment exp;
        exp.levels = res.design.rows[r];
        exp.qm = qm[r];
        exp.sm = sm[r];
        exp.mid = mid[r];
        exp.dm = dm[r];
        exp.response_value = response({qm_n[r], mid_n[r], sm_n[r], dm_n[r]});
        // A response of exactly zero (worst in every metric) would be
        // unbounded under the decibel form; clamp it just above zero.
        double y = std::max(exp.response_value, 1e-12);
        exp.snr_value = snr({y}, opts.snr_form);
        row_snr[r] = exp.snr_value;
        res.experiments.push_back(std::move(exp));
    }

    res.best = best_levels(res.design, row_snr);
    res.config = config_from_levels(res.design, res.best,
                                    default_config(algorithm));
    res.config.fe_budget = opts.fe_budget;
    res.config.seed = opts.seed;
    return res;
}

std::string tuning_csv(const TuningResult& result) {
    std::ostringstream os;
    os.precision(12);
    os << "experiment";
    for (const auto& f : result.design.factors) os << ',' << f.name;
    os << ",QM,SM,MID,DM,response,snr\n";
    for (std::size_t r = 0; r < result.experiments.size(); ++r) {
        const auto& e = result.experiments[r];
        os << (r + 1);
        for (std::size_t f = 0; f < result.design.factors.size(); ++f)
            os << ','
               << result.design.factors[f].levels[(std::size_t)e.levels[f]];
        os << ',' << e.qm << ',' << e.sm << ',' << e.mid << ',' << e.dm << ','
           << e.response_value << ',' << e.snr_value << '\n';
    }
    return os.str();
}

std::string tuning_config_json(const TuningResult& result) {
    nlohmann::json j;
    j["algorithm"] = algorithm_name(result.algorithm);
    j["population_size"] = result.config.population_size;
    j["archive_size"] = result.config.archive_size;
    j["crossover_fraction"] = result.config.crossover_fraction;
    j["mutation_fraction"] = result.config.mutation_fraction;
    j["mutation_rate"] = result.config.mutation_rate;
    j["selection_pressure"] = result.config.selection_pressure;
    j["deletion_pressure"] = result.config.deletion_pressure;
    j["grid_divisions"] = result.config.grid_divisions;
    j["fe_budget"] = result.config.fe_budget;
    j["seed"] = result.config.seed;
    return j.dump(2) + "\n";
}

} // namespace glrip
