#include "glrip/moea.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glrip {

std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::NSGA2: return "nsga2";
    case Algorithm::NRGA: return "nrga";
    case Algorithm::SPEA2: return "spea2";
    case Algorithm::PESA2: return "pesa2";
    }
    return "unknown";
}

bool parse_algorithm(const std::string& name, Algorithm& out) {
    std::string s;
    for (char c : name)
        if (c != '-' && c != '_') s += (char)std::tolower((unsigned char)c);
    if (s == "nsga2" || s == "nsgaii") out = Algorithm::NSGA2;
    else if (s == "nrga") out = Algorithm::NRGA;
    else if (s == "spea2" || s == "speaii") out = Algorithm::SPEA2;
    else if (s == "pesa2" || s == "pesaii") out = Algorithm::PESA2;
    else return false;
    return true;
}

AlgorithmConfig default_config(Algorithm a) {
    AlgorithmConfig c;
    c.algorithm = a;
    switch (a) {
    case Algorithm::NSGA2:
        c.population_size = 100;
        c.crossover_fraction = 0.7;
        c.mutation_fraction = 0.3;
        c.mutation_rate = 0.03;
        break;
    case Algorithm::NRGA:
        c.population_size = 150;
        c.crossover_fraction = 0.7;
        c.mutation_fraction = 0.2;
        c.mutation_rate = 0.05;
        break;
    case Algorithm::SPEA2:
        c.population_size = 100;
        c.archive_size = 300;
        c.crossover_fraction = 0.9;
        c.mutation_fraction = 0.2;
        c.mutation_rate = 0.03;
        break;
    case Algorithm::PESA2:
        c.population_size = 100;
        c.archive_size = 100;
        c.crossover_fraction = 0.7;
        c.mutation_fraction = 0.2;
        c.mutation_rate = 0.05;
        c.selection_pressure = 3;
        c.deletion_pressure = 3;
        break;
    }
    return c;
}

void validate_config(const AlgorithmConfig& cfg) {
    auto frac = [](double f) { return f >= 0.0 && f <= 1.0; };
    if (!frac(cfg.crossover_fraction) || !frac(cfg.mutation_fraction) ||
        !frac(cfg.mutation_rate))
        throw std::invalid_argument("config: fractions must lie in [0,1]");
    if (cfg.population_size < 2)
        throw std::invalid_argument("config: population must be at least 2");
    if (cfg.fe_budget < (std::uint64_t)cfg.population_size)
        throw std::invalid_argument("config: fe_budget below population size");
    if (cfg.crossover_fraction == 0.0 && cfg.mutation_fraction == 0.0)
        throw std::invalid_argument("config: no offspring source");
    if (cfg.algorithm == Algorithm::PESA2 &&
        (cfg.selection_pressure < 1 || cfg.deletion_pressure < 1 ||
         cfg.grid_divisions < 1))
        throw std::invalid_argument("config: PESA2 pressures/divisions must be >= 1");
}

std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<ObjectivePair>& points) {
    std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<int> dom_count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (dominates(points[i], points[j])) dominated[i].push_back(j);
            else if (dominates(points[j], points[i])) ++dom_count[i];
        }
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (dom_count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated[i])
                if (--dom_count[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<ObjectivePair>& points,
                                      const std::vector<std::size_t>& front) {
    const double inf = std::numeric_limits<double>::infinity();
    std::size_t m = front.size();
    std::vector<double> dist(m, 0.0);
    if (m <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    std::vector<std::size_t> pos(m);
    std::iota(pos.begin(), pos.end(), 0);
    for (int obj = 0; obj < 2; ++obj) {
        auto value = [&](std::size_t p) {
            return obj == 0 ? points[front[p]].z1 : points[front[p]].z2;
        };
        std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
            if (value(a) != value(b)) return value(a) < value(b);
            return a < b;
        });
        double range = value(pos.back()) - value(pos.front());
        dist[pos.front()] = inf;
        dist[pos.back()] = inf;
        if (range <= 0) continue;
        for (std::size_t p = 1; p + 1 < m; ++p)
            if (dist[pos[p]] != inf)
                dist[pos[p]] += (value(pos[p + 1]) - value(pos[p - 1])) / range;
    }
    return dist;
}

double rbrw_probability(int rank, int population_size) {
    if (rank < 1 || rank > population_size)
        throw std::out_of_range("rbrw_probability: rank out of range");
    double n = (double)population_size;
    return 2.0 * (double)rank / (n * (n + 1.0));
}

std::pair<Chromosome, Chromosome> blend_crossover(const Chromosome& a,
                                                  const Chromosome& b, Rng& rng) {
    if (a.size() != b.size())
        throw std::invalid_argument("crossover: parent length mismatch");
    Chromosome c1(a.size()), c2(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double lam = rng.unit();
        c1[i] = lam * a[i] + (1.0 - lam) * b[i];
        c2[i] = (1.0 - lam) * a[i] + lam * b[i];
    }
    return {std::move(c1), std::move(c2)};
}

void mutate(Chromosome& genes, double rate, Rng& rng) {
    for (double& g : genes)
        if (rng.unit() < rate) g = rng.unit();
}

std::string run_log_csv(const std::vector<GenLogRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "generation,evaluations,archive_size,best_z1,best_z2,hypervolume\n";
    for (const auto& r : rows)
        os << r.generation << ',' << r.evaluations << ',' << r.archive_size << ','
           << r.best_z1 << ',' << r.best_z2 << ',' << r.hypervolume << '\n';
    return os.str();
}

namespace {

Front objectives_of(const std::vector<Individual>& pop) {
    Front f;
    f.reserve(pop.size());
    for (const auto& p : pop) f.push_back(p.obj);
    return f;
}

bool near_pair(const ObjectivePair& a, const ObjectivePair& b) {
    return std::abs(a.z1 - b.z1) <= 1e-9 && std::abs(a.z2 - b.z2) <= 1e-9;
}

struct Engine {
    const Instance& inst;
    AlgorithmConfig cfg;
    Evaluator eval;
    Rng rng;
    bool record_audit;
    Front audit;
    std::vector<GenLogRow> log;
    std::vector<Front> snapshots;
    ObjectivePair ref;

    Engine(const Instance& i, const AlgorithmConfig& c, const DecodeParams& dp,
           bool ra)
        : inst(i), cfg(c), eval(i, dp), rng(c.seed), record_audit(ra) {}

    Individual make_random() {
        Individual ind;
        ind.genes = random_chromosome(inst, rng);
        ind.obj = eval(ind.genes);
        return ind;
    }

    std::vector<Individual> init_population() {
        std::vector<Individual> pop;
        pop.reserve(cfg.population_size);
        for (int i = 0; i < cfg.population_size; ++i) pop.push_back(make_random());
        ref.z1 = pop[0].obj.z1;
        ref.z2 = pop[0].obj.z2;
        for (const auto& p : pop) {
            ref.z1 = std::max(ref.z1, p.obj.z1);
            ref.z2 = std::max(ref.z2, p.obj.z2);
        }
        absorb(pop);
        return pop;
    }

    void absorb(const std::vector<Individual>& batch) {
        for (const auto& b : batch) audit.push_back(b.obj);
        audit = pareto_filter(audit);
    }

    std::uint64_t allowed() const {
        std::uint64_t c = eval.count();
        return c >= cfg.fe_budget ? 0 : cfg.fe_budget - c;
    }

    double clipped_hv(const Front& front) const {
        Front clipped;
        clipped.reserve(front.size());
        for (ObjectivePair p : front) {
            p.z1 = std::min(p.z1, ref.z1);
            p.z2 = std::min(p.z2, ref.z2);
            clipped.push_back(p);
        }
        return hypervolume(clipped, ref);
    }

    void log_row(int gen, const Front& current, std::size_t archive_size) {
        GenLogRow row;
        row.generation = gen;
        row.evaluations = eval.count();
        row.archive_size = archive_size;
        if (!current.empty()) {
            row.best_z1 = current[0].z1;
            row.best_z2 = current[0].z2;
            for (const auto& p : current) {
                row.best_z1 = std::min(row.best_z1, p.z1);
                row.best_z2 = std::min(row.best_z2, p.z2);
            }
            row.hypervolume = clipped_hv(current);
        }
        log.push_back(row);
        if (record_audit) snapshots.push_back(audit);
    }

    // Offspring pool: crossover pairs first, then mutants, truncated to the
    // remaining evaluation budget.
    std::vector<Chromosome> make_offspring(
        const std::function<const Chromosome&()>& select) {
        std::uint64_t room = allowed();
        int nc = (int)std::llround(cfg.crossover_fraction * cfg.population_size);
        if (nc % 2) --nc;
        int nm = (int)std::llround(cfg.mutation_fraction * cfg.population_size);
        std::vector<Chromosome> out;
        for (int made = 0; made < nc && out.size() < room; made += 2) {
            const Chromosome& p1 = select();
            const Chromosome& p2 = select();
            auto kids = blend_crossover(p1, p2, rng);
            out.push_back(std::move(kids.first));
            if (out.size() < room) out.push_back(std::move(kids.second));
        }
        for (int made = 0; made < nm && out.size() < room; ++made) {
            Chromosome c = select();
            mutate(c, cfg.mutation_rate, rng);
            out.push_back(std::move(c));
        }
        return out;
    }

    std::vector<Individual> evaluate_batch(std::vector<Chromosome> genes) {
        std::vector<Individual> batch;
        batch.reserve(genes.size());
        for (auto& g : genes) {
            Individual ind;
            ind.genes = std::move(g);
            ind.obj = eval(ind.genes);
            batch.push_back(std::move(ind));
        }
        absorb(batch);
        return batch;
    }

    RunResult finish(const std::vector<Individual>& carriers) {
        RunResult res;
        res.front = pareto_filter(objectives_of(carriers));
        for (const auto& p : res.front) {
            for (const auto& c : carriers)
                if (near_pair(c.obj, p)) {
                    res.solutions.push_back(c);
                    break;
                }
        }
        res.evaluations = eval.count();
        res.log = std::move(log);
        res.audit_fronts = std::move(snapshots);
        return res;
    }
};

void assign_rank_crowding(std::vector<Individual>& pop) {
    Front objs = objectives_of(pop);
    auto fronts = non_dominated_sort(objs);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        auto dist = crowding_distance(objs, fronts[f]);
        for (std::size_t p = 0; p < fronts[f].size(); ++p) {
            pop[fronts[f][p]].rank = (int)f;
            pop[fronts[f][p]].crowding = dist[p];
        }
    }
}

// Shared survival step of NSGA-II and NRGA: keep the best fronts of the
// combined population, breaking the last one by crowding.
std::vector<Individual> nsga2_survival(std::vector<Individual>& combined,
                                       int target) {
    Front objs = objectives_of(combined);
    auto fronts = non_dominated_sort(objs);
    std::vector<Individual> next;
    next.reserve(target);
    for (std::size_t f = 0; f < fronts.size() && (int)next.size() < target; ++f) {
        auto dist = crowding_distance(objs, fronts[f]);
        std::vector<std::size_t> order(fronts[f].size());
        std::iota(order.begin(), order.end(), 0);
        if ((int)(next.size() + fronts[f].size()) > target) {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (dist[a] != dist[b]) return dist[a] > dist[b];
                return fronts[f][a] < fronts[f][b];
            });
        }
        for (std::size_t p : order) {
            if ((int)next.size() >= target) break;
            Individual ind = combined[fronts[f][p]];
            ind.rank = (int)f;
            ind.crowding = dist[p];
            next.push_back(std::move(ind));
        }
    }
    return next;
}

RunResult run_rank_based(Engine& E, bool rbrw) {
    auto pop = E.init_population();
    assign_rank_crowding(pop);
    E.log_row(0, pareto_filter(objectives_of(pop)),
              non_dominated_sort(objectives_of(pop))[0].size());
    int gen = 0;
    while (E.allowed() > 0) {
        std::function<const Chromosome&()> select;
        // NRGA's cumulative roulette over the rank-then-crowding ordering.
        std::vector<std::size_t> order;
        std::vector<double> cum;
        if (rbrw) {
            order.resize(pop.size());
            std::iota(order.begin(), order.end(), (std::size_t)0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (pop[a].rank != pop[b].rank) return pop[a].rank < pop[b].rank;
                if (pop[a].crowding != pop[b].crowding)
                    return pop[a].crowding > pop[b].crowding;
                return a < b;
            });
            int N = (int)pop.size();
            cum.resize(pop.size());
            double acc = 0;
            for (std::size_t p = 0; p < order.size(); ++p) {
                acc += rbrw_probability(N - (int)p, N); // best position gets rank N
                cum[p] = acc;
            }
            select = [&]() -> const Chromosome& {
                double u = E.rng.unit() * cum.back();
                auto it = std::lower_bound(cum.begin(), cum.end(), u);
                std::size_t p = (std::size_t)(it - cum.begin());
                if (p >= order.size()) p = order.size() - 1;
                return pop[order[p]].genes;
            };
        } else {
            select = [&]() -> const Chromosome& {
                std::size_t a = E.rng.index(pop.size());
                std::size_t b = E.rng.index(pop.size());
                const Individual& A = pop[a];
                const Individual& B = pop[b];
                bool pick_a;
                if (A.rank != B.rank) pick_a = A.rank < B.rank;
                else if (A.crowding != B.crowding) pick_a = A.crowding > B.crowding;
                else pick_a = true;
                return (pick_a ? A : B).genes;
            };
        }
        auto offspring = E.make_offspring(select);
        if (offspring.empty()) break;
        auto batch = E.evaluate_batch(std::move(offspring));
        std::vector<Individual> combined = pop;
        for (auto& b : batch) combined.push_back(std::move(b));
        pop = nsga2_survival(combined, E.cfg.population_size);
        ++gen;
        Front cur = pareto_filter(objectives_of(pop));
        E.log_row(gen, cur, cur.size());
    }
    return E.finish(pop);
}

struct Spea2Fitness {
    std::vector<double> fitness;
    std::vector<int> raw;
};

Spea2Fitness spea2_fitness(const Front& objs, int k) {
    std::size_t n = objs.size();
    Spea2Fitness out;
    out.fitness.resize(n);
    out.raw.assign(n, 0);
    std::vector<int> strength(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(objs[i], objs[j])) ++strength[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(objs[j], objs[i])) out.raw[i] += strength[j];
    int kk = std::min<int>(std::max(k, 1), (int)n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        double sigma = 0;
        if (n > 1) {
            std::vector<double> d;
            d.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                double dx = objs[i].z1 - objs[j].z1;
                double dy = objs[i].z2 - objs[j].z2;
                d.push_back(std::sqrt(dx * dx + dy * dy));
            }
            std::nth_element(d.begin(), d.begin() + (kk - 1), d.end());
            sigma = d[kk - 1];
        }
        out.fitness[i] = out.raw[i] + 1.0 / (sigma + 2.0);
    }
    return out;
}

// Iterative nearest-neighbor truncation that never removes the per-objective
// minima of the set.
std::vector<std::size_t> spea2_truncate(const Front& objs,
                                        std::vector<std::size_t> members,
                                        std::size_t target) {
    auto protected_ids = [&]() {
        std::size_t best1 = members[0], best2 = members[0];
        for (std::size_t m : members) {
            if (objs[m].z1 < objs[best1].z1 ||
                (objs[m].z1 == objs[best1].z1 && objs[m].z2 < objs[best1].z2))
                best1 = m;
            if (objs[m].z2 < objs[best2].z2 ||
                (objs[m].z2 == objs[best2].z2 && objs[m].z1 < objs[best2].z1))
                best2 = m;
        }
        return std::make_pair(best1, best2);
    };
    while (members.size() > target) {
        auto prot = protected_ids();
        double best_d1 = 0, best_d2 = 0;
        std::size_t victim = members.size();
        for (std::size_t a = 0; a < members.size(); ++a) {
            if (members[a] == prot.first || members[a] == prot.second) continue;
            double d1 = std::numeric_limits<double>::infinity();
            double d2 = d1;
            for (std::size_t b = 0; b < members.size(); ++b) {
                if (a == b) continue;
                double dx = objs[members[a]].z1 - objs[members[b]].z1;
                double dy = objs[members[a]].z2 - objs[members[b]].z2;
                double d = std::sqrt(dx * dx + dy * dy);
                if (d < d1) {
                    d2 = d1;
                    d1 = d;
                } else if (d < d2) {
                    d2 = d;
                }
            }
            bool better = victim == members.size() || d1 < best_d1 ||
                          (d1 == best_d1 && d2 < best_d2);
            if (better) {
                victim = a;
                best_d1 = d1;
                best_d2 = d2;
            }
        }
        if (victim == members.size()) break; // everything protected
        members.erase(members.begin() + victim);
    }
    return members;
}

RunResult run_spea2(Engine& E) {
    auto pop = E.init_population();
    std::vector<Individual> archive;
    std::size_t cap = E.cfg.archive_size > 0 ? (std::size_t)E.cfg.archive_size
                                             : (std::size_t)E.cfg.population_size;
    int k = (int)std::floor(std::sqrt((double)E.cfg.population_size + (double)cap));
    {
        Front cur = pareto_filter(objectives_of(pop));
        E.log_row(0, cur, archive.size());
    }
    int gen = 0;
    while (E.allowed() > 0) {
        std::vector<Individual> combined = pop;
        combined.insert(combined.end(), archive.begin(), archive.end());
        Front objs = objectives_of(combined);
        auto fit = spea2_fitness(objs, k);

        std::vector<std::size_t> nondom, dom;
        for (std::size_t i = 0; i < combined.size(); ++i)
            (fit.raw[i] == 0 ? nondom : dom).push_back(i);
        std::vector<std::size_t> keep;
        if (nondom.size() > cap) {
            keep = spea2_truncate(objs, nondom, cap);
        } else {
            keep = nondom;
            std::sort(dom.begin(), dom.end(), [&](std::size_t a, std::size_t b) {
                if (fit.fitness[a] != fit.fitness[b])
                    return fit.fitness[a] < fit.fitness[b];
                return a < b;
            });
            for (std::size_t d : dom) {
                if (keep.size() >= cap) break;
                keep.push_back(d);
            }
        }
        std::vector<Individual> next_archive;
        std::vector<double> archive_fit;
        next_archive.reserve(keep.size());
        for (std::size_t i : keep) {
            next_archive.push_back(combined[i]);
            archive_fit.push_back(fit.fitness[i]);
        }
        archive = std::move(next_archive);

        auto select = [&]() -> const Chromosome& {
            std::size_t a = E.rng.index(archive.size());
            std::size_t b = E.rng.index(archive.size());
            bool pick_a = archive_fit[a] <= archive_fit[b];
            return archive[pick_a ? a : b].genes;
        };
        auto offspring = E.make_offspring(select);
        if (offspring.empty()) break;
        pop = E.evaluate_batch(std::move(offspring));
        ++gen;
        std::vector<Individual> all = pop;
        all.insert(all.end(), archive.begin(), archive.end());
        E.log_row(gen, pareto_filter(objectives_of(all)), archive.size());
    }
    std::vector<Individual> all = pop;
    all.insert(all.end(), archive.begin(), archive.end());
    return E.finish(all);
}

struct GridBox {
    std::vector<int> box;   // box id per archive member
    std::vector<int> count; // members per box id
};

GridBox grid_boxes(const Front& objs, int div) {
    GridBox g;
    g.box.resize(objs.size());
    g.count.assign((std::size_t)div * div, 0);
    if (objs.empty()) return g;
    double min1 = objs[0].z1, max1 = objs[0].z1;
    double min2 = objs[0].z2, max2 = objs[0].z2;
    for (const auto& p : objs) {
        min1 = std::min(min1, p.z1);
        max1 = std::max(max1, p.z1);
        min2 = std::min(min2, p.z2);
        max2 = std::max(max2, p.z2);
    }
    auto idx = [&](double v, double lo, double hi) {
        if (hi <= lo) return 0;
        int i = (int)std::floor((v - lo) / (hi - lo) * div);
        return std::min(std::max(i, 0), div - 1);
    };
    for (std::size_t i = 0; i < objs.size(); ++i) {
        int b = idx(objs[i].z1, min1, max1) * div + idx(objs[i].z2, min2, max2);
        g.box[i] = b;
        ++g.count[b];
    }
    return g;
}

RunResult run_pesa2(Engine& E) {
    auto pop = E.init_population();
    std::size_t cap = E.cfg.archive_size > 0 ? (std::size_t)E.cfg.archive_size
                                             : (std::size_t)E.cfg.population_size;
    std::vector<Individual> ep;
    std::vector<std::uint64_t> ids;
    std::uint64_t next_id = 0;

    auto insert = [&](const Individual& cand) {
        for (const auto& m : ep) {
            if (near_pair(m.obj, cand.obj)) return;
            if (dominates(m.obj, cand.obj)) return;
        }
        for (std::size_t i = ep.size(); i-- > 0;) {
            if (dominates(cand.obj, ep[i].obj)) {
                ep.erase(ep.begin() + i);
                ids.erase(ids.begin() + i);
            }
        }
        ep.push_back(cand);
        ids.push_back(next_id++);
        if (ep.size() > cap) {
            GridBox g = grid_boxes(objectives_of(ep), E.cfg.grid_divisions);
            std::size_t victim = 0;
            bool have = false;
            for (int t = 0; t < E.cfg.deletion_pressure; ++t) {
                std::size_t c = E.rng.index(ep.size());
                if (!have) {
                    victim = c;
                    have = true;
                    continue;
                }
                int cc = g.count[g.box[c]], vc = g.count[g.box[victim]];
                if (cc > vc || (cc == vc && ids[c] < ids[victim])) victim = c;
            }
            ep.erase(ep.begin() + victim);
            ids.erase(ids.begin() + victim);
        }
    };

    for (const auto& p : pop) insert(p);
    E.log_row(0, pareto_filter(objectives_of(ep)), ep.size());
    int gen = 0;
    while (E.allowed() > 0) {
        GridBox g = grid_boxes(objectives_of(ep), E.cfg.grid_divisions);
        auto select = [&]() -> const Chromosome& {
            std::size_t best = 0;
            bool have = false;
            for (int t = 0; t < E.cfg.selection_pressure; ++t) {
                std::size_t c = E.rng.index(ep.size());
                if (!have) {
                    best = c;
                    have = true;
                    continue;
                }
                int cc = g.count[g.box[c]], bc = g.count[g.box[best]];
                if (cc < bc || (cc == bc && ids[c] < ids[best])) best = c;
            }
            return ep[best].genes;
        };
        auto offspring = E.make_offspring(select);
        if (offspring.empty()) break;
        auto batch = E.evaluate_batch(std::move(offspring));
        for (const auto& b : batch) insert(b);
        ++gen;
        E.log_row(gen, pareto_filter(objectives_of(ep)), ep.size());
    }
    return E.finish(ep);
}

} // namespace

RunResult run_moea(const Instance& inst, const AlgorithmConfig& cfg,
                   const DecodeParams& decode_params, bool record_audit) {
    validate_config(cfg);
    Engine engine(inst, cfg, decode_params, record_audit);
    switch (cfg.algorithm) {
    case Algorithm::NSGA2: return run_rank_based(engine, false);
    case Algorithm::NRGA: return run_rank_based(engine, true);
    case Algorithm::SPEA2: return run_spea2(engine);
    case Algorithm::PESA2: return run_pesa2(engine);
    }
    throw std::invalid_argument("run_moea: unknown algorithm");
}

} // namespace glrip
