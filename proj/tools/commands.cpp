#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "glrip/decoder.hpp"
#include "glrip/doe.hpp"
#include "glrip/evaluation.hpp"
#include "glrip/exact.hpp"
#include "glrip/instance.hpp"
#include "glrip/metrics.hpp"
#include "glrip/milp.hpp"
#include "glrip/moea.hpp"
#include "glrip/stats.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace glrip::cli {

void atomic_write(const std::string& path, const std::string& content) {
    static std::atomic<unsigned> counter{0};
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush())
            throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string text_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a offset basis
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return text_hash(buf.str());
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& tok : split(text, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty list entry");
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad number '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

// Shared command state: global flags plus the output ledger for the manifest.
struct Ctx {
    std::string out = ".";
    std::uint64_t seed = 1;
    int threads = 1;
    double time_limit = 0;
    bool time_limit_given = false;
    std::vector<std::string> args;
    json outputs = json::object();

    void emit(const std::string& rel, const std::string& content) {
        atomic_write((fs::path(out) / rel).string(), content);
        outputs[rel] = text_hash(content);
    }

    void manifest(const std::string& command) {
        json j;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["command"] = command;
        j["arguments"] = args;
        j["seed"] = seed;
        j["threads"] = threads;
        j["time_limit"] = time_limit;
        j["outputs"] = outputs;
        atomic_write((fs::path(out) / ("manifest-" + command + ".json")).string(),
                     j.dump(2) + "\n");
    }
};

json front_to_json(const std::string& algorithm, std::uint64_t seed,
                   const std::string& instance_hash, const Front& front) {
    json j;
    j["algorithm"] = algorithm;
    j["seed"] = seed;
    j["instance"] = instance_hash;
    json pts = json::array();
    for (const auto& p : front) pts.push_back({p.z1, p.z2});
    j["points"] = pts;
    return j;
}

struct FrontFile {
    std::string path;
    std::string algorithm;
    std::string instance;
    Front points;
};

FrontFile read_front_file(const std::string& path) {
    FrontFile f;
    f.path = path;
    json j = json::parse(read_file(path));
    if (!j.contains("algorithm") || !j.contains("instance") ||
        !j.contains("points"))
        throw std::invalid_argument(path + ": not a front file");
    f.algorithm = j["algorithm"].get<std::string>();
    f.instance = j["instance"].get<std::string>();
    for (const auto& p : j["points"])
        f.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return f;
}

Algorithm required_algorithm(const std::string& name) {
    Algorithm alg;
    if (!parse_algorithm(name, alg))
        throw std::invalid_argument("unknown algorithm '" + name + "'");
    return alg;
}

void apply_config_json(AlgorithmConfig& cfg, const json& j) {
    if (j.contains("algorithm"))
        cfg.algorithm = required_algorithm(j["algorithm"].get<std::string>());
    if (j.contains("population_size"))
        cfg.population_size = j["population_size"].get<int>();
    if (j.contains("archive_size"))
        cfg.archive_size = j["archive_size"].get<int>();
    if (j.contains("crossover_fraction"))
        cfg.crossover_fraction = j["crossover_fraction"].get<double>();
    if (j.contains("mutation_fraction"))
        cfg.mutation_fraction = j["mutation_fraction"].get<double>();
    if (j.contains("mutation_rate"))
        cfg.mutation_rate = j["mutation_rate"].get<double>();
    if (j.contains("selection_pressure"))
        cfg.selection_pressure = j["selection_pressure"].get<int>();
    if (j.contains("deletion_pressure"))
        cfg.deletion_pressure = j["deletion_pressure"].get<int>();
    if (j.contains("grid_divisions"))
        cfg.grid_divisions = j["grid_divisions"].get<int>();
    if (j.contains("fe_budget"))
        cfg.fe_budget = j["fe_budget"].get<std::uint64_t>();
}

std::string two_digit(std::size_t n) {
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    std::string sizes;
    double capacity_ratio = 1.4;
};

int cmd_gen(Ctx& ctx, const GenArgs& a) {
    GenParams params;
    params.capacity_ratio = a.capacity_ratio;
    std::vector<GenSizes> sizes;
    std::vector<std::string> names;
    if (a.sizes.empty()) {
        sizes = benchmark_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i)
            names.push_back("test" + two_digit(i + 1) + ".json");
    } else {
        std::vector<double> v = parse_double_list(a.sizes);
        if (v.size() != 4)
            throw std::invalid_argument(
                "--sizes wants 4 values: dcs,retailers,vehicles_in,vehicles_out");
        GenSizes s;
        s.dcs = (std::size_t)v[0];
        s.retailers = (std::size_t)v[1];
        s.vehicles_in = (std::size_t)v[2];
        s.vehicles_out = (std::size_t)v[3];
        if (s.dcs == 0 || s.retailers == 0 || s.vehicles_in == 0 ||
            s.vehicles_out == 0)
            throw std::invalid_argument("--sizes values must be positive");
        sizes.push_back(s);
        std::ostringstream name;
        name << "instance_" << s.dcs << '_' << s.retailers << '_'
             << s.vehicles_in << '_' << s.vehicles_out << ".json";
        names.push_back(name.str());
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        Instance inst = generate(sizes[i], ctx.seed + i, params);
        ctx.emit(names[i], instance_to_json(inst));
    }
    ctx.manifest("gen");
    return kOk;
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
    std::string instance;
    std::string algorithm;
    std::string config;
    int runs = 5;
    std::uint64_t fe_budget = 300000;
    bool fe_budget_given = false;
    int n_max = 0;
    double penalty = 1e6;
    bool two_opt = false;
};

int cmd_solve(Ctx& ctx, const SolveArgs& a) {
    Instance inst = load_instance(a.instance);
    std::string inst_hash = file_hash(a.instance);

    Algorithm alg{};
    bool have_alg = false;
    json config_json;
    if (!a.config.empty()) {
        config_json = json::parse(read_file(a.config));
        if (config_json.contains("algorithm")) {
            alg = required_algorithm(config_json["algorithm"].get<std::string>());
            have_alg = true;
        }
    }
    if (!a.algorithm.empty()) {
        Algorithm flag_alg = required_algorithm(a.algorithm);
        if (have_alg && flag_alg != alg)
            throw std::invalid_argument(
                "--algorithm disagrees with the config file");
        alg = flag_alg;
        have_alg = true;
    }
    if (!have_alg)
        throw std::invalid_argument(
            "--algorithm or a config file naming one is required");
    AlgorithmConfig cfg = default_config(alg);
    if (!a.config.empty()) apply_config_json(cfg, config_json);
    if (a.fe_budget_given) cfg.fe_budget = a.fe_budget;
    if (a.runs < 1) throw std::invalid_argument("--runs must be positive");
    validate_config(cfg);

    DecodeParams dec;
    dec.n_max = a.n_max;
    dec.penalty_rate = a.penalty;
    dec.two_opt = a.two_opt;

    std::vector<RunResult> results((std::size_t)a.runs);
    auto run_one = [&](int r) {
        AlgorithmConfig c = cfg;
        c.seed = ctx.seed + (std::uint64_t)r;
        results[(std::size_t)r] = run_moea(inst, c, dec);
    };
    if (ctx.threads > 1) {
        std::vector<std::thread> pool;
        int workers = std::min(ctx.threads, a.runs);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                for (int r = w; r < a.runs; r += workers) run_one(r);
            });
        for (auto& t : pool) t.join();
    } else {
        for (int r = 0; r < a.runs; ++r) run_one(r);
    }

    std::string name = algorithm_name(cfg.algorithm);
    for (int r = 0; r < a.runs; ++r) {
        const RunResult& res = results[(std::size_t)r];
        json j = front_to_json(name, ctx.seed + (std::uint64_t)r, inst_hash,
                               res.front);
        j["evaluations"] = res.evaluations;
        std::string tag = name + "_run" + std::to_string(r + 1);
        ctx.emit("front_" + tag + ".json", j.dump(2) + "\n");
        ctx.emit("log_" + tag + ".csv", run_log_csv(res.log));
    }
    ctx.manifest("solve");
    return kOk;
}

// ---- exact ---------------------------------------------------------------

struct ExactArgs {
    std::string instance;
    std::string mode = "enumerate";
    int grid_points = 101;
    double delta = 1e-4;
    int n_max = 0;
    double max_space = 1e8;
    int subset_cap = 16;
    double penalty = 1e6;
};

int cmd_exact(Ctx& ctx, const ExactArgs& a) {
    Instance inst = load_instance(a.instance);
    std::string inst_hash = file_hash(a.instance);

    if (a.mode == "export-lp") {
        MilpModel model = build_milp(inst, a.subset_cap, a.n_max);
        ctx.emit("model.lp", lp_string(model));
        ctx.manifest("exact");
        return kOk;
    }

    EnumOptions opts;
    opts.n_max = a.n_max;
    opts.threads = ctx.threads;
    opts.max_space = a.max_space;
    opts.time_limit = ctx.time_limit_given ? ctx.time_limit : 10800.0;

    if (a.mode == "enumerate") {
        EnumeratedFront ef = enumerate_pareto_plans(inst, opts);
        json j = front_to_json("enumerate", ctx.seed, inst_hash, ef.front);
        j["incomplete"] = ef.truncated;
        j["evaluations"] = ef.evaluated;
        ctx.emit("front_enumerate.json", j.dump(2) + "\n");
        json plans = json::array();
        for (std::size_t i = 0; i < ef.plans.size(); ++i)
            plans.push_back(json::parse(plan_to_json(
                ef.plans[i], ef.front[i].z1, ef.front[i].z2)));
        ctx.emit("plans_enumerate.json", plans.dump(2) + "\n");
        ctx.manifest("exact");
        if (ef.truncated) return kTimeoutPartial;
        return ef.front.empty() ? kInfeasible : kOk;
    }
    if (a.mode == "epsc") {
        EnumerationBackend backend(inst, opts);
        bool truncated = backend.enumerated().truncated;
        Front front;
        bool infeasible = false;
        try {
            front = augmented_eps_constraint(backend, a.grid_points, a.delta);
        } catch (const std::runtime_error&) {
            infeasible = true;
        }
        json j = front_to_json("epsc", ctx.seed, inst_hash, front);
        j["incomplete"] = truncated;
        ctx.emit("front_epsc.json", j.dump(2) + "\n");
        ctx.manifest("exact");
        if (truncated) return kTimeoutPartial;
        return infeasible ? kInfeasible : kOk;
    }
    throw std::invalid_argument("unknown mode '" + a.mode +
                                "' (enumerate|epsc|export-lp)");
}

// ---- compare ---------------------------------------------------------------

struct CompareArgs {
    std::vector<std::string> fronts;
};

int cmd_compare(Ctx& ctx, const CompareArgs& a) {
    if (a.fronts.empty()) throw std::invalid_argument("no front files given");
    std::vector<FrontFile> files;
    for (const auto& p : a.fronts) files.push_back(read_front_file(p));
    for (const auto& f : files)
        if (f.instance != files.front().instance)
            throw std::invalid_argument(
                "mixed instances in one comparison: " + f.path);

    // group by algorithm, preserving first-appearance order
    std::vector<std::string> algs;
    std::map<std::string, std::vector<const FrontFile*>> groups;
    for (const auto& f : files) {
        if (!groups.count(f.algorithm)) algs.push_back(f.algorithm);
        groups[f.algorithm].push_back(&f);
    }
    std::size_t runs = groups[algs.front()].size();
    for (const auto& name : algs)
        if (groups[name].size() != runs)
            throw std::invalid_argument(
                "every algorithm needs the same number of runs");

    std::vector<Front> all;
    for (const auto& f : files) all.push_back(f.points);
    MidBasis basis = mid_basis(all);
    std::string test = files.front().instance.substr(0, 12);

    std::ostringstream os;
    os.precision(12);
    os << "test,run,algorithm,QM,SM,MID,DM\n";
    for (std::size_t r = 0; r < runs; ++r) {
        std::vector<Front> row;
        for (const auto& name : algs) row.push_back(groups[name][r]->points);
        std::vector<double> qm = quality_metric(row);
        for (std::size_t g = 0; g < algs.size(); ++g) {
            const Front& front = row[g];
            os << test << ',' << (r + 1) << ',' << algs[g] << ',' << qm[g]
               << ',';
            if (auto sm = spacing_metric(front)) os << *sm;
            os << ',' << mean_ideal_distance(front, basis.ideal, basis.range)
               << ',' << diversity_metric(front) << '\n';
        }
    }
    ctx.emit("metrics.csv", os.str());
    ctx.manifest("compare");
    return kOk;
}

// ---- tune ------------------------------------------------------------------

struct TuneArgs {
    std::string instance;
    std::string algorithm;
    std::string grid;
    int reps = 3;
    std::uint64_t fe_budget = 30000;
    int n_max = 0;
    double penalty = 1e6;
    std::string snr_form = "smaller";
};

int cmd_tune(Ctx& ctx, const TuneArgs& a) {
    Instance inst = load_instance(a.instance);
    Algorithm alg = required_algorithm(a.algorithm);

    TuningOptions opts;
    opts.repetitions = a.reps;
    opts.fe_budget = a.fe_budget;
    opts.seed = ctx.seed;
    opts.threads = ctx.threads;
    opts.decode.n_max = a.n_max;
    opts.decode.penalty_rate = a.penalty;
    if (a.snr_form == "smaller")
        opts.snr_form = SnrForm::SmallerBetter;
    else if (a.snr_form == "larger")
        opts.snr_form = SnrForm::LargerBetter;
    else
        throw std::invalid_argument("--snr-form must be smaller or larger");

    if (!a.grid.empty()) {
        json j = json::parse(read_file(a.grid));
        if (!j.contains("factors") || !j["factors"].is_array())
            throw std::invalid_argument(a.grid + ": wants {\"factors\": [...]}");
        for (const auto& fj : j["factors"]) {
            TaguchiFactor f;
            f.name = fj.at("name").get<std::string>();
            const auto& lv = fj.at("levels");
            if (!lv.is_array() || lv.size() != 3)
                throw std::invalid_argument("factor '" + f.name +
                                            "' needs exactly 3 levels");
            for (std::size_t i = 0; i < 3; ++i)
                f.levels[i] = lv[i].get<double>();
            opts.factors.push_back(std::move(f));
        }
    }

    TuningResult res = run_tuning(inst, alg, opts);
    ctx.emit("tuning.csv", tuning_csv(res));
    ctx.emit("tuned_config.json", tuning_config_json(res));
    ctx.manifest("tune");
    return kOk;
}

// ---- stats -----------------------------------------------------------------

struct StatsArgs {
    std::string metrics;
    double alpha = 0.05;
    std::string metric = "all";
};

int cmd_stats(Ctx& ctx, const StatsArgs& a) {
    std::istringstream in(read_file(a.metrics));
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument(a.metrics + ": empty file");
    std::vector<std::string> header = split(line, ',');
    auto col = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::invalid_argument(a.metrics + ": missing column " + name);
    };
    std::size_t alg_col = col("algorithm");
    const std::vector<std::string> metric_names{"QM", "SM", "MID", "DM"};
    std::vector<std::size_t> metric_cols;
    for (const auto& m : metric_names) metric_cols.push_back(col(m));

    std::vector<std::string> algs;
    std::map<std::string, std::array<std::vector<double>, 4>> samples;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells = split(line, ',');
        if (cells.size() != header.size())
            throw std::invalid_argument(a.metrics + ": ragged row '" + line +
                                        "'");
        const std::string& alg = cells[alg_col];
        if (!samples.count(alg)) algs.push_back(alg);
        auto& dest = samples[alg];
        for (std::size_t m = 0; m < 4; ++m) {
            const std::string& cell = cells[metric_cols[m]];
            if (cell.empty()) continue; // metric undefined for that run
            dest[m].push_back(std::stod(cell));
        }
    }
    if (algs.size() < 2)
        throw std::invalid_argument("need at least two algorithms to compare");

    std::ostringstream omnibus;
    omnibus.precision(12);
    omnibus << "metric,h,df,p,significant\n";
    for (std::size_t m = 0; m < 4; ++m) {
        if (a.metric != "all" && a.metric != metric_names[m]) continue;
        std::vector<SampleGroup> groups;
        for (const auto& alg : algs)
            if (!samples[alg][m].empty())
                groups.push_back({alg, samples[alg][m]});
        if (groups.size() < 2) {
            std::cerr << "skipping " << metric_names[m]
                      << ": fewer than two algorithms have observations\n";
            continue;
        }
        KruskalWallisResult kw = kruskal_wallis(groups);
        omnibus << metric_names[m] << ',' << kw.h << ',' << kw.df << ','
                << kw.p << ',' << (kw.p < a.alpha ? 1 : 0) << '\n';
        ctx.emit("pairwise_" + metric_names[m] + ".csv",
                 dunn_csv(pairwise_dunn(groups, a.alpha)));
    }
    ctx.emit("omnibus.csv", omnibus.str());
    ctx.manifest("stats");
    return kOk;
}

// ---- sweep-demand -----------------------------------------------------------

struct SweepArgs {
    std::string instance;
    std::string multipliers = "0.5,0.8,1.0,1.2,1.6,2.0";
    std::string algorithm = "nsga2";
    bool exact = false;
    std::uint64_t fe_budget = 300000;
    int n_max = 0;
    double max_space = 1e8;
    double penalty = 1e6;
};

int cmd_sweep(Ctx& ctx, const SweepArgs& a) {
    Instance base = load_instance(a.instance);
    std::vector<double> mult = parse_double_list(a.multipliers);
    if (mult.empty()) throw std::invalid_argument("no multipliers given");
    for (double m : mult)
        if (m <= 0)
            throw std::invalid_argument("multipliers must be positive");

    std::vector<Front> fronts(mult.size());
    std::vector<bool> truncated(mult.size(), false);
    std::vector<std::string> hashes(mult.size());

    auto scaled_instance = [&](double m) {
        Instance inst = base;
        for (auto& r : inst.retailers) r.demand_mean *= m;
        return inst;
    };

    if (a.exact) {
        EnumOptions opts;
        opts.n_max = a.n_max;
        opts.threads = ctx.threads;
        opts.max_space = a.max_space;
        opts.time_limit = ctx.time_limit_given ? ctx.time_limit : 10800.0;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            Instance inst = scaled_instance(mult[i]);
            hashes[i] = text_hash(instance_to_json(inst));
            EnumeratedFront ef = enumerate_pareto_plans(inst, opts);
            fronts[i] = std::move(ef.front);
            truncated[i] = ef.truncated;
        }
    } else {
        AlgorithmConfig cfg = default_config(required_algorithm(a.algorithm));
        cfg.fe_budget = a.fe_budget;
        DecodeParams dec;
        dec.n_max = a.n_max;
        dec.penalty_rate = a.penalty;
        auto run_one = [&](std::size_t i) {
            Instance inst = scaled_instance(mult[i]);
            hashes[i] = text_hash(instance_to_json(inst));
            AlgorithmConfig c = cfg;
            c.seed = ctx.seed + i;
            fronts[i] = run_moea(inst, c, dec).front;
        };
        if (ctx.threads > 1) {
            std::vector<std::thread> pool;
            int workers = std::min<int>(ctx.threads, (int)mult.size());
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w]() {
                    for (std::size_t i = (std::size_t)w; i < mult.size();
                         i += (std::size_t)workers)
                        run_one(i);
                });
            for (auto& t : pool) t.join();
        } else {
            for (std::size_t i = 0; i < mult.size(); ++i) run_one(i);
        }
    }

    std::ostringstream os;
    os.precision(12);
    os << "scenario,multiplier,min_z1,min_z2,points\n";
    bool any_empty = false, any_truncated = false;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        std::string label = a.exact ? "enumerate" : a.algorithm;
        json j = front_to_json(label, ctx.seed + i, hashes[i], fronts[i]);
        j["multiplier"] = mult[i];
        j["incomplete"] = (bool)truncated[i];
        ctx.emit("front_scenario_" + std::to_string(i + 1) + ".json",
                 j.dump(2) + "\n");
        os << (i + 1) << ',' << mult[i] << ',';
        if (!fronts[i].empty()) {
            double z1 = fronts[i].front().z1, z2 = fronts[i].front().z2;
            for (const auto& p : fronts[i]) {
                z1 = std::min(z1, p.z1);
                z2 = std::min(z2, p.z2);
            }
            os << z1 << ',' << z2;
        } else {
            os << ',';
            any_empty = true;
        }
        os << ',' << fronts[i].size() << '\n';
        any_truncated = any_truncated || truncated[i];
    }
    ctx.emit("sweep.csv", os.str());
    ctx.manifest("sweep-demand");
    if (any_truncated) return kTimeoutPartial;
    return any_empty ? kInfeasible : kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Bi-objective green location-routing-inventory toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Ctx ctx;
    for (int i = 1; i < argc; ++i) ctx.args.push_back(argv[i]);
    app.add_option("--seed", ctx.seed, "Base random seed")
        ->capture_default_str();
    app.add_option("--out", ctx.out, "Output directory")
        ->capture_default_str();
    app.add_option("--threads", ctx.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* tl = app.add_option("--time-limit", ctx.time_limit,
                              "Wall-clock limit in seconds (0 = none)");

    GenArgs gen;
    auto* sub_gen = app.add_subcommand("gen", "Generate benchmark instances");
    sub_gen->fallthrough();
    sub_gen->add_option("--sizes", gen.sizes,
                        "dcs,retailers,vehicles_in,vehicles_out (default: the "
                        "12-instance suite)");
    sub_gen->add_option("--capacity-ratio", gen.capacity_ratio,
                        "Total DC capacity as a multiple of total mean demand")
        ->capture_default_str();

    SolveArgs solve;
    auto* sub_solve =
        app.add_subcommand("solve", "Run a multi-objective solver");
    sub_solve->fallthrough();
    sub_solve->add_option("--instance", solve.instance, "Instance JSON file")
        ->required();
    sub_solve->add_option("--algorithm", solve.algorithm,
                          "nsga2|nrga|spea2|pesa2");
    sub_solve->add_option("--config", solve.config,
                          "Algorithm config JSON (e.g. from tune)");
    sub_solve->add_option("--runs", solve.runs, "Independent seeded runs")
        ->capture_default_str();
    auto* fe1 = sub_solve->add_option("--fe-budget", solve.fe_budget,
                                      "Objective evaluation budget per run");
    fe1->capture_default_str();
    sub_solve->add_option("--n-max", solve.n_max,
                          "Max order frequency (0 = automatic)");
    sub_solve->add_option("--penalty", solve.penalty,
                          "Unserved-retailer surcharge")
        ->capture_default_str();
    sub_solve->add_flag("--two-opt", solve.two_opt,
                        "Improve tours with segment reversal");

    ExactArgs exact;
    auto* sub_exact =
        app.add_subcommand("exact", "Exact front or model export");
    sub_exact->fallthrough();
    sub_exact->add_option("--instance", exact.instance, "Instance JSON file")
        ->required();
    sub_exact->add_option("--mode", exact.mode, "enumerate|epsc|export-lp")
        ->capture_default_str();
    sub_exact->add_option("--grid-points", exact.grid_points,
                          "Constraint grid resolution (epsc)")
        ->capture_default_str();
    sub_exact->add_option("--delta", exact.delta,
                          "Slack-reward coefficient (epsc)")
        ->capture_default_str();
    sub_exact->add_option("--n-max", exact.n_max,
                          "Max order frequency (0 = automatic)");
    sub_exact->add_option("--max-space", exact.max_space,
                          "Refuse enumerations larger than this")
        ->capture_default_str();
    sub_exact->add_option("--subset-cap", exact.subset_cap,
                          "Max retailers for the model's subset expansion")
        ->capture_default_str();

    CompareArgs compare;
    auto* sub_compare =
        app.add_subcommand("compare", "Score stored fronts against each other");
    sub_compare->fallthrough();
    sub_compare->add_option("fronts", compare.fronts, "Front JSON files")
        ->expected(-1);

    TuneArgs tune;
    auto* sub_tune =
        app.add_subcommand("tune", "Pick algorithm parameters by experiment");
    sub_tune->fallthrough();
    sub_tune->add_option("--instance", tune.instance, "Instance JSON file")
        ->required();
    sub_tune->add_option("--algorithm", tune.algorithm,
                         "nsga2|nrga|spea2|pesa2")
        ->required();
    sub_tune->add_option("--grid", tune.grid, "Custom level-grid JSON");
    sub_tune->add_option("--reps", tune.reps, "Repetitions per experiment")
        ->capture_default_str();
    sub_tune->add_option("--fe-budget", tune.fe_budget,
                         "Objective evaluation budget per run")
        ->capture_default_str();
    sub_tune->add_option("--n-max", tune.n_max,
                         "Max order frequency (0 = automatic)");
    sub_tune->add_option("--penalty", tune.penalty,
                         "Unserved-retailer surcharge")
        ->capture_default_str();
    sub_tune->add_option("--snr-form", tune.snr_form,
                         "smaller|larger (decibel scoring direction)")
        ->capture_default_str();

    StatsArgs stats;
    auto* sub_stats =
        app.add_subcommand("stats", "Rank tests over a metrics table");
    sub_stats->fallthrough();
    sub_stats->add_option("--metrics", stats.metrics,
                          "metrics.csv from compare")
        ->required();
    sub_stats->add_option("--alpha", stats.alpha, "Significance threshold")
        ->capture_default_str();
    sub_stats->add_option("--metric", stats.metric, "all|QM|SM|MID|DM")
        ->capture_default_str();

    SweepArgs sweep;
    auto* sub_sweep = app.add_subcommand(
        "sweep-demand", "Re-solve under scaled retailer demand");
    sub_sweep->fallthrough();
    sub_sweep->add_option("--instance", sweep.instance, "Instance JSON file")
        ->required();
    sub_sweep->add_option("--multipliers", sweep.multipliers,
                          "Comma-separated demand multipliers")
        ->capture_default_str();
    sub_sweep->add_option("--algorithm", sweep.algorithm,
                          "nsga2|nrga|spea2|pesa2")
        ->capture_default_str();
    sub_sweep->add_flag("--exact", sweep.exact,
                        "Enumerate each scenario instead of a solver run");
    sub_sweep->add_option("--fe-budget", sweep.fe_budget,
                          "Objective evaluation budget per scenario")
        ->capture_default_str();
    sub_sweep->add_option("--n-max", sweep.n_max,
                          "Max order frequency (0 = automatic)");
    sub_sweep->add_option("--max-space", sweep.max_space,
                          "Refuse enumerations larger than this")
        ->capture_default_str();
    sub_sweep->add_option("--penalty", sweep.penalty,
                          "Unserved-retailer surcharge")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidInput;
    }
    ctx.time_limit_given = tl->count() > 0;
    solve.fe_budget_given = fe1->count() > 0;
    if (ctx.time_limit < 0) {
        std::cerr << "--time-limit must be >= 0\n";
        return kInvalidInput;
    }

    try {
        if (sub_gen->parsed()) return cmd_gen(ctx, gen);
        if (sub_solve->parsed()) return cmd_solve(ctx, solve);
        if (sub_exact->parsed()) return cmd_exact(ctx, exact);
        if (sub_compare->parsed()) return cmd_compare(ctx, compare);
        if (sub_tune->parsed()) return cmd_tune(ctx, tune);
        if (sub_stats->parsed()) return cmd_stats(ctx, stats);
        if (sub_sweep->parsed()) return cmd_sweep(ctx, sweep);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli((int)argv.size(), argv.data());
}

} // namespace glrip::cli
