// Command-line front end: instance generation, frontier solving, MILP
// export, and benchmark sweeps.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bgctp/bgctp.hpp"

namespace {

using namespace bgctp;

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", s);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(Errc::InvalidArgument, "cannot write " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::optional<std::string>& path, const std::string& content) {
    if (path)
        write_file_atomic(*path, content);
    else
        std::cout << content;
}

std::string frontier_csv(const Frontier& f) {
    std::ostringstream out;
    out << "c_gamma,c_tau\n";
    for (const FrontierEntry& e : f.entries) out << e.point.gamma << "," << e.point.tau << "\n";
    return out.str();
}

std::string frontier_trees(const Frontier& f) {
    std::ostringstream out;
    for (const FrontierEntry& e : f.entries) {
        for (std::size_t i = 0; i < e.tree.edges.size(); ++i) {
            if (i) out << " ";
            out << e.tree.edges[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string report_line(const std::string& instance_id, const std::string& method, bool cut,
                        const SolveReport& rep, double total_seconds) {
    std::ostringstream out;
    out << "instance=" << instance_id << " method=" << method << " cut=" << (cut ? "on" : "off")
        << " points=" << rep.points_found << " timed_out=" << (rep.timed_out ? 1 : 0)
        << " total_seconds=" << format_seconds(total_seconds)
        << " seconds_per_point=" << format_seconds(total_seconds / std::max(1, rep.points_found))
        << " bnb_nodes=" << rep.bnb_nodes << " subproblems=" << rep.subproblems_solved
        << " cut_filtered_edges=" << rep.cut_filtered_edges << "\n";
    return out.str();
}

const std::map<std::string, Family> kFamilies{
    {"incomplete", Family::Incomplete}, {"complete", Family::Complete},   {"grid", Family::Grid},
    {"location", Family::Location},     {"windmill", Family::Windmill},
};
const std::map<std::string, CostMode> kCostModes{{"ctp", CostMode::Ctp}, {"gctp", CostMode::Gctp}};
const std::map<std::string, PointDistribution> kDists{{"uniform", PointDistribution::Uniform},
                                                      {"normal", PointDistribution::Normal}};
const std::map<std::string, EdgeRule> kRules{{"random", EdgeRule::Random},
                                             {"min_euclidean", EdgeRule::MinEuclidean},
                                             {"min_manhattan", EdgeRule::MinManhattan}};

struct SolveArgs {
    std::string input;
    std::string method = "eps";
    std::string cut = "on";
    double time_limit = 300.0;
    std::optional<std::string> output;
};

int cmd_solve(const SolveArgs& a) {
    const Graph g = read_instance_file(a.input);
    const bool cut = a.cut == "on";

    const auto t0 = std::chrono::steady_clock::now();
    FrontierResult res;
    if (a.method == "eps") {
        res = solve_frontier(g, {cut, a.time_limit});
    } else if (a.method == "supported") {
        res = supported_frontier(g, {cut, a.time_limit});
    } else { // oracle
        res.frontier = exact_frontier(g);
        res.report.points_found = static_cast<int>(res.frontier.size());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string id = std::filesystem::path(a.input).filename().string();
    const std::string report = report_line(id, a.method, cut, res.report, seconds);
    emit(a.output, frontier_csv(res.frontier));
    if (a.output) {
        write_file_atomic(*a.output + ".trees", frontier_trees(res.frontier));
        write_file_atomic(*a.output + ".report", report);
    }
    std::cerr << report;
    return res.report.timed_out ? 2 : 0;
}

struct GenerateArgs {
    std::string family = "incomplete";
    int n = 0;
    double density = 0.5;
    std::string cost_mode = "ctp";
    std::string dist = "uniform";
    std::string edge_rule = "random";
    std::int64_t seed = 1;
    int blades = 1;
    std::optional<std::string> output;
};

int cmd_generate(const GenerateArgs& a) {
    InstanceSpec spec;
    spec.family = kFamilies.at(a.family);
    spec.n = a.n;
    spec.density = a.density;
    spec.cost_mode = kCostModes.at(a.cost_mode);
    spec.dist = kDists.at(a.dist);
    spec.edge_rule = kRules.at(a.edge_rule);
    spec.seed = a.seed;
    spec.blades = a.blades;
    if (spec.family != Family::Windmill && spec.n < 2)
        raise(Errc::InvalidArgument, "--n is required (>= 2) for this family");
    const Graph g = generate(spec);
    emit(a.output, write_instance(g));
    return 0;
}

struct ExportArgs {
    std::string input;
    std::optional<Cost> epsilon;
    std::string cut = "off";
    std::vector<Cost> weights;
    std::optional<std::string> output;
};

int cmd_export(const ExportArgs& a) {
    const Graph g = read_instance_file(a.input);
    MilpOptions opt;
    opt.epsilon = a.epsilon;
    opt.cut_rows = a.cut == "on";
    if (!a.weights.empty()) {
        if (a.weights.size() != 2) raise(Errc::InvalidArgument, "--weights takes two values");
        opt.weights = std::pair(a.weights[0], a.weights[1]);
    }
    emit(a.output, export_milp(g, opt));
    return 0;
}

struct BenchArgs {
    std::vector<std::string> families{"incomplete"};
    std::vector<int> sizes{8};
    std::vector<double> densities{0.5};
    std::vector<std::string> cost_modes{"ctp"};
    std::vector<std::string> dists{"uniform"};
    std::vector<std::string> rules{"random"};
    std::vector<std::string> methods{"eps"};
    int seeds = 20;
    std::int64_t seed_base = 1;
    double time_limit = 300.0;
    bool verify_oracle = false;
    int parallel = 1;
    std::optional<std::string> output;
    std::optional<std::string> runs_path;
};

struct BenchTask {
    InstanceSpec spec;
    std::string method; // eps | eps-nocut | supported | oracle
};

struct BenchOutcome {
    bool ok = false;
    std::string error;
    int points = 0;
    bool timed_out = false;
    double seconds = 0.0;
    long long nodes = 0;
    int oracle_mismatch = -1; // -1 = not checked
};

std::string task_instance_id(const BenchTask& t) {
    std::ostringstream os;
    os << family_name(t.spec.family);
    if (t.spec.family == Family::Windmill) {
        os << "-k" << t.spec.blades;
        return os.str();
    }
    os << "-n" << t.spec.n;
    if (t.spec.family == Family::Incomplete || t.spec.family == Family::Location) os << "-d" << t.spec.density;
    if (t.spec.family == Family::Location)
        os << "-" << distribution_name(t.spec.dist) << "-" << edge_rule_name(t.spec.edge_rule);
    os << "-" << cost_mode_name(t.spec.cost_mode) << "-s" << t.spec.seed;
    return os.str();
}

BenchOutcome run_bench_task(const BenchTask& t, double time_limit, bool verify) {
    BenchOutcome out;
    try {
        const Graph g = generate(t.spec);
        const auto t0 = std::chrono::steady_clock::now();
        FrontierResult res;
        if (t.method == "eps" || t.method == "eps-nocut")
            res = solve_frontier(g, {t.method == "eps", time_limit});
        else if (t.method == "supported")
            res = supported_frontier(g, {true, time_limit});
        else
            res.frontier = exact_frontier(g);
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.ok = true;
        out.points = static_cast<int>(res.frontier.size());
        out.timed_out = res.report.timed_out;
        out.nodes = res.report.bnb_nodes;
        if (verify && !res.report.timed_out && t.method != "oracle") {
            const Frontier exact = exact_frontier(g);
            out.oracle_mismatch = res.frontier.points() == exact.points() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

int cmd_bench(const BenchArgs& a) {
    std::vector<BenchTask> tasks;
    for (const std::string& fam_name : a.families) {
        const Family fam = kFamilies.at(fam_name);
        for (int n : a.sizes)
            for (const std::string& mode : a.cost_modes)
                for (const std::string& method : a.methods) {
                    InstanceSpec base;
                    base.family = fam;
                    base.n = n;
                    base.cost_mode = kCostModes.at(mode);
                    if (fam == Family::Location) {
                        for (double d : a.densities)
                            for (const std::string& dist : a.dists)
                                for (const std::string& rule : a.rules)
                                    for (int s = 0; s < a.seeds; ++s) {
                                        InstanceSpec spec = base;
                                        spec.density = d;
                                        spec.dist = kDists.at(dist);
                                        spec.edge_rule = kRules.at(rule);
                                        spec.seed = a.seed_base + s;
                                        tasks.push_back({spec, method});
                                    }
                    } else if (fam == Family::Incomplete) {
                        for (double d : a.densities)
                            for (int s = 0; s < a.seeds; ++s) {
                                InstanceSpec spec = base;
                                spec.density = d;
                                spec.seed = a.seed_base + s;
                                tasks.push_back({spec, method});
                            }
                    } else if (fam == Family::Windmill) {
                        InstanceSpec spec = base;
                        spec.blades = std::max(1, n / 2);
                        tasks.push_back({spec, method});
                    } else {
                        for (int s = 0; s < a.seeds; ++s) {
                            InstanceSpec spec = base;
                            spec.seed = a.seed_base + s;
                            tasks.push_back({spec, method});
                        }
                    }
                }
    }

    std::vector<BenchOutcome> outcomes(tasks.size());
    const int workers = std::max(1, a.parallel);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            outcomes[i] = run_bench_task(tasks[i], a.time_limit, a.verify_oracle);
        }
    };
    if (workers == 1 || tasks.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // per-run records
    if (a.runs_path) {
        std::ostringstream runs;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const BenchTask& t = tasks[i];
            const BenchOutcome& o = outcomes[i];
            runs << "instance=" << task_instance_id(t) << " method=" << t.method
                 << " points=" << o.points << " timed_out=" << (o.timed_out ? 1 : 0)
                 << " total_seconds=" << format_seconds(o.seconds)
                 << " seconds_per_point=" << format_seconds(o.seconds / std::max(1, o.points))
                 << " bnb_nodes=" << o.nodes << " oracle_mismatch="
                 << (o.oracle_mismatch < 0 ? std::string("na") : std::to_string(o.oracle_mismatch))
                 << " error=" << (o.ok ? "-" : o.error) << "\n";
        }
        write_file_atomic(*a.runs_path, runs.str());
    }

    // aggregate by (family, n, density, dist, rule, cost_mode, method), in task order
    struct Agg {
        long long runs = 0, ok = 0, errors = 0, timeouts = 0, mismatches = 0, checked = 0;
        long long points = 0, nodes = 0;
        double seconds = 0.0;
    };
    std::vector<std::string> keys;
    std::map<std::string, Agg> agg;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const BenchTask& t = tasks[i];
        std::ostringstream key;
        key << family_name(t.spec.family) << "," << t.spec.n << ",";
        const bool has_density =
            t.spec.family == Family::Incomplete || t.spec.family == Family::Location;
        key << (has_density ? std::to_string(t.spec.density) : std::string("-")) << ",";
        if (t.spec.family == Family::Location)
            key << distribution_name(t.spec.dist) << "," << edge_rule_name(t.spec.edge_rule) << ",";
        else
            key << "-,-,";
        key << cost_mode_name(t.spec.cost_mode) << "," << t.method;
        if (!agg.count(key.str())) keys.push_back(key.str());
        Agg& x = agg[key.str()];
        const BenchOutcome& o = outcomes[i];
        ++x.runs;
        if (!o.ok) {
            ++x.errors;
            continue;
        }
        ++x.ok;
        x.points += o.points;
        x.nodes += o.nodes;
        x.seconds += o.seconds;
        if (o.timed_out) ++x.timeouts;
        if (o.oracle_mismatch >= 0) {
            ++x.checked;
            x.mismatches += o.oracle_mismatch;
        }
    }

    std::ostringstream csv;
    csv << "family,n,density,dist,edge_rule,cost_mode,method,runs,errors,timeouts,mean_points,"
           "mean_seconds,sec_per_point,mean_bnb_nodes,oracle_mismatches\n";
    for (const std::string& key : keys) {
        const Agg& x = agg.at(key);
        const double ok = static_cast<double>(std::max<long long>(1, x.ok));
        const double mean_points = static_cast<double>(x.points) / ok;
        csv << key << "," << x.runs << "," << x.errors << "," << x.timeouts << ","
            << format_seconds(mean_points) << "," << format_seconds(x.seconds / ok) << ","
            << format_seconds(x.seconds / std::max(1.0, static_cast<double>(x.points))) << ","
            << format_seconds(static_cast<double>(x.nodes) / ok) << ","
            << (x.checked ? std::to_string(x.mismatches) : std::string("na")) << "\n";
    }
    emit(a.output, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver suite for the bi-objective (generalized) cable-trench problem"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Enumerate the non-dominated set of an instance");
    solve->add_option("--input", solve_args.input, "instance file")->required();
    solve->add_option("--method", solve_args.method, "eps | oracle | supported")
        ->check(CLI::IsMember({"eps", "oracle", "supported"}));
    solve->add_option("--cut", solve_args.cut, "epsilon cut on|off")->check(CLI::IsMember({"on", "off"}));
    solve->add_option("--time-limit", solve_args.time_limit, "seconds");
    std::string solve_output;
    CLI::Option* solve_out_opt = solve->add_option("--output", solve_output, "frontier CSV path");

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "Generate a deterministic instance");
    gen->add_option("--family", gen_args.family, "instance family")
        ->check(CLI::IsMember({"incomplete", "complete", "grid", "location", "windmill"}));
    gen->add_option("--n", gen_args.n, "vertex count");
    gen->add_option("--density", gen_args.density, "edge density in (0,1]");
    gen->add_option("--cost-mode", gen_args.cost_mode, "ctp | gctp")->check(CLI::IsMember({"ctp", "gctp"}));
    gen->add_option("--dist", gen_args.dist, "uniform | normal")->check(CLI::IsMember({"uniform", "normal"}));
    gen->add_option("--edge-rule", gen_args.edge_rule, "random | min_euclidean | min_manhattan")
        ->check(CLI::IsMember({"random", "min_euclidean", "min_manhattan"}));
    gen->add_option("--seed", gen_args.seed, "RNG seed");
    gen->add_option("--blades", gen_args.blades, "windmill blades");
    std::string gen_output;
    CLI::Option* gen_out_opt = gen->add_option("--output", gen_output, "instance file path");

    ExportArgs export_args;
    Cost export_epsilon = 0;
    CLI::App* exp = app.add_subcommand("export", "Write the MILP formulation in LP format");
    exp->add_option("--input", export_args.input, "instance file")->required();
    CLI::Option* eps_opt = exp->add_option("--epsilon", export_epsilon, "trench budget row");
    exp->add_option("--cut", export_args.cut, "cut rows on|off")->check(CLI::IsMember({"on", "off"}));
    exp->add_option("--weights", export_args.weights, "objective weights: gamma tau")->expected(2);
    std::string export_output;
    CLI::Option* export_out_opt = exp->add_option("--output", export_output, "LP file path");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark sweep");
    bench->add_option("--family", bench_args.families, "families to sweep")
        ->check(CLI::IsMember({"incomplete", "complete", "grid", "location", "windmill"}));
    bench->add_option("--n", bench_args.sizes, "vertex counts");
    bench->add_option("--density", bench_args.densities, "densities");
    bench->add_option("--cost-mode", bench_args.cost_modes, "ctp | gctp")
        ->check(CLI::IsMember({"ctp", "gctp"}));
    bench->add_option("--dist", bench_args.dists, "point distributions (location)")
        ->check(CLI::IsMember({"uniform", "normal"}));
    bench->add_option("--edge-rule", bench_args.rules, "edge rules (location)")
        ->check(CLI::IsMember({"random", "min_euclidean", "min_manhattan"}));
    bench->add_option("--method", bench_args.methods, "eps | eps-nocut | supported | oracle")
        ->check(CLI::IsMember({"eps", "eps-nocut", "supported", "oracle"}));
    bench->add_option("--seeds", bench_args.seeds, "seeds per configuration");
    bench->add_option("--seed-base", bench_args.seed_base, "first seed");
    bench->add_option("--time-limit", bench_args.time_limit, "seconds per instance");
    bench->add_flag("--verify-oracle", bench_args.verify_oracle, "cross-check against exhaustion");
    bench->add_option("--parallel", bench_args.parallel, "concurrent instances");
    std::string bench_output, bench_runs;
    CLI::Option* bench_out_opt = bench->add_option("--output", bench_output, "aggregate CSV path");
    CLI::Option* bench_runs_opt = bench->add_option("--runs", bench_runs, "per-run record path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (solve->parsed()) {
            if (*solve_out_opt) solve_args.output = solve_output;
            return cmd_solve(solve_args);
        }
        if (gen->parsed()) {
            if (*gen_out_opt) gen_args.output = gen_output;
            return cmd_generate(gen_args);
        }
        if (exp->parsed()) {
            if (*eps_opt) export_args.epsilon = export_epsilon;
            if (*export_out_opt) export_args.output = export_output;
            return cmd_export(export_args);
        }
        if (bench->parsed()) {
            if (*bench_out_opt) bench_args.output = bench_output;
            if (*bench_runs_opt) bench_args.runs_path = bench_runs;
            return cmd_bench(bench_args);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
