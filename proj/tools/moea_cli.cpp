// Command-line front end: `moea run` executes one seeded optimization run and
// prints a JSON report; `moea experiment` runs a full grid and writes
// CSV/JSON/SVG artifacts.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moea/algorithms.hpp"
#include "moea/harness.hpp"
#include "moea/random.hpp"

namespace {

nlohmann::json objectives_json(const moea::ObjectiveVector& v) {
    return nlohmann::json::array({v.f1, v.f2});
}

nlohmann::json individuals_json(const std::vector<moea::Individual>& members) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : members)
        arr.push_back({{"genotype", m.genotype.to_string()},
                       {"objectives", objectives_json(m.objectives)}});
    return arr;
}

int run_single(const std::string& problem_name, const std::string& algo_name, bool archive,
               long long mu, int n, std::uint64_t seed, std::uint64_t max_evals, double pc,
               const std::string& out_path) {
    const moea::Problem problem = moea::Problem::parse(problem_name, n);
    moea::AlgorithmConfig cfg;
    cfg.kind = algo_name == "nsga2" ? moea::AlgorithmKind::nsga2 : moea::AlgorithmKind::smsemoa;
    cfg.use_archive = archive;
    if (mu <= 0)  // default: paper-style mu for archive variants, n+1 otherwise
        mu = archive ? (cfg.kind == moea::AlgorithmKind::nsga2 ? 4 : 2) : n + 1;
    cfg.mu = static_cast<std::size_t>(mu);
    cfg.params = moea::default_params(n, pc);
    if (max_evals == 0)
        max_evals = problem.kind() == moea::ProblemKind::one_min_max ? 50000 : 200000;

    const moea::RunOutcome outcome = moea::run(cfg, problem, seed, max_evals);

    nlohmann::json doc;
    doc["problem"] = std::string(problem.name());
    doc["n"] = n;
    doc["algorithm"] = std::string(moea::algorithm_name(cfg.kind));
    doc["archive"] = cfg.use_archive;
    doc["mu"] = cfg.mu;
    doc["seed"] = seed;
    doc["max_evals"] = max_evals;
    doc["pc"] = cfg.params.pc;
    doc["pm"] = cfg.params.pm;
    doc["reference_point"] = objectives_json({cfg.ref.r1, cfg.ref.r2});
    doc["rng"] = {{"generator", std::string(moea::rng_name)},
                  {"stream", "engine seeded directly with --seed"}};
    doc["outcome"] = {
        {"success", outcome.evaluations_at_success.has_value()},
        {"evaluations_at_success",
         outcome.evaluations_at_success ? nlohmann::json(*outcome.evaluations_at_success)
                                        : nlohmann::json(nullptr)},
        {"hit_cap", outcome.hit_cap},
        {"generations", outcome.generations},
    };
    doc["final_population"] = individuals_json(outcome.final_population);
    if (outcome.final_archive) doc["final_archive"] = individuals_json(outcome.final_archive->members());

    if (out_path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << doc.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-objective evolutionary workbench: NSGA-II and SMS-EMOA with an optional "
                 "unbounded non-dominated archive"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "execute one seeded optimization run");
    std::string problem, algo = "nsga2", archive = "off", out_path = "-", run_format = "json";
    int n = 0;
    long long mu = 0;
    std::uint64_t seed = 1, max_evals = 0;
    double pc = 0.9;
    run_cmd->add_option("--problem", problem, "omm or lotz (case-insensitive)")->required();
    run_cmd->add_option("--algo", algo, "nsga2 or smsemoa")
        ->check(CLI::IsMember({"nsga2", "smsemoa"}));
    run_cmd->add_option("--archive", archive, "on or off")->check(CLI::IsMember({"on", "off"}));
    run_cmd->add_option("--mu", mu, "population size (default: 4/2 with archive, n+1 without)");
    run_cmd->add_option("--n", n, "problem dimension")->required();
    run_cmd->add_option("--seed", seed, "rng seed (default 1)");
    run_cmd->add_option("--max-evals", max_evals, "evaluation cap (default 50000 omm / 200000 lotz)");
    run_cmd->add_option("--pc", pc, "crossover probability (default 0.9)");
    run_cmd->add_option("--out", out_path, "output path, '-' for stdout");
    run_cmd->add_option("--format", run_format)->check(CLI::IsMember({"json"}));

    auto* exp_cmd = app.add_subcommand("experiment", "run a grid and write artifacts");
    std::string config_path, out_dir;
    long long runs = 0;
    long long workers = 0;
    std::uint64_t base_seed = 0;
    std::string formats_arg = "csv,json,svg";
    exp_cmd->add_option("--config", config_path, "key = value config file");
    exp_cmd->add_option("--runs", runs, "runs per cell (default 1000)");
    exp_cmd->add_option("--base-seed", base_seed, "base seed (default 1)");
    exp_cmd->add_option("--workers", workers, "worker threads (default: hardware)");
    exp_cmd->add_option("--out-dir", out_dir, "artifact directory (default: results)");
    exp_cmd->add_option("--format", formats_arg, "comma list from csv,json,svg");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run_cmd))
            return run_single(problem, algo, archive == "on", mu, n, seed, max_evals, pc, out_path);

        moea::ExperimentConfig cfg =
            config_path.empty() ? moea::default_experiment() : moea::load_config_file(config_path);
        if (exp_cmd->count("--runs")) cfg.runs = static_cast<int>(runs);
        if (exp_cmd->count("--base-seed")) cfg.base_seed = base_seed;
        if (exp_cmd->count("--workers")) cfg.workers = static_cast<int>(workers);
        if (exp_cmd->count("--out-dir")) cfg.out_dir = out_dir;

        std::vector<moea::ReportFormat> formats;
        std::size_t start = 0;
        while (start <= formats_arg.size()) {
            const auto comma = formats_arg.find(',', start);
            const auto piece = comma == std::string::npos
                                   ? formats_arg.substr(start)
                                   : formats_arg.substr(start, comma - start);
            if (!piece.empty()) {
                const auto f = moea::parse_format(piece);
                if (!f) throw std::invalid_argument("unknown format '" + piece + "'");
                formats.push_back(*f);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }

        const auto results = moea::run_experiment(cfg);
        moea::emit_report(results, cfg, formats);
        std::cerr << "wrote " << cfg.out_dir << "/results.csv";
        for (const auto f : formats)
            if (f == moea::ReportFormat::json)
                std::cerr << ", " << cfg.out_dir << "/results.json";
            else if (f == moea::ReportFormat::svg)
                std::cerr << ", " << cfg.out_dir << "/scaling.svg";
        std::cerr << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
