#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moea/algorithms.hpp"
#include "moea/problems.hpp"

namespace moea {

// Population size as a function of n: a constant, or multiplier*(n+1) with
// multiplier in {1,2,4} (the front size is n+1).
struct MuRule {
    int constant = 0;
    int front_multiple = 0;

    static MuRule constant_rule(int c) { return {c, 0}; }
    static MuRule multiple_rule(int m) { return {0, m}; }
    // Accepts "K", "n+1" or "K(n+1)".
    static MuRule parse(std::string_view text);

    int resolve(int n) const { return constant > 0 ? constant : front_multiple * (n + 1); }
    std::string label() const;

    friend bool operator==(const MuRule&, const MuRule&) = default;
};

struct VariantSpec {
    AlgorithmKind algo = AlgorithmKind::nsga2;
    bool use_archive = false;
    MuRule mu;

    // "nsga2+archive:4", "smsemoa:2(n+1)", ... Also the accepted parse syntax.
    std::string label() const;
    static VariantSpec parse(std::string_view text);

    friend bool operator==(const VariantSpec&, const VariantSpec&) = default;
};

struct ExperimentConfig {
    std::vector<ProblemKind> problems;
    std::vector<int> n_values;
    std::vector<VariantSpec> variants;
    int runs = 1000;
    std::uint64_t base_seed = 1;
    int workers = 0;  // 0 = hardware concurrency
    std::uint64_t max_evals_omm = 50000;
    std::uint64_t max_evals_lotz = 200000;
    double pc = 0.9;
    std::string out_dir = "results";

    std::uint64_t max_evals_for(ProblemKind kind) const {
        return kind == ProblemKind::one_min_max ? max_evals_omm : max_evals_lotz;
    }
};

// The full reproduction grid: both problems, n in {10..50 step 10}, 1000 runs,
// the two archive variants (mu=4 / mu=2) plus both algorithms at mu in
// {n+1, 2(n+1), 4(n+1)} without archive, caps 5e4 (omm) / 2e5 (lotz).
ExperimentConfig default_experiment();

// key = value lines, '#' comments; unknown keys are rejected. Unspecified
// keys keep the default_experiment() values.
ExperimentConfig load_config(std::istream& in);
ExperimentConfig load_config_file(const std::string& path);

// Configuration errors (empty grid, invalid mu for an algorithm, bad rates)
// throw std::invalid_argument before anything runs.
void validate(const ExperimentConfig& cfg);

struct RunRecord {
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;  // evaluations at success; the cap if capped
    bool hit_cap = false;
    double wall_ms = 0.0;  // informational; excluded from deterministic artifacts
};

// One (problem, variant, n) cell with its per-run records in run-index order.
struct CellResult {
    ProblemKind problem = ProblemKind::one_min_max;
    VariantSpec variant;
    int n = 0;
    int mu = 0;
    std::uint64_t max_evals = 0;
    std::vector<RunRecord> records;

    std::uint64_t successes() const;
    std::uint64_t capped() const;
    // Mean/std over successful runs only; empty when that set is too small.
    std::optional<double> mean_evals() const;
    std::optional<double> std_evals() const;
    // Mean over all runs with capped runs counted at the cap.
    double censored_mean_evals() const;
};

// Canonical cell identity fed to the seed hash, e.g. "omm/nsga2/archive=off/mu=n+1/n=30".
std::string cell_tag(ProblemKind problem, const VariantSpec& variant, int n);

// Runs the whole grid on cfg.workers threads. Per-run seeds are
// derive_run_seed(base_seed, cell_tag, run_index), so results are identical
// for any worker count. Streams finished cells to <out_dir>/results.csv in
// canonical cell order as they complete (partial results survive
// interruption). Returns all cells in canonical order.
std::vector<CellResult> run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { csv, json, svg };
std::optional<ReportFormat> parse_format(std::string_view text);

inline constexpr std::string_view csv_header =
    "problem,algorithm,archive,mu_rule,mu,n,runs,successes,capped,mean_evals,"
    "censored_mean_evals,std_evals,base_seed";

void write_csv(std::ostream& out, std::span<const CellResult> results, std::uint64_t base_seed);
void write_csv_row(std::ostream& out, const CellResult& cell, std::uint64_t base_seed);
void write_json(std::ostream& out, std::span<const CellResult> results,
                const ExperimentConfig& cfg);

// One panel per entry; every row of a panel must share one problem, else
// std::invalid_argument. Each panel draws one <polyline> per variant
// (censored mean evaluations vs n, log y).
std::string render_svg(const std::vector<std::vector<const CellResult*>>& panels);
// Groups rows by problem, one panel each, in first-appearance order.
std::string render_svg_grouped(std::span<const CellResult> results);

// Writes results.csv / results.json / scaling.svg into cfg.out_dir.
void emit_report(std::span<const CellResult> results, const ExperimentConfig& cfg,
                 std::span<const ReportFormat> formats);

}  // namespace moea
