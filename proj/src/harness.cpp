#include "moea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "moea/random.hpp"

namespace moea {
namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const auto piece = comma == std::string_view::npos ? s.substr(start)
                                                           : s.substr(start, comma - start);
        const auto item = trim(piece);
        if (!item.empty()) items.push_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

long long parse_int(std::string_view text, std::string_view what) {
    const std::string t = trim(text);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw std::invalid_argument("config: bad integer for " + std::string(what) + ": '" + t + "'");
    return value;
}

double parse_double(std::string_view text, std::string_view what) {
    const std::string t = trim(text);
    try {
        std::size_t pos = 0;
        const double value = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for " + std::string(what) + ": '" + t + "'");
    }
}

ProblemKind parse_problem_kind(std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "omm") return ProblemKind::one_min_max;
    if (t == "lotz") return ProblemKind::leading_ones_trailing_zeroes;
    throw std::invalid_argument("config: unknown problem '" + t + "'");
}

AlgorithmConfig algorithm_config_for(const VariantSpec& variant, int n, double pc) {
    AlgorithmConfig cfg;
    cfg.kind = variant.algo;
    cfg.mu = static_cast<std::size_t>(variant.mu.resolve(n));
    cfg.use_archive = variant.use_archive;
    cfg.params = default_params(n, pc);
    return cfg;
}

}  // namespace

MuRule MuRule::parse(std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "n+1") return multiple_rule(1);
    if (t.size() > 5 && t.substr(t.size() - 5) == "(n+1)") {
        const long long m = parse_int(t.substr(0, t.size() - 5), "mu rule multiplier");
        if (m != 1 && m != 2 && m != 4)
            throw std::invalid_argument("config: mu rule multiplier must be 1, 2 or 4");
        return multiple_rule(static_cast<int>(m));
    }
    const long long c = parse_int(t, "mu");
    if (c < 1) throw std::invalid_argument("config: constant mu must be >= 1");
    return constant_rule(static_cast<int>(c));
}

std::string MuRule::label() const {
    if (constant > 0) return std::to_string(constant);
    if (front_multiple == 1) return "n+1";
    return std::to_string(front_multiple) + "(n+1)";
}

std::string VariantSpec::label() const {
    std::string s(algorithm_name(algo));
    if (use_archive) s += "+archive";
    s += ":";
    s += mu.label();
    return s;
}

VariantSpec VariantSpec::parse(std::string_view text) {
    const std::string t = lower(trim(text));
    const std::size_t colon = t.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("config: variant '" + t + "' is missing ':mu-rule'");
    std::string head = trim(t.substr(0, colon));
    VariantSpec v;
    constexpr std::string_view suffix = "+archive";
    if (head.size() > suffix.size() &&
        head.compare(head.size() - suffix.size(), suffix.size(), suffix) == 0) {
        v.use_archive = true;
        head = trim(head.substr(0, head.size() - suffix.size()));
    }
    if (head == "nsga2")
        v.algo = AlgorithmKind::nsga2;
    else if (head == "smsemoa")
        v.algo = AlgorithmKind::smsemoa;
    else
        throw std::invalid_argument("config: unknown algorithm '" + head + "'");
    v.mu = MuRule::parse(t.substr(colon + 1));
    return v;
}

ExperimentConfig default_experiment() {
    ExperimentConfig cfg;
    cfg.problems = {ProblemKind::one_min_max, ProblemKind::leading_ones_trailing_zeroes};
    cfg.n_values = {10, 20, 30, 40, 50};
    cfg.variants = {
        VariantSpec{AlgorithmKind::nsga2, true, MuRule::constant_rule(4)},
        VariantSpec{AlgorithmKind::smsemoa, true, MuRule::constant_rule(2)},
        VariantSpec{AlgorithmKind::nsga2, false, MuRule::multiple_rule(1)},
        VariantSpec{AlgorithmKind::nsga2, false, MuRule::multiple_rule(2)},
        VariantSpec{AlgorithmKind::nsga2, false, MuRule::multiple_rule(4)},
        VariantSpec{AlgorithmKind::smsemoa, false, MuRule::multiple_rule(1)},
        VariantSpec{AlgorithmKind::smsemoa, false, MuRule::multiple_rule(2)},
        VariantSpec{AlgorithmKind::smsemoa, false, MuRule::multiple_rule(4)},
    };
    return cfg;
}

ExperimentConfig load_config(std::istream& in) {
    ExperimentConfig cfg = default_experiment();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                        " is not 'key = value'");
        const std::string key = lower(trim(stripped.substr(0, eq)));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "problems") {
            cfg.problems.clear();
            for (const auto& item : split_list(value)) cfg.problems.push_back(parse_problem_kind(item));
        } else if (key == "n_values") {
            cfg.n_values.clear();
            for (const auto& item : split_list(value))
                cfg.n_values.push_back(static_cast<int>(parse_int(item, "n_values")));
        } else if (key == "variants") {
            cfg.variants.clear();
            for (const auto& item : split_list(value)) cfg.variants.push_back(VariantSpec::parse(item));
        } else if (key == "runs") {
            cfg.runs = static_cast<int>(parse_int(value, "runs"));
        } else if (key == "base_seed") {
            cfg.base_seed = static_cast<std::uint64_t>(parse_int(value, "base_seed"));
        } else if (key == "workers") {
            cfg.workers = static_cast<int>(parse_int(value, "workers"));
        } else if (key == "max_evals_omm") {
            cfg.max_evals_omm = static_cast<std::uint64_t>(parse_int(value, "max_evals_omm"));
        } else if (key == "max_evals_lotz") {
            cfg.max_evals_lotz = static_cast<std::uint64_t>(parse_int(value, "max_evals_lotz"));
        } else if (key == "pc") {
            cfg.pc = parse_double(value, "pc");
        } else if (key == "out_dir") {
            cfg.out_dir = value;
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot read '" + path + "'");
    return load_config(in);
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.problems.empty()) throw std::invalid_argument("config: no problems");
    if (cfg.n_values.empty()) throw std::invalid_argument("config: no n values");
    if (cfg.variants.empty()) throw std::invalid_argument("config: no variants");
    std::set<ProblemKind> pk(cfg.problems.begin(), cfg.problems.end());
    if (pk.size() != cfg.problems.size())
        throw std::invalid_argument("config: duplicate problems");
    std::set<int> ns(cfg.n_values.begin(), cfg.n_values.end());
    if (ns.size() != cfg.n_values.size()) throw std::invalid_argument("config: duplicate n values");
    std::set<std::string> labels;
    for (const auto& v : cfg.variants)
        if (!labels.insert(v.label()).second)
            throw std::invalid_argument("config: duplicate variant " + v.label());
    for (int n : cfg.n_values)
        if (n < 1) throw std::invalid_argument("config: n must be >= 1");
    if (cfg.runs < 0) throw std::invalid_argument("config: runs must be >= 0");
    if (cfg.workers < 0) throw std::invalid_argument("config: workers must be >= 0");
    if (cfg.max_evals_omm < 1 || cfg.max_evals_lotz < 1)
        throw std::invalid_argument("config: evaluation caps must be >= 1");
    if (!(cfg.pc >= 0.0 && cfg.pc <= 1.0)) throw std::invalid_argument("config: pc must lie in [0,1]");
    // Surface per-cell algorithm config problems (e.g. mu below the minimum)
    // before anything runs.
    for (const auto& variant : cfg.variants)
        for (int n : cfg.n_values) validate(algorithm_config_for(variant, n, cfg.pc));
}

std::uint64_t CellResult::successes() const {
    std::uint64_t count = 0;
    for (const auto& r : records) count += r.hit_cap ? 0 : 1;
    return count;
}

std::uint64_t CellResult::capped() const { return records.size() - successes(); }

std::optional<double> CellResult::mean_evals() const {
    unsigned __int128 sum = 0;
    std::uint64_t count = 0;
    for (const auto& r : records)
        if (!r.hit_cap) {
            sum += r.evaluations;
            ++count;
        }
    if (count == 0) return std::nullopt;
    return static_cast<double>(sum) / static_cast<double>(count);
}

std::optional<double> CellResult::std_evals() const {
    unsigned __int128 sum = 0, sum_sq = 0;
    std::uint64_t count = 0;
    for (const auto& r : records)
        if (!r.hit_cap) {
            sum += r.evaluations;
            sum_sq += static_cast<unsigned __int128>(r.evaluations) * r.evaluations;
            ++count;
        }
    if (count < 2) return std::nullopt;
    // Sample variance from exact integer sums: (k*sum_sq - sum^2) / (k*(k-1)).
    const long double k = static_cast<long double>(count);
    const long double num = k * static_cast<long double>(sum_sq) -
                            static_cast<long double>(sum) * static_cast<long double>(sum);
    const long double var = num / (k * (k - 1.0L));
    return var <= 0.0L ? 0.0 : static_cast<double>(std::sqrt(static_cast<double>(var)));
}

double CellResult::censored_mean_evals() const {
    unsigned __int128 sum = 0;
    for (const auto& r : records) sum += r.hit_cap ? max_evals : r.evaluations;
    return records.empty() ? 0.0 : static_cast<double>(sum) / static_cast<double>(records.size());
}

std::string cell_tag(ProblemKind problem, const VariantSpec& variant, int n) {
    std::string tag(problem_name(problem));
    tag += "/";
    tag += algorithm_name(variant.algo);
    tag += "/archive=";
    tag += variant.use_archive ? "on" : "off";
    tag += "/mu=" + variant.mu.label();
    tag += "/n=" + std::to_string(n);
    return tag;
}

std::vector<CellResult> run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const fs::path csv_path = fs::path(cfg.out_dir) / "results.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("run_experiment: cannot write " + csv_path.string());
    csv << csv_header << "\n" << std::flush;

    std::vector<CellResult> cells;
    for (ProblemKind problem : cfg.problems)
        for (const auto& variant : cfg.variants)
            for (int n : cfg.n_values) {
                CellResult cell;
                cell.problem = problem;
                cell.variant = variant;
                cell.n = n;
                cell.mu = variant.mu.resolve(n);
                cell.max_evals = cfg.max_evals_for(problem);
                cell.records.resize(static_cast<std::size_t>(cfg.runs));
                cells.push_back(std::move(cell));
            }
    if (cfg.runs == 0) return {};

    const std::size_t runs = static_cast<std::size_t>(cfg.runs);
    const std::size_t total = cells.size() * runs;
    std::atomic<std::size_t> next_task{0};
    const auto remaining = std::make_unique<std::atomic<std::size_t>[]>(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) remaining[i].store(runs);

    std::mutex writer_mutex;
    std::vector<std::uint8_t> cell_done(cells.size(), 0);
    std::size_t flush_pos = 0;

    auto execute = [&](CellResult& cell, std::size_t run_index) {
        const std::string tag = cell_tag(cell.problem, cell.variant, cell.n);
        const std::uint64_t seed = derive_run_seed(cfg.base_seed, tag, run_index);
        const Problem problem(cell.problem, cell.n);
        const AlgorithmConfig acfg = algorithm_config_for(cell.variant, cell.n, cfg.pc);
        const auto start = std::chrono::steady_clock::now();
        const RunOutcome outcome = run(acfg, problem, seed, cell.max_evals);
        const auto stop = std::chrono::steady_clock::now();
        RunRecord rec;
        rec.seed = seed;
        rec.hit_cap = outcome.hit_cap;
        rec.evaluations = outcome.hit_cap ? cell.max_evals : *outcome.evaluations_at_success;
        rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        cell.records[run_index] = rec;
    };

    auto worker = [&]() {
        for (;;) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= total) return;
            const std::size_t ci = task / runs;
            const std::size_t ri = task % runs;
            execute(cells[ci], ri);
            if (remaining[ci].fetch_sub(1) == 1) {
                // Cell finished; flush every completed prefix cell in order.
                std::lock_guard<std::mutex> lock(writer_mutex);
                cell_done[ci] = 1;
                while (flush_pos < cells.size() && cell_done[flush_pos]) {
                    write_csv_row(csv, cells[flush_pos], cfg.base_seed);
                    csv << std::flush;
                    ++flush_pos;
                }
            }
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    std::size_t n_workers = cfg.workers > 0 ? static_cast<std::size_t>(cfg.workers) : hw;
    n_workers = std::min(n_workers, total);
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (std::size_t i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return cells;
}

}  // namespace moea
