#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "moea/harness.hpp"
#include "moea/random.hpp"

namespace moea {
namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string opt6(const std::optional<double>& v) { return v ? fixed6(*v) : std::string(); }

std::string num(double v, int decimals = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// tab10-like palette; cycles if a grid has more variants than colors.
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view text) {
    if (text == "csv") return ReportFormat::csv;
    if (text == "json") return ReportFormat::json;
    if (text == "svg") return ReportFormat::svg;
    return std::nullopt;
}

void write_csv_row(std::ostream& out, const CellResult& cell, std::uint64_t base_seed) {
    out << problem_name(cell.problem) << ',' << algorithm_name(cell.variant.algo) << ','
        << (cell.variant.use_archive ? "on" : "off") << ',' << cell.variant.mu.label() << ','
        << cell.mu << ',' << cell.n << ',' << cell.records.size() << ',' << cell.successes() << ','
        << cell.capped() << ',' << opt6(cell.mean_evals()) << ','
        << fixed6(cell.censored_mean_evals()) << ',' << opt6(cell.std_evals()) << ',' << base_seed
        << '\n';
}

void write_csv(std::ostream& out, std::span<const CellResult> results, std::uint64_t base_seed) {
    out << csv_header << '\n';
    for (const auto& cell : results) write_csv_row(out, cell, base_seed);
}

void write_json(std::ostream& out, std::span<const CellResult> results,
                const ExperimentConfig& cfg) {
    nlohmann::json doc;
    auto& config = doc["config"];
    for (auto p : cfg.problems) config["problems"].push_back(std::string(problem_name(p)));
    config["n_values"] = cfg.n_values;
    for (const auto& v : cfg.variants) config["variants"].push_back(v.label());
    config["runs"] = cfg.runs;
    config["base_seed"] = cfg.base_seed;
    config["workers"] = cfg.workers;
    config["max_evals"] = {{"omm", cfg.max_evals_omm}, {"lotz", cfg.max_evals_lotz}};
    config["pc"] = cfg.pc;
    config["out_dir"] = cfg.out_dir;
    doc["rng"] = {
        {"generator", std::string(rng_name)},
        {"seed_derivation",
         "run_seed = mix64(mix64(base_seed XOR fnv1a64(cell_tag)) XOR run_index); "
         "cell_tag = problem/algorithm/archive=<on|off>/mu=<rule>/n=<n>"},
    };
    doc["reference_point"] = {-1, -1};

    auto& cells = doc["cells"];
    cells = nlohmann::json::array();
    for (const auto& cell : results) {
        nlohmann::json c;
        c["problem"] = std::string(problem_name(cell.problem));
        c["algorithm"] = std::string(algorithm_name(cell.variant.algo));
        c["archive"] = cell.variant.use_archive;
        c["mu_rule"] = cell.variant.mu.label();
        c["mu"] = cell.mu;
        c["n"] = cell.n;
        c["max_evals"] = cell.max_evals;
        c["runs"] = cell.records.size();
        c["successes"] = cell.successes();
        c["capped"] = cell.capped();
        if (const auto m = cell.mean_evals())
            c["mean_evals"] = *m;
        else
            c["mean_evals"] = nullptr;
        c["censored_mean_evals"] = cell.censored_mean_evals();
        if (const auto s = cell.std_evals())
            c["std_evals"] = *s;
        else
            c["std_evals"] = nullptr;
        auto& recs = c["records"];
        recs = nlohmann::json::array();
        for (std::size_t i = 0; i < cell.records.size(); ++i) {
            const auto& r = cell.records[i];
            recs.push_back({{"run", i},
                            {"seed", r.seed},
                            {"evaluations", r.evaluations},
                            {"hit_cap", r.hit_cap},
                            {"wall_ms", r.wall_ms}});
        }
        cells.push_back(std::move(c));
    }
    out << doc.dump(2) << '\n';
}

std::string render_svg(const std::vector<std::vector<const CellResult*>>& panels) {
    if (panels.empty()) throw std::invalid_argument("svg: no panels");
    for (const auto& panel : panels) {
        if (panel.empty()) throw std::invalid_argument("svg: empty panel");
        for (const auto* row : panel)
            if (row->problem != panel.front()->problem)
                throw std::invalid_argument("svg: mixed problems in one panel");
    }

    // Shared log10 y-range over every plotted value.
    double ymin = 0.0, ymax = 0.0;
    bool any = false;
    for (const auto& panel : panels)
        for (const auto* row : panel) {
            if (row->records.empty()) continue;
            const double v = row->censored_mean_evals();
            if (!any) {
                ymin = ymax = v;
                any = true;
            } else {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        }
    if (!any) throw std::invalid_argument("svg: no data rows");
    int lo = static_cast<int>(std::floor(std::log10(std::max(ymin, 1.0))));
    int hi = static_cast<int>(std::ceil(std::log10(std::max(ymax, 1.0))));
    if (hi <= lo) hi = lo + 1;

    const double panel_w = 420.0, panel_h = 330.0;
    const double left = 70.0, top = 55.0, gap = 60.0, bottom = 50.0;
    const double legend_w = 230.0;
    const double width = left + panels.size() * panel_w + (panels.size() - 1) * gap + 20.0 + legend_w;
    const double height = top + panel_h + bottom;

    // Legend order: first appearance of a variant label across all panels.
    std::vector<std::string> legend;
    std::map<std::string, std::size_t> color_of;
    for (const auto& panel : panels)
        for (const auto* row : panel) {
            const std::string label = row->variant.label();
            if (color_of.emplace(label, legend.size()).second) legend.push_back(label);
        }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(left) << "\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\""
        << " fill=\"#222\">mean evaluations until the Pareto front is covered (capped runs at the "
           "cap)</text>\n";

    const auto y_of = [&](double v) {
        const double t = (std::log10(std::max(v, 1.0)) - lo) / static_cast<double>(hi - lo);
        return top + panel_h - t * panel_h;
    };

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        const double px = left + p * (panel_w + gap);

        int nmin = panel.front()->n, nmax = panel.front()->n;
        for (const auto* row : panel) {
            nmin = std::min(nmin, row->n);
            nmax = std::max(nmax, row->n);
        }
        const auto x_of = [&](int n) {
            if (nmax == nmin) return px + panel_w / 2.0;
            return px + (n - nmin) / static_cast<double>(nmax - nmin) * panel_w;
        };

        svg << "<text x=\"" << num(px + panel_w / 2.0) << "\" y=\"" << num(top - 12.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
               "fill=\"#222\">"
            << problem_name(panel.front()->problem) << "</text>\n";

        // Axes and decade ticks.
        svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(top) << "\" x2=\"" << num(px)
            << "\" y2=\"" << num(top + panel_h) << "\" stroke=\"#444\"/>\n";
        svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(top + panel_h) << "\" x2=\""
            << num(px + panel_w) << "\" y2=\"" << num(top + panel_h) << "\" stroke=\"#444\"/>\n";
        for (int k = lo; k <= hi; ++k) {
            const double y = y_of(std::pow(10.0, k));
            svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(y) << "\" x2=\"" << num(px + panel_w)
                << "\" y2=\"" << num(y) << "\" stroke=\"#dddddd\"/>\n";
            svg << "<text x=\"" << num(px - 6.0) << "\" y=\"" << num(y + 4.0)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
                   "fill=\"#444\">1e"
                << k << "</text>\n";
        }
        std::vector<int> ns;
        for (const auto* row : panel) ns.push_back(row->n);
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (int n : ns) {
            svg << "<line x1=\"" << num(x_of(n)) << "\" y1=\"" << num(top + panel_h) << "\" x2=\""
                << num(x_of(n)) << "\" y2=\"" << num(top + panel_h + 5.0) << "\" stroke=\"#444\"/>\n";
            svg << "<text x=\"" << num(x_of(n)) << "\" y=\"" << num(top + panel_h + 18.0)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
                   "fill=\"#444\">"
                << n << "</text>\n";
        }
        svg << "<text x=\"" << num(px + panel_w / 2.0) << "\" y=\"" << num(top + panel_h + 36.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
               "fill=\"#222\">n</text>\n";

        // One polyline per variant, points ordered by n.
        std::vector<std::string> variant_order;
        std::map<std::string, std::vector<const CellResult*>> by_variant;
        for (const auto* row : panel) {
            const std::string label = row->variant.label();
            if (by_variant.emplace(label, std::vector<const CellResult*>{}).second)
                variant_order.push_back(label);
            by_variant[label].push_back(row);
        }
        for (const auto& label : variant_order) {
            auto rows = by_variant[label];
            std::sort(rows.begin(), rows.end(),
                      [](const CellResult* a, const CellResult* b) { return a->n < b->n; });
            const auto& color = kPalette[color_of[label] % std::size(kPalette)];
            const bool archive = rows.front()->variant.use_archive;
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
                << (archive ? "2.4" : "1.4") << "\" points=\"";
            bool first = true;
            for (const auto* row : rows) {
                if (row->records.empty()) continue;
                if (!first) svg << ' ';
                svg << num(x_of(row->n)) << ',' << num(y_of(row->censored_mean_evals()));
                first = false;
            }
            svg << "\"/>\n";
        }
    }

    // Legend column.
    const double lx = left + panels.size() * panel_w + (panels.size() - 1) * gap + 30.0;
    for (std::size_t i = 0; i < legend.size(); ++i) {
        const double y = top + 10.0 + i * 22.0;
        svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(y) << "\" x2=\"" << num(lx + 26.0)
            << "\" y2=\"" << num(y) << "\" stroke=\"" << kPalette[i % std::size(kPalette)]
            << "\" stroke-width=\"2.4\"/>\n";
        svg << "<text x=\"" << num(lx + 32.0) << "\" y=\"" << num(y + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\">" << legend[i]
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_svg_grouped(std::span<const CellResult> results) {
    std::vector<ProblemKind> order;
    std::vector<std::vector<const CellResult*>> panels;
    for (const auto& cell : results) {
        auto it = std::find(order.begin(), order.end(), cell.problem);
        if (it == order.end()) {
            order.push_back(cell.problem);
            panels.emplace_back();
            it = order.end() - 1;
        }
        panels[static_cast<std::size_t>(it - order.begin())].push_back(&cell);
    }
    return render_svg(panels);
}

void emit_report(std::span<const CellResult> results, const ExperimentConfig& cfg,
                 std::span<const ReportFormat> formats) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    for (const ReportFormat format : formats) {
        const char* name = format == ReportFormat::csv    ? "results.csv"
                           : format == ReportFormat::json ? "results.json"
                                                          : "scaling.svg";
        std::ofstream out(dir / name);
        if (!out) throw std::runtime_error("emit_report: cannot write " + (dir / name).string());
        switch (format) {
            case ReportFormat::csv: write_csv(out, results, cfg.base_seed); break;
            case ReportFormat::json: write_json(out, results, cfg); break;
            case ReportFormat::svg: out << render_svg_grouped(results); break;
        }
    }
}

}  // namespace moea
