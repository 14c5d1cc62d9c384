#include "runner.hpp"

#include <nlohmann/json.hpp>

#include <iostream>

namespace fwbesov::cli {

using nlohmann::json;

namespace {

ExperimentReport dispatch(const RunConfig& cfg) {
    if (cfg.command == "simulate") return run_simulate(cfg.opts);
    if (cfg.command == "besov-norm") return run_besov_table(cfg.opts);
    if (cfg.command == "iterate") return run_iterate(cfg.opts);
    if (cfg.command == "nonuniform") return run_nonuniform(cfg.opts);
    if (cfg.command == "peakon") return run_peakon(cfg.opts);
    if (cfg.command == "taylor") return run_taylor(cfg.opts);
    if (cfg.command == "blowup") return run_blowup(cfg.opts);
    if (cfg.command == "calibrate") return run_calibrate(cfg.opts);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

void write_artifacts(const RunConfig& cfg, const ExperimentReport& rep) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    rep.write_json(cfg.out_dir / "report.json");

    if (!cfg.write_csv && !cfg.write_plot) return;
    const json j = rep.to_json();
    const json& m = j["measurements"];

    if (cfg.command == "nonuniform" && m.contains("rows")) {
        if (cfg.write_csv) {
            CsvTable table;
            table.header = {"n",     "init_dist", "sup_norm_u", "sup_norm_v",
                            "err_u", "err_v",     "final_dist"};
            for (const auto& row : m["rows"])
                table.add_row({row["n"].get<double>(), row["init_dist"].get<double>(),
                               row["sup_norm_u"].get<double>(), row["sup_norm_v"].get<double>(),
                               row["err_u"].get<double>(), row["err_v"].get<double>(),
                               row["final_dist"].get<double>()});
            write_csv(cfg.out_dir / "nonuniform.csv", table);
        }
        if (cfg.write_plot && j["fits"].contains("init_dist")) {
            const auto& fit = j["fits"]["init_dist"];
            write_svg_loglog_fit(cfg.out_dir / "init_dist_fit.svg",
                                 "initial distance vs n", fit["ns"].get<std::vector<int>>(),
                                 fit["values"].get<std::vector<double>>(),
                                 fit["exponent"].get<double>(),
                                 fit["intercept"].get<double>());
            const auto& efit = j["fits"]["err_u"];
            write_svg_loglog_fit(cfg.out_dir / "err_u_fit.svg",
                                 "approximation error vs n",
                                 efit["ns"].get<std::vector<int>>(),
                                 efit["values"].get<std::vector<double>>(),
                                 efit["exponent"].get<double>(),
                                 efit["intercept"].get<double>());
        }
        return;
    }

    if (m.contains("trajectory")) {
        const auto& tr = m["trajectory"];
        const auto times = tr["times"].get<std::vector<double>>();
        if (cfg.write_csv) {
            CsvTable table;
            table.header = {"t", "besov", "sup_abs", "min_slope", "breaking_integral"};
            const auto besov = tr["besov"].get<std::vector<double>>();
            const auto sup = tr["sup_abs"].get<std::vector<double>>();
            const auto slope = tr["min_slope"].get<std::vector<double>>();
            const auto breaking = tr["breaking_integral"].get<std::vector<double>>();
            for (std::size_t i = 0; i < times.size(); ++i)
                table.add_row({times[i], besov[i], sup[i], slope[i], breaking[i]});
            write_csv(cfg.out_dir / (cfg.command + ".csv"), table);
        }
        if (cfg.write_plot) {
            std::vector<PlotSeries> series;
            series.push_back({"besov norm", times, tr["besov"].get<std::vector<double>>()});
            series.push_back({"sup |u|", times, tr["sup_abs"].get<std::vector<double>>()});
            write_svg_lines(cfg.out_dir / (cfg.command + "_norms.svg"),
                            "norms along the trajectory", series);
        }
        return;
    }

    if (cfg.command == "iterate" && cfg.write_csv && m.contains("distances")) {
        CsvTable table;
        table.header = {"iterate", "distance"};
        const auto ds = m["distances"].get<std::vector<double>>();
        for (std::size_t i = 0; i < ds.size(); ++i)
            table.add_row({static_cast<double>(i + 1), ds[i]});
        write_csv(cfg.out_dir / "iterate.csv", table);
    }
    if (cfg.command == "peakon" && m.contains("crest_times")) {
        if (cfg.write_csv) {
            CsvTable table;
            table.header = {"t", "crest_position"};
            const auto ts = m["crest_times"].get<std::vector<double>>();
            const auto ps = m["crest_positions"].get<std::vector<double>>();
            for (std::size_t i = 0; i < ts.size(); ++i) table.add_row({ts[i], ps[i]});
            write_csv(cfg.out_dir / "crest.csv", table);
        }
        if (cfg.write_plot) {
            write_svg_lines(cfg.out_dir / "crest.svg", "crest position vs time",
                            {{"crest", m["crest_times"].get<std::vector<double>>(),
                              m["crest_positions"].get<std::vector<double>>()}});
        }
    }
}

} // namespace

int run(const RunConfig& cfg) {
    try {
        const ExperimentReport rep = dispatch(cfg);
        write_artifacts(cfg, rep);

        for (const auto& [name, verdict] : rep.verdicts())
            std::cout << (verdict.pass ? "[PASS] " : "[FAIL] ") << name << ": "
                      << verdict.detail << "\n";
        std::cout << "report: " << (cfg.out_dir / "report.json").string() << "\n";
        return rep.all_pass() ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fwbesov::cli
