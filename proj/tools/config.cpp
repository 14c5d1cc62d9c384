#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fwbesov::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(key + ": not a number: '" + value + "'");
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(key + ": not an integer: '" + value + "'");
    }
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
    std::vector<int> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(static_cast<int>(parse_long(key, item)));
    }
    if (out.empty()) throw std::invalid_argument(key + ": empty list");
    return out;
}

} // namespace

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "N",       "L",    "dt",   "t_end",      "s",    "r",    "n_list",
        "K",       "C",    "ic",   "amplitude",  "mode", "seed", "iterations",
        "workers", "out",  "formats"};
    return keys;
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("config: cannot open '" + path.string() + "'");
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (!known_keys().count(key))
            throw std::invalid_argument("config: unknown key '" + key + "'");
        out[key] = value;
    }
    return out;
}

void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& settings) {
    for (const auto& [key, value] : settings) {
        if (key == "N") {
            const long n = parse_long(key, value);
            if (n < 8 || (n & (n - 1)) != 0)
                throw std::invalid_argument("N: must be a power of two >= 8, got " + value);
            cfg.opts.N = static_cast<std::size_t>(n);
        } else if (key == "L") {
            const double v = parse_double(key, value);
            if (!(v > 0.0)) throw std::invalid_argument("L: must be positive");
            cfg.opts.L = v;
        } else if (key == "dt") {
            const double v = parse_double(key, value);
            if (!(v > 0.0)) throw std::invalid_argument("dt: must be positive");
            cfg.opts.dt = v;
        } else if (key == "t_end") {
            const double v = parse_double(key, value);
            if (!(v >= 0.0)) throw std::invalid_argument("t_end: must be >= 0");
            cfg.opts.t_end = v;
        } else if (key == "s") {
            cfg.opts.s = parse_double(key, value);
        } else if (key == "r") {
            if (value == "inf" || value == "infinity") {
                cfg.opts.r = Summability::infinity();
            } else {
                const double v = parse_double(key, value);
                if (!(v >= 1.0)) throw std::invalid_argument("r: must be >= 1 or 'inf'");
                cfg.opts.r = Summability::finite(v);
            }
        } else if (key == "n_list") {
            auto list = parse_int_list(key, value);
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (list[i] < 1) throw std::invalid_argument("n_list: entries must be >= 1");
                if (i > 0 && list[i] <= list[i - 1])
                    throw std::invalid_argument("n_list: must be strictly increasing");
            }
            cfg.opts.n_list = std::move(list);
        } else if (key == "K") {
            const long v = parse_long(key, value);
            if (v < 0 || v > 30) throw std::invalid_argument("K: must be in [0, 30]");
            cfg.opts.K = static_cast<int>(v);
        } else if (key == "C") {
            const double v = parse_double(key, value);
            if (!(v > 0.0)) throw std::invalid_argument("C: must be positive");
            cfg.opts.C = v;
        } else if (key == "ic") {
            static const std::set<std::string> kinds = {"zero", "cosine", "sine", "random",
                                                        "peakon"};
            if (!kinds.count(value))
                throw std::invalid_argument("ic: unknown initial condition '" + value + "'");
            cfg.opts.ic = value;
        } else if (key == "amplitude") {
            cfg.opts.amplitude = parse_double(key, value);
        } else if (key == "mode") {
            const long v = parse_long(key, value);
            if (v < 0) throw std::invalid_argument("mode: must be >= 0");
            cfg.opts.mode = static_cast<int>(v);
        } else if (key == "seed") {
            cfg.opts.seed = static_cast<std::uint64_t>(parse_long(key, value));
        } else if (key == "iterations") {
            const long v = parse_long(key, value);
            if (v < 1) throw std::invalid_argument("iterations: must be >= 1");
            cfg.opts.iterations = static_cast<int>(v);
        } else if (key == "workers") {
            const long v = parse_long(key, value);
            if (v < 0) throw std::invalid_argument("workers: must be >= 0");
            cfg.opts.workers = static_cast<unsigned>(v);
        } else if (key == "out") {
            cfg.out_dir = value;
        } else if (key == "formats") {
            cfg.write_csv = false;
            cfg.write_plot = false;
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (item == "csv") cfg.write_csv = true;
                else if (item == "plot") cfg.write_plot = true;
                else if (item == "json") { /* always written */ }
                else if (!item.empty())
                    throw std::invalid_argument("formats: unknown format '" + item + "'");
            }
        } else {
            throw std::invalid_argument("unknown key '" + key + "'");
        }
    }
}

std::map<std::string, std::string> command_defaults(const std::string& command) {
    // simulate documents the baseline defaults; the others override only
    // what their experiment needs.
    std::map<std::string, std::string> d = {
        {"N", "512"}, {"dt", "0.001"}, {"t_end", "1"}, {"s", "2"}, {"r", "2"}};
    if (command == "simulate") {
        d["ic"] = "zero";
    } else if (command == "besov-norm") {
        d["ic"] = "cosine";
        d["mode"] = "8";
    } else if (command == "iterate") {
        d["N"] = "256";
        d["ic"] = "cosine";
        d["amplitude"] = "1";
    } else if (command == "nonuniform") {
        d["r"] = "inf";
        d["dt"] = "0.0025";
        d.erase("N");  // per-n grids
    } else if (command == "peakon") {
        d["N"] = "4096";
        d["L"] = "125.66370614359172";  // 40*pi
        d["dt"] = "0.005";
        d["ic"] = "peakon";
        d["amplitude"] = "0.8888888888888888";
    } else if (command == "taylor") {
        d["N"] = "128";
        d["t_end"] = "0.05";
        d["ic"] = "cosine";
        d["amplitude"] = "0.1";
        d["K"] = "12";
    } else if (command == "blowup") {
        d["N"] = "1024";
        d["dt"] = "0.0002";
        d["t_end"] = "0.4";
        d["ic"] = "sine";
        d["amplitude"] = "-2";
    } else if (command == "calibrate") {
        d["seed"] = "7";
    }
    return d;
}

RunConfig make_config(const std::string& command,
                      const std::map<std::string, std::string>& file_settings,
                      const std::map<std::string, std::string>& flag_settings) {
    RunConfig cfg;
    cfg.command = command;
    apply_settings(cfg, command_defaults(command));
    apply_settings(cfg, file_settings);
    apply_settings(cfg, flag_settings);

    if (const char* env = std::getenv("FWBESOV_OUT"); env && *env) cfg.out_dir = env;
    return cfg;
}

} // namespace fwbesov::cli
