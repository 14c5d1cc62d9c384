#ifndef FWBESOV_TOOLS_CONFIG_HPP
#define FWBESOV_TOOLS_CONFIG_HPP

#include "fwbesov/experiments.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>

namespace fwbesov::cli {

/// Fully validated run configuration: the experiment options plus the
/// harness-level output knobs.
struct RunConfig {
    std::string command;
    ExperimentOptions opts;
    std::filesystem::path out_dir = "fwbesov_out";
    bool write_csv = false;
    bool write_plot = false;
};

/// Keys accepted in config files and as --key flags. Everything is scalar
/// or a comma list, hence the flat INI-like format.
const std::set<std::string>& known_keys();

/// Parse a flat key = value config file. Lines starting with '#' or ';'
/// are comments. Unknown keys are rejected by name.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

/// Apply key/value pairs onto a RunConfig, validating each field and
/// naming the offending key on error.
void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& settings);

/// Build the config for a command: per-command defaults, then the config
/// file (if any), then explicit flag overrides, then validation.
RunConfig make_config(const std::string& command,
                      const std::map<std::string, std::string>& file_settings,
                      const std::map<std::string, std::string>& flag_settings);

/// Defaults echoed in --help; also what an empty config resolves to.
std::map<std::string, std::string> command_defaults(const std::string& command);

} // namespace fwbesov::cli

#endif
