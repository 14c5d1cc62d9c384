#ifndef FWBESOV_TOOLS_RUNNER_HPP
#define FWBESOV_TOOLS_RUNNER_HPP

#include "config.hpp"

namespace fwbesov::cli {

/// Dispatch a validated config, write report.json (plus CSV/SVG when
/// selected) under cfg.out_dir, and return the process exit code:
/// 0 all verdicts pass, 2 verdict failure, 1 runtime error.
int run(const RunConfig& cfg);

} // namespace fwbesov::cli

#endif
