#pragma once

#include <filesystem>
#include <string>

#include "mpde/config.hpp"

namespace mpde {

/// Process exit statuses shared by the CLI and the dispatcher.
inline constexpr int exit_ok = 0;
inline constexpr int exit_scientific_failure = 1;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_numerical_failure = 3;

/// Run `command` (simulate, sweep, verify, norms) with all outputs under
/// `out_dir`; returns the exit status.
int dispatch(const std::string& command, const RunConfig& cfg,
             const std::filesystem::path& out_dir);

}  // namespace mpde
