#ifndef ARCINV_COMMANDS_HPP
#define ARCINV_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arcinv/report.hpp"
#include "arcinv/scenario.hpp"

namespace arcinv {

struct RunOptions {
    std::optional<std::size_t> precision;
    std::optional<std::size_t> max_steps;
    bool oracle = false;
};

const std::vector<std::string>& command_names();

/// Dispatch one subcommand. `scenario` may be null only for selftest.
/// Library errors propagate; the caller maps them to exit code 2.
Report run_command(const std::string& command, const Scenario* scenario, const std::string& source,
                   const RunOptions& options);

}  // namespace arcinv

#endif  // ARCINV_COMMANDS_HPP
