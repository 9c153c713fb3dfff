#pragma once

#include <panconnect/cli/config.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace panconnect::cli
{
    // Exit codes shared by every subcommand.
    inline constexpr int exit_pass = 0;
    inline constexpr int exit_fail = 1;
    inline constexpr int exit_usage = 2;

    // Each command writes its primary output to config.output when set, otherwise to `out`,
    // and reports diagnostics on `err`. UsageError propagates to the caller.

    /// Edge list of the configured family (or its square with config.square).
    auto cmd_generate(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// JSON verification report over config.checks.
    auto cmd_verify(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// Certified square(B(n,m)) -> J(n+1,m+1) bijection as JSON.
    auto cmd_iso(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// CSV over the (n, m) grid for the configured family and checks.
    auto cmd_sweep(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// Re-checks every counterexample in a report against an edge-list file, independently
    /// of the code that produced it. Exit 0 iff every counterexample is confirmed.
    auto cmd_replay(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// Parses argv with CLI11 and dispatches; maps UsageError and parse errors to exit 2.
    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

    /// Convenience for tests: run_cli over a vector of arguments (program name excluded).
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
