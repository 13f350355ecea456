#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sumbalaban::cli {

enum class Format { csv, json };

/// Parsed command line. Exactly one subcommand is set.
struct RunConfig {
    std::string subcommand;

    std::optional<std::int64_t> n;
    std::optional<std::int64_t> n_from;
    std::optional<std::int64_t> n_to;
    std::vector<std::int64_t> ns;

    std::optional<std::size_t> min_edges;
    std::optional<std::size_t> max_edges;
    std::optional<std::size_t> max_degree;
    std::string index = "sum-balaban";

    std::string spec;  ///< dumbbell "a,b,a'[,ell]"
    bool emit_graph6 = false;

    std::vector<std::string> inputs;  ///< graph6 files for `index`; "-" is stdin
    std::string fixtures;

    std::size_t threads = 1;
    Format format = Format::csv;
    std::string output;  ///< empty means stdout
    int verbosity = 0;
    bool long_run = false;
    bool omit_timing = false;
};

/// Parses argv-style arguments (without the program name). On --help or a
/// usage error the message is written to `out`/`err` and the exit code is
/// returned through `exit_code` with no config.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Executes a parsed config. Returns 0 on success, 1 when a verification
/// reports a mismatch, and 2 on any error (with a diagnostic on `err`).
int execute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args followed by execute.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sumbalaban::cli
