#ifndef DYNBARRIER_FRONTEND_HPP
#define DYNBARRIER_FRONTEND_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynbarrier/barrier.hpp"
#include "dynbarrier/tdse.hpp"

namespace dynbarrier::cli {

/// Formatted output table; cells are already rendered (17 significant
/// digits for floating-point values) so every writer is byte-deterministic.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct SweepSpec {
    std::string parameter; ///< BarrierConfig field name
    double start = 0.0;
    double stop = 0.0;
    int count = 0;            ///< >= 2
    std::string spacing = "linear"; ///< linear | log | random
};

struct RunConfig {
    std::string command; ///< static|spectrum|transmit|traverse|dos|tg-compare|oracle
    BarrierConfig barrier;
    std::optional<SweepSpec> sweep;
    std::string format = "csv"; ///< csv | json | svg
    std::string out_path;       ///< empty = stdout
    std::uint64_t seed = 0;
    bool verify = false;

    double cutoff_tol = 1e-6; ///< tg-compare sideband cutoff

    std::optional<int> traverse_n; ///< restrict traverse to one entry channel
    std::optional<int> traverse_m; ///< restrict traverse to one exit channel
    int branch = 1;                ///< high-frequency branch index

    tdse::GridSpec grid;       ///< oracle command
    tdse::GaussianPacket packet;
};

/// Parses the JSON config document for a command; throws ValidationError
/// with a field-level diagnostic on any problem.
RunConfig parse_run_config(const std::string& json_text, const std::string& command);

/// Builds the output table for the config (no I/O).
Table build_table(const RunConfig& cfg);

/// Renders a table in the requested format.
std::string render_csv(const Table& table);
std::string render_json(const RunConfig& cfg, const Table& table);
std::string render_svg(const RunConfig& cfg, const Table& table);

/// Parses CSV text produced by render_csv back into a table.
Table parse_csv(const std::string& text);

/// Re-checks the module invariants that apply to a command's table;
/// throws NumericalError describing the first violated invariant.
void verify_table(const RunConfig& cfg, const Table& table);

/// Full run: build, render, write (or print), and optionally verify by
/// re-ingesting the emitted artifact. Returns the process exit code (0).
int run(const RunConfig& cfg);

/// Formats a double with 17 significant digits (shortest-exact round trip).
std::string format_full(double v);

} // namespace dynbarrier::cli

#endif
