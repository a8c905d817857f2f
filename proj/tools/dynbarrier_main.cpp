#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dynbarrier/frontend.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool verify = false;
    int branch = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", flags.out_path, "output file (default: stdout)");
    cmd->add_option("--format", flags.format, "csv | json | svg");
    cmd->add_option("--seed", flags.seed, "seed for randomized sweeps");
    cmd->add_flag("--verify", flags.verify, "re-check invariants on the emitted artifact");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynbarrier: transmission and traversal times of a "
                 "time-modulated rectangular barrier"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"static", "static barrier transmission (optionally swept)"},
        {"spectrum", "quantized channel spectrum / energy circle"},
        {"transmit", "per-channel and total dynamic transmission"},
        {"traverse", "quantized traversal times per regime"},
        {"dos", "density of states over the sideband ladder"},
        {"tg-compare", "finite spectrum vs Bessel-weighted sideband baseline"},
        {"oracle", "direct wave-packet propagation through the barrier"},
    };

    std::map<std::string, CommonFlags> flags;
    for (const auto& [name, help] : commands) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common(cmd, flags[name]);
        if (name == "traverse")
            cmd->add_option("--branch", flags[name].branch,
                            "high-frequency branch index (>= 1)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints the usage diagnostic
        return code == 0 ? 0 : 1;     // argument problems are validation failures
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        CommonFlags& f = flags[name];

        dynbarrier::cli::RunConfig rc =
            dynbarrier::cli::parse_run_config(read_file(f.config_path), name);
        if (!f.out_path.empty()) rc.out_path = f.out_path;
        if (!f.format.empty()) {
            rc.format = f.format;
            if (rc.format != "csv" && rc.format != "json" && rc.format != "svg")
                throw dynbarrier::ValidationError("--format must be csv|json|svg");
        }
        if (cmd->count("--seed") > 0) rc.seed = f.seed;
        if (f.verify) rc.verify = true;
        if (f.branch > 0) rc.branch = f.branch;

        return dynbarrier::cli::run(rc);
    } catch (const dynbarrier::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
