#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "arcinv/commands.hpp"
#include "arcinv/error.hpp"

namespace {

struct Flags {
    std::string scenario;
    std::optional<std::size_t> precision;
    std::optional<std::size_t> max_steps;
    std::string output = "table";
    bool oracle = false;
    std::optional<std::uint32_t> characteristic;
};

void add_common(CLI::App* sub, Flags& f, bool needs_scenario) {
    if (needs_scenario) sub->add_option("scenario", f.scenario, "scenario file (JSON)")->required();
    sub->add_option("--precision", f.precision, "truncation precision N for every arc")->check(CLI::PositiveNumber);
    sub->add_option("--max-steps", f.max_steps, "blow-up budget for the directed sequence");
    sub->add_option("--output", f.output, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--oracle", f.oracle, "cross-check with the directed blow-up oracle");
    sub->add_option("--char", f.characteristic, "override the scenario's characteristic");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arcinv: persistence, Nash multiplicity sequences and finite morphism checks"};
    app.require_subcommand(1);
    Flags flags;
    const char* help[] = {
        "ord_xi(G) at points and ord_t(phi(G)) along arcs",
        "singular locus by F_p enumeration or at declared points",
        "differential saturation Diff(G)",
        "Nash multiplicity sequence of a hypersurface along each arc",
        "persistence invariants r, rho, r_bar, rho_bar",
        "persistence comparison along a finite morphism",
        "Zariski fiber identity for plane curves",
        "curated oracle-versus-formula suite",
    };
    std::size_t i = 0;
    for (const auto& name : arcinv::command_names()) {
        auto* sub = app.add_subcommand(name, help[i++]);
        add_common(sub, flags, name != "selftest");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    arcinv::OutputMode mode = flags.output == "json" ? arcinv::OutputMode::Json : arcinv::OutputMode::Table;
    try {
        std::optional<arcinv::Scenario> sc;
        if (command != "selftest") {
            arcinv::ScenarioOptions so;
            so.characteristic = flags.characteristic;
            sc = arcinv::load_scenario(flags.scenario, so);
        }
        arcinv::RunOptions ro;
        ro.precision = flags.precision;
        ro.max_steps = flags.max_steps;
        ro.oracle = flags.oracle;
        arcinv::Report rep = arcinv::run_command(command, sc ? &*sc : nullptr, flags.scenario, ro);
        std::cout << arcinv::emit(rep, mode);
        return static_cast<int>(rep.status);
    } catch (const arcinv::Error& e) {
        std::cerr << "error: " << (flags.scenario.empty() ? "" : flags.scenario + ": ") << e.what() << "\n";
        if (e.kind() == arcinv::ErrorKind::Precision) return 3;
        return 2;
    }
}
