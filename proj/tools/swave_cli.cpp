// Command-line front end: figure presets, parameter sweeps, deterministic
// CSV/SVG output. Configuration precedence: preset < config file < flags.
#include <CLI11.hpp>

#include <iostream>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/presets.hpp"
#include "swave/errors.hpp"

namespace {

struct CommonArgs {
    std::string preset, configPath;
    cli::Config flags;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--preset", args.preset, "named parameter preset (see `presets list`)");
    sub->add_option("--config", args.configPath, "key = value configuration file");
    auto bind = [&args, sub](const std::string& flag, const std::string& key,
                             const std::string& help) {
        sub->add_option_function<std::string>(
            flag, [&args, key](const std::string& v) { args.flags.set(key, v); }, help);
    };
    bind("--out", "out", "output directory");
    bind("--tol", "tol", "numerical tolerance");
    bind("--format", "format", "csv | csv+svg");
    bind("--threads", "threads", "sweep worker threads");
}

void bind_keys(CLI::App* sub, CommonArgs& args,
               const std::vector<std::pair<std::string, std::string>>& keys) {
    for (const auto& [flag, key] : keys) {
        const std::string k = key;
        sub->add_option_function<std::string>(
            "--" + flag, [&args, k](const std::string& v) { args.flags.set(k, v); }, "");
    }
}

cli::Config assemble(const CommonArgs& args, const std::string& command) {
    cli::Config cfg;
    if (!args.preset.empty()) {
        const cli::Preset* p = cli::find_preset(args.preset);
        if (p == nullptr) throw cli::ConfigError("unknown preset: " + args.preset);
        if (p->command != command)
            throw cli::ConfigError("preset " + args.preset + " drives `" + p->command + "`");
        cli::apply_preset(cfg, *p);
    }
    if (!args.configPath.empty()) cfg.merge_file(args.configPath);
    for (const auto& [k, v] : args.flags.items()) cfg.set(k, v);
    return cfg;
}

int dispatch(const std::function<int(const cli::Config&)>& fn, const CommonArgs& args,
             const std::string& command) {
    try {
        return fn(assemble(args, command));
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfig;
    } catch (const swave::NonConvergence& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return cli::kExitNonConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfig;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical and quantum dynamics in counter-propagating plane waves"};
    app.require_subcommand(1);

    CommonArgs tArgs, fArgs, qArgs, cArgs;

    CLI::App* traj = app.add_subcommand("trajectory", "orbit export (analytic + oracle)");
    add_common(traj, tArgs);
    bind_keys(traj, tArgs,
              {{"case", "case"}, {"xi1", "xi1"}, {"xi2", "xi2"}, {"omega1", "omega1"},
               {"omega2", "omega2"}, {"p-e1", "p_e1"}, {"p-e2", "p_e2"}, {"phibar0", "phibar0"},
               {"pz", "pz"}, {"tau-end", "tau_end"}, {"samples", "samples"}});

    CLI::App* flo = app.add_subcommand("floquet-map", "Mathieu stability chart");
    add_common(flo, fArgs);
    bind_keys(flo, fArgs,
              {{"lambda-min", "lambda_min"}, {"lambda-max", "lambda_max"},
               {"lambda-points", "lambda_points"}, {"q-min", "q_min"}, {"q-max", "q_max"},
               {"q-points", "q_points"}});

    CLI::App* quasi = app.add_subcommand("quasimomentum", "effective-mass model sweep");
    add_common(quasi, qArgs);
    bind_keys(quasi, qArgs,
              {{"sweep-var", "sweep_var"}, {"sweep-min", "sweep_min"}, {"sweep-max", "sweep_max"},
               {"sweep-points", "sweep_points"}, {"sweep-scale", "sweep_scale"},
               {"pperp", "pperp"}, {"xi1", "xi1"}, {"xi2", "xi2"}, {"omega1", "omega1"},
               {"omega2", "omega2"}});

    CLI::App* com = app.add_subcommand("compton", "harmonic emission spectrum");
    add_common(com, cArgs);
    bind_keys(com, cArgs,
              {{"xi", "xi"}, {"kp", "kp"}, {"smax", "smax"}, {"lpar", "lpar"}, {"alpha", "alpha"}});

    CLI::App* pre = app.add_subcommand("presets", "preset inspection");
    CLI::App* preList = pre->add_subcommand("list", "list available presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitConfig;
    }

    if (traj->parsed()) return dispatch(cli::cmd_trajectory, tArgs, "trajectory");
    if (flo->parsed()) return dispatch(cli::cmd_floquet_map, fArgs, "floquet-map");
    if (quasi->parsed()) return dispatch(cli::cmd_quasimomentum, qArgs, "quasimomentum");
    if (com->parsed()) return dispatch(cli::cmd_compton, cArgs, "compton");
    if (pre->parsed() && preList->parsed()) return cli::cmd_presets_list();
    std::cerr << "presets: expected `list`\n";
    return cli::kExitConfig;
}
