#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vanetcox/commands.hpp"
#include "vanetcox/errors.hpp"
#include "vanetcox/params.hpp"

namespace {

using namespace vanetcox;

struct ParamArgs {
    std::string config_path;
    std::optional<double> beta_db, mu_l, lambda_v, p, d, alpha, sigma2, pt;
    std::vector<std::string> model_tokens;
};

void add_param_flags(CLI::App* cmd, ParamArgs& args) {
    cmd->add_option("config", args.config_path, "key=value config file (see README)");
    cmd->add_option("--beta-db", args.beta_db, "SINR threshold in dB");
    cmd->add_option("--mu-l", args.mu_l, "line density, km^-1");
    cmd->add_option("--lambda-v", args.lambda_v, "node density per line, km^-1");
    cmd->add_option("--p", args.p, "ALOHA transmission probability");
    cmd->add_option("--d", args.d, "link distance, km");
    cmd->add_option("--alpha", args.alpha, "path-loss exponent");
    cmd->add_option("--sigma2", args.sigma2, "noise power, linear");
    cmd->add_option("--pt", args.pt, "transmit power, linear");
    cmd->add_option("--model", args.model_tokens, "model: cox, 1d, or 2d (repeatable)");
}

// defaults < config file < flags
NetworkParams resolve_params(const ParamArgs& args) {
    NetworkParams base =
        args.config_path.empty() ? NetworkParams{} : parse_config_file(args.config_path);
    if (args.mu_l) base.mu_l = *args.mu_l;
    if (args.lambda_v) base.lambda_v = *args.lambda_v;
    if (args.p) base.p = *args.p;
    if (args.d) base.d = *args.d;
    if (args.alpha) base.alpha = *args.alpha;
    if (args.sigma2) base.sigma2 = *args.sigma2;
    if (args.pt) base.p_t = *args.pt;
    if (args.beta_db) base.beta = std::pow(10.0, *args.beta_db / 10.0);
    return base;
}

std::vector<PcModel> resolve_models(const std::vector<std::string>& tokens) {
    std::vector<PcModel> models;
    for (const auto& token : tokens) {
        const auto model = parse_model_token(token);
        if (!model) throw ConfigError("unknown model '" + token + "' (expected cox, 1d, or 2d)");
        models.push_back(*model);
    }
    return models;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link-level performance of a VANET whose roads form a Poisson line process:\n"
                 "analytic success probability and ASE, closed-form limits, optimum ALOHA p,\n"
                 "and a cross-validating Monte-Carlo engine. All output is CSV on stdout."};
    app.require_subcommand(1);

    ParamArgs pc_args, sweep_args, optp_args, validate_args;

    std::optional<std::size_t> pc_mc;
    std::uint64_t pc_seed = 1;
    double pc_window = 0.0;
    bool pc_p_star = false;
    auto* pc_cmd = app.add_subcommand("pc", "success probability at a single parameter point");
    add_param_flags(pc_cmd, pc_args);
    pc_cmd->add_option("--mc", pc_mc, "attach a Monte-Carlo estimate with this many trials");
    pc_cmd->add_option("--seed", pc_seed, "Monte-Carlo seed");
    pc_cmd->add_option("--window", pc_window, "simulation window radius, km (default max(2,200d))");
    pc_cmd->add_flag("--p-star", pc_p_star, "also report the optimum transmission probability");

    std::string sweep_range_text;
    std::optional<std::size_t> sweep_mc;
    std::uint64_t sweep_seed = 1;
    double sweep_window = 0.0;
    bool sweep_p_star = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one axis, one CSV row per point and model");
    add_param_flags(sweep_cmd, sweep_args);
    sweep_cmd->add_option("--sweep", sweep_range_text, "axis:start:stop:steps with axis one of beta_db, mu_l, lambda_v, p")
        ->required();
    sweep_cmd->add_option("--mc", sweep_mc, "attach Monte-Carlo estimates with this many trials");
    sweep_cmd->add_option("--seed", sweep_seed, "Monte-Carlo seed");
    sweep_cmd->add_option("--window", sweep_window, "simulation window radius, km");
    sweep_cmd->add_flag("--p-star", sweep_p_star, "also report the optimum transmission probability");

    auto* optp_cmd =
        app.add_subcommand("optp", "ASE-maximizing transmission probability per model");
    add_param_flags(optp_cmd, optp_args);

    std::size_t validate_trials = 100000;
    std::uint64_t validate_seed = 1;
    double validate_window = 0.0;
    auto* validate_cmd =
        app.add_subcommand("validate", "Monte-Carlo versus analytic cross-check (PASS/FAIL)");
    add_param_flags(validate_cmd, validate_args);
    validate_cmd->add_option("--mc", validate_trials, "number of Monte-Carlo trials");
    validate_cmd->add_option("--seed", validate_seed, "Monte-Carlo seed");
    validate_cmd->add_option("--window", validate_window, "simulation window radius, km");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::config;
    }

    try {
        if (pc_cmd->parsed()) {
            std::optional<McOptions> mc;
            if (pc_mc) mc = McOptions{*pc_mc, pc_seed, pc_window};
            return cmd_pc(resolve_params(pc_args), resolve_models(pc_args.model_tokens), mc,
                          pc_p_star, std::cout, std::cerr);
        }
        if (sweep_cmd->parsed()) {
            SweepSpec spec;
            spec.range = parse_sweep_range(sweep_range_text);
            spec.fixed = resolve_params(sweep_args);
            spec.models = resolve_models(sweep_args.model_tokens);
            if (sweep_mc) spec.mc = McOptions{*sweep_mc, sweep_seed, sweep_window};
            spec.with_p_star = sweep_p_star;
            return cmd_sweep(spec, std::cout, std::cerr);
        }
        if (optp_cmd->parsed()) {
            return cmd_optp(resolve_params(optp_args), resolve_models(optp_args.model_tokens),
                            std::cout, std::cerr);
        }
        if (validate_cmd->parsed()) {
            const McOptions mc{validate_trials, validate_seed, validate_window};
            return cmd_validate(resolve_params(validate_args), mc, std::cout, std::cerr);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::config;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::config;
    }
    return exit_code::ok;
}
