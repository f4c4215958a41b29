#include "vanetcox/commands.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "vanetcox/csv.hpp"
#include "vanetcox/errors.hpp"
#include "vanetcox/simulate.hpp"

namespace vanetcox {

namespace {

constexpr char kPcHeader[] =
    "axis_name,axis_value,model,pc,ase,p_star,pc_hat,ci_low,ci_high,n_trials,seed";
constexpr char kOptpHeader[] = "model,p_star,ase_star,iterations";
constexpr char kValidateHeader[] =
    "pc_analytic,pc_hat,ci_low,ci_high,abs_gap,n_trials,seed,window_km,result";

double to_db(double beta_linear) { return 10.0 * std::log10(beta_linear); }
double from_db(double db) { return std::pow(10.0, db / 10.0); }

std::vector<PcModel> normalize(std::vector<PcModel> models) {
    if (models.empty()) models.push_back(PcModel::Cox);
    return models;
}

NetworkParams apply_axis(NetworkParams base, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::BetaDb: base.beta = from_db(value); break;
        case SweepAxis::MuL: base.mu_l = value; break;
        case SweepAxis::LambdaV: base.lambda_v = value; break;
        case SweepAxis::P: base.p = value; break;
    }
    return base;
}

// Runs the command body and maps the library's error types onto the stable
// exit statuses, emitting a single-line diagnostic.
template <typename Fn>
int guarded(std::ostream& diag, Fn&& body) {
    try {
        return body();
    } catch (const QuadratureNonConvergence& e) {
        diag << "error: " << e.what() << '\n';
        return exit_code::quadrature;
    } catch (const NonUnimodalObjective& e) {
        diag << "error: " << e.what() << '\n';
        return exit_code::non_unimodal;
    } catch (const InvalidParameter& e) {
        diag << "error: " << e.what() << '\n';
        return exit_code::config;
    } catch (const ConfigError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_code::config;
    }
}

// One CSV row of the pc/sweep schema. The simulator estimates the exact
// model, so MC columns fill on Cox rows only.
std::string evaluate_row(const std::string& axis_name, double axis_value,
                         const NetworkParams& pr, PcModel model,
                         const std::optional<McOptions>& mc, bool with_p_star) {
    const AseResult result = ase(pr, model);
    std::vector<std::string> cells{
        axis_name,
        csv::number(axis_value),
        to_token(model),
        csv::number(result.pc),
        csv::number(result.ase),
        with_p_star ? csv::number(optimal_p(pr, model).p_star) : std::string{},
    };
    if (mc && model == PcModel::Cox) {
        const double window = mc->window > 0.0 ? mc->window : default_window_radius(pr);
        const EstimateRecord est = estimate_pc(pr, window, mc->n_trials, mc->seed);
        cells.push_back(csv::number(est.pc_hat));
        cells.push_back(csv::number(est.ci_low));
        cells.push_back(csv::number(est.ci_high));
        cells.push_back(csv::integer(est.n_trials));
        cells.push_back(csv::integer(est.seed));
    } else {
        cells.insert(cells.end(), 5, std::string{});
    }
    return csv::row(cells);
}

}  // namespace

const char* to_token(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::BetaDb: return "beta_db";
        case SweepAxis::MuL: return "mu_l";
        case SweepAxis::LambdaV: return "lambda_v";
        case SweepAxis::P: return "p";
    }
    return "?";
}

SweepRange parse_sweep_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ':')) parts.push_back(piece);
    if (parts.size() != 4) {
        throw ConfigError("sweep spec '" + text + "' is not axis:start:stop:steps");
    }

    SweepRange range{};
    if (parts[0] == "beta_db") range.axis = SweepAxis::BetaDb;
    else if (parts[0] == "mu_l") range.axis = SweepAxis::MuL;
    else if (parts[0] == "lambda_v") range.axis = SweepAxis::LambdaV;
    else if (parts[0] == "p") range.axis = SweepAxis::P;
    else throw ConfigError("unknown sweep axis '" + parts[0] + "'");

    try {
        std::size_t used = 0;
        range.start = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        range.stop = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        range.steps = std::stoi(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    } catch (const std::exception&) {
        throw ConfigError("sweep spec '" + text + "' has non-numeric fields");
    }

    if (!(range.start < range.stop)) {
        throw ConfigError("sweep start must be below stop in '" + text + "'");
    }
    if (range.steps < 2) throw ConfigError("sweep needs at least 2 steps in '" + text + "'");
    return range;
}

std::optional<PcModel> parse_model_token(const std::string& token) {
    if (token == "cox") return PcModel::Cox;
    if (token == "1d") return PcModel::Limit1D;
    if (token == "2d") return PcModel::Limit2D;
    return std::nullopt;
}

int cmd_pc(const NetworkParams& params, const std::vector<PcModel>& models,
           const std::optional<McOptions>& mc, bool with_p_star, std::ostream& out,
           std::ostream& diag) {
    return guarded(diag, [&] {
        const NetworkParams pr = validate(params);
        std::vector<std::string> rows;
        for (const PcModel model : normalize(models)) {
            rows.push_back(evaluate_row("beta_db", to_db(pr.beta), pr, model, mc, with_p_star));
        }
        out << kPcHeader << '\n';
        for (const auto& row : rows) out << row << '\n';
        return exit_code::ok;
    });
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        const auto& range = spec.range;
        const std::vector<PcModel> models = normalize(spec.models);
        const double step = (range.stop - range.start) / (range.steps - 1);

        std::vector<std::string> rows;
        for (int i = 0; i < range.steps; ++i) {
            const double value = (i == range.steps - 1) ? range.stop : range.start + i * step;
            const NetworkParams pr = validate(apply_axis(spec.fixed, range.axis, value));
            for (const PcModel model : models) {
                rows.push_back(evaluate_row(to_token(range.axis), value, pr, model, spec.mc,
                                            spec.with_p_star));
            }
        }
        out << kPcHeader << '\n';
        for (const auto& row : rows) out << row << '\n';
        return exit_code::ok;
    });
}

int cmd_optp(const NetworkParams& params, const std::vector<PcModel>& models, std::ostream& out,
             std::ostream& diag) {
    return guarded(diag, [&] {
        const NetworkParams pr = validate(params);
        std::vector<std::string> rows;
        for (const PcModel model : normalize(models)) {
            const TransmitOptimum opt = optimal_p(pr, model);
            rows.push_back(csv::row({to_token(model), csv::number(opt.p_star),
                                     csv::number(opt.ase_star),
                                     csv::integer(static_cast<std::uint64_t>(opt.iterations))}));
        }
        out << kOptpHeader << '\n';
        for (const auto& row : rows) out << row << '\n';
        return exit_code::ok;
    });
}

int cmd_validate(const NetworkParams& params, const McOptions& mc, std::ostream& out,
                 std::ostream& diag) {
    return guarded(diag, [&] {
        const NetworkParams pr = validate(params);
        const double window = mc.window > 0.0 ? mc.window : default_window_radius(pr);
        const double analytic = success_probability(pr, PcModel::Cox);
        const EstimateRecord est = estimate_pc(pr, window, mc.n_trials, mc.seed);
        const bool pass = est.ci_low <= analytic && analytic <= est.ci_high;

        out << kValidateHeader << '\n'
            << csv::row({csv::number(analytic), csv::number(est.pc_hat), csv::number(est.ci_low),
                         csv::number(est.ci_high), csv::number(std::abs(est.pc_hat - analytic)),
                         csv::integer(est.n_trials), csv::integer(est.seed), csv::number(window),
                         pass ? "PASS" : "FAIL"})
            << '\n';
        diag << "validate: " << (pass ? "PASS" : "FAIL") << " analytic=" << csv::number(analytic)
             << " pc_hat=" << csv::number(est.pc_hat) << " ci=[" << csv::number(est.ci_low) << ","
             << csv::number(est.ci_high) << "] n=" << est.n_trials << '\n';
        return pass ? exit_code::ok : exit_code::validation;
    });
}

}  // namespace vanetcox
