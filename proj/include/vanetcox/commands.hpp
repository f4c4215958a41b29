#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vanetcox/analytic.hpp"
#include "vanetcox/params.hpp"

namespace vanetcox {

/// Stable CLI exit statuses.
namespace exit_code {
constexpr int ok = 0;
constexpr int config = 2;       ///< invalid config, flag, or parameter
constexpr int quadrature = 3;   ///< quadrature non-convergence
constexpr int non_unimodal = 4; ///< ASE bracketing grid saw multiple maxima
constexpr int validation = 5;   ///< MC confidence interval excludes analytic value
}  // namespace exit_code

struct McOptions {
    std::size_t n_trials = 100000;
    std::uint64_t seed = 1;
    double window = 0.0;  ///< km; 0 selects default_window_radius(params)
};

enum class SweepAxis { BetaDb, MuL, LambdaV, P };

const char* to_token(SweepAxis axis);

/// Parsed "--sweep axis:start:stop:steps". beta_db values are dB and are
/// converted to linear beta before evaluation.
struct SweepRange {
    SweepAxis axis;
    double start;
    double stop;
    int steps;
};

/// Parses "axis:start:stop:steps"; throws ConfigError on malformed input,
/// start >= stop, or steps < 2.
SweepRange parse_sweep_range(const std::string& text);

std::optional<PcModel> parse_model_token(const std::string& token);

struct SweepSpec {
    SweepRange range;
    NetworkParams fixed;          ///< swept axis overrides the matching field
    std::vector<PcModel> models;  ///< empty = {Cox}
    std::optional<McOptions> mc;  ///< MC columns on Cox rows when present
    bool with_p_star = false;     ///< fill the p_star column via optimal_p
};

/// Single-point evaluation: one CSV row per requested model.
int cmd_pc(const NetworkParams& params, const std::vector<PcModel>& models,
           const std::optional<McOptions>& mc, bool with_p_star, std::ostream& out,
           std::ostream& diag);

/// Parameter sweep; rows ordered by axis value, models cycled per value.
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& diag);

/// Optimum transmission probability per model.
int cmd_optp(const NetworkParams& params, const std::vector<PcModel>& models, std::ostream& out,
             std::ostream& diag);

/// Monte-Carlo versus analytic cross-check; PASS iff the 99% Wilson
/// interval contains the analytic value. CSV goes to out, a one-line
/// summary to diag; returns exit_code::validation on FAIL.
int cmd_validate(const NetworkParams& params, const McOptions& mc, std::ostream& out,
                 std::ostream& diag);

}  // namespace vanetcox
