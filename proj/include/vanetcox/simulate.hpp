#pragma once

#include <cstdint>
#include <vector>

#include "vanetcox/params.hpp"

namespace vanetcox {

/// A road, as a point of the line representation space: perpendicular
/// distance rho from the origin (km) and angle theta of the foot of the
/// perpendicular (radians in [0, 2pi)).
struct Line {
    double rho;
    double theta;
};

struct LineNodes {
    Line line;
    /// Along-line offsets of active interferers from the foot of the
    /// perpendicular, km. Euclidean distance to the origin is
    /// sqrt(rho^2 + offset^2).
    std::vector<double> offsets;
};

/// One sampled network snapshot under Palm conditioning: the typical line
/// passes through the origin (orientation fixed at angle 0) and carries the
/// desired transmitter at +d; everything lies inside the disc of
/// window_radius around the receiver.
struct CoxRealization {
    double window_radius = 0.0;
    std::vector<LineNodes> other_lines;
    std::vector<double> typical_line_interferers;  ///< signed offsets from origin, km
    double desired_tx_offset = 0.0;                ///< = d, never an interferer
};

struct TrialOutcome {
    double desired_power;  ///< p_t * h0 * d^-alpha
    double interference;   ///< sum of p_t * h * dist^-alpha over interferers
    double sinr;           ///< desired / (interference + sigma2)
    bool success;          ///< sinr > beta
};

/// A Monte-Carlo estimate with its provenance: the point estimate, 99%
/// Wilson interval, trial count, seed, and the parameters that produced it.
struct EstimateRecord {
    double pc_hat;
    double ci_low;
    double ci_high;
    std::size_t n_trials;
    std::uint64_t seed;
    NetworkParams params;
    double window_radius;
};

/// xoshiro256++ bit stream (Blackman & Vigna). Small state and a few cycles
/// per draw; the trial loops live on it. Satisfies UniformRandomBitGenerator
/// so the standard distributions accept it.
class RngStream {
public:
    using result_type = std::uint64_t;

    /// State expanded from the seed by splitmix64, per the authors' advice.
    explicit RngStream(std::uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        const std::uint64_t rotated = state_[0] + state_[3];
        const std::uint64_t result = ((rotated << 23) | (rotated >> 41)) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = (state_[3] << 45) | (state_[3] >> 19);
        return result;
    }

private:
    std::uint64_t state_[4];
};

/// Deterministic per-trial stream: hash of (seed, trial_index), so results
/// never depend on execution order or parallelism degree.
RngStream trial_rng(std::uint64_t seed, std::uint64_t trial_index);

/// Simulation window default: max(2 km, 200 * d). With alpha > 2 the
/// interference truncated beyond R falls off as R^(2-alpha); the
/// window-doubling test converts that assumption into a check.
double default_window_radius(const NetworkParams& params);

/// Samples the line process inside the window: the line count is Poisson
/// with mean lambda_l * 2 pi * R, rho uniform on [0,R], theta uniform on
/// [0,2pi), all independent.
std::vector<Line> sample_plp(double lambda_l, double window_radius, RngStream& rng);

/// Samples one network snapshot: lines from sample_plp, per-line active
/// interferers as 1D PPPs of intensity p*lambda_v on the chord, the typical
/// line populated on [-R, R], and the desired transmitter placed at +d.
CoxRealization sample_realization(const NetworkParams& params, double window_radius,
                                  RngStream& rng);

/// Draws i.i.d. unit-mean exponential fading for the desired link and every
/// interferer and evaluates the SINR threshold event.
TrialOutcome run_trial(const CoxRealization& realization, const NetworkParams& params,
                       RngStream& rng);

/// Runs n_trials independent (realization, trial) pairs and returns the
/// empirical success probability with a 99% Wilson interval. Trials are
/// spread over n_threads (0 = hardware concurrency); the result is
/// bit-identical for any thread count because each trial consumes only its
/// own index-derived stream and successes are an exchangeable sum.
EstimateRecord estimate_pc(const NetworkParams& params, double window_radius,
                           std::size_t n_trials, std::uint64_t seed, unsigned n_threads = 0);

struct WilsonInterval {
    double low;
    double high;
};

/// 99% Wilson score interval for a binomial proportion; well-behaved at
/// proportions near 0 and 1, which the beta sweeps reach.
WilsonInterval wilson_99(std::size_t successes, std::size_t trials);

}  // namespace vanetcox
