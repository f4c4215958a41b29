#include "vanetcox/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "vanetcox/errors.hpp"

namespace vanetcox {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using PoissonParam = std::poisson_distribution<long>::param_type;

// uniform on [0, 1), 53-bit mantissa
inline double unit_interval(RngStream& rng) { return (rng() >> 11) * 0x1.0p-53; }

// unit-mean exponential by inversion; 1 - u > 0 always, so the log is finite
inline double unit_exponential(RngStream& rng) { return -std::log1p(-unit_interval(rng)); }

// dist^-alpha from the squared distance; alpha = 4 dominates every figure
// configuration and avoids pow entirely.
inline double attenuation_sq(double dist_sq, double alpha, double minus_half_alpha) {
    if (alpha == 4.0) return 1.0 / (dist_sq * dist_sq);
    return std::pow(dist_sq, minus_half_alpha);
}

void fill_realization(CoxRealization& out, const NetworkParams& pr, double window_radius,
                      RngStream& rng) {
    const double radius = window_radius;
    out.window_radius = radius;
    out.desired_tx_offset = pr.d;

    std::poisson_distribution<long> poisson;

    const double lambda_l = pr.lambda_l();
    const double rate = pr.p * pr.lambda_v;  // thinned on-line intensity

    const long n_lines =
        lambda_l > 0.0 ? poisson(rng, PoissonParam(lambda_l * 2.0 * kPi * radius)) : 0;
    out.other_lines.resize(static_cast<std::size_t>(n_lines));
    for (auto& entry : out.other_lines) {
        entry.line.rho = radius * unit_interval(rng);
        entry.line.theta = 2.0 * kPi * unit_interval(rng);
        entry.offsets.clear();
        const double half_chord =
            std::sqrt(std::max(0.0, radius * radius - entry.line.rho * entry.line.rho));
        if (rate > 0.0 && half_chord > 0.0) {
            const long count = poisson(rng, PoissonParam(rate * 2.0 * half_chord));
            entry.offsets.reserve(static_cast<std::size_t>(count));
            for (long k = 0; k < count; ++k) {
                entry.offsets.push_back(half_chord * (2.0 * unit_interval(rng) - 1.0));
            }
        }
    }

    out.typical_line_interferers.clear();
    if (rate > 0.0) {
        const long count = poisson(rng, PoissonParam(rate * 2.0 * radius));
        out.typical_line_interferers.reserve(static_cast<std::size_t>(count));
        for (long k = 0; k < count; ++k) {
            out.typical_line_interferers.push_back(radius * (2.0 * unit_interval(rng) - 1.0));
        }
    }
}

// Success flag only, consuming the stream exactly like run_trial but
// stopping once the growing interference sum has crossed the SINR budget,
// after which the flag cannot change. Outcomes match run_trial (the
// comparison is the same event rearranged; they could differ only for an
// SINR within rounding distance of beta).
bool trial_success(const CoxRealization& realization, const NetworkParams& params,
                   RngStream& rng) {
    const double alpha = params.alpha;
    const double minus_half_alpha = -0.5 * alpha;

    const double d = realization.desired_tx_offset;
    const double desired =
        params.p_t * unit_exponential(rng) * attenuation_sq(d * d, alpha, minus_half_alpha);
    if (params.beta == 0.0) return desired > 0.0;

    // success <=> p_t * raw_sum + sigma2 < desired / beta
    const double budget = (desired / params.beta - params.sigma2) / params.p_t;
    if (!(budget > 0.0)) return false;

    double raw = 0.0;
    for (const double offset : realization.typical_line_interferers) {
        raw += unit_exponential(rng) * attenuation_sq(offset * offset, alpha, minus_half_alpha);
        if (raw >= budget) return false;
    }
    for (const auto& entry : realization.other_lines) {
        const double rho_sq = entry.line.rho * entry.line.rho;
        for (const double offset : entry.offsets) {
            raw += unit_exponential(rng) *
                   attenuation_sq(rho_sq + offset * offset, alpha, minus_half_alpha);
            if (raw >= budget) return false;
        }
    }
    return true;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) {
    std::uint64_t sequence = seed;
    for (auto& word : state_) {
        sequence += 0x9e3779b97f4a7c15ULL;
        word = mix64(sequence);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

RngStream trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    return RngStream(mix64(mix64(seed) ^ mix64(trial_index)));
}

double default_window_radius(const NetworkParams& params) {
    return std::max(2.0, 200.0 * params.d);
}

std::vector<Line> sample_plp(double lambda_l, double window_radius, RngStream& rng) {
    if (!(window_radius > 0.0)) {
        throw InvalidParameter("window_radius", window_radius, "> 0");
    }
    if (!(lambda_l >= 0.0)) throw InvalidParameter("lambda_l", lambda_l, ">= 0");

    std::vector<Line> lines;
    if (lambda_l == 0.0) return lines;

    std::poisson_distribution<long> poisson;
    const long count = poisson(rng, PoissonParam(lambda_l * 2.0 * kPi * window_radius));
    lines.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        const double rho = window_radius * unit_interval(rng);
        const double theta = 2.0 * kPi * unit_interval(rng);
        lines.push_back({rho, theta});
    }
    return lines;
}

CoxRealization sample_realization(const NetworkParams& params, double window_radius,
                                  RngStream& rng) {
    const NetworkParams pr = validate(params);
    if (!(window_radius >= 10.0 * pr.d)) {
        throw InvalidParameter("window_radius", window_radius, ">= 10*d");
    }
    CoxRealization out;
    fill_realization(out, pr, window_radius, rng);
    return out;
}

TrialOutcome run_trial(const CoxRealization& realization, const NetworkParams& params,
                       RngStream& rng) {
    const double alpha = params.alpha;
    const double minus_half_alpha = -0.5 * alpha;
    const double p_t = params.p_t;

    const double d = realization.desired_tx_offset;
    const double desired_power =
        p_t * unit_exponential(rng) * attenuation_sq(d * d, alpha, minus_half_alpha);

    double interference = 0.0;
    for (const double offset : realization.typical_line_interferers) {
        interference +=
            unit_exponential(rng) * attenuation_sq(offset * offset, alpha, minus_half_alpha);
    }
    for (const auto& entry : realization.other_lines) {
        const double rho_sq = entry.line.rho * entry.line.rho;
        for (const double offset : entry.offsets) {
            interference += unit_exponential(rng) *
                            attenuation_sq(rho_sq + offset * offset, alpha, minus_half_alpha);
        }
    }
    interference *= p_t;

    const double denominator = interference + params.sigma2;
    const double sinr = denominator > 0.0 ? desired_power / denominator
                                          : std::numeric_limits<double>::infinity();
    return {desired_power, interference, sinr, sinr > params.beta};
}

EstimateRecord estimate_pc(const NetworkParams& params, double window_radius,
                           std::size_t n_trials, std::uint64_t seed, unsigned n_threads) {
    const NetworkParams pr = validate(params);
    if (n_trials < 100) {
        throw InvalidParameter("n_trials", static_cast<double>(n_trials), ">= 100");
    }
    if (!(window_radius >= 10.0 * pr.d)) {
        throw InvalidParameter("window_radius", window_radius, ">= 10*d");
    }

    if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, std::max<std::size_t>(1, n_trials / 64)));

    const auto count_successes = [&pr, window_radius, seed](std::size_t begin,
                                                            std::size_t end) -> std::size_t {
        CoxRealization buffer;
        std::size_t successes = 0;
        for (std::size_t i = begin; i < end; ++i) {
            RngStream rng = trial_rng(seed, i);
            fill_realization(buffer, pr, window_radius, rng);
            if (trial_success(buffer, pr, rng)) ++successes;
        }
        return successes;
    };

    std::size_t successes = 0;
    if (n_threads <= 1) {
        successes = count_successes(0, n_trials);
    } else {
        std::vector<std::future<std::size_t>> work;
        work.reserve(n_threads);
        const std::size_t chunk = (n_trials + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::size_t begin = std::min<std::size_t>(t * chunk, n_trials);
            const std::size_t end = std::min<std::size_t>(begin + chunk, n_trials);
            work.push_back(std::async(std::launch::async, count_successes, begin, end));
        }
        for (auto& piece : work) successes += piece.get();
    }

    const WilsonInterval ci = wilson_99(successes, n_trials);
    return {static_cast<double>(successes) / static_cast<double>(n_trials),
            ci.low,
            ci.high,
            n_trials,
            seed,
            pr,
            window_radius};
}

WilsonInterval wilson_99(std::size_t successes, std::size_t trials) {
    if (trials == 0) throw InvalidParameter("trials", 0.0, "> 0");
    constexpr double z = 2.5758293035489004;  // two-sided 99% normal quantile
    const double n = static_cast<double>(trials);
    const double p_hat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p_hat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / denom;
    return {center - half, center + half};
}

}  // namespace vanetcox
