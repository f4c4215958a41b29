#include "vanetcox/analytic.hpp"

#include <cmath>
#include <numbers>

#include "vanetcox/errors.hpp"
#include "vanetcox/optimize.hpp"

namespace vanetcox {

namespace {

constexpr double kPi = std::numbers::pi;

double csc(double x) { return 1.0 / std::sin(x); }

// integral_0^inf dx / (1 + x^alpha / a) = a^{1/alpha} (pi/alpha) csc(pi/alpha)
double power_law_integral(double a, double alpha) {
    return std::pow(a, 1.0 / alpha) * (kPi / alpha) * csc(kPi / alpha);
}

double noise_factor(const NetworkParams& pr) {
    return std::exp(-pr.beta * pr.sigma2 * std::pow(pr.d, pr.alpha) / pr.p_t);
}

double limit_2d_pc(const NetworkParams& pr) {
    const double exponent = kPi * pr.lambda_active() * std::pow(pr.beta, 2.0 / pr.alpha) *
                            pr.d * pr.d * (2.0 * kPi / pr.alpha) * csc(2.0 * kPi / pr.alpha);
    return noise_factor(pr) * std::exp(-exponent);
}

}  // namespace

const char* to_token(PcModel model) {
    switch (model) {
        case PcModel::Cox: return "cox";
        case PcModel::Limit1D: return "1d";
        case PcModel::Limit2D: return "2d";
    }
    return "?";
}

double laplace_i0(double s, const NetworkParams& pr) {
    if (s <= 0.0 || pr.p == 0.0 || pr.lambda_v == 0.0) return 1.0;
    return std::exp(-2.0 * pr.p * pr.lambda_v * power_law_integral(s * pr.p_t, pr.alpha));
}

double laplace_i1(double s, const NetworkParams& pr, const QuadratureSpec& spec) {
    if (s <= 0.0 || pr.mu_l == 0.0 || pr.p == 0.0 || pr.lambda_v == 0.0) return 1.0;

    const double u = s * pr.p_t;
    const double half_alpha = 0.5 * pr.alpha;
    const double thinned = 2.0 * pr.p * pr.lambda_v;

    QuadratureSpec inner_spec = spec;
    inner_spec.rel_tol = spec.rel_tol / 10.0;
    inner_spec.abs_tol = spec.abs_tol / 10.0;

    const auto outer = [&](double y) {
        const double y2 = y * y;
        const auto inner = [&](double x) {
            return 1.0 / (1.0 + std::pow(y2 + x * x, half_alpha) / u);
        };
        const double g = integrate_semi_infinite(inner, inner_spec).value;
        return -std::expm1(-thinned * g);  // 1 - exp(-2 p lambda_v g(y))
    };

    const double integral = integrate_semi_infinite(outer, spec).value;
    return std::exp(-2.0 * kPi * pr.lambda_l() * integral);
}

double success_probability(const NetworkParams& pr, PcModel model, const QuadratureSpec& spec) {
    const double s = pr.beta * std::pow(pr.d, pr.alpha) / pr.p_t;
    switch (model) {
        case PcModel::Cox:
            return noise_factor(pr) * laplace_i0(s, pr) * laplace_i1(s, pr, spec);
        case PcModel::Limit1D:
            return noise_factor(pr) * laplace_i0(s, pr);
        case PcModel::Limit2D:
            return limit_2d_pc(pr);
    }
    return 0.0;
}

AseResult ase(const NetworkParams& pr, PcModel model, const QuadratureSpec& spec) {
    const double pc = success_probability(pr, model, spec);
    const double density = pr.lambda_active();
    return {density * pc * std::log2(1.0 + pr.beta), pc, density};
}

TransmitOptimum optimal_p(const NetworkParams& params, PcModel model, const QuadratureSpec& spec) {
    const auto ase_at = [&](double p) {
        NetworkParams at = params;
        at.p = p;
        return ase(at, model, spec);
    };

    switch (model) {
        case PcModel::Limit1D: {
            const double p_star =
                std::min(1.0, params.alpha / (2.0 * params.lambda_v * params.d *
                                              std::pow(params.beta, 1.0 / params.alpha) * kPi *
                                              csc(kPi / params.alpha)));
            return {p_star, ase_at(p_star).ase, 0};
        }
        case PcModel::Limit2D: {
            const double p_star =
                std::min(1.0, params.alpha / (kPi * kPi * params.lambda_l() * params.lambda_v *
                                              params.d * params.d *
                                              std::pow(params.beta, 2.0 / params.alpha) * 2.0 *
                                              kPi * csc(2.0 * kPi / params.alpha)));
            return {p_star, ase_at(p_star).ase, 0};
        }
        case PcModel::Cox: {
            const auto objective = [&](double p) { return ase_at(p).ase; };
            const MaximizeResult r = maximize_unimodal(objective, 0.0, 1.0, 32, 1e-4);
            return {r.argmax, r.max_value, r.iterations};
        }
    }
    return {1.0, 0.0, 0};
}

}  // namespace vanetcox
