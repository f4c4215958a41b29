#include "vanetcox/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "vanetcox/errors.hpp"

namespace vanetcox {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1,1].
// Abscissae are symmetric; only the nonnegative half is stored. The
// even-indexed entries extend the Gauss rule, the odd-indexed ones (plus
// the centre) are the Gauss points themselves.
constexpr int kHalf = 8;
constexpr double kXgk[kHalf] = {
    0.99145537112081263921,
    0.94910791234275852453,
    0.86486442335976907279,
    0.74153118559939443986,
    0.58608723546769113029,
    0.40584515137739716691,
    0.20778495500789846760,
    0.0,
};
constexpr double kWgk[kHalf] = {
    0.02293532201052922496,
    0.06309209262997855329,
    0.10479001032225018384,
    0.14065325971552591875,
    0.16900472663926790283,
    0.19035057806478540991,
    0.20443294007529889241,
    0.20948214108472782801,
};
constexpr double kWg[4] = {
    0.12948496616886969327,
    0.27970539148927666790,
    0.38183005050511894495,
    0.41795918367346938776,
};

struct PanelResult {
    double integral;
    double error;
};

// One Gauss-Kronrod pass over [a,b]; error estimate follows the QUADPACK
// rescaling of |K15 - G7|.
PanelResult evaluate_panel(const std::function<double(double)>& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f_center = g(center);
    double result_gauss = kWg[3] * f_center;
    double result_kronrod = kWgk[kHalf - 1] * f_center;
    double result_abs = kWgk[kHalf - 1] * std::abs(f_center);

    double samples[kHalf - 1][2];
    for (int j = 0; j < kHalf - 1; ++j) {
        const double dx = half * kXgk[j];
        const double f_low = g(center - dx);
        const double f_high = g(center + dx);
        samples[j][0] = f_low;
        samples[j][1] = f_high;
        const double sum = f_low + f_high;
        result_kronrod += kWgk[j] * sum;
        result_abs += kWgk[j] * (std::abs(f_low) + std::abs(f_high));
        if (j % 2 == 1) result_gauss += kWg[j / 2] * sum;
    }

    const double mean = 0.5 * result_kronrod;
    double result_asc = kWgk[kHalf - 1] * std::abs(f_center - mean);
    for (int j = 0; j < kHalf - 1; ++j) {
        result_asc +=
            kWgk[j] * (std::abs(samples[j][0] - mean) + std::abs(samples[j][1] - mean));
    }

    const double abs_half = std::abs(half);
    result_asc *= abs_half;
    result_abs *= abs_half;

    double error = std::abs((result_kronrod - result_gauss) * half);
    if (result_asc != 0.0 && error != 0.0) {
        error = result_asc * std::min(1.0, std::pow(200.0 * error / result_asc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (result_abs > uflow / (50.0 * eps)) {
        error = std::max(eps * 50.0 * result_abs, error);
    }

    return {result_kronrod * half, error};
}

struct Segment {
    double error;
    double integral;
    double a;
    double b;
    int depth;
    bool operator<(const Segment& other) const { return error < other.error; }
};

}  // namespace

IntegralEstimate integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0)) throw InvalidParameter("rel_tol", spec.rel_tol, "> 0");
    if (!(spec.abs_tol > 0.0)) throw InvalidParameter("abs_tol", spec.abs_tol, "> 0");
    if (spec.max_subdivisions < 1) {
        throw InvalidParameter("max_subdivisions", spec.max_subdivisions, ">= 1");
    }

    // Image of the integrand under x = t/(1-t). Gauss-Kronrod abscissae are
    // interior points, so t < 1 strictly on every panel.
    const auto mapped = [&f](double t) {
        const double w = 1.0 - t;
        return f(t / w) / (w * w);
    };

    std::priority_queue<Segment> segments;
    {
        const PanelResult whole = evaluate_panel(mapped, 0.0, 1.0);
        segments.push({whole.error, whole.integral, 0.0, 1.0, 0});
    }
    double total = segments.top().integral;
    double total_err = segments.top().error;

    // Worst-first refinement. Segments that reach the depth cap are parked;
    // if only parked segments remain and the tolerance is unmet, give up.
    std::vector<Segment> parked;
    constexpr std::size_t kMaxSegments = 1u << 16;

    while (true) {
        const double bound = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (total_err <= bound) {
            return {total, total_err};
        }
        if (segments.empty() || segments.size() + parked.size() >= kMaxSegments) {
            throw QuadratureNonConvergence(total, total_err);
        }

        const Segment worst = segments.top();
        segments.pop();
        if (worst.depth >= spec.max_subdivisions) {
            parked.push_back(worst);
            continue;
        }

        const double mid = 0.5 * (worst.a + worst.b);
        const PanelResult left = evaluate_panel(mapped, worst.a, mid);
        const PanelResult right = evaluate_panel(mapped, mid, worst.b);

        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;

        segments.push({left.error, left.integral, worst.a, mid, worst.depth + 1});
        segments.push({right.error, right.integral, mid, worst.b, worst.depth + 1});
    }
}

}  // namespace vanetcox
