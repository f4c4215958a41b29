#pragma once

#include <cmath>
#include <vector>

#include "vanetcox/errors.hpp"

namespace vanetcox {

struct MaximizeResult {
    double argmax;
    double max_value;
    int iterations;  ///< golden-section iterations after bracketing
};

/// Maximizes f over [lo, hi] to absolute tolerance tol on the argument.
///
/// A grid_points-point evenly spaced scan brackets the maximum first;
/// unimodality is verified on that grid rather than assumed. Two or more
/// strict interior local maxima throw NonUnimodalObjective. The bracket is
/// then tightened by golden-section search.
template <typename F>
MaximizeResult maximize_unimodal(const F& f, double lo, double hi, int grid_points, double tol) {
    if (!(hi > lo)) throw InvalidParameter("hi", hi, "> lo");
    if (grid_points < 4) throw InvalidParameter("grid_points", grid_points, ">= 4");
    if (!(tol > 0.0)) throw InvalidParameter("tol", tol, "> 0");

    std::vector<double> xs(grid_points);
    std::vector<double> fs(grid_points);
    const double step = (hi - lo) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        xs[i] = (i == grid_points - 1) ? hi : lo + i * step;
        fs[i] = f(xs[i]);
    }

    int n_maxima = 0;
    int best = 0;
    for (int i = 0; i < grid_points; ++i) {
        if (fs[i] > fs[best]) best = i;
        if (i > 0 && i + 1 < grid_points && fs[i] > fs[i - 1] && fs[i] > fs[i + 1]) ++n_maxima;
    }
    if (n_maxima >= 2) throw NonUnimodalObjective(n_maxima);

    double a = xs[best > 0 ? best - 1 : 0];
    double b = xs[best + 1 < grid_points ? best + 1 : grid_points - 1];

    // Golden-section on [a,b]; keeps the higher of the two probes.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int iterations = 0;
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++iterations;
    }

    const double x_star = 0.5 * (a + b);
    const double f_star = f(x_star);
    // Never answer worse than the scan itself; in particular a maximum at a
    // bracket endpoint is returned exactly, not one golden step inside.
    if (fs[best] > f_star) return {xs[best], fs[best], iterations};
    return {x_star, f_star, iterations};
}

}  // namespace vanetcox
