#pragma once

#include <functional>

namespace vanetcox {

/// Tolerances and refinement budget for the adaptive integrator.
struct QuadratureSpec {
    double rel_tol = 1e-9;     ///< relative error target
    double abs_tol = 1e-12;    ///< absolute error floor
    int max_subdivisions = 60; ///< cap on bisection depth of any subinterval
};

struct IntegralEstimate {
    double value;
    double err_estimate;
};

/// Integrates f over [0, inf).
///
/// The half line is mapped onto [0,1) by x = t/(1-t) and the image is
/// refined adaptively with 15-point Gauss-Kronrod panels (polynomial
/// order 15, embedded 7-point error estimate). Panel order is fixed at
/// build time, so results are bit-stable across runs of the same build.
/// The compactifying substitution keeps tolerance control uniform for
/// integrands with polynomial tails; f must be continuous on (0, inf),
/// nonnegative, and decay at least as fast as x^-a with a > 2.
///
/// Throws QuadratureNonConvergence (carrying the best value and its
/// estimate) if the tolerance cannot be met within the depth cap.
IntegralEstimate integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec = {});

}  // namespace vanetcox
