#pragma once

#include <string>

#include "vanetcox/params.hpp"
#include "vanetcox/quadrature.hpp"

namespace vanetcox {

/// Which success-probability expression a computation uses: the exact Cox
/// network, its sparse-roads 1D-PPP limit, or its dense-roads 2D-PPP limit.
/// Limit2D reads lambda_active() of the parameters as the planar density.
enum class PcModel { Cox, Limit1D, Limit2D };

/// CSV/CLI token for a model: "cox", "1d", "2d".
const char* to_token(PcModel model);

struct AseResult {
    double ase;            ///< bits/s/Hz/km^2
    double pc;             ///< success probability in [0,1]
    double lambda_active;  ///< active transmitters per km^2
};

struct TransmitOptimum {
    double p_star;    ///< maximizing transmission probability in (0,1]
    double ase_star;  ///< ASE attained at p_star
    int iterations;   ///< golden-section iterations; 0 for closed forms
};

/// Laplace transform of the interference from nodes on the typical line,
/// exp[-2 p lambda_v (s p_t)^{1/alpha} (pi/alpha) csc(pi/alpha)]. The
/// integral has this closed form; the quadrature route survives only as a
/// test oracle.
double laplace_i0(double s, const NetworkParams& params);

/// Laplace transform of the interference from all other lines: the nested
/// double integral over perpendicular distance y (outer) and along-line
/// coordinate x (inner). The inner integral runs at a tenfold tighter
/// relative tolerance so the outer adaptive estimate stays reliable.
double laplace_i1(double s, const NetworkParams& params, const QuadratureSpec& spec = {});

/// Success probability of the typical link for the chosen model. The Cox
/// value is the product exp(-beta sigma2 d^alpha / p_t) * laplace_i0 *
/// laplace_i1 evaluated at s = beta d^alpha / p_t; the limits are closed
/// forms.
double success_probability(const NetworkParams& params, PcModel model,
                           const QuadratureSpec& spec = {});

/// Area spectral efficiency lambda_active * pc * log2(1 + beta).
AseResult ase(const NetworkParams& params, PcModel model, const QuadratureSpec& spec = {});

/// Transmission probability maximizing the ASE. The p field of params is
/// ignored. Limit models use their closed forms capped at 1; the Cox model
/// runs a golden-section search (absolute tolerance 1e-4) after a 32-point
/// grid verifies unimodality, throwing NonUnimodalObjective otherwise.
TransmitOptimum optimal_p(const NetworkParams& params, PcModel model,
                          const QuadratureSpec& spec = {});

}  // namespace vanetcox
