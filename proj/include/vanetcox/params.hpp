#pragma once

#include <iosfwd>
#include <string>

namespace vanetcox {

/// Full parameterization of the network model. Lengths are km, densities
/// km^-1 or km^-2. Power units are arbitrary linear: only the ratios
/// p_t/sigma2 and beta matter analytically. beta is linear, not dB.
///
/// Field defaults are the canonical evaluation point used by the CLI when
/// neither a config file nor a flag supplies a value.
struct NetworkParams {
    double mu_l = 10.0;      ///< line density, lines per km
    double lambda_v = 20.0;  ///< node density per line, nodes/km
    double p = 1.0;          ///< ALOHA transmission probability in [0,1]
    double d = 0.01;         ///< transmitter-receiver link distance, km
    double alpha = 4.0;      ///< path-loss exponent, must exceed 2
    double p_t = 1.0;        ///< transmit power, linear units
    double sigma2 = 0.0;     ///< noise power, same units as p_t
    double beta = 1.0;       ///< SINR threshold, linear

    /// Density of the equivalent point process in the line representation
    /// space, mu_l / pi (km^-1).
    double lambda_l() const;

    /// Active transmitters per km^2: mu_l * p * lambda_v.
    double lambda_active() const;
};

/// Checks every domain constraint and returns the validated value unchanged.
/// Throws InvalidParameter on a violated bound; alpha <= 2 throws the
/// dedicated DivergentPathLoss. Idempotent on already-valid input.
NetworkParams validate(const NetworkParams& raw);

/// Parses plain key=value text (one pair per line, '#' starts a comment).
/// Recognized keys, case-sensitively: mu_l, lambda_v, p, d, alpha, p_t,
/// sigma2, beta. Unknown keys and unparseable values throw ConfigError.
/// Keys not present keep the NetworkParams defaults. The result is NOT
/// validated; call validate() once overrides are applied.
NetworkParams parse_config(std::istream& in);

/// parse_config on a file. Throws ConfigError if the file cannot be opened.
NetworkParams parse_config_file(const std::string& path);

}  // namespace vanetcox
