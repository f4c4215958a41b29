#pragma once

#include <stdexcept>
#include <string>

namespace vanetcox {

/// A model parameter violated its documented domain. Never clamped silently.
class InvalidParameter : public std::invalid_argument {
public:
    InvalidParameter(std::string name, double value, std::string constraint)
        : std::invalid_argument("invalid parameter " + name + "=" + std::to_string(value) +
                                " (requires " + constraint + ")"),
          name_(std::move(name)),
          value_(value),
          constraint_(std::move(constraint)) {}

    const std::string& name() const noexcept { return name_; }
    double value() const noexcept { return value_; }
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string name_;
    double value_;
    std::string constraint_;
};

/// alpha <= 2: the interference integrals diverge, no finite result exists.
class DivergentPathLoss : public InvalidParameter {
public:
    explicit DivergentPathLoss(double alpha)
        : InvalidParameter("alpha", alpha, "> 2: path-loss integrals diverge otherwise") {}
};

/// Malformed or unknown content in a key=value config file.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive refinement hit its depth cap before meeting the tolerance.
/// Carries the best value obtained and its error estimate.
class QuadratureNonConvergence : public std::runtime_error {
public:
    QuadratureNonConvergence(double best_value, double err_estimate)
        : std::runtime_error("quadrature did not converge (best value " +
                             std::to_string(best_value) + ", error estimate " +
                             std::to_string(err_estimate) + ")"),
          best_value_(best_value),
          err_estimate_(err_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double err_estimate() const noexcept { return err_estimate_; }

private:
    double best_value_;
    double err_estimate_;
};

/// The coarse bracketing grid saw two or more strict interior local maxima,
/// so a golden-section search would be guessing.
class NonUnimodalObjective : public std::runtime_error {
public:
    explicit NonUnimodalObjective(int n_maxima)
        : std::runtime_error("objective has " + std::to_string(n_maxima) +
                             " interior local maxima on the bracketing grid") {}
};

}  // namespace vanetcox
