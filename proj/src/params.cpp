#include "vanetcox/params.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "vanetcox/errors.hpp"

namespace vanetcox {

double NetworkParams::lambda_l() const { return mu_l / std::numbers::pi; }

double NetworkParams::lambda_active() const { return mu_l * p * lambda_v; }

namespace {

void require(bool ok, const char* name, double value, const char* constraint) {
    if (!ok) throw InvalidParameter(name, value, constraint);
}

}  // namespace

NetworkParams validate(const NetworkParams& raw) {
    require(std::isfinite(raw.mu_l) && raw.mu_l >= 0.0, "mu_l", raw.mu_l, ">= 0");
    require(std::isfinite(raw.lambda_v) && raw.lambda_v >= 0.0, "lambda_v", raw.lambda_v, ">= 0");
    require(std::isfinite(raw.p) && raw.p >= 0.0 && raw.p <= 1.0, "p", raw.p, "in [0,1]");
    require(std::isfinite(raw.d) && raw.d > 0.0, "d", raw.d, "> 0");
    if (!(std::isfinite(raw.alpha) && raw.alpha > 2.0)) throw DivergentPathLoss(raw.alpha);
    require(std::isfinite(raw.p_t) && raw.p_t > 0.0, "p_t", raw.p_t, "> 0");
    require(std::isfinite(raw.sigma2) && raw.sigma2 >= 0.0, "sigma2", raw.sigma2, ">= 0");
    require(std::isfinite(raw.beta) && raw.beta >= 0.0, "beta", raw.beta, ">= 0");
    return raw;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text, int line_no) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (consumed != text.size() || text.empty()) {
        throw ConfigError("config line " + std::to_string(line_no) + ": value for '" + key +
                          "' is not a number: '" + text + "'");
    }
    return value;
}

}  // namespace

NetworkParams parse_config(std::istream& in) {
    NetworkParams params;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key=value, got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value_text = trim(line.substr(eq + 1));
        const double value = parse_number(key, value_text, line_no);

        if (key == "mu_l") params.mu_l = value;
        else if (key == "lambda_v") params.lambda_v = value;
        else if (key == "p") params.p = value;
        else if (key == "d") params.d = value;
        else if (key == "alpha") params.alpha = value;
        else if (key == "p_t") params.p_t = value;
        else if (key == "sigma2") params.sigma2 = value;
        else if (key == "beta") params.beta = value;
        else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key +
                              "'");
        }
    }
    return params;
}

NetworkParams parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace vanetcox
