#include "ltdim/score.hpp"

#include <cmath>
#include <stdexcept>

namespace ltdim {

namespace {

double penalized(const ScoreInput& input, std::int64_t dimension, const char* what) {
    if (!(input.sample_size >= 1.0)) throw std::invalid_argument(std::string(what) + ": sample size must be >= 1");
    if (dimension < 0) throw std::invalid_argument(std::string(what) + ": dimension must be >= 0");
    return input.loglik - static_cast<double>(dimension) / 2.0 * std::log(input.sample_size);
}

}  // namespace

std::optional<std::string> score_warning(const ScoreInput& input) {
    if (input.loglik > 0.0) return "log-likelihood is positive; discrete data should give loglik <= 0";
    return std::nullopt;
}

double bic(const ScoreInput& input, std::int64_t ds) { return penalized(input, ds, "bic"); }

double bice(const ScoreInput& input, std::int64_t de) { return penalized(input, de, "bice"); }

}  // namespace ltdim
