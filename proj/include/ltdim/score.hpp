#ifndef LTDIM_SCORE_HPP
#define LTDIM_SCORE_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace ltdim {

struct ScoreInput {
    double loglik = 0.0;          // natural log, at the maximum likelihood estimate
    double sample_size = 1.0;     // N >= 1; integral in practice
};

/// A note for implausible but accepted inputs (a positive log-likelihood).
std::optional<std::string> score_warning(const ScoreInput& input);

/// loglik - ds/2 * ln N. Throws std::invalid_argument when N < 1 or ds < 0.
double bic(const ScoreInput& input, std::int64_t ds);

/// loglik - de/2 * ln N.
double bice(const ScoreInput& input, std::int64_t de);

}  // namespace ltdim

#endif  // LTDIM_SCORE_HPP
