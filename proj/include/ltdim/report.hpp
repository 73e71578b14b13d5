#ifndef LTDIM_REPORT_HPP
#define LTDIM_REPORT_HPP

#include <string>

#include "ltdim/decompose.hpp"
#include "ltdim/model.hpp"
#include "ltdim/rank.hpp"

namespace ltdim {

/// `key=value` lines: ds, de, per-component latent/card/neighbors/de, the
/// latent-edge and observed-cut corrections, pruned names, the
/// regularization summary, seed and trials. Names are resolved against
/// `model`, the model the result was computed for.
std::string format_report(const TreeModel& model, const DimensionResult& result, const RankPolicy& policy);

}  // namespace ltdim

#endif  // LTDIM_REPORT_HPP
