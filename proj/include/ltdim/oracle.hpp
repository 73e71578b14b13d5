#ifndef LTDIM_ORACLE_HPP
#define LTDIM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ltdim/model.hpp"
#include "ltdim/rank.hpp"
#include "ltdim/rational_matrix.hpp"

namespace ltdim {

/// Conditional probability tables of a tree rooted at its lowest id.
///
/// `tables[v][p][s]` is P(v = s | parent = p); the root uses a single row
/// (p = 0). Rows are full distributions, the last entry of each row is the
/// implied (non-free) one.
struct FullParameterPoint {
    std::map<VarId, std::vector<std::vector<Rational>>> tables;
};

/// Rooted orientation used by the oracle: the lowest id is the root.
struct Rooting {
    VarId root{};
    std::vector<VarId> order;            // parents before children
    std::map<VarId, VarId> parent;       // absent for the root
    std::map<VarId, std::vector<VarId>> children;
};

Rooting canonical_rooting(const TreeModel& model);

FullParameterPoint random_full_point(const TreeModel& model, SplitMix64& rng,
                                     std::uint64_t bound = kDefaultBound);

/// P(o) for every joint state o of the observed variables (ordered by id,
/// lexicographic, last variable fastest). Computed exactly by sum-product.
/// Throws std::invalid_argument when the tables do not match the model.
std::vector<Rational> joint_observed_distribution(const TreeModel& model, const FullParameterPoint& point);

/// Jacobian of the observed joint (without the all-last-states row) with
/// respect to the ds free parameters, each column obtained from one exact
/// dual-number pass.
RationalMatrix oracle_jacobian_at(const TreeModel& model, const FullParameterPoint& point);

struct OracleLimits {
    std::uint64_t max_observed_states = 4096;
    std::int64_t max_parameters = 256;
};

class OracleLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    std::int64_t rank = 0;
    std::vector<std::int64_t> per_trial;
};

/// Direct effective dimension: max exact rank of the full Jacobian over
/// random interior points. No decomposition is involved.
/// Throws OracleLimitExceeded when the model is too large.
OracleResult oracle_effective_dimension(const TreeModel& model, const RankPolicy& policy,
                                        const OracleLimits& limits = {});

}  // namespace ltdim

#endif  // LTDIM_ORACLE_HPP
