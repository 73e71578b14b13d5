#ifndef LTDIM_RANK_HPP
#define LTDIM_RANK_HPP

#include <cstdint>
#include <vector>

#include "ltdim/model.hpp"
#include "ltdim/rational_matrix.hpp"
#include "ltdim/sampling.hpp"

namespace ltdim {

struct NeighborDescriptor {
    VarId id{};
    int cardinality = 1;
    bool was_latent = false;

    friend bool operator==(const NeighborDescriptor&, const NeighborDescriptor&) = default;
};

/// One latent variable whose neighbors are all treated as observed.
struct LcComponent {
    VarId latent{};
    int latent_cardinality = 1;
    std::vector<NeighborDescriptor> neighbors;

    /// c - 1 + c * sum(r_i - 1)
    std::int64_t parameter_count() const;
    /// prod(r_i) - 1
    std::int64_t observed_state_count() const;

    friend bool operator==(const LcComponent&, const LcComponent&) = default;
};

/// Builds a component from cardinalities alone (ids are sequential).
LcComponent make_lc(int latent_cardinality, const std::vector<int>& neighbor_cardinalities);

/// Free parameters of an LC model at one point.
///
/// `root[z]` holds P(Z = z) for z < c - 1; `conditional[i][z * (r_i - 1) + y]`
/// holds P(Y_i = y | Z = z) for y < r_i - 1. Last states are implied.
struct LcParameterPoint {
    std::vector<Rational> root;
    std::vector<std::vector<Rational>> conditional;
};

LcParameterPoint random_lc_point(const LcComponent& component, SplitMix64& rng,
                                 std::uint64_t bound = kDefaultBound);

/// Jacobian of the joint neighbor distribution with respect to the free
/// parameters, columns ordered (root, then neighbor 0 by latent state, ...).
/// Rows are the joint neighbor states in lexicographic order, last neighbor
/// fastest, without the all-last-states row.
///
/// Throws std::invalid_argument on a shape mismatch or when the point is not
/// strictly inside every simplex.
RationalMatrix lc_jacobian_at(const LcComponent& component, const LcParameterPoint& point);

struct RankPolicy {
    int trials = 3;
    std::uint64_t seed = 0;
    std::uint64_t bound = kDefaultBound;
};

struct LcRank {
    std::int64_t rank = 0;
    std::vector<std::int64_t> per_trial;
};

/// Regular rank of the LC Jacobian estimated as the maximum exact rank over
/// `policy.trials` random interior points. `stream` selects the random
/// stream so that components of one model draw independent points.
LcRank lc_effective_dimension(const LcComponent& component, const RankPolicy& policy, std::uint64_t stream = 0);

}  // namespace ltdim

#endif  // LTDIM_RANK_HPP
