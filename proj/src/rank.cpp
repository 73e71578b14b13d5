#include "ltdim/rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltdim {

std::int64_t LcComponent::parameter_count() const {
    std::int64_t free_per_state = 0;
    for (const auto& n : neighbors) free_per_state += n.cardinality - 1;
    return (latent_cardinality - 1) + std::int64_t{latent_cardinality} * free_per_state;
}

std::int64_t LcComponent::observed_state_count() const {
    std::int64_t states = 1;
    for (const auto& n : neighbors) states *= n.cardinality;
    return states - 1;
}

LcComponent make_lc(int latent_cardinality, const std::vector<int>& neighbor_cardinalities) {
    LcComponent lc;
    lc.latent = VarId{0};
    lc.latent_cardinality = latent_cardinality;
    std::uint32_t next = 1;
    for (int r : neighbor_cardinalities) lc.neighbors.push_back({VarId{next++}, r, false});
    return lc;
}

LcParameterPoint random_lc_point(const LcComponent& component, SplitMix64& rng, std::uint64_t bound) {
    const int c = component.latent_cardinality;
    LcParameterPoint point;
    auto root = draw_simplex_interior(c, rng, bound);
    point.root.assign(root.begin(), root.end() - 1);
    for (const auto& n : component.neighbors) {
        std::vector<Rational> block;
        for (int z = 0; z < c; ++z) {
            auto row = draw_simplex_interior(n.cardinality, rng, bound);
            block.insert(block.end(), row.begin(), row.end() - 1);
        }
        point.conditional.push_back(std::move(block));
    }
    return point;
}

namespace {

// Completes a free block to a full distribution; rejects boundary points.
std::vector<Rational> complete(const Rational* free, std::size_t count) {
    std::vector<Rational> full(free, free + count);
    Rational last = 1;
    for (const auto& v : full) {
        if (sgn(v) <= 0) throw std::invalid_argument("parameter point is not strictly positive");
        last -= v;
    }
    if (sgn(last) <= 0) throw std::invalid_argument("parameter point lies on a simplex boundary");
    full.push_back(last);
    return full;
}

}  // namespace

RationalMatrix lc_jacobian_at(const LcComponent& component, const LcParameterPoint& point) {
    const int c = component.latent_cardinality;
    const std::size_t k = component.neighbors.size();
    if (c < 1 || k == 0) throw std::invalid_argument("lc_jacobian_at: malformed component");
    if (point.root.size() != static_cast<std::size_t>(c - 1) || point.conditional.size() != k)
        throw std::invalid_argument("lc_jacobian_at: point does not match component");

    std::vector<int> card(k);
    for (std::size_t i = 0; i < k; ++i) {
        card[i] = component.neighbors[i].cardinality;
        if (card[i] < 1) throw std::invalid_argument("lc_jacobian_at: neighbor cardinality < 1");
        if (point.conditional[i].size() != static_cast<std::size_t>(c) * (card[i] - 1))
            throw std::invalid_argument("lc_jacobian_at: point does not match component");
    }

    const auto pi = complete(point.root.data(), point.root.size());
    // phi[i][z][y], full rows
    std::vector<std::vector<std::vector<Rational>>> phi(k);
    for (std::size_t i = 0; i < k; ++i)
        for (int z = 0; z < c; ++z)
            phi[i].push_back(complete(point.conditional[i].data() + z * (card[i] - 1), card[i] - 1));

    std::vector<std::size_t> column_offset(k);
    std::size_t cols = c - 1;
    for (std::size_t i = 0; i < k; ++i) {
        column_offset[i] = cols;
        cols += static_cast<std::size_t>(c) * (card[i] - 1);
    }
    const auto rows = static_cast<std::size_t>(component.observed_state_count());

    RationalMatrix jac(rows, cols);
    std::vector<int> y(k, 0);
    std::vector<Rational> prefix(k + 1), suffix(k + 1), full(c);
    Rational excluded;
    for (std::size_t row = 0; row < rows; ++row) {
        for (int z = 0; z < c; ++z) {
            prefix[0] = 1;
            for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * phi[i][z][y[i]];
            suffix[k] = 1;
            for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * phi[i][z][y[i]];
            full[z] = prefix[k];

            for (std::size_t i = 0; i < k; ++i) {
                const int last = card[i] - 1;
                if (last == 0) continue;
                excluded = pi[z] * prefix[i] * suffix[i + 1];
                const std::size_t base = column_offset[i] + static_cast<std::size_t>(z) * last;
                if (y[i] == last) {
                    for (int yy = 0; yy < last; ++yy) jac(row, base + yy) = -excluded;
                } else {
                    jac(row, base + y[i]) = excluded;
                }
            }
        }
        for (int j = 0; j < c - 1; ++j) jac(row, j) = full[j] - full[c - 1];

        for (std::size_t i = k; i-- > 0;) {
            if (++y[i] < card[i]) break;
            y[i] = 0;
        }
    }
    return jac;
}

LcRank lc_effective_dimension(const LcComponent& component, const RankPolicy& policy, std::uint64_t stream) {
    if (policy.trials < 1) throw std::invalid_argument("lc_effective_dimension: trials must be >= 1");
    LcRank out;
    for (int t = 0; t < policy.trials; ++t) {
        auto rng = derive_stream(policy.seed, stream, static_cast<std::uint64_t>(t));
        const auto point = random_lc_point(component, rng, policy.bound);
        const auto r = static_cast<std::int64_t>(exact_rank(lc_jacobian_at(component, point)));
        out.per_trial.push_back(r);
        out.rank = std::max(out.rank, r);
    }
    return out;
}

}  // namespace ltdim
