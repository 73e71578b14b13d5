#ifndef LTDIM_DECOMPOSE_HPP
#define LTDIM_DECOMPOSE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ltdim/model.hpp"
#include "ltdim/rank.hpp"

namespace ltdim {

/// Shared parameters of a cut latent-latent edge: |X| * |Z| - 1.
struct LatentEdgeCorrection {
    Edge edge;
    std::int64_t k0 = 0;

    friend bool operator==(const LatentEdgeCorrection&, const LatentEdgeCorrection&) = default;
};

/// An observed internal node split into `pieces` copies: (pieces - 1)(|Y| - 1).
struct ObservedCutCorrection {
    VarId variable{};
    int pieces = 0;
    std::int64_t amount = 0;

    friend bool operator==(const ObservedCutCorrection&, const ObservedCutCorrection&) = default;
};

/// A submodel without latent variables; it contributes its standard dimension.
struct LatentFreePart {
    std::vector<VarId> variables;
    std::int64_t ds = 0;
};

struct DecompositionLedger {
    std::vector<LcComponent> lc_components;    // ordered by latent id
    std::vector<LatentEdgeCorrection> latent_edge_corrections;
    std::vector<ObservedCutCorrection> observed_cut_corrections;
    std::vector<LatentFreePart> latent_free_parts;
    std::vector<VarId> pruned_latent_leaves;
    std::vector<RegularizationStep> regularization_log;
};

struct Pruning {
    TreeModel model;
    std::vector<VarId> pruned;
};

/// Removes latent leaves until none is left; removing one may expose another.
Pruning prune_latent_leaves(const TreeModel& model);

struct Split {
    std::vector<TreeModel> components;
    std::vector<ObservedCutCorrection> corrections;
};

/// Splits every observed node of degree d >= 2 into d copies, one per incident
/// edge. In each resulting piece observed nodes are leaves.
Split split_at_observed(const TreeModel& model);

struct HlcDecomposition {
    std::vector<LcComponent> components;
    std::vector<LatentEdgeCorrection> corrections;
};

/// One LC component per latent node and one k0 per latent-latent edge.
/// Throws std::invalid_argument unless the input is a regular HLC model.
HlcDecomposition decompose_hlc(const TreeModel& hlc);

/// sum(component de) + sum(latent-free ds) - sum(k0) - sum(observed cuts).
/// Throws std::invalid_argument if the de list does not match the components.
std::int64_t combine(std::span<const std::int64_t> component_des, const DecompositionLedger& ledger);

struct DimensionResult {
    std::int64_t ds = 0;
    std::int64_t de = 0;
    DecompositionLedger ledger;
    std::vector<LcRank> component_ranks;   // parallel to ledger.lc_components
};

/// Structural part of the pipeline: prune, split, regularize each piece and
/// decompose it. No ranks are computed.
DecompositionLedger build_ledger(const TreeModel& model);

/// Full pipeline: build_ledger, then rank every LC component and combine.
DimensionResult effective_dimension(const TreeModel& model, const RankPolicy& policy = {});

}  // namespace ltdim

#endif  // LTDIM_DECOMPOSE_HPP
