#include "ltdim/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ltdim {

Pruning prune_latent_leaves(const TreeModel& model) {
    require_valid(model);
    Pruning out{model, {}};
    for (;;) {
        std::vector<VarId> leaves;
        for (VarId v : out.model.latent_ids())
            if (out.model.degree(v) <= 1) leaves.push_back(v);
        if (leaves.empty()) return out;
        if (leaves.size() == out.model.size())
            throw std::invalid_argument("prune_latent_leaves: pruning would remove every variable");
        for (VarId v : leaves) {
            out.model = out.model.without_variable(v);
            out.pruned.push_back(v);
        }
    }
}

Split split_at_observed(const TreeModel& model) {
    require_valid(model);
    Split out;

    auto is_cut = [&](VarId v) { return model.variable(v).observed && model.degree(v) >= 2; };

    const auto& edges = model.edges();
    if (edges.empty()) {
        out.components.push_back(model);
        return out;
    }

    // Edges meeting at a node that is not cut belong to the same piece.
    std::vector<std::size_t> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<VarId, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].a].push_back(i);
        incident[edges[i].b].push_back(i);
    }
    for (const auto& [v, list] : incident) {
        if (is_cut(v)) continue;
        for (std::size_t i = 1; i < list.size(); ++i) parent[find(list[i])] = find(list[0]);
    }

    std::map<std::size_t, std::size_t> piece_of_root;
    std::vector<std::vector<std::size_t>> pieces;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [it, fresh] = piece_of_root.try_emplace(find(i), pieces.size());
        if (fresh) pieces.emplace_back();
        pieces[it->second].push_back(i);
    }

    for (const auto& piece : pieces) {
        std::vector<VarId> ids;
        std::vector<Edge> piece_edges;
        for (std::size_t i : piece) {
            piece_edges.push_back(edges[i]);
            ids.push_back(edges[i].a);
            ids.push_back(edges[i].b);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::vector<Variable> vars;
        for (VarId v : ids) vars.push_back(model.variable(v));
        out.components.emplace_back(std::move(vars), std::move(piece_edges));
    }

    for (const auto& v : model.variables()) {
        if (!is_cut(v.id)) continue;
        const int d = static_cast<int>(model.degree(v.id));
        out.corrections.push_back({v.id, d, std::int64_t{d - 1} * (v.cardinality - 1)});
    }
    return out;
}

HlcDecomposition decompose_hlc(const TreeModel& hlc) {
    require_valid(hlc);
    const auto latents = hlc.latent_ids();
    if (latents.empty()) throw std::invalid_argument("decompose_hlc: model has no latent variable");
    for (const auto& v : hlc.variables()) {
        const std::size_t d = hlc.degree(v.id);
        if (v.observed && d != 1)
            throw std::invalid_argument("decompose_hlc: observed variable " + v.name + " is not a leaf");
        if (!v.observed && d < 2)
            throw std::invalid_argument("decompose_hlc: latent variable " + v.name + " is a leaf");
    }
    if (!check_regular(hlc).empty()) throw std::invalid_argument("decompose_hlc: model is not regular");

    HlcDecomposition out;
    for (VarId z : latents) {
        LcComponent lc;
        lc.latent = z;
        lc.latent_cardinality = hlc.variable(z).cardinality;
        for (VarId n : hlc.neighbors(z)) {
            const auto& nv = hlc.variable(n);
            lc.neighbors.push_back({n, nv.cardinality, !nv.observed});
        }
        out.components.push_back(std::move(lc));
    }
    for (const auto& e : hlc.edges()) {
        const auto& x = hlc.variable(e.a);
        const auto& z = hlc.variable(e.b);
        if (x.observed || z.observed) continue;
        out.corrections.push_back({e, std::int64_t{x.cardinality} * z.cardinality - 1});
    }
    return out;
}

std::int64_t combine(std::span<const std::int64_t> component_des, const DecompositionLedger& ledger) {
    if (component_des.size() != ledger.lc_components.size())
        throw std::invalid_argument("combine: " + std::to_string(component_des.size()) + " ranks for " +
                                    std::to_string(ledger.lc_components.size()) + " components");
    std::int64_t de = 0;
    for (auto x : component_des) de += x;
    for (const auto& part : ledger.latent_free_parts) de += part.ds;
    for (const auto& c : ledger.latent_edge_corrections) de -= c.k0;
    for (const auto& c : ledger.observed_cut_corrections) de -= c.amount;
    return de;
}

DecompositionLedger build_ledger(const TreeModel& model) {
    require_valid(model);
    DecompositionLedger ledger;

    auto pruning = prune_latent_leaves(model);
    ledger.pruned_latent_leaves = std::move(pruning.pruned);

    auto split = split_at_observed(pruning.model);
    ledger.observed_cut_corrections = std::move(split.corrections);

    for (const auto& piece : split.components) {
        TreeModel current = piece;
        if (!current.latent_ids().empty()) {
            auto reg = regularize(current);
            for (auto& step : reg.log) ledger.regularization_log.push_back(std::move(step));
            current = std::move(reg.model);
        }
        if (current.latent_ids().empty()) {
            LatentFreePart part;
            for (const auto& v : current.variables()) part.variables.push_back(v.id);
            part.ds = standard_dimension(current);
            ledger.latent_free_parts.push_back(std::move(part));
            continue;
        }
        auto hlc = decompose_hlc(current);
        for (auto& c : hlc.components) ledger.lc_components.push_back(std::move(c));
        for (auto& c : hlc.corrections) ledger.latent_edge_corrections.push_back(c);
    }

    std::sort(ledger.lc_components.begin(), ledger.lc_components.end(),
              [](const LcComponent& x, const LcComponent& y) { return x.latent < y.latent; });
    std::sort(ledger.latent_edge_corrections.begin(), ledger.latent_edge_corrections.end(),
              [](const auto& x, const auto& y) { return x.edge < y.edge; });
    return ledger;
}

DimensionResult effective_dimension(const TreeModel& model, const RankPolicy& policy) {
    DimensionResult result;
    result.ds = standard_dimension(model);
    result.ledger = build_ledger(model);

    std::vector<std::int64_t> des;
    for (std::size_t i = 0; i < result.ledger.lc_components.size(); ++i) {
        // Stream keyed by latent id, so a component's draws do not depend on its neighbors in the list.
        const auto& lc = result.ledger.lc_components[i];
        result.component_ranks.push_back(lc_effective_dimension(lc, policy, index_of(lc.latent)));
        des.push_back(result.component_ranks.back().rank);
    }
    result.de = combine(des, result.ledger);
    return result;
}

}  // namespace ltdim
