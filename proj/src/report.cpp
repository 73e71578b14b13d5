#include "ltdim/report.hpp"

namespace ltdim {

namespace {

template <class Range, class Fn>
std::string join(const Range& items, Fn&& fn, const char* sep) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += sep;
        out += fn(item);
    }
    return out;
}

}  // namespace

std::string format_report(const TreeModel& model, const DimensionResult& result, const RankPolicy& policy) {
    const auto& ledger = result.ledger;
    std::string out;
    auto line = [&out](const std::string& key, const std::string& value) { out += key + "=" + value + "\n"; };

    line("ds", std::to_string(result.ds));
    line("de", std::to_string(result.de));
    for (std::size_t i = 0; i < ledger.lc_components.size(); ++i) {
        const auto& lc = ledger.lc_components[i];
        const std::string prefix = "component." + std::to_string(i) + ".";
        line(prefix + "latent", model.variable(lc.latent).name);
        line(prefix + "card", std::to_string(lc.latent_cardinality));
        line(prefix + "neighbors",
             join(lc.neighbors, [](const NeighborDescriptor& n) { return std::to_string(n.cardinality); }, ","));
        line(prefix + "de", std::to_string(result.component_ranks.at(i).rank));
    }
    for (std::size_t i = 0; i < ledger.latent_edge_corrections.size(); ++i)
        line("correction.latent_edge." + std::to_string(i), std::to_string(ledger.latent_edge_corrections[i].k0));
    for (std::size_t i = 0; i < ledger.observed_cut_corrections.size(); ++i)
        line("correction.observed_cut." + std::to_string(i), std::to_string(ledger.observed_cut_corrections[i].amount));
    line("pruned", join(ledger.pruned_latent_leaves, [&](VarId v) { return model.variable(v).name; }, ","));
    line("regularized", ledger.regularization_log.empty()
                            ? std::string("none")
                            : join(ledger.regularization_log, [](const RegularizationStep& s) { return s.describe(); }, ";"));
    line("seed", std::to_string(policy.seed));
    line("trials", std::to_string(policy.trials));
    return out;
}

}  // namespace ltdim
