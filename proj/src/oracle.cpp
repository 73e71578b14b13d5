#include "ltdim/oracle.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace ltdim {

Rooting canonical_rooting(const TreeModel& model) {
    require_valid(model);
    Rooting out;
    out.root = model.variables().front().id;
    std::queue<VarId> frontier;
    frontier.push(out.root);
    out.order.push_back(out.root);
    while (!frontier.empty()) {
        VarId v = frontier.front();
        frontier.pop();
        for (VarId n : model.neighbors(v)) {
            if (n == out.root || out.parent.contains(n)) continue;
            out.parent[n] = v;
            out.children[v].push_back(n);
            out.order.push_back(n);
            frontier.push(n);
        }
    }
    return out;
}

FullParameterPoint random_full_point(const TreeModel& model, SplitMix64& rng, std::uint64_t bound) {
    const Rooting rooting = canonical_rooting(model);
    FullParameterPoint point;
    for (VarId v : rooting.order) {
        const int card = model.variable(v).cardinality;
        auto it = rooting.parent.find(v);
        const int rows = it == rooting.parent.end() ? 1 : model.variable(it->second).cardinality;
        auto& table = point.tables[v];
        for (int p = 0; p < rows; ++p) table.push_back(draw_simplex_interior(card, rng, bound));
    }
    return point;
}

namespace {

// Value plus one directional derivative, both exact.
struct Dual {
    Rational value;
    Rational slope;
};

inline void assign_product(Rational& out, const Rational& a, const Rational& b) { out = a * b; }

inline void assign_product(Dual& out, const Dual& a, const Dual& b) {
    out.value = a.value * b.value;
    const bool da = sgn(a.slope) != 0;
    const bool db = sgn(b.slope) != 0;
    if (da && db) out.slope = a.slope * b.value + a.value * b.slope;
    else if (da) out.slope = a.slope * b.value;
    else if (db) out.slope = a.value * b.slope;
    else out.slope = 0;
}

inline void add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }

inline void add_product(Dual& acc, const Dual& a, const Dual& b) {
    acc.value += a.value * b.value;
    if (sgn(a.slope) != 0) acc.slope += a.slope * b.value;
    if (sgn(b.slope) != 0) acc.slope += a.value * b.slope;
}

inline void set_one(Rational& x) { x = 1; }
inline void set_one(Dual& x) { x.value = 1; x.slope = 0; }
inline void set_zero(Rational& x) { x = 0; }
inline void set_zero(Dual& x) { x.value = 0; x.slope = 0; }

// Tree flattened into post-order (children before parents) for message passing.
struct Layout {
    struct Node {
        int card = 1;
        int parent = -1;           // index into nodes, -1 for root
        int parent_card = 1;
        int observed_slot = -1;    // position among observed variables, -1 if latent
        std::vector<int> children;
        VarId id{};
    };
    std::vector<Node> nodes;
    std::vector<int> observed_cards;
};

Layout make_layout(const TreeModel& model, const Rooting& rooting) {
    Layout layout;
    std::map<VarId, int> slot;
    for (const auto& v : model.variables())
        if (v.observed) {
            slot[v.id] = static_cast<int>(layout.observed_cards.size());
            layout.observed_cards.push_back(v.cardinality);
        }

    std::map<VarId, int> position;
    std::vector<VarId> post(rooting.order.rbegin(), rooting.order.rend());
    for (std::size_t i = 0; i < post.size(); ++i) position[post[i]] = static_cast<int>(i);
    for (VarId v : post) {
        Layout::Node node;
        node.id = v;
        node.card = model.variable(v).cardinality;
        if (auto it = rooting.parent.find(v); it != rooting.parent.end()) {
            node.parent = position.at(it->second);
            node.parent_card = model.variable(it->second).cardinality;
        }
        if (auto it = slot.find(v); it != slot.end()) node.observed_slot = it->second;
        if (auto it = rooting.children.find(v); it != rooting.children.end())
            for (VarId c : it->second) node.children.push_back(position.at(c));
        layout.nodes.push_back(std::move(node));
    }
    return layout;
}

void check_point(const Layout& layout, const FullParameterPoint& point) {
    for (const auto& node : layout.nodes) {
        auto it = point.tables.find(node.id);
        if (it == point.tables.end())
            throw std::invalid_argument("parameter point has no table for variable " + std::to_string(index_of(node.id)));
        const auto& table = it->second;
        if (table.size() != static_cast<std::size_t>(node.parent_card))
            throw std::invalid_argument("parameter table has the wrong number of rows");
        for (const auto& row : table) {
            if (row.size() != static_cast<std::size_t>(node.card))
                throw std::invalid_argument("parameter table row has the wrong length");
            Rational sum = 0;
            for (const auto& x : row) {
                if (sgn(x) <= 0) throw std::invalid_argument("parameter point is not strictly interior");
                sum += x;
            }
            if (sum != 1) throw std::invalid_argument("parameter table row does not sum to one");
        }
    }
    if (point.tables.size() != layout.nodes.size())
        throw std::invalid_argument("parameter point has tables for unknown variables");
}

// tables[node][p * card + s], flattened per node in layout order.
template <class Scalar>
std::vector<Scalar> evaluate_joint(const Layout& layout, const std::vector<std::vector<Scalar>>& tables,
                                   std::size_t states) {
    const std::size_t n = layout.nodes.size();
    const std::size_t k = layout.observed_cards.size();
    std::vector<Scalar> joint(states);
    std::vector<std::vector<Scalar>> message(n), belief(n);
    for (std::size_t i = 0; i < n; ++i) {
        message[i].resize(layout.nodes[i].parent_card);
        belief[i].resize(layout.nodes[i].card);
    }
    std::vector<int> obs(k, 0);
    Scalar tmp;

    for (std::size_t state = 0; state < states; ++state) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& node = layout.nodes[i];
            const int fixed = node.observed_slot >= 0 ? obs[node.observed_slot] : -1;
            for (int s = 0; s < node.card; ++s) {
                if (fixed >= 0 && s != fixed) continue;
                set_one(belief[i][s]);
                for (int c : node.children) {
                    assign_product(tmp, belief[i][s], message[c][s]);
                    std::swap(tmp, belief[i][s]);
                }
            }
            const auto& table = tables[i];
            for (int p = 0; p < node.parent_card; ++p) {
                auto& m = message[i][p];
                set_zero(m);
                if (fixed >= 0) {
                    add_product(m, table[p * node.card + fixed], belief[i][fixed]);
                } else {
                    for (int s = 0; s < node.card; ++s) add_product(m, table[p * node.card + s], belief[i][s]);
                }
            }
        }
        joint[state] = message[n - 1][0];

        for (std::size_t j = k; j-- > 0;) {
            if (++obs[j] < layout.observed_cards[j]) break;
            obs[j] = 0;
        }
    }
    return joint;
}

std::size_t observed_state_total(const Layout& layout) {
    std::size_t total = 1;
    for (int c : layout.observed_cards) total *= static_cast<std::size_t>(c);
    return total;
}

std::vector<std::vector<Rational>> flatten(const Layout& layout, const FullParameterPoint& point) {
    std::vector<std::vector<Rational>> out;
    for (const auto& node : layout.nodes) {
        std::vector<Rational> flat;
        for (const auto& row : point.tables.at(node.id)) flat.insert(flat.end(), row.begin(), row.end());
        out.push_back(std::move(flat));
    }
    return out;
}

}  // namespace

std::vector<Rational> joint_observed_distribution(const TreeModel& model, const FullParameterPoint& point) {
    const Rooting rooting = canonical_rooting(model);
    const Layout layout = make_layout(model, rooting);
    check_point(layout, point);
    return evaluate_joint(layout, flatten(layout, point), observed_state_total(layout));
}

RationalMatrix oracle_jacobian_at(const TreeModel& model, const FullParameterPoint& point) {
    const Rooting rooting = canonical_rooting(model);
    const Layout layout = make_layout(model, rooting);
    check_point(layout, point);
    const auto values = flatten(layout, point);
    const std::size_t states = observed_state_total(layout);

    std::vector<std::vector<Dual>> tables(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        for (const auto& x : values[i]) tables[i].push_back({x, 0});

    // Free parameter (p, s) of a node moves entry s up and the row's last entry down.
    std::vector<std::tuple<std::size_t, int, int>> columns;
    for (const VarId v : rooting.order) {
        std::size_t i = 0;
        while (layout.nodes[i].id != v) ++i;
        const auto& node = layout.nodes[i];
        for (int p = 0; p < node.parent_card; ++p)
            for (int s = 0; s + 1 < node.card; ++s) columns.emplace_back(i, p, s);
    }

    RationalMatrix jac(states - 1, columns.size());
    for (std::size_t col = 0; col < columns.size(); ++col) {
        const auto [i, p, s] = columns[col];
        const int card = layout.nodes[i].card;
        tables[i][p * card + s].slope = 1;
        tables[i][p * card + card - 1].slope = -1;
        const auto joint = evaluate_joint(layout, tables, states);
        for (std::size_t row = 0; row + 1 < states; ++row) jac(row, col) = joint[row].slope;
        tables[i][p * card + s].slope = 0;
        tables[i][p * card + card - 1].slope = 0;
    }
    return jac;
}

OracleResult oracle_effective_dimension(const TreeModel& model, const RankPolicy& policy,
                                        const OracleLimits& limits) {
    require_valid(model);
    if (policy.trials < 1) throw std::invalid_argument("oracle_effective_dimension: trials must be >= 1");

    std::uint64_t states = 1;
    for (VarId v : model.observed_ids()) {
        states *= static_cast<std::uint64_t>(model.variable(v).cardinality);
        if (states > limits.max_observed_states)
            throw OracleLimitExceeded("oracle infeasible: observed joint exceeds " +
                                      std::to_string(limits.max_observed_states) + " states; use decomposition");
    }
    const std::int64_t ds = standard_dimension(model);
    if (ds > limits.max_parameters)
        throw OracleLimitExceeded("oracle infeasible: " + std::to_string(ds) + " parameters exceed " +
                                  std::to_string(limits.max_parameters) + "; use decomposition");

    // Stream id kept apart from the component indices used by decomposition.
    constexpr std::uint64_t kOracleStream = 0x6f7261636c65ULL;
    OracleResult out;
    for (int t = 0; t < policy.trials; ++t) {
        auto rng = derive_stream(policy.seed, kOracleStream, static_cast<std::uint64_t>(t));
        const auto point = random_full_point(model, rng, policy.bound);
        const auto r = static_cast<std::int64_t>(exact_rank(oracle_jacobian_at(model, point)));
        out.per_trial.push_back(r);
        out.rank = std::max(out.rank, r);
    }
    return out;
}

}  // namespace ltdim
