#include "ltdim/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace ltdim {

namespace {

const std::vector<VarId> kNoNeighbors;

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::int64_t>::max();
    return out;
}

}  // namespace

TreeModel::TreeModel(std::vector<Variable> variables, std::vector<Edge> edges)
    : m_variables(std::move(variables)), m_edges(std::move(edges)) {
    rebuild();
}

void TreeModel::rebuild() {
    std::stable_sort(m_variables.begin(), m_variables.end(),
                     [](const Variable& x, const Variable& y) { return x.id < y.id; });
    for (auto& e : m_edges) e = Edge(e.a, e.b);
    std::sort(m_edges.begin(), m_edges.end());

    m_adjacency.clear();
    for (const auto& e : m_edges) {
        m_adjacency[e.a].push_back(e.b);
        m_adjacency[e.b].push_back(e.a);
    }
    for (auto& [id, nbrs] : m_adjacency) std::sort(nbrs.begin(), nbrs.end());

    for (const auto& v : m_variables) m_id_limit = std::max(m_id_limit, index_of(v.id) + 1);
}

VarId TreeModel::add_variable(std::string name, int cardinality, bool observed) {
    const VarId id{m_id_limit};
    m_variables.push_back({id, std::move(name), cardinality, observed});
    ++m_id_limit;
    return id;
}

void TreeModel::add_edge(VarId a, VarId b) {
    m_edges.emplace_back(a, b);
    rebuild();
}

bool TreeModel::contains(VarId id) const { return find(id) != nullptr; }

const Variable* TreeModel::find(VarId id) const {
    auto it = std::lower_bound(m_variables.begin(), m_variables.end(), id,
                               [](const Variable& v, VarId x) { return v.id < x; });
    if (it == m_variables.end() || it->id != id) return nullptr;
    return &*it;
}

const Variable& TreeModel::variable(VarId id) const {
    const Variable* v = find(id);
    if (v == nullptr) throw std::out_of_range("unknown variable id " + std::to_string(index_of(id)));
    return *v;
}

std::optional<VarId> TreeModel::find_by_name(std::string_view name) const {
    for (const auto& v : m_variables)
        if (v.name == name) return v.id;
    return std::nullopt;
}

const std::vector<VarId>& TreeModel::neighbors(VarId id) const {
    auto it = m_adjacency.find(id);
    return it == m_adjacency.end() ? kNoNeighbors : it->second;
}

std::vector<VarId> TreeModel::observed_ids() const {
    std::vector<VarId> out;
    for (const auto& v : m_variables)
        if (v.observed) out.push_back(v.id);
    return out;
}

std::vector<VarId> TreeModel::latent_ids() const {
    std::vector<VarId> out;
    for (const auto& v : m_variables)
        if (!v.observed) out.push_back(v.id);
    return out;
}

TreeModel TreeModel::with_cardinality(VarId id, int cardinality) const {
    TreeModel out = *this;
    for (auto& v : out.m_variables)
        if (v.id == id) v.cardinality = cardinality;
    return out;
}

TreeModel TreeModel::without_variable(VarId id) const {
    TreeModel out = *this;
    std::erase_if(out.m_variables, [id](const Variable& v) { return v.id == id; });
    std::erase_if(out.m_edges, [id](const Edge& e) { return e.a == id || e.b == id; });
    out.rebuild();
    out.m_id_limit = std::max(out.m_id_limit, m_id_limit);
    return out;
}

TreeModel TreeModel::with_edge(VarId a, VarId b) const {
    TreeModel out = *this;
    out.add_edge(a, b);
    return out;
}

bool structurally_equal(const TreeModel& x, const TreeModel& y) {
    using Key = std::tuple<std::string, int, bool>;
    auto vars = [](const TreeModel& m) {
        std::set<Key> out;
        for (const auto& v : m.variables()) out.emplace(v.name, v.cardinality, v.observed);
        return out;
    };
    auto edges = [](const TreeModel& m) {
        std::set<std::pair<std::string, std::string>> out;
        for (const auto& e : m.edges()) {
            auto p = m.variable(e.a).name;
            auto q = m.variable(e.b).name;
            if (q < p) std::swap(p, q);
            out.emplace(std::move(p), std::move(q));
        }
        return out;
    };
    return x.size() == y.size() && vars(x) == vars(y) && edges(x) == edges(y);
}

std::vector<ModelError> validate(const TreeModel& model) {
    using K = ModelError::Kind;
    std::vector<ModelError> errors;
    const auto& vars = model.variables();

    if (vars.empty()) {
        errors.push_back({K::empty, "model has no variables"});
        return errors;
    }

    std::set<std::string> names;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& v = vars[i];
        if (v.cardinality < 1)
            errors.push_back({K::bad_cardinality,
                              "variable " + v.name + ": cardinality must be ≥ 1"});
        if (!names.insert(v.name).second)
            errors.push_back({K::duplicate_name, "duplicate variable name " + v.name});
        if (i > 0 && vars[i - 1].id == v.id)
            errors.push_back({K::duplicate_id, "duplicate variable id " + std::to_string(index_of(v.id))});
    }

    bool edges_ok = true;
    const auto& edges = model.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        for (VarId end : {e.a, e.b}) {
            if (!model.contains(end)) {
                errors.push_back({K::unknown_endpoint,
                                  "edge endpoint " + std::to_string(index_of(end)) + " is not a variable"});
                edges_ok = false;
            }
        }
        if (e.a == e.b) {
            errors.push_back({K::self_loop, "self-loop on variable id " + std::to_string(index_of(e.a))});
            edges_ok = false;
        }
        if (i > 0 && edges[i - 1] == e) {
            errors.push_back({K::duplicate_edge, "duplicate edge " + std::to_string(index_of(e.a)) + "-" +
                                                     std::to_string(index_of(e.b))});
            edges_ok = false;
        }
    }

    if (edges_ok) {
        // Union-find over the variable list; a union inside one set is a cycle.
        std::map<VarId, VarId> parent;
        for (const auto& v : vars) parent[v.id] = v.id;
        std::function<VarId(VarId)> root = [&](VarId x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool cyclic = false;
        for (const auto& e : edges) {
            VarId ra = root(e.a), rb = root(e.b);
            if (ra == rb) cyclic = true;
            else parent[ra] = rb;
        }
        if (cyclic) errors.push_back({K::cycle, "edges contain a cycle"});
        std::set<VarId> roots;
        for (const auto& v : vars) roots.insert(root(v.id));
        if (roots.size() > 1) errors.push_back({K::disconnected, "model is disconnected"});
    }

    if (std::none_of(vars.begin(), vars.end(), [](const Variable& v) { return v.observed; }))
        errors.push_back({K::no_observed, "model has no observed variable"});

    return errors;
}

void require_valid(const TreeModel& model) {
    auto errors = validate(model);
    if (errors.empty()) return;
    std::string msg = "invalid model:";
    for (const auto& e : errors) msg += " " + e.message + ";";
    msg.pop_back();
    throw std::invalid_argument(msg);
}

std::int64_t standard_dimension(const TreeModel& model, std::optional<VarId> root) {
    if (model.size() == 0) throw std::invalid_argument("standard_dimension: empty model");
    const VarId start = root.value_or(model.variables().front().id);
    if (!model.contains(start))
        throw std::invalid_argument("standard_dimension: unknown root id " + std::to_string(index_of(start)));

    std::int64_t ds = model.variable(start).cardinality - 1;
    std::set<VarId> seen{start};
    std::queue<VarId> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
        VarId parent = frontier.front();
        frontier.pop();
        const std::int64_t q = model.variable(parent).cardinality;
        for (VarId child : model.neighbors(parent)) {
            if (!seen.insert(child).second) continue;
            ds += q * (model.variable(child).cardinality - 1);
            frontier.push(child);
        }
    }
    if (seen.size() != model.size())
        throw std::invalid_argument("standard_dimension: model is not connected");
    return ds;
}

std::int64_t cardinality_bound(const TreeModel& model, VarId latent) {
    const auto& nbrs = model.neighbors(latent);
    if (nbrs.empty()) return std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> cards;
    for (VarId n : nbrs) cards.push_back(model.variable(n).cardinality);
    auto largest = std::max_element(cards.begin(), cards.end());
    std::int64_t bound = 1;
    for (auto it = cards.begin(); it != cards.end(); ++it)
        if (it != largest) bound = saturating_mul(bound, *it);
    return bound;
}

std::vector<RegularityViolation> check_regular(const TreeModel& model) {
    std::vector<RegularityViolation> out;
    for (VarId z : model.latent_ids()) {
        const auto& nbrs = model.neighbors(z);
        if (nbrs.empty()) continue;
        const std::int64_t card = model.variable(z).cardinality;
        const std::int64_t bound = cardinality_bound(model, z);
        const bool strict =
            nbrs.size() == 2 &&
            std::any_of(nbrs.begin(), nbrs.end(), [&](VarId n) { return !model.variable(n).observed; });
        if (card > bound)
            out.push_back({z, RegularityViolation::Kind::bound, bound});
        else if (strict && card == bound)
            out.push_back({z, RegularityViolation::Kind::strict, bound});
    }
    return out;
}

std::string RegularizationStep::describe() const {
    if (kind == Kind::removed) return "remove:" + name + "(" + joined_first + "-" + joined_second + ")";
    return "reduce:" + name + "(" + std::to_string(old_cardinality) + "->" + std::to_string(new_cardinality) + ")";
}

namespace {

std::optional<RegularizationStep> regularization_step(const TreeModel& model, VarId z) {
    const Variable& var = model.variable(z);
    const auto& nbrs = model.neighbors(z);
    if (nbrs.empty()) return std::nullopt;

    if (nbrs.size() == 2) {
        const Variable& x1 = model.variable(nbrs[0]);
        const Variable& x2 = model.variable(nbrs[1]);
        if (var.cardinality < std::min(x1.cardinality, x2.cardinality)) return std::nullopt;
        RegularizationStep step;
        step.kind = RegularizationStep::Kind::removed;
        step.variable = z;
        step.name = var.name;
        step.old_cardinality = var.cardinality;
        step.added_edge = Edge(x1.id, x2.id);
        step.joined_first = x1.name;
        step.joined_second = x2.name;
        return step;
    }

    const std::int64_t bound = cardinality_bound(model, z);
    if (var.cardinality <= bound) return std::nullopt;
    RegularizationStep step;
    step.kind = RegularizationStep::Kind::reduced;
    step.variable = z;
    step.name = var.name;
    step.old_cardinality = var.cardinality;
    step.new_cardinality = static_cast<int>(bound);
    return step;
}

}  // namespace

Regularization regularize(const TreeModel& model) {
    Regularization out{model, {}};
    for (;;) {
        std::optional<RegularizationStep> step;
        for (VarId z : out.model.latent_ids()) {
            step = regularization_step(out.model, z);
            if (step) break;
        }
        if (!step) return out;

        if (step->kind == RegularizationStep::Kind::removed)
            out.model = out.model.without_variable(step->variable).with_edge(step->added_edge->a, step->added_edge->b);
        else
            out.model = out.model.with_cardinality(step->variable, step->new_cardinality);
        out.log.push_back(std::move(*step));
    }
}

}  // namespace ltdim
