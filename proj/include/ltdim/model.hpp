#ifndef LTDIM_MODEL_HPP
#define LTDIM_MODEL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ltdim {

/// Stable identifier of a variable. Ids survive model transformations and
/// are never reused once a variable has been removed.
enum class VarId : std::uint32_t {};

constexpr std::uint32_t index_of(VarId id) { return static_cast<std::uint32_t>(id); }

struct Variable {
    VarId id{};
    std::string name;
    int cardinality = 1;
    bool observed = true;

    friend bool operator==(const Variable&, const Variable&) = default;
};

/// Unordered edge, stored with `a < b`.
struct Edge {
    VarId a{};
    VarId b{};

    Edge() = default;
    Edge(VarId x, VarId y) : a(x < y ? x : y), b(x < y ? y : x) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected tree over discrete variables, each either observed or latent.
///
/// The class does not enforce the tree invariants on construction; use
/// `validate` for that. Variables are kept sorted by id and edges are kept
/// normalized and sorted, so two models with the same content compare equal
/// regardless of insertion order.
class TreeModel {
public:
    TreeModel() = default;
    TreeModel(std::vector<Variable> variables, std::vector<Edge> edges);

    /// Appends a variable with the next free id.
    VarId add_variable(std::string name, int cardinality, bool observed);
    void add_edge(VarId a, VarId b);

    const std::vector<Variable>& variables() const { return m_variables; }
    const std::vector<Edge>& edges() const { return m_edges; }
    std::size_t size() const { return m_variables.size(); }

    bool contains(VarId id) const;
    const Variable* find(VarId id) const;
    /// Throws std::out_of_range for an unknown id.
    const Variable& variable(VarId id) const;
    std::optional<VarId> find_by_name(std::string_view name) const;

    /// Neighbors sorted by id. Empty for unknown ids.
    const std::vector<VarId>& neighbors(VarId id) const;
    std::size_t degree(VarId id) const { return neighbors(id).size(); }

    std::vector<VarId> observed_ids() const;
    std::vector<VarId> latent_ids() const;

    /// One past the largest id ever handed out by this model.
    std::uint32_t id_limit() const { return m_id_limit; }

    // Value-returning edits; the receiver is left untouched.
    TreeModel with_cardinality(VarId id, int cardinality) const;
    TreeModel without_variable(VarId id) const;
    TreeModel with_edge(VarId a, VarId b) const;

    friend bool operator==(const TreeModel& x, const TreeModel& y) {
        return x.m_variables == y.m_variables && x.m_edges == y.m_edges;
    }

private:
    void rebuild();

    std::vector<Variable> m_variables;
    std::vector<Edge> m_edges;
    std::map<VarId, std::vector<VarId>> m_adjacency;
    std::uint32_t m_id_limit = 0;
};

/// Same variable names, cardinalities and flags, and the same edge set when
/// edges are compared by endpoint names. Ids are ignored.
bool structurally_equal(const TreeModel& x, const TreeModel& y);

struct ModelError {
    enum class Kind {
        bad_cardinality,
        duplicate_name,
        duplicate_id,
        unknown_endpoint,
        self_loop,
        duplicate_edge,
        cycle,
        disconnected,
        no_observed,
        empty,
    };
    Kind kind;
    std::string message;
};

/// Every violated structural invariant; empty when the model is a valid tree.
std::vector<ModelError> validate(const TreeModel& model);

/// Throws std::invalid_argument listing all errors when `validate` is not empty.
void require_valid(const TreeModel& model);

/// Number of free parameters of the rooted parameterization: (|root| - 1)
/// plus |parent| * (|child| - 1) over every parent-child edge. The value does
/// not depend on the root; `root` defaults to the lowest id.
std::int64_t standard_dimension(const TreeModel& model, std::optional<VarId> root = {});

/// Upper bound for the cardinality of a latent node: the product of its
/// neighbors' cardinalities divided by the largest one. Saturates at INT64_MAX.
std::int64_t cardinality_bound(const TreeModel& model, VarId latent);

struct RegularityViolation {
    enum class Kind { bound, strict };
    VarId variable{};
    Kind kind = Kind::bound;
    std::int64_t allowed_maximum = 0;

    friend bool operator==(const RegularityViolation&, const RegularityViolation&) = default;
};

std::vector<RegularityViolation> check_regular(const TreeModel& model);

struct RegularizationStep {
    enum class Kind { removed, reduced };
    Kind kind = Kind::removed;
    VarId variable{};
    std::string name;
    int old_cardinality = 0;
    int new_cardinality = 0;   // 0 for removals
    std::optional<Edge> added_edge;
    std::string joined_first;  // names of the endpoints of `added_edge`
    std::string joined_second;

    /// `remove:X1(X2-X3)` or `reduce:Z(10->9)`.
    std::string describe() const;
};

struct Regularization {
    TreeModel model;
    std::vector<RegularizationStep> log;
};

/// Repeatedly scans latent nodes in ascending id. A node with two neighbors
/// whose cardinality is at least that of one neighbor is removed and its
/// neighbors joined; any other node above its bound is shrunk to the bound.
/// The scan restarts after every change.
Regularization regularize(const TreeModel& model);

}  // namespace ltdim

#endif  // LTDIM_MODEL_HPP
