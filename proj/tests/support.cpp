#include "support.hpp"

#include <algorithm>
#include <utility>

namespace ltdim::testing {

TreeModel lc_model(int latent_cardinality, const std::vector<int>& neighbor_cardinalities) {
    TreeModel m;
    const VarId z = m.add_variable("Z", latent_cardinality, false);
    for (std::size_t i = 0; i < neighbor_cardinalities.size(); ++i) {
        const VarId y = m.add_variable("Y" + std::to_string(i + 1), neighbor_cardinalities[i], true);
        m.add_edge(z, y);
    }
    return m;
}

TreeModel two_level_model(int root_card) {
    TreeModel m;
    const VarId x1 = m.add_variable("X1", root_card, false);
    const VarId x2 = m.add_variable("X2", 3, false);
    const VarId x3 = m.add_variable("X3", 3, false);
    m.add_edge(x1, x2);
    m.add_edge(x1, x3);
    for (int i = 1; i <= 6; ++i) {
        const VarId y = m.add_variable("Y" + std::to_string(i), 3, true);
        m.add_edge(i <= 3 ? x2 : x3, y);
    }
    return m;
}

TreeModel random_tree_model(std::mt19937_64& rng, const RandomModelShape& shape) {
    std::uniform_int_distribution<int> count(1, shape.max_variables);
    std::uniform_int_distribution<int> card(shape.min_cardinality, shape.max_cardinality);
    const int n = count(rng);

    std::vector<bool> latent(n, false);
    const int latent_count = std::uniform_int_distribution<int>(0, std::min(shape.max_latent, n - 1))(rng);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < latent_count; ++i) latent[order[i]] = true;

    TreeModel m;
    std::vector<VarId> ids;
    for (int i = 0; i < n; ++i) {
        const std::string name = (latent[i] ? "L" : "Y") + std::to_string(i);
        ids.push_back(m.add_variable(name, card(rng), !latent[i]));
    }
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        const int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
        edges.emplace_back(ids[parent], ids[i]);
    }
    return TreeModel(m.variables(), std::move(edges));
}

std::size_t gauss_jordan_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(rank, c), m(pivot, c));
        const Rational inv = 1 / m(rank, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(rank, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || sgn(m(r, col)) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

}  // namespace ltdim::testing
