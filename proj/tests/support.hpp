#ifndef LTDIM_TESTS_SUPPORT_HPP
#define LTDIM_TESTS_SUPPORT_HPP

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ltdim/model.hpp"
#include "ltdim/rational_matrix.hpp"

namespace ltdim::testing {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(LTDIM_MODELS_DIR) / name;
}

/// Latent Z of cardinality c joined to observed Y0..Yk-1.
TreeModel lc_model(int latent_cardinality, const std::vector<int>& neighbor_cardinalities);

/// Builds the two-level model with a root of cardinality `root_card`, two
/// ternary latent children and three ternary leaves under each.
TreeModel two_level_model(int root_card);

struct RandomModelShape {
    int max_variables = 7;
    int min_cardinality = 1;
    int max_cardinality = 3;
    int max_latent = 3;
};

/// Random valid tree: each new node attaches to a uniformly chosen earlier
/// node; at most `max_latent` latent nodes and at least one observed node.
TreeModel random_tree_model(std::mt19937_64& rng, const RandomModelShape& shape = {});

/// Rank by textbook Gauss-Jordan over mpq. Kept independent of the Bareiss
/// routine under test.
std::size_t gauss_jordan_rank(RationalMatrix m);

RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi);

}  // namespace ltdim::testing

#endif  // LTDIM_TESTS_SUPPORT_HPP
