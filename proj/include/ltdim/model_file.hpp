#ifndef LTDIM_MODEL_FILE_HPP
#define LTDIM_MODEL_FILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ltdim/model.hpp"

namespace ltdim {

/// Parse or validation failure. `line` is 1-based; 0 when the problem is not
/// tied to a single line (e.g. the edges do not form a tree).
class ModelFileError : public std::runtime_error {
public:
    ModelFileError(std::size_t line, const std::string& message);
    std::size_t line() const { return m_line; }

private:
    std::size_t m_line;
};

/// Line format:
///
///     # comment
///     var <name> <cardinality> <observed|latent>
///     edge <name> <name>
///
/// Variables get ids in declaration order. The parsed model must pass
/// `validate`.
TreeModel parse_model(std::string_view text);

TreeModel load_model(const std::filesystem::path& path);

/// `var` lines in id order, then `edge` lines in edge order.
std::string serialize_model(const TreeModel& model);

}  // namespace ltdim

#endif  // LTDIM_MODEL_FILE_HPP
