#include "ltdim/model_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace ltdim {

ModelFileError::ModelFileError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), m_line(line) {}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_cardinality(std::string_view token, std::size_t line) {
    long long value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || token.front() == '+' || ec == std::errc::invalid_argument || ptr != end)
        throw ModelFileError(line, "cardinality '" + std::string(token) + "' is not a decimal integer");
    if (ec == std::errc::result_out_of_range || value > 1'000'000'000)
        throw ModelFileError(line, "cardinality '" + std::string(token) + "' is too large");
    if (value < 1) throw ModelFileError(line, "cardinality must be ≥ 1");
    return static_cast<int>(value);
}

}  // namespace

TreeModel parse_model(std::string_view text) {
    TreeModel model;
    std::map<std::string, VarId, std::less<>> names;
    std::vector<std::pair<VarId, VarId>> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "var") {
            if (tokens.size() != 4)
                throw ModelFileError(line_no, "expected 'var <name> <cardinality> <observed|latent>'");
            const std::string name(tokens[1]);
            const int card = parse_cardinality(tokens[2], line_no);
            bool observed;
            if (tokens[3] == "observed") observed = true;
            else if (tokens[3] == "latent") observed = false;
            else throw ModelFileError(line_no, "expected 'observed' or 'latent', got '" + std::string(tokens[3]) + "'");
            if (names.contains(name)) throw ModelFileError(line_no, "duplicate variable " + name);
            names.emplace(name, model.add_variable(name, card, observed));
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3) throw ModelFileError(line_no, "expected 'edge <name> <name>'");
            VarId ends[2];
            for (int k = 0; k < 2; ++k) {
                auto it = names.find(tokens[1 + k]);
                if (it == names.end())
                    throw ModelFileError(line_no, "unknown variable " + std::string(tokens[1 + k]));
                ends[k] = it->second;
            }
            edges.emplace_back(ends[0], ends[1]);
        } else {
            throw ModelFileError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
        }
    }

    std::vector<Edge> edge_list;
    for (auto [a, b] : edges) edge_list.emplace_back(a, b);
    TreeModel out(model.variables(), std::move(edge_list));

    const auto errors = validate(out);
    if (!errors.empty()) {
        std::string msg = "invalid model:";
        for (const auto& e : errors) msg += " " + e.message + ";";
        msg.pop_back();
        throw ModelFileError(0, msg);
    }
    return out;
}

TreeModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelFileError(0, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model(buffer.str());
}

std::string serialize_model(const TreeModel& model) {
    std::string out;
    for (const auto& v : model.variables())
        out += "var " + v.name + " " + std::to_string(v.cardinality) + (v.observed ? " observed\n" : " latent\n");
    for (const auto& e : model.edges())
        out += "edge " + model.variable(e.a).name + " " + model.variable(e.b).name + "\n";
    return out;
}

}  // namespace ltdim
