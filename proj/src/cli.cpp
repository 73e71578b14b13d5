#include "ltdim/cli.hpp"

#include <cstdio>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "ltdim/decompose.hpp"
#include "ltdim/model_file.hpp"
#include "ltdim/oracle.hpp"
#include "ltdim/report.hpp"
#include "ltdim/score.hpp"

namespace ltdim {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string join_ranks(const std::vector<std::int64_t>& ranks) {
    std::string out;
    for (auto r : ranks) out += (out.empty() ? "" : ",") + std::to_string(r);
    return out;
}

struct DimsOptions {
    std::string file;
    int trials = 3;
    std::uint64_t seed = 0;
    bool oracle = false;
    bool report = false;
    bool verbose = false;
};

int run_dims(const DimsOptions& opt, std::ostream& out, std::ostream& err) {
    const TreeModel model = load_model(opt.file);
    RankPolicy policy;
    policy.trials = opt.trials;
    policy.seed = opt.seed;

    const DimensionResult result = effective_dimension(model, policy);
    if (opt.report) {
        out << format_report(model, result, policy);
    } else {
        out << "ds=" << result.ds << "\n" << "de=" << result.de << "\n";
    }
    if (opt.verbose) {
        for (std::size_t i = 0; i < result.component_ranks.size(); ++i) {
            const auto& lc = result.ledger.lc_components[i];
            const auto& ranks = result.component_ranks[i].per_trial;
            err << "component " << model.variable(lc.latent).name << " trial ranks " << join_ranks(ranks);
            if (std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) != ranks.end())
                err << " (trials disagree; max taken)";
            err << "\n";
        }
    }

    if (opt.oracle) {
        OracleResult oracle;
        try {
            oracle = oracle_effective_dimension(model, policy);
        } catch (const OracleLimitExceeded& e) {
            err << "error: " << e.what() << "\n";
            return kExitOracleLimits;
        }
        if (oracle.rank != result.de) {
            err << "error: oracle de " << oracle.rank << " differs from decomposition de " << result.de
                << " (oracle trial ranks " << join_ranks(oracle.per_trial) << ")\n";
            return kExitOracleMismatch;
        }
        err << "oracle de " << oracle.rank << " agrees\n";
    }
    return kExitOk;
}

struct ScoreOptions {
    std::string file;
    double loglik = 0.0;
    std::int64_t n = 0;
    std::optional<std::int64_t> de;
    int trials = 3;
    std::uint64_t seed = 0;
};

int run_score(const ScoreOptions& opt, std::ostream& out, std::ostream& err) {
    const TreeModel model = load_model(opt.file);
    const ScoreInput input{opt.loglik, static_cast<double>(opt.n)};
    if (auto warning = score_warning(input)) err << "warning: " << *warning << "\n";

    const std::int64_t ds = standard_dimension(model);
    std::int64_t de = 0;
    if (opt.de) {
        de = *opt.de;
    } else {
        RankPolicy policy;
        policy.trials = opt.trials;
        policy.seed = opt.seed;
        de = effective_dimension(model, policy).de;
    }
    out << "bic=" << format_double(bic(input, ds)) << "\n";
    out << "bice=" << format_double(bice(input, de)) << "\n";
    return kExitOk;
}

int run_regularize(const std::string& file, std::ostream& out) {
    const TreeModel model = load_model(file);
    const Regularization reg = regularize(model);
    if (reg.log.empty()) out << "# already regular\n";
    for (const auto& step : reg.log) out << "# " << step.describe() << "\n";
    out << serialize_model(reg.model);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Standard and effective dimensions of tree-structured latent variable models", "ltdim"};
    app.require_subcommand(1);

    DimsOptions dims;
    auto* dims_cmd = app.add_subcommand("dims", "Standard and effective dimension of a model");
    dims_cmd->add_option("file", dims.file, "Model file")->required();
    dims_cmd->add_option("--trials", dims.trials, "Random points per rank computation")->check(CLI::PositiveNumber);
    dims_cmd->add_option("--seed", dims.seed, "Random seed");
    dims_cmd->add_flag("--oracle", dims.oracle, "Cross-check against the brute-force Jacobian");
    dims_cmd->add_flag("--report", dims.report, "Print the full decomposition report");
    dims_cmd->add_flag("--verbose", dims.verbose, "Print per-trial ranks to stderr");

    ScoreOptions score;
    auto* score_cmd = app.add_subcommand("score", "BIC and BICe from a maximized log-likelihood");
    score_cmd->add_option("file", score.file, "Model file")->required();
    score_cmd->add_option("--loglik", score.loglik, "Maximized natural-log likelihood")->required();
    score_cmd->add_option("--n", score.n, "Sample size")->required()->check(CLI::PositiveNumber);
    score_cmd->add_option("--de", score.de, "Effective dimension; computed when omitted")->check(CLI::NonNegativeNumber);
    score_cmd->add_option("--trials", score.trials, "Random points per rank computation")->check(CLI::PositiveNumber);
    score_cmd->add_option("--seed", score.seed, "Random seed");

    std::string regularize_file;
    auto* reg_cmd = app.add_subcommand("regularize", "Print the regularized model and the transformation log");
    reg_cmd->add_option("file", regularize_file, "Model file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (dims_cmd->parsed()) return run_dims(dims, out, err);
        if (score_cmd->parsed()) return run_score(score, out, err);
        return run_regularize(regularize_file, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace ltdim
