#ifndef MCLEX_CLI_HPP
#define MCLEX_CLI_HPP

#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mclex/cascade.hpp"
#include "mclex/convolution.hpp"
#include "mclex/matrix_io.hpp"
#include "mclex/relation_io.hpp"
#include "mclex/relations.hpp"
#include "mclex/report.hpp"

namespace mclex {

/// Exit codes: 0 success, 1 broken input, 2 the procedure found something in
/// the data (failed scale condition, axiom violations, intransitivity).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFinding = 2;

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline Format detect_format(const std::string& path, const std::string& override_name) {
    if (override_name == "csv") return Format::Csv;
    if (override_name == "json") return Format::Json;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return Format::Json;
    return Format::Csv;
}

inline DecisionMatrix load_matrix_file(const std::string& path, const std::string& format,
                                       const std::vector<std::string>& negate) {
    DecisionMatrix matrix = load_matrix(read_file(path), detect_format(path, format));
    for (const auto& name : negate) {
        bool found = false;
        for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
            if (matrix.criterion(j).name == name) {
                matrix = negate_column(matrix, j);
                found = true;
                break;
            }
        }
        if (!found) throw Error("cannot negate unknown criterion \"" + name + "\"");
    }
    return matrix;
}

inline void emit(std::ostream& out, bool as_json, const Report& report, const std::string& text) {
    if (as_json) {
        out << report.dump(2) << "\n";
    } else {
        out << text;
    }
}

inline std::string warnings_to_text(const std::vector<std::string>& warnings) {
    std::string text;
    for (const auto& w : warnings) text += "warning: " + w + "\n";
    return text;
}

inline const std::string kPaperLiteralWarning =
    "paper_literal assigns the largest weight to the least important criterion; "
    "order equivalence with the cascade is only guaranteed under mixed_radix";

struct WeightSection {
    WeightVector weights;
    std::vector<std::string> warnings;
};

inline WeightSection build_weights(const DecisionMatrix& matrix, const std::string& scheme_name,
                                   const std::string& mode_name) {
    const WeightScheme scheme =
        scheme_name == "paper_literal" ? WeightScheme::PaperLiteral : WeightScheme::MixedRadix;
    const DiapasonMode mode =
        mode_name == "observed" ? DiapasonMode::Observed : DiapasonMode::Declared;
    WeightSection section{lex_weights(matrix, scheme, mode), {}};
    if (scheme == WeightScheme::PaperLiteral) section.warnings.push_back(kPaperLiteralWarning);
    return section;
}

inline void render_weights(const DecisionMatrix& matrix, const WeightVector& weights,
                           Report& report, std::string& text) {
    report["weights"] = Report::array();
    text += "weights:\n";
    for (std::size_t j = 0; j < weights.weights.size(); ++j) {
        const std::string value = format_rational(weights.weights[j]);
        report["weights"].push_back(
            {{"criterion", matrix.criterion(j).name}, {"lambda", value}});
        text += "  lambda_" + std::to_string(j + 1) + " (" + matrix.criterion(j).name +
                ") = " + value + "\n";
    }
}

inline void render_best(const std::vector<std::string>& best, Report& report,
                        std::string& text) {
    report["best"] = best;
    text += "best: ";
    for (std::size_t k = 0; k < best.size(); ++k) {
        if (k > 0) text += ", ";
        text += best[k];
    }
    text += "\n";
}

/// Ranking by exact convolution values; ties grouped, input order kept.
inline Ranking rank_by_values(const DecisionMatrix& matrix, const std::vector<Rational>& values) {
    std::vector<std::size_t> order(matrix.alternative_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    Ranking ranking;
    for (std::size_t i : order) {
        if (!ranking.tiers.empty() &&
            values[matrix.index_of(ranking.tiers.back().front())] == values[i]) {
            ranking.tiers.back().push_back(matrix.alternative(i));
        } else {
            ranking.tiers.push_back({matrix.alternative(i)});
        }
    }
    return ranking;
}

}  // namespace cli_detail

struct RankOptions {
    std::string file;
    std::string format;  // "", "csv", "json"
    std::string method = "cascade";
    std::string scheme = "mixed_radix";
    std::string mode = "declared";
    std::string normalize;  // empty = off
    std::vector<std::string> negate;
    bool json = false;
};

inline int run_rank(const RankOptions& options, std::ostream& out) {
    DecisionMatrix matrix =
        cli_detail::load_matrix_file(options.file, options.format, options.negate);
    Report report;
    std::string text;
    std::vector<std::string> warnings;

    report["method"] = options.method;
    text += "method: " + options.method + "\n";
    if (!options.normalize.empty()) {
        const Rational bound = parse_rational(options.normalize);
        matrix = normalize(matrix, bound);
        report["normalized_to"] = format_rational(bound);
        text += "normalized to: [0, " + format_rational(bound) + "]\n";
    }

    if (options.method == "convolution") {
        report["scheme"] = options.scheme;
        report["mode"] = options.mode;
        text += "scheme: " + options.scheme + "\nmode: " + options.mode + "\n";
        auto section = cli_detail::build_weights(matrix, options.scheme, options.mode);
        warnings = section.warnings;
        cli_detail::render_weights(matrix, section.weights, report, text);

        std::vector<Rational> values;
        values.reserve(matrix.alternative_count());
        report["values"] = Report::array();
        text += "values:\n";
        for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
            values.push_back(convolve(matrix, section.weights, i));
            const std::string value = format_rational(values.back());
            report["values"].push_back({{"id", matrix.alternative(i)}, {"value", value}});
            text += "  " + matrix.alternative(i) + " = " + value + "\n";
        }

        Ranking ranking = cli_detail::rank_by_values(matrix, values);
        report["ranking"] = ranking_to_json(ranking);
        text += ranking_to_text(ranking);
        cli_detail::render_best(argmax_convolution(matrix, section.weights), report, text);

        report["pairwise"] = Report::array();
        text += "pairwise:\n";
        for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
            for (std::size_t l = i + 1; l < matrix.alternative_count(); ++l) {
                ComparisonOutcome outcome{Verdict::Equivalent, std::nullopt};
                if (values[i] > values[l]) outcome.verdict = Verdict::FirstPreferred;
                if (values[i] < values[l]) outcome.verdict = Verdict::SecondPreferred;
                report["pairwise"].push_back(
                    outcome_to_json(matrix.alternative(i), matrix.alternative(l), outcome));
                text += "  " +
                        outcome_to_text(matrix.alternative(i), matrix.alternative(l), outcome) +
                        "\n";
            }
        }
    } else {
        Ranking ranking = lex_rank(matrix);
        report["ranking"] = ranking_to_json(ranking);
        text += ranking_to_text(ranking);
        cli_detail::render_best(lex_best(matrix), report, text);

        report["pairwise"] = Report::array();
        text += "pairwise:\n";
        for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
            for (std::size_t l = i + 1; l < matrix.alternative_count(); ++l) {
                const ComparisonOutcome outcome = lex_compare(matrix, i, l);
                report["pairwise"].push_back(
                    outcome_to_json(matrix.alternative(i), matrix.alternative(l), outcome));
                text += "  " +
                        outcome_to_text(matrix.alternative(i), matrix.alternative(l), outcome) +
                        "\n";
            }
        }
    }

    if (!warnings.empty()) report["warnings"] = warnings;
    cli_detail::emit(out, options.json, report, text + cli_detail::warnings_to_text(warnings));
    return kExitOk;
}

struct CompareOptions {
    std::string file;
    std::string first;
    std::string second;
    std::string format;
    std::vector<std::string> negate;
    bool json = false;
};

inline int run_compare(const CompareOptions& options, std::ostream& out) {
    DecisionMatrix matrix =
        cli_detail::load_matrix_file(options.file, options.format, options.negate);
    const ComparisonOutcome outcome = lex_compare(matrix, options.first, options.second);
    Report report = outcome_to_json(options.first, options.second, outcome);
    cli_detail::emit(out, options.json, report,
                     outcome_to_text(options.first, options.second, outcome) + "\n");
    return kExitOk;
}

struct WeightsOptions {
    std::string file;
    std::string format;
    std::string scheme = "mixed_radix";
    std::string mode = "declared";
    std::vector<std::string> negate;
    bool json = false;
};

inline int run_weights(const WeightsOptions& options, std::ostream& out) {
    DecisionMatrix matrix =
        cli_detail::load_matrix_file(options.file, options.format, options.negate);
    auto section = cli_detail::build_weights(matrix, options.scheme, options.mode);

    Report report;
    std::string text;
    report["scheme"] = options.scheme;
    report["mode"] = options.mode;
    text += "scheme: " + options.scheme + "\nmode: " + options.mode + "\n";

    const DiapasonMode mode =
        options.mode == "observed" ? DiapasonMode::Observed : DiapasonMode::Declared;
    report["diapasons"] = Report::array();
    text += "diapasons: ";
    for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
        const std::string d = format_rational(diapason(matrix, j, mode));
        report["diapasons"].push_back(d);
        if (j > 0) text += ", ";
        text += d;
    }
    text += "\n";

    cli_detail::render_weights(matrix, section.weights, report, text);
    if (!section.warnings.empty()) report["warnings"] = section.warnings;
    cli_detail::emit(out, options.json, report,
                     text + cli_detail::warnings_to_text(section.warnings));
    return kExitOk;
}

struct CheckLexOptions {
    std::string file;
    std::string format;
    bool json = false;
};

inline int run_check_lex(const CheckLexOptions& options, std::ostream& out) {
    DecisionMatrix matrix = cli_detail::load_matrix_file(options.file, options.format, {});
    const LexConditionReport result = check_lex_condition(matrix);

    Report report;
    report["holds"] = result.holds;
    std::string text;
    if (result.holds) {
        text = "lexicographic scale condition: holds\n";
    } else {
        const auto& v = *result.first_violation;
        report["first_violation"] = {{"level", v.level},
                                     {"upper_min", format_rational(v.upper_min)},
                                     {"lower_max", format_rational(v.lower_max)}};
        text = "lexicographic scale condition: fails at level " + std::to_string(v.level) +
               "\n  min v(" + std::to_string(v.level) + ") = " + format_rational(v.upper_min) +
               " is not greater than max v(" + std::to_string(v.level + 1) + ") = " +
               format_rational(v.lower_max) + "\n";
    }
    cli_detail::emit(out, options.json, report, text);
    return result.holds ? kExitOk : kExitFinding;
}

struct RelComposeOptions {
    std::string file;
    std::string format;
    std::string first;
    std::string second;
    bool json = false;
};

inline int run_relcompose(const RelComposeOptions& options, std::ostream& out) {
    const CrispStack stack = load_crisp_stack(cli_detail::read_file(options.file),
                                              cli_detail::detect_format(options.file,
                                                                        options.format));
    auto index_of = [&](const std::string& id) -> std::size_t {
        for (std::size_t i = 0; i < stack.alternatives.size(); ++i) {
            if (stack.alternatives[i] == id) return i;
        }
        throw Error("unknown alternative id \"" + id + "\"");
    };

    Report report;
    std::string text;
    report["levels"] = stack.relations.size();
    report["alternatives"] = stack.alternatives;
    text += "levels: " + std::to_string(stack.relations.size()) + "\n";

    report["pairwise"] = Report::array();
    if (!options.first.empty()) {
        const ComparisonOutcome outcome =
            lex_compose(stack.relations, index_of(options.first), index_of(options.second));
        report["pairwise"].push_back(outcome_to_json(options.first, options.second, outcome));
        text += outcome_to_text(options.first, options.second, outcome) + "\n";
        cli_detail::emit(out, options.json, report, text);
        return kExitOk;
    }

    std::size_t strict = 0, equivalent = 0, incomparable = 0;
    text += "pairwise:\n";
    for (std::size_t i = 0; i < stack.alternatives.size(); ++i) {
        for (std::size_t l = i + 1; l < stack.alternatives.size(); ++l) {
            const ComparisonOutcome outcome = lex_compose(stack.relations, i, l);
            if (outcome.strict()) ++strict;
            if (outcome.verdict == Verdict::Equivalent) ++equivalent;
            if (outcome.verdict == Verdict::Incomparable) ++incomparable;
            report["pairwise"].push_back(
                outcome_to_json(stack.alternatives[i], stack.alternatives[l], outcome));
            text += "  " +
                    outcome_to_text(stack.alternatives[i], stack.alternatives[l], outcome) + "\n";
        }
    }
    report["summary"] = {
        {"strict", strict}, {"equivalent", equivalent}, {"incomparable", incomparable}};
    text += "summary: " + std::to_string(strict) + " strict, " + std::to_string(equivalent) +
            " equivalent, " + std::to_string(incomparable) + " incomparable\n";
    cli_detail::emit(out, options.json, report, text);
    return kExitOk;
}

struct CheckAxiomsOptions {
    std::string file;
    std::string format;
    bool json = false;
};

inline int run_check_axioms(const CheckAxiomsOptions& options, std::ostream& out) {
    const CrispStack stack = load_crisp_stack(cli_detail::read_file(options.file),
                                              cli_detail::detect_format(options.file,
                                                                        options.format));
    const AxiomReport axioms = check_axioms(stack.relations);
    const CompositionReport composition = verify_composition_claim(stack.relations);
    const auto& ids = stack.alternatives;

    Report report;
    std::string text;
    report["levels"] = stack.relations.size();
    report["alternatives"] = ids;
    text += "levels: " + std::to_string(stack.relations.size()) + "\n";

    bool transitive_levels = true;
    for (const auto& r : stack.relations) transitive_levels = transitive_levels && is_transitive(r);
    report["transitive_levels"] = transitive_levels;
    text += std::string("transitive levels: ") + (transitive_levels ? "yes" : "no") + "\n";

    auto violations_json = [&](const std::vector<AxiomViolation>& violations) {
        Report array = Report::array();
        for (const auto& v : violations) {
            array.push_back({{"i", ids[v.i]}, {"q", ids[v.q]}, {"l", ids[v.l]}, {"level", v.level}});
        }
        return array;
    };
    report["a1_violations"] = violations_json(axioms.a1_violations);
    report["a2_violations"] = violations_json(axioms.a2_violations);

    text += "a1 violations: " + std::to_string(axioms.a1_violations.size()) + "\n";
    for (const auto& v : axioms.a1_violations) {
        text += "  level " + std::to_string(v.level) + ": " + ids[v.i] + " ~ " + ids[v.q] + ", " +
                ids[v.i] + " > " + ids[v.l] + ", not " + ids[v.q] + " > " + ids[v.l] + "\n";
    }
    text += "a2 violations: " + std::to_string(axioms.a2_violations.size()) + "\n";
    for (const auto& v : axioms.a2_violations) {
        text += "  level " + std::to_string(v.level) + ": " + ids[v.i] + " ~ " + ids[v.q] + ", " +
                ids[v.l] + " > " + ids[v.i] + ", not " + ids[v.l] + " > " + ids[v.q] + "\n";
    }

    report["premises_hold"] = composition.premises_hold;
    report["composed_transitive"] = composition.composed_transitive;
    report["composed_linked"] = composition.composed_linked;
    if (composition.transitivity_counterexample) {
        const auto& t = *composition.transitivity_counterexample;
        report["transitivity_counterexample"] = {ids[t[0]], ids[t[1]], ids[t[2]]};
    }
    text += std::string("premises hold: ") + (composition.premises_hold ? "yes" : "no") + "\n";
    text += std::string("composed strict part transitive: ") +
            (composition.composed_transitive ? "yes" : "no") + "\n";
    if (composition.transitivity_counterexample) {
        const auto& t = *composition.transitivity_counterexample;
        text += "  counterexample: " + ids[t[0]] + " > " + ids[t[1]] + " > " + ids[t[2]] + "\n";
    }
    text += std::string("composed linked: ") + (composition.composed_linked ? "yes" : "no") + "\n";

    cli_detail::emit(out, options.json, report, text);
    const bool clean = composition.premises_hold && composition.composed_transitive;
    return clean ? kExitOk : kExitFinding;
}

struct FuzzyRankOptions {
    std::string file;
    std::string method = "cascade";
    unsigned base = 10;
    bool utilities = false;
    bool json = false;
};

inline int run_fuzzy_rank(const FuzzyRankOptions& options, std::ostream& out) {
    const FuzzyStack stack = load_fuzzy_stack(cli_detail::read_file(options.file));
    const auto& ids = stack.alternatives;
    const std::size_t n = ids.size();

    Report report;
    std::string text;
    report["method"] = options.method;
    text += "method: " + options.method + "\n";

    FuzzyRankResult result;
    if (options.method == "convolution") {
        report["base"] = options.base;
        text += "base: " + std::to_string(options.base) + "\n";
        const auto scores = fuzzy_lex_convolve(stack.relations, options.base);
        report["scores"] = Report::array();
        text += "scores:\n";
        for (std::size_t i = 0; i < n; ++i) {
            Report row = Report::array();
            text += "  " + ids[i] + ": ";
            for (std::size_t l = 0; l < n; ++l) {
                row.push_back(format_rational(scores[i][l]));
                if (l > 0) text += ", ";
                text += format_rational(scores[i][l]);
            }
            report["scores"].push_back(row);
            text += "\n";
        }
        result = fuzzy_convolution_rank(stack.relations, options.base, ids);
    } else {
        result = fuzzy_lex_rank(stack.relations, ids);
    }

    if (options.utilities) {
        report["utilities"] = Report::array();
        text += "utilities:\n";
        for (std::size_t j = 0; j < stack.relations.size(); ++j) {
            const auto u = utility_projection(stack.relations[j]);
            Report level;
            level["level"] = j + 1;
            level["values"] = Report::array();
            text += "  level " + std::to_string(j + 1) + ":\n";
            for (std::size_t i = 0; i < n; ++i) {
                level["values"].push_back({{"id", ids[i]}, {"value", format_rational(u[i])}});
                text += "    " + ids[i] + " = " + format_rational(u[i]) + "\n";
            }
            report["utilities"].push_back(std::move(level));
        }
    }

    if (!result.ok()) {
        const auto& v = *result.violation;
        report["intransitive"] = {ids[v.a], ids[v.b], ids[v.c]};
        text += "intransitive: " + ids[v.a] + " >= " + ids[v.b] + " and " + ids[v.b] +
                " >= " + ids[v.c] + " but not " + ids[v.a] + " >= " + ids[v.c] + "\n";
        cli_detail::emit(out, options.json, report, text);
        return kExitFinding;
    }

    report["ranking"] = ranking_to_json(*result.ranking);
    text += ranking_to_text(*result.ranking);

    if (options.method != "convolution") {
        report["pairwise"] = Report::array();
        text += "pairwise:\n";
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = i + 1; l < n; ++l) {
                const FuzzyOutcome outcome = fuzzy_lex_compare(stack.relations, i, l);
                report["pairwise"].push_back(outcome_to_json(ids[i], ids[l], outcome));
                text += "  " + outcome_to_text(ids[i], ids[l], outcome) + "\n";
            }
        }
    }

    cli_detail::emit(out, options.json, report, text);
    return kExitOk;
}

struct FuzzyCompareOptions {
    std::string file;
    std::string first;
    std::string second;
    bool json = false;
};

inline int run_fuzzy_compare(const FuzzyCompareOptions& options, std::ostream& out) {
    const FuzzyStack stack = load_fuzzy_stack(cli_detail::read_file(options.file));
    auto index_of = [&](const std::string& id) -> std::size_t {
        for (std::size_t i = 0; i < stack.alternatives.size(); ++i) {
            if (stack.alternatives[i] == id) return i;
        }
        throw Error("unknown alternative id \"" + id + "\"");
    };
    const FuzzyOutcome outcome =
        fuzzy_lex_compare(stack.relations, index_of(options.first), index_of(options.second));
    Report report = outcome_to_json(options.first, options.second, outcome);
    cli_detail::emit(out, options.json, report,
                     outcome_to_text(options.first, options.second, outcome) + "\n");
    return kExitOk;
}

struct CheckTheoremOptions {
    std::string file;
    std::string transform = "square";
    bool json = false;
};

inline int run_check_theorem(const CheckTheoremOptions& options, std::ostream& out) {
    const FuzzyStack stack = load_fuzzy_stack(cli_detail::read_file(options.file));
    std::function<Rational(const Rational&)> transform;
    if (options.transform == "square") {
        transform = transform_square;
    } else if (options.transform == "halve") {
        transform = transform_halve;
    } else if (options.transform == "identity") {
        transform = transform_identity;
    } else {
        throw Error("unknown transform \"" + options.transform + "\"");
    }

    const TheoremReport result = check_scale_theorem(stack.relations, transform);
    const auto& ids = stack.alternatives;

    Report report;
    report["transform"] = options.transform;
    report["pairs_checked"] = result.pairs_checked;
    report["holds"] = result.holds;
    std::string text = "transform: " + options.transform + "\npairs checked: " +
                       std::to_string(result.pairs_checked) + "\n";
    if (result.holds) {
        text += "scale theorem: holds (verdicts and levels unchanged)\n";
    } else {
        report["mismatches"] = Report::array();
        text += "scale theorem: " + std::to_string(result.mismatches.size()) + " mismatch(es)\n";
        for (const auto& m : result.mismatches) {
            Report entry;
            entry["first"] = ids[m.i];
            entry["second"] = ids[m.l];
            entry["before"] = outcome_to_json(ids[m.i], ids[m.l], m.before);
            entry["after"] = outcome_to_json(ids[m.i], ids[m.l], m.after);
            report["mismatches"].push_back(std::move(entry));
            text += "  " + outcome_to_text(ids[m.i], ids[m.l], m.before) + " -> " +
                    outcome_to_text(ids[m.i], ids[m.l], m.after) + "\n";
        }
    }
    cli_detail::emit(out, options.json, report, text);
    return result.holds ? kExitOk : kExitFinding;
}

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lexicographic multicriteria decision procedures"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    RankOptions rank_options;
    auto* rank_cmd = app.add_subcommand("rank", "rank alternatives of a decision matrix");
    rank_cmd->add_option("file", rank_options.file, "matrix file (csv or json)")->required();
    rank_cmd->add_option("--method", rank_options.method, "cascade or convolution")
        ->check(CLI::IsMember({"cascade", "convolution"}));
    rank_cmd->add_option("--scheme", rank_options.scheme, "weight scheme for convolution")
        ->check(CLI::IsMember({"mixed_radix", "paper_literal"}));
    rank_cmd->add_option("--mode", rank_options.mode, "diapason source for weights")
        ->check(CLI::IsMember({"declared", "observed"}));
    rank_cmd->add_option("--normalize", rank_options.normalize,
                         "rescale every column to [0, A] first");
    rank_cmd->add_option("--negate", rank_options.negate,
                         "negate a loss-type criterion column (repeatable)");
    rank_cmd->add_option("--format", rank_options.format, "override file format detection")
        ->check(CLI::IsMember({"csv", "json"}));
    rank_cmd->add_flag("--json", rank_options.json, "emit the report as JSON");
    rank_cmd->callback([&] { exit_code = run_rank(rank_options, out); });

    CompareOptions compare_options;
    auto* compare_cmd = app.add_subcommand("compare", "compare two alternatives by the cascade");
    compare_cmd->add_option("file", compare_options.file, "matrix file")->required();
    compare_cmd->add_option("first", compare_options.first, "first alternative id")->required();
    compare_cmd->add_option("second", compare_options.second, "second alternative id")->required();
    compare_cmd->add_option("--negate", compare_options.negate, "negate a loss-type column");
    compare_cmd->add_option("--format", compare_options.format, "override file format detection")
        ->check(CLI::IsMember({"csv", "json"}));
    compare_cmd->add_flag("--json", compare_options.json, "emit the report as JSON");
    compare_cmd->callback([&] { exit_code = run_compare(compare_options, out); });

    WeightsOptions weights_options;
    auto* weights_cmd = app.add_subcommand("weights", "importance coefficients from diapasons");
    weights_cmd->add_option("file", weights_options.file, "matrix file")->required();
    weights_cmd->add_option("--scheme", weights_options.scheme, "mixed_radix or paper_literal")
        ->check(CLI::IsMember({"mixed_radix", "paper_literal"}));
    weights_cmd->add_option("--mode", weights_options.mode, "declared or observed diapasons")
        ->check(CLI::IsMember({"declared", "observed"}));
    weights_cmd->add_option("--negate", weights_options.negate, "negate a loss-type column");
    weights_cmd->add_option("--format", weights_options.format, "override file format detection")
        ->check(CLI::IsMember({"csv", "json"}));
    weights_cmd->add_flag("--json", weights_options.json, "emit the report as JSON");
    weights_cmd->callback([&] { exit_code = run_weights(weights_options, out); });

    CheckLexOptions check_lex_options;
    auto* check_lex_cmd =
        app.add_subcommand("check-lex", "check the lexicographic scale condition");
    check_lex_cmd->add_option("file", check_lex_options.file, "matrix file")->required();
    check_lex_cmd->add_option("--format", check_lex_options.format, "override format detection")
        ->check(CLI::IsMember({"csv", "json"}));
    check_lex_cmd->add_flag("--json", check_lex_options.json, "emit the report as JSON");
    check_lex_cmd->callback([&] { exit_code = run_check_lex(check_lex_options, out); });

    RelComposeOptions relcompose_options;
    auto* relcompose_cmd =
        app.add_subcommand("relcompose", "compose a stack of crisp preference relations");
    relcompose_cmd->add_option("file", relcompose_options.file, "relation stack (json or csv)")
        ->required();
    relcompose_cmd->add_option("first", relcompose_options.first, "first alternative id");
    relcompose_cmd->add_option("second", relcompose_options.second, "second alternative id")
        ->needs(relcompose_cmd->get_option("first"));
    relcompose_cmd->add_option("--format", relcompose_options.format, "override format detection")
        ->check(CLI::IsMember({"csv", "json"}));
    relcompose_cmd->add_flag("--json", relcompose_options.json, "emit the report as JSON");
    relcompose_cmd->callback([&] {
        if (!relcompose_options.first.empty() && relcompose_options.second.empty()) {
            throw Error("relcompose needs both alternative ids or none");
        }
        exit_code = run_relcompose(relcompose_options, out);
    });

    CheckAxiomsOptions check_axioms_options;
    auto* check_axioms_cmd =
        app.add_subcommand("check-axioms", "check substitution axioms and the composition claim");
    check_axioms_cmd->add_option("file", check_axioms_options.file, "relation stack")->required();
    check_axioms_cmd
        ->add_option("--format", check_axioms_options.format, "override format detection")
        ->check(CLI::IsMember({"csv", "json"}));
    check_axioms_cmd->add_flag("--json", check_axioms_options.json, "emit the report as JSON");
    check_axioms_cmd->callback([&] { exit_code = run_check_axioms(check_axioms_options, out); });

    FuzzyRankOptions fuzzy_rank_options;
    auto* fuzzy_rank_cmd = app.add_subcommand("fuzzy-rank", "rank by a fuzzy relation stack");
    fuzzy_rank_cmd->add_option("file", fuzzy_rank_options.file, "fuzzy stack (json)")->required();
    fuzzy_rank_cmd->add_option("--method", fuzzy_rank_options.method, "cascade or convolution")
        ->check(CLI::IsMember({"cascade", "convolution"}));
    fuzzy_rank_cmd->add_option("--base", fuzzy_rank_options.base,
                               "positional base for convolution weights");
    fuzzy_rank_cmd->add_flag("--utilities", fuzzy_rank_options.utilities,
                             "also print per-level utility projections");
    fuzzy_rank_cmd->add_flag("--json", fuzzy_rank_options.json, "emit the report as JSON");
    fuzzy_rank_cmd->callback([&] { exit_code = run_fuzzy_rank(fuzzy_rank_options, out); });

    FuzzyCompareOptions fuzzy_compare_options;
    auto* fuzzy_compare_cmd =
        app.add_subcommand("fuzzy-compare", "compare two alternatives by the fuzzy cascade");
    fuzzy_compare_cmd->add_option("file", fuzzy_compare_options.file, "fuzzy stack (json)")
        ->required();
    fuzzy_compare_cmd->add_option("first", fuzzy_compare_options.first, "first alternative id")
        ->required();
    fuzzy_compare_cmd->add_option("second", fuzzy_compare_options.second, "second alternative id")
        ->required();
    fuzzy_compare_cmd->add_flag("--json", fuzzy_compare_options.json, "emit the report as JSON");
    fuzzy_compare_cmd->callback(
        [&] { exit_code = run_fuzzy_compare(fuzzy_compare_options, out); });

    CheckTheoremOptions check_theorem_options;
    auto* check_theorem_cmd =
        app.add_subcommand("check-theorem", "check scale-transform invariance of the verdicts");
    check_theorem_cmd->add_option("file", check_theorem_options.file, "fuzzy stack (json)")
        ->required();
    check_theorem_cmd
        ->add_option("--transform", check_theorem_options.transform, "square, halve or identity")
        ->check(CLI::IsMember({"square", "halve", "identity"}));
    check_theorem_cmd->add_flag("--json", check_theorem_options.json, "emit the report as JSON");
    check_theorem_cmd->callback([&] { exit_code = run_check_theorem(check_theorem_options, out); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mclex");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return exit_code;
}

}  // namespace mclex

#endif  // MCLEX_CLI_HPP
