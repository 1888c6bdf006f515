#ifndef MCLEX_REPORT_HPP
#define MCLEX_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mclex/fuzzy.hpp"
#include "mclex/outcome.hpp"
#include "mclex/rational.hpp"

namespace mclex {

/// Reports are emitted either as hand-formatted text or as an ordered JSON
/// document; both serialize deterministically (stable key order, stable tier
/// order) so identical runs are byte-identical.
using Report = nlohmann::ordered_json;

inline Report ranking_to_json(const Ranking& ranking) {
    Report tiers = Report::array();
    for (const auto& tier : ranking.tiers) tiers.push_back(tier);
    return tiers;
}

inline std::string ranking_to_text(const Ranking& ranking) {
    std::string text = "ranking:\n";
    for (std::size_t t = 0; t < ranking.tiers.size(); ++t) {
        text += "  " + std::to_string(t + 1) + ". ";
        for (std::size_t k = 0; k < ranking.tiers[t].size(); ++k) {
            if (k > 0) text += ", ";
            text += ranking.tiers[t][k];
        }
        text += "\n";
    }
    return text;
}

inline Report outcome_to_json(const std::string& first, const std::string& second,
                              const ComparisonOutcome& outcome) {
    Report entry;
    entry["first"] = first;
    entry["second"] = second;
    entry["verdict"] = to_string(outcome.verdict);
    if (outcome.level) entry["level"] = *outcome.level;
    return entry;
}

inline std::string outcome_to_text(const std::string& first, const std::string& second,
                                   const ComparisonOutcome& outcome) {
    std::string text = first + " vs " + second + ": " + to_string(outcome.verdict);
    if (outcome.level) text += " (level " + std::to_string(*outcome.level) + ")";
    return text;
}

inline Report outcome_to_json(const std::string& first, const std::string& second,
                              const FuzzyOutcome& outcome) {
    Report entry;
    entry["first"] = first;
    entry["second"] = second;
    entry["verdict"] = to_string(outcome.verdict);
    if (outcome.level) entry["level"] = *outcome.level;
    entry["degree"] = format_rational(outcome.degree);
    return entry;
}

inline std::string outcome_to_text(const std::string& first, const std::string& second,
                                   const FuzzyOutcome& outcome) {
    std::string text = first + " vs " + second + ": " + to_string(outcome.verdict) + " (";
    if (outcome.level) text += "level " + std::to_string(*outcome.level) + ", ";
    text += "degree " + format_rational(outcome.degree) + ")";
    return text;
}

}  // namespace mclex

#endif  // MCLEX_REPORT_HPP
