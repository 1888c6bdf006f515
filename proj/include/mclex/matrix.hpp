#ifndef MCLEX_MATRIX_HPP
#define MCLEX_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mclex/errors.hpp"
#include "mclex/rational.hpp"

namespace mclex {

/// One criterion: a win-type score scale plus its importance rank
/// (rank 1 = most important). Loss-type criteria must be negated before
/// ingestion; see negate_column().
struct CriterionSpec {
    std::string name;
    Rational scale_min;
    Rational scale_max;
    std::size_t rank = 0;

    bool operator==(const CriterionSpec&) const = default;
};

/// Raw matrix content as parsed from a file, before validation. Criteria may
/// appear in any order; scores[i][j] pairs alternative i with criterion j in
/// the order given here.
struct MatrixData {
    std::vector<CriterionSpec> criteria;
    std::vector<std::string> alternatives;
    std::vector<std::vector<Rational>> scores;
};

/// Lists every invariant violation in `data`; empty result means the data is
/// accepted by DecisionMatrix::from_data. Violations are data, not errors.
inline std::vector<Violation> validate(const MatrixData& data) {
    std::vector<Violation> report;
    auto add = [&report](std::string message) { report.push_back({std::move(message)}); };

    if (data.alternatives.empty()) add("n >= 1 violated: alternative list is empty");
    if (data.criteria.empty()) add("m >= 1 violated: criterion list is empty");

    const std::size_t m = data.criteria.size();
    for (const auto& c : data.criteria) {
        if (!(c.scale_min < c.scale_max)) {
            add("criterion \"" + c.name + "\": scale_min " + format_rational(c.scale_min) +
                " must be less than scale_max " + format_rational(c.scale_max));
        }
    }

    // ranks must be exactly 1..m
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (data.criteria[a].rank == data.criteria[b].rank) {
                add("rank " + std::to_string(data.criteria[a].rank) + " duplicated by criteria \"" +
                    data.criteria[a].name + "\" and \"" + data.criteria[b].name + "\"");
            }
        }
    }
    for (const auto& c : data.criteria) {
        if (c.rank < 1 || c.rank > m) {
            add("criterion \"" + c.name + "\": rank " + std::to_string(c.rank) +
                " outside 1.." + std::to_string(m));
        }
    }

    for (std::size_t a = 0; a < data.alternatives.size(); ++a) {
        for (std::size_t b = a + 1; b < data.alternatives.size(); ++b) {
            if (data.alternatives[a] == data.alternatives[b]) {
                add("duplicate alternative id \"" + data.alternatives[a] + "\"");
            }
        }
    }

    if (data.scores.size() != data.alternatives.size()) {
        add("score row count " + std::to_string(data.scores.size()) +
            " does not match alternative count " + std::to_string(data.alternatives.size()));
        return report;
    }
    for (std::size_t i = 0; i < data.scores.size(); ++i) {
        if (data.scores[i].size() != m) {
            add("alternative \"" + data.alternatives[i] + "\": expected " + std::to_string(m) +
                " scores, got " + std::to_string(data.scores[i].size()));
            continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
            const auto& c = data.criteria[j];
            const auto& s = data.scores[i][j];
            if (s < c.scale_min || s > c.scale_max) {
                add("alternative \"" + data.alternatives[i] + "\", criterion \"" + c.name +
                    "\": score " + format_rational(s) + " outside scale [" +
                    format_rational(c.scale_min) + ", " + format_rational(c.scale_max) + "]");
            }
        }
    }
    return report;
}

/// Validated decision matrix: n alternatives scored against m criteria, with
/// criteria held in rank order (index 0 = most important). Immutable after
/// construction; safe to share across threads.
class DecisionMatrix {
public:
    /// Validates and takes ownership of raw data; criteria (and their score
    /// columns) are reordered by rank. Throws ValidationError listing every
    /// violation when the data is rejected.
    static DecisionMatrix from_data(MatrixData data) {
        auto report = validate(data);
        if (!report.empty()) throw ValidationError(std::move(report));

        std::vector<std::size_t> order(data.criteria.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return data.criteria[a].rank < data.criteria[b].rank;
        });

        DecisionMatrix mat;
        mat.alternatives_ = std::move(data.alternatives);
        mat.criteria_.reserve(order.size());
        for (std::size_t j : order) mat.criteria_.push_back(std::move(data.criteria[j]));
        mat.scores_.reserve(data.scores.size());
        for (auto& row : data.scores) {
            std::vector<Rational> sorted_row;
            sorted_row.reserve(order.size());
            for (std::size_t j : order) sorted_row.push_back(std::move(row[j]));
            mat.scores_.push_back(std::move(sorted_row));
        }
        return mat;
    }

    std::size_t alternative_count() const { return alternatives_.size(); }
    std::size_t criterion_count() const { return criteria_.size(); }

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<CriterionSpec>& criteria() const { return criteria_; }

    const std::string& alternative(std::size_t i) const { return alternatives_[i]; }
    const CriterionSpec& criterion(std::size_t j) const { return criteria_[j]; }

    /// Score of alternative i on criterion j (0-based, rank order).
    const Rational& score(std::size_t i, std::size_t j) const { return scores_[i][j]; }
    const std::vector<Rational>& row(std::size_t i) const { return scores_[i]; }

    /// Index of an alternative id; throws Error on unknown ids.
    std::size_t index_of(const std::string& id) const {
        for (std::size_t i = 0; i < alternatives_.size(); ++i) {
            if (alternatives_[i] == id) return i;
        }
        throw Error("unknown alternative id \"" + id + "\"");
    }

    /// Raw copy of the content, criteria in rank order.
    MatrixData data() const { return {criteria_, alternatives_, scores_}; }

    bool operator==(const DecisionMatrix&) const = default;

private:
    DecisionMatrix() = default;

    std::vector<CriterionSpec> criteria_;
    std::vector<std::string> alternatives_;
    std::vector<std::vector<Rational>> scores_;
};

/// New matrix with `map` applied to one criterion's scores and scale bounds.
/// With a strictly increasing map the result is valid and, per-criterion
/// monotone invariance, leaves every cascade outcome unchanged.
inline DecisionMatrix apply_to_column(const DecisionMatrix& matrix, std::size_t j,
                                      const std::function<Rational(const Rational&)>& map) {
    if (j >= matrix.criterion_count()) throw Error("criterion index out of range");
    MatrixData data = matrix.data();
    data.criteria[j].scale_min = map(data.criteria[j].scale_min);
    data.criteria[j].scale_max = map(data.criteria[j].scale_max);
    for (auto& row : data.scores) row[j] = map(row[j]);
    return DecisionMatrix::from_data(std::move(data));
}

/// Turns a loss-type column into a win-type one by negating its scores; the
/// scale becomes [-scale_max, -scale_min].
inline DecisionMatrix negate_column(const DecisionMatrix& matrix, std::size_t j) {
    if (j >= matrix.criterion_count()) throw Error("criterion index out of range");
    MatrixData data = matrix.data();
    const Rational old_min = data.criteria[j].scale_min;
    data.criteria[j].scale_min = -data.criteria[j].scale_max;
    data.criteria[j].scale_max = -old_min;
    for (auto& row : data.scores) row[j] = -row[j];
    return DecisionMatrix::from_data(std::move(data));
}

}  // namespace mclex

#endif  // MCLEX_MATRIX_HPP
