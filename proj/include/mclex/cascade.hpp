#ifndef MCLEX_CASCADE_HPP
#define MCLEX_CASCADE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "mclex/matrix.hpp"
#include "mclex/outcome.hpp"

namespace mclex {

/// Crisp lexicographic cascade: scans criteria in rank order; the first one
/// whose scores differ decides the pair and its 1-based position becomes the
/// superiority degree. Equal on all criteria means Equivalent; the relation
/// is linked, so Incomparable never occurs here.
inline ComparisonOutcome lex_compare(const DecisionMatrix& matrix, std::size_t i, std::size_t l) {
    if (i >= matrix.alternative_count() || l >= matrix.alternative_count()) {
        throw Error("alternative index out of range");
    }
    for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
        const Rational& a = matrix.score(i, j);
        const Rational& b = matrix.score(l, j);
        if (a != b) {
            return {a > b ? Verdict::FirstPreferred : Verdict::SecondPreferred, j + 1};
        }
    }
    return {Verdict::Equivalent, std::nullopt};
}

inline ComparisonOutcome lex_compare(const DecisionMatrix& matrix, const std::string& i,
                                     const std::string& l) {
    return lex_compare(matrix, matrix.index_of(i), matrix.index_of(l));
}

/// Full ranking under the cascade: a total preorder, computed by sorting with
/// lex_compare as comparator and grouping exactly-equal score tuples into
/// tiers. Within a tier the input order of alternatives is kept.
inline Ranking lex_rank(const DecisionMatrix& matrix) {
    std::vector<std::size_t> order(matrix.alternative_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_compare(matrix, a, b).verdict == Verdict::FirstPreferred;
    });

    Ranking ranking;
    for (std::size_t i : order) {
        if (!ranking.tiers.empty()) {
            const std::size_t head = matrix.index_of(ranking.tiers.back().front());
            if (matrix.row(head) == matrix.row(i)) {
                ranking.tiers.back().push_back(matrix.alternative(i));
                continue;
            }
        }
        ranking.tiers.push_back({matrix.alternative(i)});
    }
    return ranking;
}

/// Best alternatives: the kernel of the cascade order, i.e. tier 1 of
/// lex_rank. Non-empty; members are pairwise equivalent.
inline std::vector<std::string> lex_best(const DecisionMatrix& matrix) {
    std::vector<std::size_t> best{0};
    for (std::size_t i = 1; i < matrix.alternative_count(); ++i) {
        switch (lex_compare(matrix, i, best.front()).verdict) {
            case Verdict::FirstPreferred:
                best.assign(1, i);
                break;
            case Verdict::Equivalent:
                best.push_back(i);
                break;
            default:
                break;
        }
    }
    std::vector<std::string> ids;
    ids.reserve(best.size());
    for (std::size_t i : best) ids.push_back(matrix.alternative(i));
    return ids;
}

}  // namespace mclex

#endif  // MCLEX_CASCADE_HPP
