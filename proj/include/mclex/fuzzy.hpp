#ifndef MCLEX_FUZZY_HPP
#define MCLEX_FUZZY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mclex/errors.hpp"
#include "mclex/outcome.hpp"
#include "mclex/rational.hpp"

namespace mclex {

/// Fuzzy binary preference relation: an n x n membership matrix with entries
/// in [0, 1]. Immutable in practice — operations return new relations.
class FuzzyRelation {
public:
    explicit FuzzyRelation(std::size_t n) : n_(n), mu_(n * n, Rational(0)) {}

    static FuzzyRelation from_rows(std::vector<std::vector<Rational>> rows) {
        FuzzyRelation m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw Error("membership matrix is not square");
            for (std::size_t l = 0; l < rows[i].size(); ++l) {
                m.set(i, l, std::move(rows[i][l]));
            }
        }
        return m;
    }

    std::size_t size() const { return n_; }
    const Rational& at(std::size_t i, std::size_t l) const { return mu_[i * n_ + l]; }

    void set(std::size_t i, std::size_t l, Rational value) {
        if (value < 0 || value > 1) {
            throw Error("membership degree " + format_rational(value) + " outside [0, 1]");
        }
        mu_[i * n_ + l] = std::move(value);
    }

    bool operator==(const FuzzyRelation&) const = default;

private:
    std::size_t n_;
    std::vector<Rational> mu_;
};

/// The return attitude: memberships transposed.
inline FuzzyRelation inverse(const FuzzyRelation& m) {
    FuzzyRelation result(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t l = 0; l < m.size(); ++l) {
            result.set(i, l, m.at(l, i));
        }
    }
    return result;
}

/// Equivalence part: entrywise min with the transposed matrix. Symmetric and
/// idempotent.
inline FuzzyRelation equivalence_part(const FuzzyRelation& m) {
    FuzzyRelation result(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t l = 0; l < m.size(); ++l) {
            result.set(i, l, std::min(m.at(i, l), m.at(l, i)));
        }
    }
    return result;
}

/// Strict (superiority) part: the positive net preference max(mu(i,l) -
/// mu(l,i), 0). At most one direction of a pair is positive.
inline FuzzyRelation strict_part(const FuzzyRelation& m) {
    FuzzyRelation result(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t l = 0; l < m.size(); ++l) {
            Rational delta = m.at(i, l) - m.at(l, i);
            result.set(i, l, delta > 0 ? std::move(delta) : Rational(0));
        }
    }
    return result;
}

/// One fuzzy pairwise comparison. `degree` is the strict membership at the
/// deciding level, or the equivalence degree (min over levels of the
/// equivalence parts) when the cascade exhausts. Never Incomparable.
struct FuzzyOutcome {
    Verdict verdict = Verdict::Equivalent;
    std::optional<std::size_t> level;
    Rational degree;

    bool strict() const {
        return verdict == Verdict::FirstPreferred || verdict == Verdict::SecondPreferred;
    }

    bool operator==(const FuzzyOutcome&) const = default;
};

namespace detail {

inline void require_fuzzy_stack(std::span<const FuzzyRelation> relations) {
    if (relations.empty()) throw Error("relation stack is empty");
    for (const auto& m : relations) {
        if (m.size() != relations.front().size()) throw Error("relation sizes do not match");
    }
}

}  // namespace detail

/// Fuzzy lexicographic cascade over the strict parts of a stack ordered by
/// importance: the first level with positive net preference decides with that
/// net preference as degree; both directions zero descends a level.
inline FuzzyOutcome fuzzy_lex_compare(std::span<const FuzzyRelation> relations, std::size_t i,
                                      std::size_t l) {
    detail::require_fuzzy_stack(relations);
    if (i >= relations.front().size() || l >= relations.front().size()) {
        throw Error("alternative index out of range");
    }
    for (std::size_t j = 0; j < relations.size(); ++j) {
        Rational delta = relations[j].at(i, l) - relations[j].at(l, i);
        if (delta > 0) return {Verdict::FirstPreferred, j + 1, std::move(delta)};
        if (delta < 0) return {Verdict::SecondPreferred, j + 1, -delta};
    }
    Rational degree = std::min(relations[0].at(i, l), relations[0].at(l, i));
    for (std::size_t j = 1; j < relations.size(); ++j) {
        degree = std::min(degree, std::min(relations[j].at(i, l), relations[j].at(l, i)));
    }
    return {Verdict::Equivalent, std::nullopt, std::move(degree)};
}

/// Generalized linear convolution of the strict parts with positional weights
/// base^(m-j). Entries are weighted sums, deliberately not clamped to [0, 1].
/// The default base 10 mirrors the decimal analogy; sign-agreement with the
/// cascade on a delta-grid needs base > 1/delta + 1.
inline std::vector<std::vector<Rational>> fuzzy_lex_convolve(
    std::span<const FuzzyRelation> relations, unsigned base = 10) {
    detail::require_fuzzy_stack(relations);
    if (base < 2) throw Error("convolution base must be at least 2");
    const std::size_t n = relations.front().size();
    const std::size_t m = relations.size();

    std::vector<Rational> weight(m);
    weight[m - 1] = Rational(1);
    for (std::size_t j = m - 1; j-- > 0;) weight[j] = weight[j + 1] * base;

    std::vector<std::vector<Rational>> scores(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                Rational delta = relations[j].at(i, l) - relations[j].at(l, i);
                if (delta > 0) scores[i][l] += weight[j] * delta;
            }
        }
    }
    return scores;
}

/// Projects a relation onto a one-dimensional utility: row means, diagonal
/// included.
inline std::vector<Rational> utility_projection(const FuzzyRelation& m) {
    std::vector<Rational> utilities;
    utilities.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational sum(0);
        for (std::size_t l = 0; l < m.size(); ++l) sum += m.at(i, l);
        utilities.push_back(sum / Rational(static_cast<int>(m.size())));
    }
    return utilities;
}

/// Witness that the pairwise verdicts are not transitive: the weak relation
/// holds from a to b and from b to c but not from a to c.
struct TransitivityViolation {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;

    bool operator==(const TransitivityViolation&) const = default;
};

/// Either a ranking or the triple that makes ranking unsound.
struct FuzzyRankResult {
    std::optional<Ranking> ranking;
    std::optional<TransitivityViolation> violation;

    bool ok() const { return ranking.has_value(); }
};

namespace detail {

inline std::vector<std::string> default_ids(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i + 1));
    return ids;
}

/// Sorts a linked pairwise verdict table into tiers; reports the first triple
/// on which the weak relation fails to be transitive instead of sorting.
inline FuzzyRankResult rank_from_table(const std::vector<Verdict>& table, std::size_t n,
                                       std::vector<std::string> ids) {
    if (ids.empty()) ids = default_ids(n);
    if (ids.size() != n) throw Error("id list length does not match relation size");

    auto weak = [&](std::size_t a, std::size_t b) {
        return table[a * n + b] != Verdict::SecondPreferred;  // first-preferred or equivalent
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (weak(a, b) && weak(b, c) && !weak(a, c)) {
                    return {std::nullopt, TransitivityViolation{a, b, c}};
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return table[a * n + b] == Verdict::FirstPreferred;
    });

    Ranking ranking;
    std::size_t tier_head = n;
    for (std::size_t i : order) {
        if (!ranking.tiers.empty() && table[tier_head * n + i] == Verdict::Equivalent) {
            ranking.tiers.back().push_back(ids[i]);
        } else {
            ranking.tiers.push_back({ids[i]});
            tier_head = i;
        }
    }
    return {std::move(ranking), std::nullopt};
}

}  // namespace detail

/// Ranks by the fuzzy cascade. The pairwise verdicts are first checked to
/// form a total preorder; arbitrary membership data can produce cycles, in
/// which case the violating triple is reported instead of a silent sort.
inline FuzzyRankResult fuzzy_lex_rank(std::span<const FuzzyRelation> relations,
                                      std::vector<std::string> ids = {}) {
    detail::require_fuzzy_stack(relations);
    const std::size_t n = relations.front().size();
    std::vector<Verdict> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            table[i * n + l] = fuzzy_lex_compare(relations, i, l).verdict;
        }
    }
    return detail::rank_from_table(table, n, std::move(ids));
}

/// Ranks by the sign of pairwise convolution score differences. Coincides
/// with the cascade ranking when the base clears the grid's dominance bound.
inline FuzzyRankResult fuzzy_convolution_rank(std::span<const FuzzyRelation> relations,
                                              unsigned base = 10,
                                              std::vector<std::string> ids = {}) {
    detail::require_fuzzy_stack(relations);
    const std::size_t n = relations.front().size();
    const auto scores = fuzzy_lex_convolve(relations, base);
    std::vector<Verdict> table(n * n, Verdict::Equivalent);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (scores[i][l] > scores[l][i]) {
                table[i * n + l] = Verdict::FirstPreferred;
            } else if (scores[i][l] < scores[l][i]) {
                table[i * n + l] = Verdict::SecondPreferred;
            }
        }
    }
    return detail::rank_from_table(table, n, std::move(ids));
}

/// Mismatch between the outcome tables before and after a scale transform.
struct TheoremMismatch {
    std::size_t i = 0;
    std::size_t l = 0;
    FuzzyOutcome before;
    FuzzyOutcome after;
};

struct TheoremReport {
    bool holds = true;
    std::size_t pairs_checked = 0;
    std::vector<TheoremMismatch> mismatches;
};

/// Applies one strictly increasing zero-fixing transform entrywise to every
/// membership matrix and compares the full pairwise outcome tables: verdicts
/// and levels must be unchanged (degrees may differ — they live on the
/// transformed scale).
inline TheoremReport check_scale_theorem(
    std::span<const FuzzyRelation> relations,
    const std::function<Rational(const Rational&)>& transform) {
    detail::require_fuzzy_stack(relations);
    const std::size_t n = relations.front().size();

    std::vector<FuzzyRelation> transformed;
    transformed.reserve(relations.size());
    for (const auto& m : relations) {
        FuzzyRelation t(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                t.set(i, l, transform(m.at(i, l)));
            }
        }
        transformed.push_back(std::move(t));
    }

    TheoremReport report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = i + 1; l < n; ++l) {
            FuzzyOutcome before = fuzzy_lex_compare(relations, i, l);
            FuzzyOutcome after = fuzzy_lex_compare(transformed, i, l);
            ++report.pairs_checked;
            if (before.verdict != after.verdict || before.level != after.level) {
                report.holds = false;
                report.mismatches.push_back({i, l, std::move(before), std::move(after)});
            }
        }
    }
    return report;
}

/// The scale transforms exposed on the command line.
inline Rational transform_square(const Rational& t) { return t * t; }
inline Rational transform_halve(const Rational& t) { return t / 2; }
inline Rational transform_identity(const Rational& t) { return t; }

}  // namespace mclex

#endif  // MCLEX_FUZZY_HPP
