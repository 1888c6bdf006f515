#ifndef MCLEX_CONVOLUTION_HPP
#define MCLEX_CONVOLUTION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mclex/matrix.hpp"

namespace mclex {

/// How importance coefficients are built from scale diapasons.
/// - PaperLiteral: lambda_j = d_j^(j-1), kept for fidelity to the printed
///   formula; it gives the largest weight to the least important criterion
///   and carries no order-equivalence guarantee.
/// - MixedRadix: lambda_m = 1, lambda_j = prod_{k>j}(d_k + 1); positional
///   weights (the base-ten idea) whose convolution order provably equals the
///   cascade order for integer scores within the declared scales.
enum class WeightScheme { PaperLiteral, MixedRadix };

/// Which diapason feeds the weight formulas: the declared scale bounds or
/// the extremes observed in the score columns.
enum class DiapasonMode { Declared, Observed };

inline const char* to_string(WeightScheme s) {
    return s == WeightScheme::PaperLiteral ? "paper_literal" : "mixed_radix";
}

inline const char* to_string(DiapasonMode m) {
    return m == DiapasonMode::Declared ? "declared" : "observed";
}

/// Importance coefficients aligned with the matrix criteria (rank order).
struct WeightVector {
    std::vector<Rational> weights;
    WeightScheme scheme = WeightScheme::MixedRadix;

    bool operator==(const WeightVector&) const = default;
};

/// Scale diapason of criterion j: the width of its declared scale, or of the
/// observed score range.
inline Rational diapason(const DecisionMatrix& matrix, std::size_t j, DiapasonMode mode) {
    if (j >= matrix.criterion_count()) throw Error("criterion index out of range");
    if (mode == DiapasonMode::Declared) {
        return matrix.criterion(j).scale_max - matrix.criterion(j).scale_min;
    }
    Rational lo = matrix.score(0, j);
    Rational hi = lo;
    for (std::size_t i = 1; i < matrix.alternative_count(); ++i) {
        const Rational& s = matrix.score(i, j);
        if (s < lo) lo = s;
        if (s > hi) hi = s;
    }
    return hi - lo;
}

/// Smallest positive difference between distinct values in column j, or
/// nothing when the column is constant. The minimum-gap assumption under
/// which mixed-radix weights stay order-exact for non-integer scores.
inline std::optional<Rational> observed_min_gap(const DecisionMatrix& matrix, std::size_t j) {
    if (j >= matrix.criterion_count()) throw Error("criterion index out of range");
    std::vector<Rational> values;
    values.reserve(matrix.alternative_count());
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i) values.push_back(matrix.score(i, j));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) return std::nullopt;
    Rational gap = values[1] - values[0];
    for (std::size_t k = 2; k < values.size(); ++k) {
        Rational g = values[k] - values[k - 1];
        if (g < gap) gap = g;
    }
    return gap;
}

struct LexConditionReport {
    struct FirstViolation {
        std::size_t level = 0;  // 1-based j: criterion j vs criterion j+1
        Rational upper_min;     // effective min v(j)
        Rational lower_max;     // max v(j+1)
    };

    bool holds = true;
    std::optional<FirstViolation> first_violation;
};

/// Effective scale minimum for the lexicographic-condition check. Zero is not
/// part of the minimum, so a scale starting at exactly 0 contributes its
/// first nonzero rank, taken as 1 under unit-spaced scale ranks.
inline Rational effective_scale_min(const CriterionSpec& criterion) {
    return criterion.scale_min == 0 ? Rational(1) : criterion.scale_min;
}

/// Checks whether the criteria group is already lexicographically ordered by
/// raw magnitudes: every criterion's (nonzero) scale minimum must exceed the
/// next criterion's scale maximum. Trivially holds for m = 1.
inline LexConditionReport check_lex_condition(const DecisionMatrix& matrix) {
    for (std::size_t j = 0; j + 1 < matrix.criterion_count(); ++j) {
        const Rational upper_min = effective_scale_min(matrix.criterion(j));
        const Rational lower_max = matrix.criterion(j + 1).scale_max;
        if (!(upper_min > lower_max)) {
            return {false, LexConditionReport::FirstViolation{j + 1, upper_min, lower_max}};
        }
    }
    return {true, std::nullopt};
}

namespace detail {

inline Rational rational_pow(const Rational& base, std::size_t exponent) {
    Rational result(1);
    for (std::size_t k = 0; k < exponent; ++k) result *= base;
    return result;
}

}  // namespace detail

/// Builds the importance coefficients for the given scheme and diapason mode.
///
/// `min_gaps`, when non-empty, gives the per-criterion minimum score gap
/// (default 1, the integer-score case). Mixed-radix weights then become
/// lambda_j = (g_m/g_j) * prod_{k>j}(d_k/g_k + 1), still normalized to
/// lambda_m = 1; a score edge of at least g_j at level j always outweighs
/// every level below it.
inline WeightVector lex_weights(const DecisionMatrix& matrix, WeightScheme scheme,
                                DiapasonMode mode, std::vector<Rational> min_gaps = {}) {
    const std::size_t m = matrix.criterion_count();
    if (min_gaps.empty()) min_gaps.assign(m, Rational(1));
    if (min_gaps.size() != m) throw Error("min_gaps length does not match criterion count");
    for (const auto& g : min_gaps) {
        if (g <= 0) throw Error("minimum score gap must be positive");
    }

    std::vector<Rational> d;
    d.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        d.push_back(diapason(matrix, j, mode));
        if (d.back() == 0) {
            throw Error("criterion \"" + matrix.criterion(j).name +
                        "\": zero observed diapason, importance weights degenerate");
        }
    }

    WeightVector result;
    result.scheme = scheme;
    result.weights.resize(m);
    if (scheme == WeightScheme::PaperLiteral) {
        for (std::size_t j = 0; j < m; ++j) {
            result.weights[j] = detail::rational_pow(d[j], j);
        }
        return result;
    }

    Rational tower(1);
    result.weights[m - 1] = Rational(1);
    for (std::size_t j = m - 1; j-- > 0;) {
        tower *= d[j + 1] / min_gaps[j + 1] + 1;
        result.weights[j] = tower * min_gaps[m - 1] / min_gaps[j];
    }
    return result;
}

/// Linear convolution of one alternative's scores under the given weights.
inline Rational convolve(const DecisionMatrix& matrix, const WeightVector& weights,
                         std::size_t i) {
    if (weights.weights.size() != matrix.criterion_count()) {
        throw Error("weight vector length does not match criterion count");
    }
    if (i >= matrix.alternative_count()) throw Error("alternative index out of range");
    Rational total(0);
    for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
        total += weights.weights[j] * matrix.score(i, j);
    }
    return total;
}

inline Rational convolve(const DecisionMatrix& matrix, const WeightVector& weights,
                         const std::string& id) {
    return convolve(matrix, weights, matrix.index_of(id));
}

/// All alternatives attaining the maximal convolution value, in input order.
inline std::vector<std::string> argmax_convolution(const DecisionMatrix& matrix,
                                                   const WeightVector& weights) {
    std::vector<std::string> best;
    Rational best_value;
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
        Rational value = convolve(matrix, weights, i);
        if (best.empty() || value > best_value) {
            best_value = std::move(value);
            best.assign(1, matrix.alternative(i));
        } else if (value == best_value) {
            best.push_back(matrix.alternative(i));
        }
    }
    return best;
}

/// Rescales every column to the common scale [0, a] by score * a / max(column).
/// Column maxima must be positive. Positive per-column scaling is strictly
/// increasing, so cascade verdicts and levels are unchanged.
inline DecisionMatrix normalize(const DecisionMatrix& matrix, const Rational& a) {
    if (a <= 0) throw Error("normalization bound must be positive");
    MatrixData data = matrix.data();
    for (std::size_t j = 0; j < data.criteria.size(); ++j) {
        Rational column_max = matrix.score(0, j);
        for (std::size_t i = 1; i < matrix.alternative_count(); ++i) {
            column_max = std::max(column_max, matrix.score(i, j));
        }
        if (column_max <= 0) {
            throw Error("criterion \"" + data.criteria[j].name +
                        "\": non-positive column maximum, cannot normalize");
        }
        for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
            data.scores[i][j] = matrix.score(i, j) * a / column_max;
        }
        data.criteria[j].scale_min = Rational(0);
        data.criteria[j].scale_max = a;
    }
    return DecisionMatrix::from_data(std::move(data));
}

}  // namespace mclex

#endif  // MCLEX_CONVOLUTION_HPP
