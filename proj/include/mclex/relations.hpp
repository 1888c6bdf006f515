#ifndef MCLEX_RELATIONS_HPP
#define MCLEX_RELATIONS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mclex/matrix.hpp"
#include "mclex/outcome.hpp"

namespace mclex {

/// Crisp binary preference relation on n alternatives; adjacency[i][l] means
/// (x_i, x_l) is in R. Indices align with a fixed alternative list.
class CrispRelation {
public:
    explicit CrispRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}

    static CrispRelation from_rows(const std::vector<std::vector<int>>& rows) {
        CrispRelation r(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw Error("relation matrix is not square");
            for (std::size_t l = 0; l < rows[i].size(); ++l) {
                if (rows[i][l] != 0 && rows[i][l] != 1) {
                    throw Error("relation entries must be 0 or 1");
                }
                r.set(i, l, rows[i][l] == 1);
            }
        }
        return r;
    }

    std::size_t size() const { return n_; }
    bool at(std::size_t i, std::size_t l) const { return bits_[i * n_ + l] != 0; }
    void set(std::size_t i, std::size_t l, bool value) { bits_[i * n_ + l] = value ? 1 : 0; }

    bool operator==(const CrispRelation&) const = default;

private:
    std::size_t n_;
    std::vector<unsigned char> bits_;
};

/// Per-pair part membership. For every ordered pair exactly one of
/// strict(i,l), strict(l,i), equivalent(i,l), incomparable(i,l) holds.
inline bool in_strict_part(const CrispRelation& r, std::size_t i, std::size_t l) {
    return r.at(i, l) && !r.at(l, i);
}
inline bool in_equivalence_part(const CrispRelation& r, std::size_t i, std::size_t l) {
    return r.at(i, l) && r.at(l, i);
}
inline bool in_incomparable_part(const CrispRelation& r, std::size_t i, std::size_t l) {
    return !r.at(i, l) && !r.at(l, i);
}

/// The three derived parts of a relation as whole matrices.
struct RelationParts {
    CrispRelation strict;
    CrispRelation equivalent;
    CrispRelation incomparable;
};

inline RelationParts derive_parts(const CrispRelation& r) {
    const std::size_t n = r.size();
    RelationParts parts{CrispRelation(n), CrispRelation(n), CrispRelation(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            parts.strict.set(i, l, in_strict_part(r, i, l));
            parts.equivalent.set(i, l, in_equivalence_part(r, i, l));
            parts.incomparable.set(i, l, in_incomparable_part(r, i, l));
        }
    }
    return parts;
}

namespace detail {

inline void require_stack(std::span<const CrispRelation> relations) {
    if (relations.empty()) throw Error("relation stack is empty");
    for (const auto& r : relations) {
        if (r.size() != relations.front().size()) throw Error("relation sizes do not match");
    }
}

}  // namespace detail

/// Lexicographic composition of a stack of relations ordered by importance:
/// the first level that holds strictly decides the pair; equivalence descends
/// one level; incomparability stops the cascade immediately with an
/// Incomparable verdict. Exhausting every level on equivalences yields
/// Equivalent.
inline ComparisonOutcome lex_compose(std::span<const CrispRelation> relations, std::size_t i,
                                     std::size_t l) {
    detail::require_stack(relations);
    if (i >= relations.front().size() || l >= relations.front().size()) {
        throw Error("alternative index out of range");
    }
    for (std::size_t j = 0; j < relations.size(); ++j) {
        const CrispRelation& r = relations[j];
        if (in_strict_part(r, i, l)) return {Verdict::FirstPreferred, j + 1};
        if (in_strict_part(r, l, i)) return {Verdict::SecondPreferred, j + 1};
        if (in_incomparable_part(r, i, l)) return {Verdict::Incomparable, std::nullopt};
    }
    return {Verdict::Equivalent, std::nullopt};
}

/// One axiom failure: alternatives i and q are equivalent at `level`, yet the
/// strict edge against l holds for one of them only.
struct AxiomViolation {
    std::size_t i = 0;
    std::size_t q = 0;
    std::size_t l = 0;
    std::size_t level = 0;  // 1-based

    bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport {
    std::vector<AxiomViolation> a1_violations;
    std::vector<AxiomViolation> a2_violations;

    bool clean() const { return a1_violations.empty() && a2_violations.empty(); }
};

/// Exhaustive scan for violations of the two substitution axioms:
/// equivalent partners must inherit strict superiority over any third
/// alternative (A1) and strict inferiority to it (A2), level by level.
inline AxiomReport check_axioms(std::span<const CrispRelation> relations) {
    detail::require_stack(relations);
    const std::size_t n = relations.front().size();
    AxiomReport report;
    for (std::size_t j = 0; j < relations.size(); ++j) {
        const CrispRelation& r = relations[j];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t q = 0; q < n; ++q) {
                if (!in_equivalence_part(r, i, q)) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    if (in_strict_part(r, i, l) && !in_strict_part(r, q, l)) {
                        report.a1_violations.push_back({i, q, l, j + 1});
                    }
                    if (in_strict_part(r, l, i) && !in_strict_part(r, l, q)) {
                        report.a2_violations.push_back({i, q, l, j + 1});
                    }
                }
            }
        }
    }
    return report;
}

/// Whole-relation transitivity (of R itself, not of a derived part).
inline bool is_transitive(const CrispRelation& r) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (!r.at(i, l)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (r.at(l, k) && !r.at(i, k)) return false;
            }
        }
    }
    return true;
}

/// Brute-force verdict on the composition claim: when every level is
/// transitive and the axioms hold, the composed strict part must be
/// transitive (the composition is a quasi-order, possibly non-linked).
struct CompositionReport {
    bool premises_hold = false;       // every level transitive, axioms clean
    bool composed_transitive = false; // checked over all triples
    bool composed_linked = false;     // no incomparable pair among distinct alternatives
    std::optional<std::array<std::size_t, 3>> transitivity_counterexample;
};

inline CompositionReport verify_composition_claim(std::span<const CrispRelation> relations) {
    detail::require_stack(relations);
    const std::size_t n = relations.front().size();

    CompositionReport report;
    bool transitive_levels = true;
    for (const auto& r : relations) transitive_levels = transitive_levels && is_transitive(r);
    report.premises_hold = transitive_levels && check_axioms(relations).clean();

    std::vector<Verdict> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            table[i * n + l] = lex_compose(relations, i, l).verdict;
        }
    }
    auto strict = [&](std::size_t a, std::size_t b) {
        return table[a * n + b] == Verdict::FirstPreferred;
    };

    report.composed_transitive = true;
    for (std::size_t a = 0; a < n && report.composed_transitive; ++a) {
        for (std::size_t b = 0; b < n && report.composed_transitive; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (strict(a, b) && strict(b, c) && !strict(a, c)) {
                    report.composed_transitive = false;
                    report.transitivity_counterexample = {{a, b, c}};
                    break;
                }
            }
        }
    }

    report.composed_linked = true;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (table[a * n + b] == Verdict::Incomparable) {
                report.composed_linked = false;
            }
        }
    }
    return report;
}

/// The relation criterion j induces on the alternatives: r(i,l) iff
/// alternative i scores at least as well as l there. Composing these
/// reproduces the crisp cascade exactly.
inline CrispRelation induce_from_criterion(const DecisionMatrix& matrix, std::size_t j) {
    if (j >= matrix.criterion_count()) throw Error("criterion index out of range");
    const std::size_t n = matrix.alternative_count();
    CrispRelation r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            r.set(i, l, matrix.score(i, j) >= matrix.score(l, j));
        }
    }
    return r;
}

}  // namespace mclex

#endif  // MCLEX_RELATIONS_HPP
