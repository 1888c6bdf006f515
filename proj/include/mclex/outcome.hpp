#ifndef MCLEX_OUTCOME_HPP
#define MCLEX_OUTCOME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mclex {

/// Result kind of one pairwise comparison. Incomparable is reachable only in
/// the relational procedure; the crisp and fuzzy cascades are linked.
enum class Verdict {
    FirstPreferred,
    SecondPreferred,
    Equivalent,
    Incomparable,
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::FirstPreferred: return "first-preferred";
        case Verdict::SecondPreferred: return "second-preferred";
        case Verdict::Equivalent: return "equivalent";
        case Verdict::Incomparable: return "incomparable";
    }
    return "?";
}

/// The verdict seen from the other side of the pair.
inline Verdict mirrored(Verdict v) {
    switch (v) {
        case Verdict::FirstPreferred: return Verdict::SecondPreferred;
        case Verdict::SecondPreferred: return Verdict::FirstPreferred;
        default: return v;
    }
}

/// One pairwise comparison. `level` is the superiority degree: the 1-based
/// index of the criterion (or relation) that decided the pair. Present iff
/// the verdict is strict.
struct ComparisonOutcome {
    Verdict verdict = Verdict::Equivalent;
    std::optional<std::size_t> level;

    bool strict() const {
        return verdict == Verdict::FirstPreferred || verdict == Verdict::SecondPreferred;
    }

    bool operator==(const ComparisonOutcome&) const = default;
};

/// Total preorder as ordered tiers of alternative ids, best tier first.
/// Members of one tier are pairwise equivalent.
struct Ranking {
    std::vector<std::vector<std::string>> tiers;

    bool operator==(const Ranking&) const = default;
};

}  // namespace mclex

#endif  // MCLEX_OUTCOME_HPP
