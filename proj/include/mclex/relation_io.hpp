#ifndef MCLEX_RELATION_IO_HPP
#define MCLEX_RELATION_IO_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mclex/fuzzy.hpp"
#include "mclex/matrix_io.hpp"
#include "mclex/relations.hpp"

namespace mclex {

/// A stack of same-size crisp relations in importance order plus the
/// alternative ids the indices refer to.
struct CrispStack {
    std::vector<std::string> alternatives;
    std::vector<CrispRelation> relations;
};

/// Same for fuzzy membership matrices.
struct FuzzyStack {
    std::vector<std::string> alternatives;
    std::vector<FuzzyRelation> relations;
};

namespace detail {

/// Shared frame of the two stack formats: n, optional ids, and the relation
/// array with optional per-relation ranks (1 = most important).
struct StackFrame {
    std::size_t n = 0;
    std::vector<std::string> alternatives;
    std::vector<std::pair<std::size_t, nlohmann::json>> ranked_rows;  // (rank, rows)
};

inline StackFrame parse_stack_frame(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("relations")) {
        throw ParseError("json: expected an object with \"n\" and \"relations\"");
    }
    StackFrame frame;
    if (!doc.at("n").is_number_unsigned() && !doc.at("n").is_number_integer()) {
        throw ParseError("json: \"n\" must be a positive integer");
    }
    frame.n = doc.at("n").get<std::size_t>();
    if (frame.n == 0) throw ParseError("json: \"n\" must be a positive integer");

    if (doc.contains("alternatives")) {
        for (const auto& id : doc.at("alternatives")) {
            frame.alternatives.push_back(id.get<std::string>());
        }
        if (frame.alternatives.size() != frame.n) {
            throw ParseError("json: \"alternatives\" length does not match n");
        }
    } else {
        frame.alternatives = default_ids(frame.n);
    }

    const auto& relations = doc.at("relations");
    if (!relations.is_array() || relations.empty()) {
        throw ParseError("json: \"relations\" must be a non-empty array");
    }
    std::size_t position = 1;
    for (const auto& entry : relations) {
        if (!entry.is_object() || !entry.contains("rows")) {
            throw ParseError("json: each relation needs a \"rows\" matrix");
        }
        std::size_t rank = position;
        if (entry.contains("rank")) {
            if (!entry.at("rank").is_number_unsigned() && !entry.at("rank").is_number_integer()) {
                throw ParseError("json: relation \"rank\" must be an integer");
            }
            rank = entry.at("rank").get<std::size_t>();
        }
        frame.ranked_rows.emplace_back(rank, entry.at("rows"));
        ++position;
    }

    std::vector<std::size_t> ranks;
    for (const auto& [rank, rows] : frame.ranked_rows) ranks.push_back(rank);
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t k = 0; k < ranks.size(); ++k) {
        if (ranks[k] != k + 1) {
            throw ParseError("json: relation ranks must be exactly 1.." +
                             std::to_string(ranks.size()));
        }
    }
    std::sort(frame.ranked_rows.begin(), frame.ranked_rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return frame;
}

inline void require_square(const nlohmann::json& rows, std::size_t n) {
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError("json: relation rows must form an n x n matrix");
    }
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) {
            throw ParseError("json: relation rows must form an n x n matrix");
        }
    }
}

}  // namespace detail

/// Crisp stack from JSON: {"n", "alternatives"?, "relations": [{"rank"?,
/// "rows": [[0/1, ...], ...]}, ...]}. Ranks default to array order.
inline CrispStack load_crisp_stack_json(std::string_view text) {
    auto frame = detail::parse_stack_frame(text);
    CrispStack stack;
    stack.alternatives = std::move(frame.alternatives);
    for (const auto& [rank, rows] : frame.ranked_rows) {
        detail::require_square(rows, frame.n);
        CrispRelation r(frame.n);
        for (std::size_t i = 0; i < frame.n; ++i) {
            for (std::size_t l = 0; l < frame.n; ++l) {
                const auto& cell = rows[i][l];
                if (cell.is_boolean()) {
                    r.set(i, l, cell.get<bool>());
                    continue;
                }
                if (!cell.is_number_integer() && !cell.is_number_unsigned()) {
                    throw ParseError("json: relation entries must be 0 or 1");
                }
                const auto v = cell.get<std::int64_t>();
                if (v != 0 && v != 1) throw ParseError("json: relation entries must be 0 or 1");
                r.set(i, l, v == 1);
            }
        }
        stack.relations.push_back(std::move(r));
    }
    return stack;
}

/// Crisp stack from CSV: n x n blocks of 0/1 rows, blocks separated by blank
/// lines, most important block first.
inline CrispStack load_crisp_stack_csv(std::string_view text) {
    std::vector<std::vector<std::vector<int>>> blocks(1);
    std::size_t line = 0;
    std::size_t start = 0;
    auto flush_line = [&](std::string_view raw) {
        ++line;
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ')) raw.remove_suffix(1);
        if (raw.empty()) {
            if (!blocks.back().empty()) blocks.emplace_back();
            return;
        }
        std::vector<int> row;
        std::size_t cell_start = 0;
        for (std::size_t p = 0; p <= raw.size(); ++p) {
            if (p == raw.size() || raw[p] == ',') {
                std::string_view cell = raw.substr(cell_start, p - cell_start);
                while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
                while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
                if (cell == "0") {
                    row.push_back(0);
                } else if (cell == "1") {
                    row.push_back(1);
                } else {
                    throw ParseError("csv line " + std::to_string(line) +
                                     ": relation entries must be 0 or 1");
                }
                cell_start = p + 1;
            }
        }
        blocks.back().push_back(std::move(row));
    };
    for (std::size_t p = 0; p <= text.size(); ++p) {
        if (p == text.size() || text[p] == '\n') {
            flush_line(text.substr(start, p - start));
            start = p + 1;
        }
    }
    if (!blocks.empty() && blocks.back().empty()) blocks.pop_back();
    if (blocks.empty()) throw ParseError("csv: no relation blocks found");

    CrispStack stack;
    for (const auto& block : blocks) {
        try {
            stack.relations.push_back(CrispRelation::from_rows(block));
        } catch (const Error& e) {
            throw ParseError(std::string("csv: ") + e.what());
        }
        if (stack.relations.back().size() != stack.relations.front().size()) {
            throw ParseError("csv: relation blocks differ in size");
        }
    }
    stack.alternatives = detail::default_ids(stack.relations.front().size());
    return stack;
}

inline CrispStack load_crisp_stack(std::string_view text, Format format) {
    return format == Format::Json ? load_crisp_stack_json(text) : load_crisp_stack_csv(text);
}

/// Fuzzy stack from JSON; memberships are decimal strings (or integers) so
/// they stay exact.
inline FuzzyStack load_fuzzy_stack(std::string_view text) {
    auto frame = detail::parse_stack_frame(text);
    FuzzyStack stack;
    stack.alternatives = std::move(frame.alternatives);
    for (const auto& [rank, rows] : frame.ranked_rows) {
        detail::require_square(rows, frame.n);
        FuzzyRelation m(frame.n);
        for (std::size_t i = 0; i < frame.n; ++i) {
            for (std::size_t l = 0; l < frame.n; ++l) {
                Rational value = detail::rational_from_json(
                    rows[i][l], "relation " + std::to_string(rank) + " entry (" +
                                    std::to_string(i + 1) + "," + std::to_string(l + 1) + ")");
                try {
                    m.set(i, l, std::move(value));
                } catch (const Error& e) {
                    throw ParseError(std::string("json: ") + e.what());
                }
            }
        }
        stack.relations.push_back(std::move(m));
    }
    return stack;
}

}  // namespace mclex

#endif  // MCLEX_RELATION_IO_HPP
