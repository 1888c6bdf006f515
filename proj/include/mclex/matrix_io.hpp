#ifndef MCLEX_MATRIX_IO_HPP
#define MCLEX_MATRIX_IO_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mclex/matrix.hpp"

namespace mclex {

enum class Format { Csv, Json };

namespace detail {

/// Splits CSV text into rows of cells. Cells may be double-quoted; embedded
/// commas and "" escapes are honored. Fully empty lines are skipped.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    bool cell_started = false;
    std::size_t line = 1;

    auto end_cell = [&] {
        row.push_back(std::move(cell));
        cell.clear();
        cell_started = false;
    };
    auto end_line = [&] {
        if (cell_started || !cell.empty() || !row.empty()) {
            end_cell();
            rows.push_back(std::move(row));
            row.clear();
        }
    };

    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    cell += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
                if (c == '\n') ++line;
            }
        } else if (c == '"') {
            quoted = true;
            cell_started = true;
        } else if (c == ',') {
            end_cell();
            cell_started = true;  // a trailing comma still opens a cell
        } else if (c == '\n') {
            end_line();
            ++line;
        } else if (c == '\r') {
            // swallowed; \r\n handled by the \n branch
        } else {
            cell += c;
            cell_started = true;
        }
    }
    if (quoted) throw ParseError("csv line " + std::to_string(line) + ": unterminated quote");
    end_line();
    return rows;
}

inline std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

/// A scale cell is "min,max" (quoted in the file) or "min:max".
inline std::pair<Rational, Rational> parse_scale_cell(const std::string& cell, std::size_t line,
                                                      const std::string& criterion) {
    auto sep = cell.find(',');
    if (sep == std::string::npos) sep = cell.find(':');
    if (sep == std::string::npos) {
        throw ParseError("csv line " + std::to_string(line) + ": criterion \"" + criterion +
                         "\": scale cell \"" + cell + "\" is not a min,max pair");
    }
    try {
        return {parse_rational(cell.substr(0, sep)), parse_rational(cell.substr(sep + 1))};
    } catch (const ParseError& e) {
        throw ParseError("csv line " + std::to_string(line) + ": criterion \"" + criterion +
                         "\": " + e.what());
    }
}

inline std::size_t parse_rank_cell(const std::string& cell, const std::string& criterion) {
    if (cell.empty()) throw ParseError("missing rank for criterion \"" + criterion + "\"");
    for (char c : cell) {
        if (c < '0' || c > '9') {
            throw ParseError("criterion \"" + criterion + "\": rank \"" + cell +
                             "\" is not a non-negative integer");
        }
    }
    return static_cast<std::size_t>(std::stoull(cell));
}

inline MatrixData matrix_from_csv(std::string_view text) {
    auto rows = parse_csv(text);
    if (rows.size() < 3) {
        throw ParseError("csv: expected name, scale and rank header rows before data");
    }
    const auto& names = rows[0];
    const auto& scales = rows[1];
    const auto& ranks = rows[2];
    if (names.size() < 2) throw ParseError("csv line 1: expected a label cell plus criterion names");
    const std::size_t m = names.size() - 1;
    if (scales.size() != m + 1) {
        throw ParseError("csv line 2: expected " + std::to_string(m) + " scale cells, got " +
                         std::to_string(scales.size() - 1));
    }
    if (ranks.size() != m + 1) {
        throw ParseError("csv line 3: expected " + std::to_string(m) + " rank cells, got " +
                         std::to_string(ranks.size() - 1));
    }

    MatrixData data;
    for (std::size_t j = 0; j < m; ++j) {
        CriterionSpec spec;
        spec.name = names[j + 1];
        auto [lo, hi] = parse_scale_cell(scales[j + 1], 2, spec.name);
        spec.scale_min = lo;
        spec.scale_max = hi;
        spec.rank = parse_rank_cell(ranks[j + 1], spec.name);
        data.criteria.push_back(std::move(spec));
    }

    for (std::size_t r = 3; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != m + 1) {
            throw ParseError("csv line " + std::to_string(r + 1) + ": expected id plus " +
                             std::to_string(m) + " scores, got " + std::to_string(row.size()) +
                             " cells");
        }
        data.alternatives.push_back(row[0]);
        std::vector<Rational> scores;
        scores.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            try {
                scores.push_back(parse_rational(row[j + 1]));
            } catch (const ParseError& e) {
                throw ParseError("csv line " + std::to_string(r + 1) + ": alternative \"" +
                                 row[0] + "\": " + e.what());
            }
        }
        data.scores.push_back(std::move(scores));
    }
    return data;
}

/// Exact rational from a JSON value: strings are parsed exactly, integral
/// numbers accepted as-is. Non-integer number literals are rejected — binary
/// doubles cannot represent decimal scores exactly.
inline Rational rational_from_json(const nlohmann::json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_number_unsigned()) return Rational(value.get<std::uint64_t>());
    if (value.is_number_float()) {
        throw ParseError(where + ": non-integer number literals are inexact; write the value "
                                 "as a string, e.g. \"" +
                         value.dump() + "\"");
    }
    throw ParseError(where + ": expected a number or numeric string, got " + value.dump());
}

inline MatrixData matrix_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("criteria") || !doc.contains("alternatives")) {
        throw ParseError("json: expected an object with \"criteria\" and \"alternatives\"");
    }

    MatrixData data;
    for (const auto& c : doc.at("criteria")) {
        CriterionSpec spec;
        if (!c.contains("name")) throw ParseError("json: criterion without \"name\"");
        spec.name = c.at("name").get<std::string>();
        const std::string where = "criterion \"" + spec.name + "\"";
        if (!c.contains("scale_min") || !c.contains("scale_max")) {
            throw ParseError("json: " + where + ": missing \"scale_min\"/\"scale_max\"");
        }
        spec.scale_min = rational_from_json(c.at("scale_min"), where + ".scale_min");
        spec.scale_max = rational_from_json(c.at("scale_max"), where + ".scale_max");
        if (!c.contains("rank")) throw ParseError("json: " + where + ": missing \"rank\"");
        if (!c.at("rank").is_number_integer() && !c.at("rank").is_number_unsigned()) {
            throw ParseError("json: " + where + ": \"rank\" must be an integer");
        }
        spec.rank = c.at("rank").get<std::size_t>();
        data.criteria.push_back(std::move(spec));
    }
    for (const auto& a : doc.at("alternatives")) {
        if (!a.contains("id")) throw ParseError("json: alternative without \"id\"");
        const std::string id = a.at("id").get<std::string>();
        if (!a.contains("scores") || !a.at("scores").is_array()) {
            throw ParseError("json: alternative \"" + id + "\": missing \"scores\" array");
        }
        std::vector<Rational> scores;
        for (const auto& s : a.at("scores")) {
            scores.push_back(rational_from_json(s, "alternative \"" + id + "\" score"));
        }
        data.alternatives.push_back(id);
        data.scores.push_back(std::move(scores));
    }
    return data;
}

}  // namespace detail

/// Parses and validates a decision matrix. Throws ParseError on malformed
/// text and ValidationError on invariant violations.
inline DecisionMatrix load_matrix(std::string_view text, Format format) {
    MatrixData data = format == Format::Csv ? detail::matrix_from_csv(text)
                                            : detail::matrix_from_json(text);
    return DecisionMatrix::from_data(std::move(data));
}

inline DecisionMatrix load_matrix(std::istream& in, Format format) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_matrix(buffer.str(), format);
}

/// Canonical serialization; load_matrix of the result reproduces the matrix
/// bit-exactly (scores kept as exact rationals).
inline std::string serialize_matrix(const DecisionMatrix& matrix, Format format) {
    if (format == Format::Csv) {
        std::string out = "name";
        for (const auto& c : matrix.criteria()) out += "," + detail::csv_quote(c.name);
        out += "\nscale";
        for (const auto& c : matrix.criteria()) {
            out += ",\"" + format_rational(c.scale_min) + "," + format_rational(c.scale_max) + "\"";
        }
        out += "\nrank";
        for (const auto& c : matrix.criteria()) out += "," + std::to_string(c.rank);
        out += "\n";
        for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
            out += detail::csv_quote(matrix.alternative(i));
            for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
                out += "," + format_rational(matrix.score(i, j));
            }
            out += "\n";
        }
        return out;
    }

    nlohmann::ordered_json doc;
    doc["criteria"] = nlohmann::ordered_json::array();
    for (const auto& c : matrix.criteria()) {
        doc["criteria"].push_back({{"name", c.name},
                                   {"scale_min", format_rational(c.scale_min)},
                                   {"scale_max", format_rational(c.scale_max)},
                                   {"rank", c.rank}});
    }
    doc["alternatives"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
        nlohmann::ordered_json alt;
        alt["id"] = matrix.alternative(i);
        alt["scores"] = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
            alt["scores"].push_back(format_rational(matrix.score(i, j)));
        }
        doc["alternatives"].push_back(std::move(alt));
    }
    return doc.dump(2) + "\n";
}

}  // namespace mclex

#endif  // MCLEX_MATRIX_IO_HPP
