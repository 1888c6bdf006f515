#ifndef MCLEX_ERRORS_HPP
#define MCLEX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mclex {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV/JSON/number syntax). Carries file/line context
/// in the message when the caller supplied it.
class ParseError : public Error {
public:
    using Error::Error;
};

/// One invariant violation found in raw matrix data.
struct Violation {
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Raised when raw data fails validation; keeps the full violation report.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> report)
        : Error(join(report)), report_(std::move(report)) {}

    const std::vector<Violation>& report() const { return report_; }

private:
    static std::string join(const std::vector<Violation>& report) {
        std::string text = "invalid decision matrix:";
        for (const auto& v : report) {
            text += "\n  - " + v.message;
        }
        return text;
    }

    std::vector<Violation> report_;
};

}  // namespace mclex

#endif  // MCLEX_ERRORS_HPP
