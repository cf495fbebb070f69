#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cremona/intmat.hpp"

namespace cremona {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses either the plain format (one row per line, whitespace-separated
/// signed decimals, '#' comments, blank lines skipped) or a JSON object
/// with a "matrix" key holding equal-length integer arrays.
IntMatrix parse_matrix(std::string_view text);

/// Plain-format serialization; parse_matrix(to_text(m)) == m.
std::string to_text(const IntMatrix& m);

/// JSON serialization as {"matrix": [[...], ...]}.
std::string to_json_text(const IntMatrix& m);

} // namespace cremona
