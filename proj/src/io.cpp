#include "cremona/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace cremona {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line), column_(column) {}

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t bad_line) {
    if (rows.empty())
        throw ParseError("empty matrix input", 1, 1);
    const std::size_t cols = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols)
            throw ParseError("ragged row: expected " + std::to_string(cols) + " entries, got " +
                                 std::to_string(rows[i].size()),
                             bad_line ? bad_line : i + 1, 1);
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    return m;
}

IntMatrix parse_plain(std::string_view text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::size_t> row_lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::int64_t> row;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t end = i;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            std::int64_t value = 0;
            const auto [ptr, ec] =
                std::from_chars(line.data() + i, line.data() + end, value);
            if (ec != std::errc{} || ptr != line.data() + end)
                throw ParseError("invalid integer '" + std::string(line.substr(i, end - i)) + "'",
                                 line_no, i + 1);
            row.push_back(value);
            i = end;
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
            row_lines.push_back(line_no);
        }
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows.front().size())
            return from_rows(rows, row_lines[i]);
    return from_rows(rows, 0);
}

IntMatrix parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 1, static_cast<std::size_t>(e.byte) + 1);
    }
    if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
        throw ParseError("expected an object with a \"matrix\" array", 1, 1);
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array())
            throw ParseError("matrix rows must be arrays", 1, 1);
        std::vector<std::int64_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw ParseError("matrix entries must be integers", 1, 1);
            r.push_back(v.get<std::int64_t>());
        }
        rows.push_back(std::move(r));
    }
    return from_rows(rows, 0);
}

} // namespace

IntMatrix parse_matrix(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return parse_json(text);
        break;
    }
    return parse_plain(text);
}

std::string to_text(const IntMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json_text(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"matrix", std::move(rows)}}.dump();
}

} // namespace cremona
