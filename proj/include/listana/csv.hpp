#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "listana/error.hpp"

namespace listana {

/// Single-pass reader for delimited text with RFC-4180 style quoting:
/// fields may be wrapped in double quotes, "" escapes a quote, and quoted
/// fields may contain delimiters and newlines.
class CsvReader {
public:
    CsvReader(std::string buffer, char delimiter = ',')
        : buf_(std::move(buffer)), delim_(delimiter) {}

    CsvReader(std::istream& in, char delimiter = ',') : delim_(delimiter) {
        std::ostringstream ss;
        ss << in.rdbuf();
        buf_ = std::move(ss).str();
    }

    /// Advances to the next record. Returns false at end of input.
    bool next() {
        if (pos_ >= buf_.size()) return false;
        record_line_ = line_;
        fields_.clear();
        std::string field;
        bool in_quotes = false;
        bool done = false;
        while (!done) {
            if (pos_ >= buf_.size()) {
                fields_.push_back(field);
                break;
            }
            const char c = buf_[pos_];
            if (in_quotes) {
                if (c == '"') {
                    if (pos_ + 1 < buf_.size() && buf_[pos_ + 1] == '"') {
                        field.push_back('"');
                        ++pos_;
                    } else {
                        in_quotes = false;
                    }
                } else {
                    if (c == '\n') ++line_;
                    field.push_back(c);
                }
            } else if (c == '"' && field.empty()) {
                in_quotes = true;
            } else if (c == delim_) {
                fields_.push_back(std::move(field));
                field.clear();
            } else if (c == '\n') {
                ++line_;
                fields_.push_back(std::move(field));
                done = true;
            } else if (c == '\r' && pos_ + 1 < buf_.size() && buf_[pos_ + 1] == '\n') {
                // handled by the \n branch next iteration
            } else {
                field.push_back(c);
            }
            ++pos_;
        }
        return true;
    }

    const std::vector<std::string>& fields() const { return fields_; }

    /// 1-based line number where the current record starts.
    std::size_t line() const { return record_line_; }

    /// True when the current record is entirely empty (a blank line).
    bool blank() const {
        for (const auto& f : fields_)
            if (!f.empty()) return false;
        return true;
    }

private:
    std::string buf_;
    char delim_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t record_line_ = 1;
    std::vector<std::string> fields_;
};

/// Quotes a field if it contains the delimiter, a quote, or a newline.
inline std::string csv_escape(std::string_view field, char delimiter = ',') {
    bool needs_quotes = false;
    for (char c : field)
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') needs_quotes = true;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline void csv_write_row(std::ostream& out, const std::vector<std::string>& fields,
                          char delimiter = ',') {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(delimiter);
        out << csv_escape(fields[i], delimiter);
    }
    out.put('\n');
}

} // namespace listana
