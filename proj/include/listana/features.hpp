#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "listana/error.hpp"
#include "listana/lexicon.hpp"

namespace listana {

/// Number of word tokens in the text; missing text counts 0.
inline int word_count(std::string_view text) {
    int n = 0;
    detail::for_each_token(text, [&](std::string_view) { ++n; });
    return n;
}

inline int word_count(const std::optional<std::string>& text) {
    return text ? word_count(std::string_view{*text}) : 0;
}

/// Counts items in a brace-delimited, comma-separated amenity list such as
/// `{TV,"Wireless Internet",Kitchen}`. Items may be double-quoted; empty
/// items are ignored. Missing or unparseable input counts 0.
inline int count_amenities(std::string_view raw) {
    // Trim outer whitespace, then the braces.
    std::size_t lo = 0, hi = raw.size();
    while (lo < hi && detail::is_space(raw[lo])) ++lo;
    while (hi > lo && detail::is_space(raw[hi - 1])) --hi;
    if (lo == hi) return 0;
    if (raw[lo] != '{' || raw[hi - 1] != '}') return 0;
    ++lo;
    --hi;

    int count = 0;
    bool in_quotes = false;
    bool item_nonempty = false;
    for (std::size_t i = lo; i < hi; ++i) {
        const char c = raw[i];
        if (c == '"') {
            in_quotes = !in_quotes;
        } else if (c == ',' && !in_quotes) {
            if (item_nonempty) ++count;
            item_nonempty = false;
        } else if (!detail::is_space(c)) {
            item_nonempty = true;
        }
    }
    if (item_nonempty) ++count;
    return count;
}

inline int count_amenities(const std::optional<std::string>& raw) {
    return raw ? count_amenities(std::string_view{*raw}) : 0;
}

/// price / accommodates. accommodates must be at least 1.
inline double price_per_occupant(double price, int accommodates) {
    if (accommodates <= 0)
        throw DomainError("price_per_occupant: accommodates must be >= 1, got " +
                          std::to_string(accommodates));
    if (price < 0) throw DomainError("price_per_occupant: negative price");
    return price / static_cast<double>(accommodates);
}

} // namespace listana
