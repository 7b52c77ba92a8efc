#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "listana/error.hpp"

namespace listana {

namespace detail {

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view sv) const {
        return std::hash<std::string_view>{}(sv);
    }
};

struct StringEq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return a == b; }
};

inline bool is_token_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '\'';
}

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

/// Calls fn(token) for each token of text under the library tokenization
/// rules: split on whitespace runs, strip leading/trailing characters that
/// are not letters, digits, or apostrophes, lowercase, drop empties.
template <typename Fn>
void for_each_token(std::string_view text, Fn&& fn) {
    std::string buf;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < n && !is_space(text[j])) ++j;
        if (j > i) {
            std::size_t lo = i, hi = j;
            while (lo < hi && !is_token_char(text[lo])) ++lo;
            while (hi > lo && !is_token_char(text[hi - 1])) --hi;
            if (hi > lo) {
                buf.assign(text.substr(lo, hi - lo));
                for (char& c : buf)
                    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
                fn(std::string_view{buf});
            }
        }
        i = j;
    }
}

} // namespace detail

/// Ordered word tokens of one document.
using TokenSequence = std::vector<std::string>;

inline TokenSequence tokenize(std::string_view text) {
    TokenSequence tokens;
    detail::for_each_token(text, [&](std::string_view t) { tokens.emplace_back(t); });
    return tokens;
}

/// Word -> integer sentiment in [-5, +5], e.g. the AFINN-111 list.
///
/// Immutable after load; scoring is pure, so callers may share one instance
/// across threads freely.
class SentimentLexicon {
public:
    using Map = std::unordered_map<std::string, int, detail::StringHash, detail::StringEq>;

    /// Parses `token<TAB>integer` lines. Entries whose token contains
    /// whitespace ("can't stand") cannot be matched by per-word scoring and
    /// are skipped; the count of those is kept in dropped_multiword().
    static SentimentLexicon load(std::istream& in) {
        SentimentLexicon lex;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const auto tab = line.rfind('\t');
            if (tab == std::string::npos)
                throw ParseError("lexicon line has no tab separator", line_no);
            std::string token = line.substr(0, tab);
            const std::string_view score_text = std::string_view{line}.substr(tab + 1);
            int score = 0;
            const auto [ptr, ec] =
                std::from_chars(score_text.data(), score_text.data() + score_text.size(), score);
            if (ec != std::errc{} || ptr != score_text.data() + score_text.size())
                throw ParseError("lexicon score is not an integer: '" + std::string(score_text) + "'",
                                 line_no);
            if (score < -5 || score > 5)
                throw ParseError("lexicon score " + std::to_string(score) + " outside [-5, 5]",
                                 line_no);
            if (token.empty()) throw ParseError("lexicon token is empty", line_no);
            bool multiword = false;
            for (char c : token)
                if (detail::is_space(c)) multiword = true;
            if (multiword) {
                ++lex.dropped_multiword_;
                continue;
            }
            for (char& c : token)
                if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
            if (!lex.entries_.emplace(std::move(token), score).second)
                throw ParseError("duplicate lexicon token", line_no);
        }
        if (lex.entries_.empty()) throw ParseError("empty lexicon");
        return lex;
    }

    /// Sum of per-token scores; tokens absent from the lexicon contribute 0.
    int score_text(std::string_view text) const {
        int total = 0;
        detail::for_each_token(text, [&](std::string_view t) {
            const auto it = entries_.find(t);
            if (it != entries_.end()) total += it->second;
        });
        return total;
    }

    int score(std::string_view token) const {
        const auto it = entries_.find(token);
        return it == entries_.end() ? 0 : it->second;
    }

    bool contains(std::string_view token) const { return entries_.count(token) > 0; }

    const Map& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t dropped_multiword() const { return dropped_multiword_; }

private:
    Map entries_;
    std::size_t dropped_multiword_ = 0;
};

} // namespace listana
