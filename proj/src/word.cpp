#include "dbgsr/word.hpp"

#include <algorithm>
#include <charconv>

namespace dbgsr {

Params::Params(std::size_t n_, Symbol k_) : n(n_), k(k_) {
    if (n == 0) throw invalid_input("n must be at least 1");
    if (k < 2) throw invalid_input("k must be at least 2");
}

std::optional<std::size_t> power_if_at_most(const Params& p, std::size_t cap) {
    std::size_t value = 1;
    for (std::size_t i = 0; i < p.n; ++i) {
        if (p.k > cap || value > cap / p.k) return std::nullopt;
        value *= p.k;
    }
    return value;
}

TextFormat default_format(Symbol k) noexcept {
    return k <= 10 ? TextFormat::digits : TextFormat::csv;
}

std::strong_ordering compare_lex(WordView a, WordView b) noexcept {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Word rotate_left(WordView w, std::size_t t) {
    if (w.empty()) {
        if (t > 0) throw invalid_input("cannot rotate the empty word");
        return {};
    }
    t %= w.size();
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(t), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
    return out;
}

Word complement(WordView w, const Params& p) {
    Word out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [&](Symbol s) { return p.max_symbol() - s; });
    return out;
}

void check_symbols(WordView w, Symbol k) {
    for (Symbol s : w) {
        if (s >= k) {
            throw invalid_input("symbol " + std::to_string(s) + " out of range for k=" + std::to_string(k));
        }
    }
}

void check_n_word(WordView w, const Params& p) {
    if (w.size() != p.n) throw invalid_input("word length must equal n");
    check_symbols(w, p.k);
}

Word parse_word(std::string_view text, Symbol k, TextFormat format) {
    Word out;
    if (format == TextFormat::digits) {
        if (k > 10) throw invalid_input("digits format requires k <= 10");
        out.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw invalid_input(std::string("malformed symbol '") + c + "'");
            out.push_back(static_cast<Symbol>(c - '0'));
        }
    } else {
        if (text.empty()) return out;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            Symbol value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
                throw invalid_input("malformed token '" + std::string(token) + "'");
            }
            out.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    check_symbols(out, k);
    return out;
}

std::string format_word(WordView w, Symbol k, TextFormat format) {
    check_symbols(w, k);
    std::string out;
    if (format == TextFormat::digits) {
        if (k > 10) throw invalid_input("digits format requires k <= 10");
        out.reserve(w.size());
        for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace dbgsr
