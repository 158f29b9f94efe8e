#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dbgsr {

using Symbol = std::uint64_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

/// Raised for malformed arguments: bad parameters, out-of-range symbols,
/// wrong word lengths, violated preconditions.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a searched-for pattern does not occur.
class not_found : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the reference oracles when k^n exceeds the materialization cap.
class cap_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Word length n and alphabet size k of a De Bruijn sequence.
struct Params {
    std::size_t n;
    Symbol k;

    Params(std::size_t n_, Symbol k_);

    Symbol max_symbol() const noexcept { return k - 1; }

    bool operator==(const Params&) const = default;
};

/// k^n if it does not exceed `cap`, otherwise nullopt. Never overflows.
std::optional<std::size_t> power_if_at_most(const Params& p, std::size_t cap);

enum class TextFormat { digits, csv };

/// digits when k <= 10, csv otherwise.
TextFormat default_format(Symbol k) noexcept;

std::strong_ordering compare_lex(WordView a, WordView b) noexcept;

/// yx where w = xy and |x| = t mod |w|.
Word rotate_left(WordView w, std::size_t t);

/// Symbol-wise m -> k-1-m.
Word complement(WordView w, const Params& p);

/// Throws invalid_input if some symbol is >= k.
void check_symbols(WordView w, Symbol k);

/// Throws invalid_input unless |w| == n and every symbol is < k.
void check_n_word(WordView w, const Params& p);

Word parse_word(std::string_view text, Symbol k, TextFormat format);
std::string format_word(WordView w, Symbol k, TextFormat format);

}  // namespace dbgsr
