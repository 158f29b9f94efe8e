#pragma once

#include "dbgsr/word.hpp"

namespace dbgsr {

/// A block L of the prefer-min sequence (|L| divides n) together with the
/// fill x that extends a word w up to the end of some occurrence of L.
///
/// As a filling-the-gap answer, w.x is a suffix of L_1 ... L_i with
/// L = L_i and x as short as possible. As a cover, w.x is a suffix of
/// L_1 ... L_{i-1} L_i^{n/|L_i|} with x as short as possible.
struct GapResult {
    Word lyndon;
    Word fill;

    bool operator==(const GapResult&) const = default;
};

/// Turns the cover of an n-word into its filling-the-gap answer. Also
/// accepts (0, 0^p) for w = (k-1)^p 0^(n-p). Only the divisibility of
/// |lyndon| is checked; other inputs are outside the contract.
GapResult cover_to_ftg(const GapResult& cover, const Params& p);

/// Filling-the-gap for any n-word, with the block sequence read
/// cyclically. O(n).
GapResult filling_the_gap(WordView w, const Params& p);

}  // namespace dbgsr
