#pragma once

#include <optional>
#include <vector>

#include "dbgsr/word.hpp"

namespace dbgsr {

/// Chen-Fox-Lyndon factorization: Lyndon factors x_1 >= x_2 >= ... >= x_l
/// whose concatenation is the input.
struct Factorization {
    std::vector<Word> factors;

    bool operator==(const Factorization&) const = default;
};

/// Length of the shortest prefix x with v = x^t. O(|v|).
std::size_t root_length(WordView v);

/// Shortest non-empty prefix x such that v = x^t.
Word find_root(WordView v);

/// Shortest x such that u.x is a suffix of v, i.e. the tail of v after the
/// last occurrence of u. Throws not_found if u does not occur in v.
/// O(|u| + |v|).
Word find_suffix(WordView u, WordView v);

/// Start index of the lexicographically least rotation (smallest such
/// index when several rotations tie). O(|w|).
std::size_t min_rotation_offset(WordView w);

/// Least rotation of w, kept at full length |w|.
Word find_min_rot(WordView w);

bool is_lyndon(WordView w);

Factorization cfl(WordView w);

/// If w is an expanded Lyndon word L^r, returns L. Requires |w| == n.
std::optional<Word> is_expanded_lyndon(WordView w, const Params& p);

/// w = (k-1)^l u with l maximal, and u (k-1)^l an expanded Lyndon word.
/// Requires |w| == n.
bool is_almost_lyndon(WordView w, const Params& p);

}  // namespace dbgsr
