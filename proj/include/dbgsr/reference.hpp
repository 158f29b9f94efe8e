#pragma once

#include <optional>
#include <vector>

#include "dbgsr/ftg.hpp"
#include "dbgsr/word.hpp"

// Definition-level reference implementations. They materialize the whole
// sequence and are meant for verification only; every entry point refuses
// k^n above its cap.
namespace dbgsr::reference {

inline constexpr std::size_t default_cap = std::size_t{1} << 22;

/// k^n, or cap_exceeded.
std::size_t sequence_length(const Params& p, std::size_t cap = default_cap);

/// Position of an n-word in the base-k enumeration of all n-words.
std::size_t word_rank(WordView w, Symbol k);
Word word_of_rank(std::size_t rank, const Params& p);

/// Greedy construction: start from (k-1)^n, keep appending the smallest
/// symbol that creates no repeated n-word, stop at length k^n, rotate left n.
Word greedy_prefer_min(const Params& p, std::size_t cap = default_cap);

/// Mirror image: start from 0^n and append the largest feasible symbol.
Word greedy_prefer_max(const Params& p, std::size_t cap = default_cap);

/// All Lyndon words whose length divides n, in increasing order.
std::vector<Word> lyndon_blocks(const Params& p, std::size_t cap = default_cap);

/// Concatenation of lyndon_blocks.
Word block_sequence(const Params& p, std::size_t cap = default_cap);

/// Successor with |result| dividing n by repeated Duval steps. O(n^2).
Word naive_lnext(WordView lyndon, const Params& p);

/// Words v_1..v_m and counters k_1..k_{m+1} built from prefixes of a block L:
/// k_1 = |L|; v_j is the k_j-prefix of L with its trailing run of k-1
/// removed and last symbol increased; k_{j+1} = k_j - |v_j|; stop at 0.
struct VSequence {
    std::vector<Word> words;
    std::vector<std::size_t> counters;
};

VSequence v_sequence(WordView lyndon, const Params& p);

/// Filling-the-gap by exhaustive search over block endpoints of the
/// cyclically extended block sequence.
GapResult brute_ftg(WordView w, const Params& p, std::size_t cap = default_cap);

/// Cover by exhaustive search over L_1 ... L_{i-1} L_i^(n/|L_i|) for all i.
/// Rejects w = (k-1)^p 0^(n-p).
GapResult brute_cover(WordView w, const Params& p, std::size_t cap = default_cap);

/// True for words of the shape (k-1)^p 0^(n-p), 0 <= p <= n.
bool is_wrap_word(WordView w, const Params& p);

/// Result of an all-words oracle run, indexed by word_rank.
struct GapTable {
    std::vector<std::optional<GapResult>> entries;
    /// Words whose minimal fill was reached by two different blocks.
    std::size_t ambiguous = 0;
};

/// brute_ftg for every n-word in a single pass. O(k^n n).
GapTable brute_ftg_all(const Params& p, std::size_t cap = default_cap);

/// brute_cover for every n-word in a single pass; wrap words stay empty.
GapTable brute_cover_all(const Params& p, std::size_t cap = default_cap);

/// Every n-word occurs exactly once in s read cyclically. Requires |s| = k^n.
bool is_de_bruijn(WordView s, const Params& p, std::size_t cap = default_cap);

}  // namespace dbgsr::reference
