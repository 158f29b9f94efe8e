#include "dbgsr/reference.hpp"

#include <algorithm>
#include <limits>

#include "dbgsr/lyndon.hpp"
#include "dbgsr/stringology.hpp"

namespace dbgsr::reference {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

bool matches_at(WordView text, std::size_t start, WordView w) {
    return std::equal(w.begin(), w.end(), text.begin() + static_cast<std::ptrdiff_t>(start));
}

Word slice(WordView text, std::size_t from, std::size_t to) {
    return Word(text.begin() + static_cast<std::ptrdiff_t>(from), text.begin() + static_cast<std::ptrdiff_t>(to));
}

Word expand(const Word& block, std::size_t n) {
    Word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(block[i % block.size()]);
    return out;
}

Word greedy(const Params& p, std::size_t cap, bool prefer_min) {
    const std::size_t total = sequence_length(p, cap);
    const std::size_t high = total / p.k;  // k^(n-1)
    const Symbol start = prefer_min ? p.max_symbol() : 0;

    std::vector<bool> seen(total, false);
    Word seq(p.n, start);
    seq.reserve(total);
    std::size_t window = word_rank(seq, p.k);
    seen[window] = true;
    while (seq.size() < total) {
        bool extended = false;
        for (Symbol step = 0; step < p.k; ++step) {
            const Symbol s = prefer_min ? step : p.max_symbol() - step;
            const std::size_t next = (window % high) * p.k + s;
            if (!seen[next]) {
                seen[next] = true;
                window = next;
                seq.push_back(s);
                extended = true;
                break;
            }
        }
        if (!extended) throw std::logic_error("greedy construction got stuck");
    }
    return rotate_left(seq, p.n);
}

struct Extended {
    Word text;
    std::vector<std::size_t> block_ending_at;  // block index, or none
};

// L_1 ... L_N followed by L_1 L_2 ... until at least k^n + 2n symbols.
Extended extended_blocks(const std::vector<Word>& blocks, std::size_t total, std::size_t n) {
    Extended ext;
    ext.block_ending_at.push_back(none);
    for (std::size_t i = 0; ext.text.size() < total + 2 * n; i = (i + 1) % blocks.size()) {
        ext.text.insert(ext.text.end(), blocks[i].begin(), blocks[i].end());
        ext.block_ending_at.resize(ext.text.size() + 1, none);
        ext.block_ending_at[ext.text.size()] = i;
    }
    return ext;
}

void offer(GapTable& table, std::vector<bool>& tied, std::size_t rank, GapResult candidate) {
    auto& slot = table.entries[rank];
    if (!slot || candidate.fill.size() < slot->fill.size()) {
        slot = std::move(candidate);
        tied[rank] = false;
    } else if (candidate.fill.size() == slot->fill.size() && candidate != *slot) {
        tied[rank] = true;
    }
}

std::size_t count_ties(const std::vector<bool>& tied) {
    return static_cast<std::size_t>(std::count(tied.begin(), tied.end(), true));
}

}  // namespace

std::size_t sequence_length(const Params& p, std::size_t cap) {
    auto total = power_if_at_most(p, cap);
    if (!total) throw cap_exceeded("k^n exceeds the reference cap of " + std::to_string(cap));
    return *total;
}

std::size_t word_rank(WordView w, Symbol k) {
    std::size_t rank = 0;
    for (Symbol s : w) rank = rank * k + s;
    return rank;
}

Word word_of_rank(std::size_t rank, const Params& p) {
    Word w(p.n);
    for (std::size_t i = p.n; i-- > 0;) {
        w[i] = rank % p.k;
        rank /= p.k;
    }
    return w;
}

Word greedy_prefer_min(const Params& p, std::size_t cap) { return greedy(p, cap, true); }

Word greedy_prefer_max(const Params& p, std::size_t cap) { return greedy(p, cap, false); }

std::vector<Word> lyndon_blocks(const Params& p, std::size_t cap) {
    sequence_length(p, cap);
    std::vector<Word> blocks;
    // Every Lyndon word of length <= n in increasing order.
    Word w{0};
    while (true) {
        if (p.n % w.size() == 0) blocks.push_back(w);
        if (w.size() == 1 && w[0] == p.max_symbol()) break;
        const std::size_t len = w.size();
        while (w.size() < p.n) w.push_back(w[w.size() - len]);
        while (w.back() == p.max_symbol()) w.pop_back();
        ++w.back();
    }
    return blocks;
}

Word block_sequence(const Params& p, std::size_t cap) {
    Word seq;
    for (const Word& block : lyndon_blocks(p, cap)) seq.insert(seq.end(), block.begin(), block.end());
    return seq;
}

Word naive_lnext(WordView lyndon, const Params& p) {
    if (lyndon.empty() || lyndon.size() > p.n) throw invalid_input("naive_lnext: need 1 <= |L| <= n");
    check_symbols(lyndon, p.k);
    if (!is_lyndon(lyndon)) throw invalid_input("naive_lnext: input is not a Lyndon word");
    if (lyndon.size() == 1 && lyndon[0] == p.max_symbol()) return Word{0};

    Word x = duval_next(lyndon, p, Checking::trust);
    if (p.n % x.size() == 0) return x;
    if (2 * x.size() < p.n) x = duval_next(x, p, Checking::trust);
    while (p.n % x.size() != 0) x = duval_next(x, p, Checking::trust);
    return x;
}

VSequence v_sequence(WordView lyndon, const Params& p) {
    if (lyndon.empty() || p.n % lyndon.size() != 0) throw invalid_input("v_sequence: |L| must divide n");
    check_symbols(lyndon, p.k);
    if (!is_lyndon(lyndon)) throw invalid_input("v_sequence: input is not a Lyndon word");
    if (lyndon.size() == 1 && lyndon[0] == p.max_symbol()) throw invalid_input("v_sequence: L must not be k-1");

    VSequence out;
    std::size_t remaining = lyndon.size();
    out.counters.push_back(remaining);
    while (remaining > 0) {
        Word v(lyndon.begin(), lyndon.begin() + static_cast<std::ptrdiff_t>(remaining));
        while (!v.empty() && v.back() == p.max_symbol()) v.pop_back();
        if (v.empty()) throw std::logic_error("v_sequence: prefix consists of k-1 only");
        ++v.back();
        remaining -= v.size();
        out.words.push_back(std::move(v));
        out.counters.push_back(remaining);
    }
    return out;
}

bool is_wrap_word(WordView w, const Params& p) {
    auto first_zero = std::find_if(w.begin(), w.end(), [&](Symbol s) { return s != p.max_symbol(); });
    return std::all_of(first_zero, w.end(), [](Symbol s) { return s == 0; });
}

GapResult brute_ftg(WordView w, const Params& p, std::size_t cap) {
    check_n_word(w, p);
    const std::size_t total = sequence_length(p, cap);
    const auto blocks = lyndon_blocks(p, cap);
    const auto ext = extended_blocks(blocks, total, p.n);

    std::optional<GapResult> best;
    for (std::size_t end = p.n; end <= ext.text.size(); ++end) {
        const std::size_t block = ext.block_ending_at[end];
        if (block == none) continue;
        for (std::size_t len = 0; len + p.n <= end; ++len) {
            if (best && len >= best->fill.size()) break;
            if (matches_at(ext.text, end - len - p.n, w)) {
                best = GapResult{blocks[block], slice(ext.text, end - len, end)};
                break;
            }
        }
        if (best && best->fill.empty()) break;
    }
    if (!best) throw std::logic_error("brute_ftg: word not found in the extended sequence");
    return *best;
}

GapResult brute_cover(WordView w, const Params& p, std::size_t cap) {
    check_n_word(w, p);
    if (is_wrap_word(w, p)) throw invalid_input("brute_cover: cover is undefined for (k-1)^p 0^(n-p)");
    const auto blocks = lyndon_blocks(p, cap);

    std::optional<GapResult> best;
    Word prefix;  // L_1 ... L_{i-1}
    for (const Word& block : blocks) {
        Word text = prefix;
        const Word power = expand(block, p.n);
        text.insert(text.end(), power.begin(), power.end());
        for (std::size_t start = text.size() - p.n + 1; start-- > 0;) {
            const std::size_t len = text.size() - start - p.n;
            if (best && len >= best->fill.size()) break;
            if (matches_at(text, start, w)) {
                best = GapResult{block, slice(text, start + p.n, text.size())};
                break;
            }
        }
        prefix.insert(prefix.end(), block.begin(), block.end());
    }
    if (!best) throw std::logic_error("brute_cover: word not found");
    return *best;
}

GapTable brute_ftg_all(const Params& p, std::size_t cap) {
    const std::size_t total = sequence_length(p, cap);
    const auto blocks = lyndon_blocks(p, cap);
    const auto ext = extended_blocks(blocks, total, p.n);

    std::vector<std::size_t> next_end(ext.text.size() + 1, none);
    for (std::size_t pos = ext.text.size() + 1; pos-- > 0;) {
        if (ext.block_ending_at[pos] != none)
            next_end[pos] = pos;
        else if (pos < ext.text.size())
            next_end[pos] = next_end[pos + 1];
    }

    GapTable table;
    table.entries.resize(total);
    std::vector<bool> tied(total, false);
    for (std::size_t start = 0; start < total; ++start) {
        const std::size_t end = next_end[start + p.n];
        const WordView window(ext.text.data() + start, p.n);
        offer(table, tied, word_rank(window, p.k),
              GapResult{blocks[ext.block_ending_at[end]], slice(ext.text, start + p.n, end)});
    }
    table.ambiguous = count_ties(tied);
    return table;
}

GapTable brute_cover_all(const Params& p, std::size_t cap) {
    const std::size_t total = sequence_length(p, cap);
    const auto blocks = lyndon_blocks(p, cap);
    const Word seq = block_sequence(p, cap);

    // Unique occurrence of each n-word lying wholly inside the (linear) sequence.
    std::vector<std::size_t> position(total, none);
    for (std::size_t start = 0; start + p.n <= seq.size(); ++start) {
        position[word_rank(WordView(seq.data() + start, p.n), p.k)] = start;
    }

    GapTable table;
    table.entries.resize(total);
    std::vector<bool> tied(total, false);
    std::vector<bool> inside_done(total, false);
    std::size_t prefix_len = 0;  // |L_1 ... L_{i-1}|
    for (const Word& block : blocks) {
        const Word power = expand(block, p.n);

        // Windows that overlap L_i^(r_i).
        const std::size_t tail_start = prefix_len >= p.n - 1 ? prefix_len - (p.n - 1) : 0;
        Word tail = slice(seq, tail_start, prefix_len);
        tail.insert(tail.end(), power.begin(), power.end());
        for (std::size_t s = 0; s + p.n <= tail.size(); ++s) {
            if (tail_start + s + p.n <= prefix_len) continue;
            offer(table, tied, word_rank(WordView(tail.data() + s, p.n), p.k),
                  GapResult{block, slice(tail, s + p.n, tail.size())});
        }

        // Windows inside L_1 ... L_{i-1}: the first i that contains one is
        // its best, later i only lengthen the fill.
        for (std::size_t rank = 0; rank < total; ++rank) {
            if (inside_done[rank] || position[rank] == none || position[rank] + p.n > prefix_len) continue;
            inside_done[rank] = true;
            Word fill = slice(seq, position[rank] + p.n, prefix_len);
            fill.insert(fill.end(), power.begin(), power.end());
            offer(table, tied, rank, GapResult{block, std::move(fill)});
        }
        prefix_len += block.size();
    }

    for (std::size_t rank = 0; rank < total; ++rank) {
        if (is_wrap_word(word_of_rank(rank, p), p)) {
            table.entries[rank].reset();
            tied[rank] = false;
        }
    }
    table.ambiguous = count_ties(tied);
    return table;
}

bool is_de_bruijn(WordView s, const Params& p, std::size_t cap) {
    const std::size_t total = sequence_length(p, cap);
    if (s.size() != total) throw invalid_input("is_de_bruijn: length must equal k^n");
    check_symbols(s, p.k);
    std::vector<bool> seen(total, false);
    for (std::size_t start = 0; start < total; ++start) {
        std::size_t rank = 0;
        for (std::size_t i = 0; i < p.n; ++i) rank = rank * p.k + s[(start + i) % total];
        if (seen[rank]) return false;
        seen[rank] = true;
    }
    return true;
}

}  // namespace dbgsr::reference
