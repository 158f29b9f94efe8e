#include "dbgsr/ftg.hpp"

#include <algorithm>

#include "dbgsr/lyndon.hpp"
#include "dbgsr/stringology.hpp"

namespace dbgsr {

namespace {

// Handles w whose j > 0: w = (k-1)^(t-1) x_t ... where x_t is the first CFL
// factor other than k-1, and L_i < x_t <= L_{i+1}.
GapResult cover_from_factorization(WordView w, const Params& p) {
    const auto factors = cfl(w).factors;
    const auto first = std::find_if(factors.begin(), factors.end(), [&](const Word& f) {
        return !(f.size() == 1 && f[0] == p.max_symbol());
    });
    if (first == factors.end()) throw std::logic_error("filling_the_gap: word is all k-1");
    const auto lead = static_cast<std::size_t>(first - factors.begin());

    Word block = *first;
    if (p.n % block.size() != 0) block = lnext(block, p, Checking::trust);

    // (t-1)-suffix of block^(n/|block|)
    Word fill;
    fill.reserve(lead);
    for (std::size_t pos = p.n - lead; pos < p.n; ++pos) fill.push_back(block[pos % block.size()]);
    return cover_to_ftg({std::move(block), std::move(fill)}, p);
}

// Handles w whose j = 0: w is a rotation of L_i^(r_i) and sits inside
// L_i L_{i+1}^(r_{i+1}).
GapResult cover_from_rotation(WordView w, const Params& p) {
    const Word least = find_min_rot(w);
    Word block = find_root(least);
    Word next = lnext(block, p, Checking::trust);

    Word text = block;
    text.reserve(block.size() + p.n);
    for (std::size_t i = 0; i < p.n; ++i) text.push_back(next[i % next.size()]);
    Word fill = find_suffix(w, text);
    return cover_to_ftg({std::move(next), std::move(fill)}, p);
}

}  // namespace

GapResult cover_to_ftg(const GapResult& cover, const Params& p) {
    const std::size_t len = cover.lyndon.size();
    if (len == 0 || p.n % len != 0) throw invalid_input("cover_to_ftg: |lyndon| must divide n");

    const std::size_t head = p.n - len;  // |L^(r-1)|
    if (cover.fill.size() >= head) {
        return {cover.lyndon,
                Word(cover.fill.begin(), cover.fill.end() - static_cast<std::ptrdiff_t>(head))};
    }
    Word next = lnext(cover.lyndon, p, Checking::trust);
    Word fill = cover.fill;
    fill.insert(fill.end(), next.end() - static_cast<std::ptrdiff_t>(len), next.end());
    return {std::move(next), std::move(fill)};
}

GapResult filling_the_gap(WordView w, const Params& p) {
    check_n_word(w, p);
    const Symbol top = p.max_symbol();
    if (std::all_of(w.begin(), w.end(), [top](Symbol s) { return s == top; })) {
        return {Word{top}, {}};
    }

    Word root = find_root(w);
    if (is_lyndon(root)) return cover_to_ftg({std::move(root), {}}, p);

    if (is_almost_lyndon(w, p)) return cover_from_factorization(w, p);
    return cover_from_rotation(w, p);
}

}  // namespace dbgsr
