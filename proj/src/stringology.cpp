#include "dbgsr/stringology.hpp"

#include <algorithm>

namespace dbgsr {

namespace {

void require_non_empty(WordView w, const char* what) {
    if (w.empty()) throw invalid_input(std::string(what) + ": empty word");
}

// KMP failure function: border[i] is the length of the longest proper border
// of pattern[0, i).
std::vector<std::size_t> borders(WordView pattern) {
    std::vector<std::size_t> border(pattern.size() + 1, 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < pattern.size(); ++i) {
        while (b > 0 && pattern[i] != pattern[b]) b = border[b];
        if (pattern[i] == pattern[b]) ++b;
        border[i + 1] = b;
    }
    return border;
}

}  // namespace

std::size_t root_length(WordView v) {
    require_non_empty(v, "find_root");
    const std::size_t period = v.size() - borders(v).back();
    return v.size() % period == 0 ? period : v.size();
}

Word find_root(WordView v) {
    return Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(root_length(v)));
}

Word find_suffix(WordView u, WordView v) {
    if (u.size() > v.size()) throw not_found("find_suffix: pattern longer than text");
    if (u.empty()) return {};

    const auto border = borders(u);
    std::optional<std::size_t> last_end;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        while (matched > 0 && v[i] != u[matched]) matched = border[matched];
        if (v[i] == u[matched]) ++matched;
        if (matched == u.size()) {
            last_end = i + 1;
            matched = border[matched];
        }
    }
    if (!last_end) throw not_found("find_suffix: pattern does not occur in text");
    return Word(v.begin() + static_cast<std::ptrdiff_t>(*last_end), v.end());
}

std::size_t min_rotation_offset(WordView w) {
    require_non_empty(w, "find_min_rot");
    const std::size_t n = w.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const Symbol a = w[(i + k) % n];
        const Symbol b = w[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

Word find_min_rot(WordView w) {
    return rotate_left(w, min_rotation_offset(w));
}

bool is_lyndon(WordView w) {
    require_non_empty(w, "is_lyndon");
    // Aperiodic words have a unique least rotation.
    return root_length(w) == w.size() && min_rotation_offset(w) == 0;
}

Factorization cfl(WordView w) {
    require_non_empty(w, "cfl");
    Factorization out;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            k = w[k] < w[j] ? i : k + 1;
            ++j;
        }
        const std::size_t len = j - k;
        while (i <= k) {
            out.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                                     w.begin() + static_cast<std::ptrdiff_t>(i + len));
            i += len;
        }
    }
    return out;
}

std::optional<Word> is_expanded_lyndon(WordView w, const Params& p) {
    if (w.size() != p.n) throw invalid_input("is_expanded_lyndon: word length must equal n");
    Word root = find_root(w);
    if (!is_lyndon(root)) return std::nullopt;
    return root;
}

bool is_almost_lyndon(WordView w, const Params& p) {
    if (w.size() != p.n) throw invalid_input("is_almost_lyndon: word length must equal n");
    const auto top = p.max_symbol();
    const auto lead = static_cast<std::size_t>(
        std::find_if(w.begin(), w.end(), [top](Symbol s) { return s != top; }) - w.begin());
    Word moved(w.begin() + static_cast<std::ptrdiff_t>(lead), w.end());
    moved.insert(moved.end(), lead, top);
    return is_lyndon(find_root(moved));
}

}  // namespace dbgsr
