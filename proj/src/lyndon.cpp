#include "dbgsr/lyndon.hpp"

#include "dbgsr/stringology.hpp"

namespace dbgsr {

namespace {

bool is_top_letter(WordView x, const Params& p) {
    return x.size() == 1 && x[0] == p.max_symbol();
}

void check_lyndon_input(WordView x, const Params& p, const char* what) {
    if (x.empty()) throw invalid_input(std::string(what) + ": empty word");
    if (x.size() > p.n) throw invalid_input(std::string(what) + ": word longer than n");
    check_symbols(x, p.k);
    if (!is_lyndon(x)) throw invalid_input(std::string(what) + ": input is not a Lyndon word");
}

// |len| divides n; skips the division in the common cases len = n and len > n/2
bool divides_n(std::size_t len, const Params& p) {
    return len == p.n || (2 * len <= p.n && p.n % len == 0);
}

}  // namespace

namespace detail {

void duval_step(Word& x, const Params& p) {
    const std::size_t period = x.size();
    for (std::size_t i = period; i < p.n; ++i) x.push_back(x[i - period]);
    while (!x.empty() && x.back() == p.max_symbol()) x.pop_back();
    if (x.empty()) throw std::logic_error("duval_step: input was the word k-1");
    ++x.back();
}

void lnext_in_place(Word& x, const Params& p) {
    if (is_top_letter(x, p)) {
        x.assign(1, 0);
        return;
    }
    if (x.size() == p.n && x.back() != p.max_symbol()) {
        ++x.back();
        return;
    }
    duval_step(x, p);
    if (divides_n(x.size(), p)) return;
    if (2 * x.size() < p.n) duval_step(x, p);

    // |x| > n/2 from here on; each pass at least halves n - |x|.
    while (!divides_n(x.size(), p)) {
        const std::size_t gap = p.n - x.size();
        std::size_t end = gap;
        while (end > 0 && x[end - 1] == p.max_symbol()) --end;
        if (end == 0) throw std::logic_error("lnext: prefix consists of k-1 only");
        const std::size_t repeats = gap / end;
        for (std::size_t r = 0; r < repeats; ++r) {
            for (std::size_t i = 0; i + 1 < end; ++i) x.push_back(x[i]);
            x.push_back(x[end - 1] + 1);
        }
    }
}

}  // namespace detail

Word duval_next(WordView lyndon, const Params& p, Checking checking) {
    if (checking == Checking::validate) {
        check_lyndon_input(lyndon, p, "duval_next");
        if (is_top_letter(lyndon, p)) throw invalid_input("duval_next: k-1 has no successor");
    }
    Word x(lyndon.begin(), lyndon.end());
    x.reserve(p.n);
    detail::duval_step(x, p);
    return x;
}

Word lnext(WordView lyndon, const Params& p, Checking checking) {
    if (checking == Checking::validate) check_lyndon_input(lyndon, p, "lnext");
    Word x(lyndon.begin(), lyndon.end());
    x.reserve(p.n);
    detail::lnext_in_place(x, p);
    return x;
}

}  // namespace dbgsr
