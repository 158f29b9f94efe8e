// dbgsr: generate and seek in the prefer-min / prefer-max De Bruijn sequences.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <array>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "dbgsr/bench.hpp"
#include "dbgsr/ftg.hpp"
#include "dbgsr/gsr.hpp"
#include "dbgsr/lyndon.hpp"
#include "dbgsr/reference.hpp"
#include "dbgsr/stringology.hpp"

namespace {

using namespace dbgsr;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_invalid = 2;

constexpr std::size_t exhaustive_cap = std::size_t{1} << 14;
constexpr std::size_t sample_budget = 256;

struct Common {
    std::size_t n = 0;
    Symbol k = 0;
    std::string word;
    std::string variant = "min";
    std::string format;
};

Variant parse_variant(const std::string& v) {
    if (v == "min") return Variant::prefer_min;
    if (v == "max") return Variant::prefer_max;
    throw invalid_input("variant must be min or max");
}

TextFormat parse_format(const std::string& f, Symbol k) {
    if (f.empty()) return default_format(k);
    if (f == "digits") return TextFormat::digits;
    if (f == "csv") return TextFormat::csv;
    throw invalid_input("format must be digits or csv");
}

void print_word(WordView w, Symbol k, TextFormat format) {
    std::cout << format_word(w, k, format) << '\n';
}

int run_generate(const Common& opt, std::optional<std::uint64_t> limit) {
    const Params p(opt.n, opt.k);
    const TextFormat format = parse_format(opt.format, p.k);
    if (format == TextFormat::digits && p.k > 10) throw invalid_input("digits format requires k <= 10");
    auto stream = generate_sequence(p, parse_variant(opt.variant), limit);

    std::array<Symbol, 1 << 14> chunk{};
    std::string text;
    bool first = true;
    while (std::size_t got = stream.read(chunk)) {
        text.clear();
        for (std::size_t i = 0; i < got; ++i) {
            if (format == TextFormat::digits) {
                text.push_back(static_cast<char>('0' + chunk[i]));
            } else {
                if (!first) text.push_back(',');
                text += std::to_string(chunk[i]);
            }
            first = false;
        }
        std::fwrite(text.data(), 1, text.size(), stdout);
    }
    std::fputc('\n', stdout);
    return exit_ok;
}

int run_gsr(const Common& opt, std::uint64_t count) {
    const Params p(opt.n, opt.k);
    const TextFormat format = parse_format(opt.format, p.k);
    const Word w = parse_word(opt.word, p.k, format);
    check_n_word(w, p);
    print_word(generalized_shift_rule(w, count, p, parse_variant(opt.variant)), p.k, format);
    return exit_ok;
}

int run_ftg(const Common& opt) {
    const Params p(opt.n, opt.k);
    const TextFormat format = parse_format(opt.format, p.k);
    const GapResult r = filling_the_gap(parse_word(opt.word, p.k, format), p);
    print_word(r.lyndon, p.k, format);
    print_word(r.fill, p.k, format);
    return exit_ok;
}

int run_lnext(const Common& opt) {
    const Params p(opt.n, opt.k);
    const TextFormat format = parse_format(opt.format, p.k);
    print_word(lnext(parse_word(opt.word, p.k, format), p), p.k, format);
    return exit_ok;
}

int run_cfl(const Common& opt) {
    if (opt.k < 2) throw invalid_input("k must be at least 2");
    const TextFormat format = parse_format(opt.format, opt.k);
    const auto factors = cfl(parse_word(opt.word, opt.k, format)).factors;
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out.push_back('|');
        out += format_word(factors[i], opt.k, format);
    }
    std::cout << out << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
};

std::vector<std::size_t> chosen_ranks(std::size_t total, bool exhaustive, const Params& p) {
    std::vector<std::size_t> ranks;
    if (exhaustive || total <= sample_budget) {
        for (std::size_t r = 0; r < total; ++r) ranks.push_back(r);
        return ranks;
    }
    for (std::size_t i = 0; i < sample_budget; ++i) ranks.push_back(i * total / sample_budget);
    // the words that straddle the end of the sequence
    for (std::size_t lead = 0; lead <= p.n; ++lead) {
        Word wrap(p.n, 0);
        std::fill(wrap.begin(), wrap.begin() + static_cast<std::ptrdiff_t>(lead), p.max_symbol());
        ranks.push_back(reference::word_rank(wrap, p.k));
    }
    return ranks;
}

std::vector<SuiteResult> verify_all(const Params& p, bool exhaustive) {
    const std::size_t total = reference::sequence_length(p, exhaustive ? exhaustive_cap : reference::default_cap);
    std::vector<SuiteResult> results;

    const Word greedy = reference::greedy_prefer_min(p);
    const Word blocks = reference::block_sequence(p);
    results.push_back({"blocks_vs_greedy", 1,
                       (greedy == blocks && reference::is_de_bruijn(greedy, p) && reference::is_de_bruijn(blocks, p))
                           ? 0u
                           : 1u});

    const auto ranks = chosen_ranks(total, exhaustive, p);

    // windows: position of every n-word in the greedy sequence, read cyclically
    std::vector<std::size_t> position(total);
    Word doubled = greedy;
    doubled.insert(doubled.end(), greedy.begin(), greedy.end());
    doubled.insert(doubled.end(), greedy.begin(), greedy.begin() + static_cast<std::ptrdiff_t>(std::min(p.n, total)));
    for (std::size_t s = 0; s < total; ++s) position[reference::word_rank(WordView(doubled.data() + s, p.n), p.k)] = s;

    SuiteResult windows{"gsr_windows"};
    for (std::size_t rank : ranks) {
        const Word w = reference::word_of_rank(rank, p);
        for (std::size_t c : {std::size_t{1}, p.n, total}) {
            ++windows.checked;
            const Word got = generalized_shift_rule(w, c, p);
            const auto from = doubled.begin() + static_cast<std::ptrdiff_t>(position[rank] + p.n);
            if (!std::equal(got.begin(), got.end(), from, from + static_cast<std::ptrdiff_t>(c))) ++windows.mismatches;
        }
    }
    results.push_back(windows);

    SuiteResult successors{"lnext_vs_naive"};
    std::vector<Word> lyndon{Word{0}};
    while (!(lyndon.back().size() == 1 && lyndon.back()[0] == p.max_symbol()))
        lyndon.push_back(duval_next(lyndon.back(), p, Checking::trust));
    const std::size_t stride = exhaustive ? 1 : std::max<std::size_t>(1, lyndon.size() / sample_budget);
    for (std::size_t i = 0; i < lyndon.size(); i += stride) {
        ++successors.checked;
        if (lnext(lyndon[i], p) != reference::naive_lnext(lyndon[i], p)) ++successors.mismatches;
    }
    results.push_back(successors);

    SuiteResult gaps{"ftg_vs_brute"};
    const auto table = reference::brute_ftg_all(p);
    gaps.mismatches += table.ambiguous;
    for (std::size_t rank : ranks) {
        ++gaps.checked;
        if (!table.entries[rank] || filling_the_gap(reference::word_of_rank(rank, p), p) != *table.entries[rank])
            ++gaps.mismatches;
    }
    results.push_back(gaps);
    return results;
}

int run_verify(const Common& opt, bool exhaustive) {
    const Params p(opt.n, opt.k);
    std::vector<SuiteResult> results;
    try {
        results = verify_all(p, exhaustive);
    } catch (const cap_exceeded& e) {
        throw invalid_input(std::string("cap exceeded: ") + e.what());
    }
    bool ok = true;
    for (const auto& r : results) {
        const bool pass = r.mismatches == 0;
        ok = ok && pass;
        std::cout << "suite=" << r.name << " n=" << p.n << " k=" << p.k << " mode=" << (exhaustive ? "exhaustive" : "sampled")
                  << " checked=" << r.checked << " mismatches=" << r.mismatches << " result=" << (pass ? "pass" : "fail")
                  << '\n';
    }
    return ok ? exit_ok : exit_verify_failed;
}

// ---------------------------------------------------------------------------
// bench

int run_bench(const std::vector<std::size_t>& ns, const std::vector<std::uint64_t>& cs, Symbol k, int reps) {
    if (ns.empty() || cs.empty()) throw invalid_input("bench needs non-empty --n and --c lists");
    if (reps < 1) throw invalid_input("--reps must be positive");
    std::mt19937_64 rng(20240917);
    std::cerr << "# n\tc\tnanoseconds\tsymbols_per_second\n";
    for (std::size_t n : ns) {
        const Params p(n, k);
        std::uniform_int_distribution<Symbol> dist(0, k - 1);
        Word w(n);
        for (auto& s : w) s = dist(rng);
        for (std::uint64_t c : cs) {
            std::size_t sink = 0;
            const double ns_taken = median_runtime_ns([&] { sink += generalized_shift_rule(w, c, p).size(); }, reps);
            const double rate = ns_taken > 0 ? static_cast<double>(c) * 1e9 / ns_taken : 0.0;
            std::cout << n << '\t' << c << '\t' << static_cast<std::uint64_t>(ns_taken) << '\t'
                      << static_cast<std::uint64_t>(rate) << '\n';
            if (sink == 0 && c > 0) std::cerr << "unexpected empty output\n";
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"De Bruijn generalized shift rule (prefer-min / prefer-max)"};
    app.require_subcommand(1);

    Common opt;
    std::optional<std::uint64_t> limit;
    std::uint64_t count = 1;
    bool exhaustive = false;
    std::vector<std::size_t> bench_n;
    std::vector<std::uint64_t> bench_c;
    Symbol bench_k = 2;
    int bench_reps = 31;

    auto add_params = [&](CLI::App* cmd, bool with_n = true) {
        if (with_n) cmd->add_option("--n", opt.n, "word length")->required();
        cmd->add_option("--k", opt.k, "alphabet size")->required();
        cmd->add_option("--format", opt.format, "digits or csv (default: digits when k <= 10)");
    };

    auto* generate = app.add_subcommand("generate", "stream the sequence to standard output");
    add_params(generate);
    generate->add_option("--variant", opt.variant, "min or max");
    generate->add_option("--limit", limit, "stop after this many symbols");

    auto* gsr = app.add_subcommand("gsr", "symbols that follow a word");
    add_params(gsr);
    gsr->add_option("--word", opt.word)->required();
    gsr->add_option("--count", count, "number of symbols (default 1)");
    gsr->add_option("--variant", opt.variant, "min or max");

    auto* next = app.add_subcommand("next", "the symbol that follows a word");
    add_params(next);
    next->add_option("--word", opt.word)->required();
    next->add_option("--variant", opt.variant, "min or max");

    auto* ftg = app.add_subcommand("ftg", "filling-the-gap: block and fill, one per line");
    add_params(ftg);
    ftg->add_option("--word", opt.word)->required();

    auto* lnext_cmd = app.add_subcommand("lnext", "next Lyndon word whose length divides n");
    add_params(lnext_cmd);
    lnext_cmd->add_option("--word", opt.word)->required();

    auto* cfl_cmd = app.add_subcommand("cfl", "Lyndon factorization, factors separated by |");
    add_params(cfl_cmd, false);
    cfl_cmd->add_option("--word", opt.word)->required();

    auto* verify = app.add_subcommand("verify", "check against the brute-force oracles");
    add_params(verify);
    verify->add_flag("--exhaustive", exhaustive, "check every n-word");

    auto* bench = app.add_subcommand("bench", "time gsr for every (n, c) pair");
    bench->add_option("--n", bench_n, "comma-separated word lengths")->delimiter(',');
    bench->add_option("--c", bench_c, "comma-separated counts")->delimiter(',');
    bench->add_option("--k", bench_k, "alphabet size");
    bench->add_option("--reps", bench_reps, "timed repetitions per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }

    try {
        if (*generate) return run_generate(opt, limit);
        if (*gsr) return run_gsr(opt, count);
        if (*next) return run_gsr(opt, 1);
        if (*ftg) return run_ftg(opt);
        if (*lnext_cmd) return run_lnext(opt);
        if (*cfl_cmd) return run_cfl(opt);
        if (*verify) return run_verify(opt, exhaustive);
        if (*bench) return run_bench(bench_n, bench_c, bench_k, bench_reps);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const not_found& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}
