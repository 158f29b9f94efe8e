#include "doctest.h"

#include "dbgsr/reference.hpp"
#include "lemma_checks.hpp"
#include "test_support.hpp"

using namespace dbgsr;
using namespace dbgsr::reference;
using dbgsr::testing::w;

TEST_CASE("greedy oracles") {
    CHECK(greedy_prefer_min(Params(3, 2)) == w("00010111"));
    CHECK(greedy_prefer_min(Params(2, 3)) == w("001021122"));
    CHECK(greedy_prefer_min(Params(1, 3)) == w("012"));
    CHECK(greedy_prefer_max(Params(2, 3)) == w("221201100"));
    CHECK(greedy_prefer_max(Params(1, 2)) == w("10"));
    CHECK(greedy_prefer_max(Params(3, 2)) == complement(greedy_prefer_min(Params(3, 2)), Params(3, 2)));
    CHECK_THROWS_AS(greedy_prefer_min(Params(23, 2)), cap_exceeded);
    CHECK_THROWS_AS(greedy_prefer_min(Params(30, 2)), cap_exceeded);
    CHECK_THROWS_AS(greedy_prefer_min(Params(4, 3), 80), cap_exceeded);
}

TEST_CASE("block_sequence") {
    CHECK(block_sequence(Params(3, 2)) == w("00010111"));
    CHECK(block_sequence(Params(2, 3)) == w("001021122"));
    CHECK(lyndon_blocks(Params(3, 3)) == std::vector<Word>{w("0"), w("001"), w("002"), w("011"), w("012"), w("021"),
                                                          w("022"), w("1"), w("112"), w("122"), w("2")});
    CHECK(block_sequence(Params(3, 3)).size() == 27);
}

TEST_CASE("block construction equals the greedy sequence") {
    for (Symbol k = 2; k <= 5; ++k) {
        for (std::size_t n = 1; n <= 16; ++n) {
            const Params p(n, k);
            if (!power_if_at_most(p, 4096)) continue;
            const Word seq = block_sequence(p);
            CHECK(seq == greedy_prefer_min(p));
            CHECK(is_de_bruijn(seq, p));
            CHECK(greedy_prefer_max(p) == complement(greedy_prefer_min(p), p));
            CHECK(is_de_bruijn(greedy_prefer_max(p), p));
        }
    }
}

TEST_CASE("naive_lnext") {
    CHECK(naive_lnext(w("2"), Params(4, 3)) == w("0"));
    CHECK(naive_lnext(w("0010111"), Params(7, 2)) == w("0011011"));
    CHECK(naive_lnext(w("012"), Params(3, 3)) == w("021"));
    CHECK_THROWS_AS(naive_lnext(w("10"), Params(3, 2)), invalid_input);
}

TEST_CASE("v_sequence") {
    auto v = v_sequence(w("0010111"), Params(7, 2));
    CHECK(v.words == std::vector<Word>{w("0011"), w("01"), w("1")});
    CHECK(v.counters == std::vector<std::size_t>{7, 3, 1, 0});

    v = v_sequence(w("0"), Params(2, 2));
    CHECK(v.words == std::vector<Word>{w("1")});
    CHECK(v.counters == std::vector<std::size_t>{1, 0});

    // L^(r-1) v_1 v_2 = 01.1.1 = 0111 = lnext(01) for n = 4
    v = v_sequence(w("01"), Params(4, 2));
    CHECK(v.words == std::vector<Word>{w("1"), w("1")});
    CHECK(v.counters == std::vector<std::size_t>{2, 1, 0});

    CHECK_THROWS_AS(v_sequence(w("1"), Params(2, 2)), invalid_input);
    CHECK_THROWS_AS(v_sequence(w("001"), Params(4, 2)), invalid_input);
    CHECK_THROWS_AS(v_sequence(w("10"), Params(4, 2)), invalid_input);
}

TEST_CASE("brute_ftg and brute_cover") {
    CHECK(brute_ftg(w("100"), Params(3, 2)) == GapResult{w("001"), w("01")});
    CHECK(brute_ftg(w("111"), Params(3, 2)) == GapResult{w("1"), w("")});
    CHECK(brute_ftg(w("000"), Params(3, 2)) == GapResult{w("001"), w("1")});

    const Params p4(4, 2);
    CHECK(brute_cover(w("0101"), p4) == GapResult{w("01"), w("")});
    CHECK(brute_cover(w("1001"), p4) == GapResult{w("0011"), w("1")});
    CHECK(brute_cover(w("0110"), p4) == GapResult{w("01"), w("101")});
    CHECK_THROWS_AS(brute_cover(w("1100"), p4), invalid_input);
    CHECK_THROWS_AS(brute_cover(w("0000"), p4), invalid_input);
    CHECK_THROWS_AS(brute_cover(w("1111"), p4), invalid_input);
}

TEST_CASE("brute_cover_all agrees with single-word brute_cover") {
    for (auto [n, k] : {std::pair<std::size_t, Symbol>{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {3, 3}, {2, 4}}) {
        const Params p(n, k);
        const auto table = brute_cover_all(p);
        CHECK(table.ambiguous == 0);
        for (std::size_t rank = 0; rank < table.entries.size(); ++rank) {
            const Word word = word_of_rank(rank, p);
            if (is_wrap_word(word, p)) {
                CHECK_FALSE(table.entries[rank].has_value());
                continue;
            }
            REQUIRE(table.entries[rank].has_value());
            REQUIRE(brute_cover(word, p) == *table.entries[rank]);
        }
    }
}

TEST_CASE("is_de_bruijn") {
    CHECK(is_de_bruijn(w("00010111"), Params(3, 2)));
    CHECK_FALSE(is_de_bruijn(w("00011111"), Params(3, 2)));
    CHECK(is_de_bruijn(w("0110"), Params(2, 2)));
    CHECK_THROWS_AS(is_de_bruijn(w("0110"), Params(3, 2)), invalid_input);
}

TEST_CASE("word ranks round-trip") {
    const Params p(4, 3);
    for (std::size_t rank = 0; rank < 81; ++rank) CHECK(word_rank(word_of_rank(rank, p), p.k) == rank);
}

TEST_CASE("structural lemmas on the block sequence") {
    for (Symbol k = 2; k <= 3; ++k) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const Params p(n, k);
            INFO("n=" << n << " k=" << k);
            CHECK(testing::consecutive_short_violations(p) == 0);
            CHECK(testing::v_sequence_violations(p) == 0);
            CHECK(testing::successor_structure_violations(p) == 0);
        }
    }
}
