#include "doctest.h"

#include <chrono>

#include "dbgsr/stringology.hpp"
#include "test_support.hpp"

using namespace dbgsr;
using dbgsr::testing::for_each_word;
using dbgsr::testing::w;

namespace {

// Every factorization of x into Lyndon words with non-increasing factors.
void lyndon_factorizations(const Word& x, std::size_t from, std::vector<Word>& cur,
                           std::vector<std::vector<Word>>& out) {
    if (from == x.size()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t to = from + 1; to <= x.size(); ++to) {
        Word f(x.begin() + static_cast<std::ptrdiff_t>(from), x.begin() + static_cast<std::ptrdiff_t>(to));
        if (!testing::lyndon_by_rotations(f)) continue;
        if (!cur.empty() && cur.back() < f) continue;
        cur.push_back(f);
        lyndon_factorizations(x, to, cur, out);
        cur.pop_back();
    }
}

Word brute_suffix(const Word& u, const Word& v) {
    for (std::size_t len = 0; len + u.size() <= v.size(); ++len) {
        const std::size_t start = v.size() - len - u.size();
        if (std::equal(u.begin(), u.end(), v.begin() + static_cast<std::ptrdiff_t>(start)))
            return Word(v.end() - static_cast<std::ptrdiff_t>(len), v.end());
    }
    throw not_found("absent");
}

Word brute_root(const Word& v) {
    for (std::size_t len = 1; len <= v.size(); ++len) {
        if (v.size() % len) continue;
        bool ok = true;
        for (std::size_t i = 0; i < v.size() && ok; ++i) ok = v[i] == v[i % len];
        if (ok) return Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len));
    }
    return v;
}

}  // namespace

TEST_CASE("find_root examples") {
    CHECK(find_root(w("010101")) == w("01"));
    CHECK(find_root(w("0010111")) == w("0010111"));
    CHECK(find_root(w("000")) == w("0"));
    CHECK(find_root(w("0100")) == w("0100"));
    CHECK_THROWS_AS(find_root(w("")), invalid_input);
}

TEST_CASE("find_suffix examples") {
    CHECK(find_suffix(w("01"), w("0011")) == w("1"));
    CHECK(find_suffix(w("0"), w("00")).empty());
    // oracle: last occurrence by scanning
    CHECK(brute_suffix(w("0110"), w("00110101")) == w("101"));
    CHECK(find_suffix(w("0110"), w("00110101")) == w("101"));
    CHECK_THROWS_AS(find_suffix(w("11"), w("0101")), not_found);
    CHECK_THROWS_AS(find_suffix(w("0101"), w("01")), not_found);
}

TEST_CASE("find_min_rot examples") {
    CHECK(find_min_rot(w("210")) == w("021"));
    CHECK(find_min_rot(w("1101")) == w("0111"));
    CHECK(find_min_rot(w("000")) == w("000"));
    CHECK(find_min_rot(w("1010")) == w("0101"));
    CHECK_THROWS_AS(find_min_rot(w("")), invalid_input);
}

TEST_CASE("is_lyndon examples") {
    CHECK(is_lyndon(w("0010111")));
    CHECK_FALSE(is_lyndon(w("0101")));
    CHECK_FALSE(is_lyndon(w("10")));
    CHECK(is_lyndon(w("2")));
    CHECK_THROWS_AS(is_lyndon(w("")), invalid_input);
}

TEST_CASE("cfl examples") {
    CHECK(cfl(w("211")).factors == std::vector<Word>{w("2"), w("1"), w("1")});
    CHECK(cfl(w("0010111")).factors == std::vector<Word>{w("0010111")});

    std::vector<std::vector<Word>> all;
    std::vector<Word> cur;
    lyndon_factorizations(w("110010"), 0, cur, all);
    REQUIRE(all.size() == 1);
    CHECK(all.front() == std::vector<Word>{w("1"), w("1"), w("001"), w("0")});
    CHECK(cfl(w("110010")).factors == all.front());
    CHECK_THROWS_AS(cfl(w("")), invalid_input);
}

TEST_CASE("is_expanded_lyndon examples") {
    const Params p(4, 2);
    CHECK(is_expanded_lyndon(w("0101"), p) == w("01"));
    CHECK(is_expanded_lyndon(w("0111"), p) == w("0111"));
    CHECK_FALSE(is_expanded_lyndon(w("0110"), p).has_value());
    CHECK(is_expanded_lyndon(w("1111"), p) == w("1"));
    CHECK_THROWS_AS(is_expanded_lyndon(w("011"), p), invalid_input);
}

TEST_CASE("is_almost_lyndon examples") {
    const Params p(4, 2);
    REQUIRE(is_expanded_lyndon(w("0111"), p).has_value());
    CHECK(is_almost_lyndon(w("1101"), p));
    CHECK(is_almost_lyndon(w("1100"), p));
    CHECK_FALSE(is_almost_lyndon(w("0110"), p));
    CHECK(is_almost_lyndon(w("0101"), p));
    CHECK(is_almost_lyndon(w("1111"), p));
    CHECK_THROWS_AS(is_almost_lyndon(w("110"), p), invalid_input);
}

TEST_CASE("exhaustive properties on small alphabets") {
    for (Symbol k = 2; k <= 3; ++k) {
        const std::size_t max_len = k == 2 ? 10 : 7;
        for (std::size_t len = 1; len <= max_len; ++len) {
            for_each_word(len, k, [&](const Word& x) {
                const auto factors = cfl(x).factors;
                Word joined;
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    REQUIRE(is_lyndon(factors[i]));
                    if (i) REQUIRE(!(factors[i - 1] < factors[i]));
                    joined.insert(joined.end(), factors[i].begin(), factors[i].end());
                }
                REQUIRE(joined == x);

                const Word root = find_root(x);
                REQUIRE(root == brute_root(x));
                Word power;
                while (power.size() < x.size()) power.insert(power.end(), root.begin(), root.end());
                REQUIRE(power == x);

                const Word least = find_min_rot(x);
                for (std::size_t t = 0; t < len; ++t) REQUIRE(!(rotate_left(x, t) < least));
                REQUIRE(least.size() == x.size());

                REQUIRE(is_lyndon(x) == testing::lyndon_by_rotations(x));
            });
        }
    }
}

TEST_CASE("find_suffix matches the shortest fill by enumeration") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 3000; ++trial) {
        const Word v = testing::random_word(rng, 1 + trial % 14, 2);
        std::uniform_int_distribution<std::size_t> start(0, v.size() - 1);
        const std::size_t s = start(rng);
        std::uniform_int_distribution<std::size_t> len(0, v.size() - s);
        const Word u(v.begin() + static_cast<std::ptrdiff_t>(s),
                     v.begin() + static_cast<std::ptrdiff_t>(s + len(rng)));
        const Word x = find_suffix(u, v);
        REQUIRE(x == brute_suffix(u, v));
    }
}

TEST_CASE("helpers scale linearly") {
    std::mt19937_64 rng(17);
    auto time_of = [](auto&& f) {
        double best = 1e100;
        for (int rep = 0; rep < 5; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            f();
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        return best;
    };
    std::vector<double> cfl_t, rot_t, root_t;
    for (std::size_t n : {std::size_t{1} << 16, std::size_t{1} << 17, std::size_t{1} << 18}) {
        const Word x = testing::random_word(rng, n, 2);
        Word periodic;
        while (periodic.size() < n) periodic.insert(periodic.end(), {0, 0, 1, 0, 1});
        cfl_t.push_back(time_of([&] { (void)cfl(x); }));
        rot_t.push_back(time_of([&] { (void)find_min_rot(x); }));
        root_t.push_back(time_of([&] { (void)find_root(periodic); }));
    }
    // 4x the input: linear is ~4, quadratic ~16
    CHECK(cfl_t[2] / cfl_t[0] <= 8.0);
    CHECK(rot_t[2] / rot_t[0] <= 8.0);
    CHECK(root_t[2] / root_t[0] <= 8.0);
}
