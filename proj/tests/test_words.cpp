#include "tmm/words.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace tmm;

TEST_CASE("thue_morse base cases") {
    CHECK(thue_morse(0).view() == "a");
    CHECK(thue_morse(1).view() == "ab");
    CHECK(thue_morse(2).view() == "abba");
    CHECK(thue_morse(3).view() == "abbabaab");
}

TEST_CASE("thue_morse satisfies the doubling recurrence") {
    for (unsigned n = 1; n <= 12; ++n) {
        const Word prev = thue_morse(n - 1);
        CHECK(thue_morse(n) == prev + complement(prev));
        CHECK(thue_morse(n).size() == (std::size_t{1} << n));
    }
}

TEST_CASE("thue_morse rejects n above the cap") {
    CHECK_THROWS_AS(thue_morse(40), std::length_error);
    CHECK_THROWS_AS(thue_morse(5, 4), std::length_error);
    CHECK_NOTHROW(thue_morse(4, 4));
}

TEST_CASE("complement swaps symbols and is an involution") {
    CHECK(complement(Word("abba")).view() == "baab");
    CHECK(complement(Word("")).view() == "");
    // second half of t_4
    CHECK(complement(Word("abbabaab")).view() == "baababba");
    CHECK(complement(Word("abbabaab")) == thue_morse(4).slice(9, 16));

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Word w = oracles::random_word(rng, 40, 2);
        CHECK(complement(complement(w)) == w);
    }
}

TEST_CASE("complement rejects symbols outside {a,b}") {
    CHECK_THROWS_AS(complement(Word("abc")), std::invalid_argument);
}

TEST_CASE("occurrences finds all intervals in order") {
    const auto occ_b = occurrences(Word("abba"), Word("b"));
    REQUIRE(occ_b.size() == 2);
    CHECK(occ_b[0] == Interval{2, 2});
    CHECK(occ_b[1] == Interval{3, 3});

    const auto occ_ab = occurrences(thue_morse(3), Word("ab"));
    REQUIRE(occ_ab.size() == 3);
    CHECK(occ_ab[0] == Interval{1, 2});
    CHECK(occ_ab[1] == Interval{4, 5});
    CHECK(occ_ab[2] == Interval{7, 8});

    CHECK(occurrences(Word("abba"), Word("aa")).empty());
    CHECK(occurrences(Word("ab"), Word("abba")).empty());
}

TEST_CASE("occurrences includes overlaps") {
    const auto occ = occurrences(Word("aaaa"), Word("aa"));
    REQUIRE(occ.size() == 3);
    CHECK(occ[0] == Interval{1, 2});
    CHECK(occ[1] == Interval{2, 3});
    CHECK(occ[2] == Interval{3, 4});
}

TEST_CASE("occurrences rejects an empty pattern") {
    CHECK_THROWS_AS(occurrences(Word("ab"), Word("")), std::domain_error);
}

TEST_CASE("every reported interval really matches") {
    std::mt19937 rng(11);
    for (int i = 0; i < 80; ++i) {
        const Word w = oracles::random_word(rng, 50, 2);
        const Word x = oracles::random_word(rng, 4, 2);
        std::size_t prev_begin = 0;
        for (const Interval& occ : occurrences(w, x)) {
            CHECK(occ.end - occ.begin + 1 == x.size());
            CHECK(w.slice(occ.begin, occ.end) == x);
            CHECK(occ.begin > prev_begin);
            prev_begin = occ.begin;
        }
    }
}

TEST_CASE("word indexing is 1-based and bounds-checked") {
    const Word w("abba");
    CHECK(w.symbol(1) == 'a');
    CHECK(w.symbol(4) == 'a');
    CHECK(w.slice(2, 3).view() == "bb");
    CHECK(w.slice(1, 4) == w);
    CHECK_THROWS_AS(w.symbol(0), std::domain_error);
    CHECK_THROWS_AS(w.symbol(5), std::domain_error);
    CHECK_THROWS_AS(w.slice(3, 2), std::domain_error);
    CHECK_THROWS_AS(w.slice(0, 2), std::domain_error);
    CHECK_THROWS_AS(w.slice(1, 5), std::domain_error);
}
