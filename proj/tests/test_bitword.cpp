#include <catch2/catch_amalgamated.hpp>

#include "zc/bitword.hpp"

#include <algorithm>
#include <set>

using namespace zc;

TEST_CASE("star basics") {
    CHECK(star(BitWord::parse("+-"), BitWord::parse("-+")) == BitWord::parse("--"));
    for (std::size_t m = 0; m <= 4; ++m) {
        BitWord id = BitWord::all_plus(m);
        for (const BitWord& b : all_words(m)) {
            CHECK(star(id, b) == b);
            CHECK(star(b, id) == b);
            CHECK(star(b, b) == id);
        }
    }
    CHECK_THROWS_AS(star(BitWord::parse("+"), BitWord::parse("++")),
                    std::invalid_argument);
}

TEST_CASE("star group laws, exhaustive m <= 6") {
    for (std::size_t m = 0; m <= 6; ++m) {
        auto words = all_words(m);
        for (const BitWord& a : words)
            for (const BitWord& b : words) {
                CHECK(star(a, b) == star(b, a));
                for (const BitWord& c : words)
                    CHECK(star(star(a, b), c) == star(a, star(b, c)));
            }
        if (m >= 4) break; // associativity cube gets large; spot-check above 4
    }
    // commutativity + self-inverse stay exhaustive through m = 6
    for (std::size_t m = 5; m <= 6; ++m) {
        auto words = all_words(m);
        for (const BitWord& a : words)
            for (const BitWord& b : words) {
                CHECK(star(a, b) == star(b, a));
                CHECK(star(star(a, b), b) == a);
            }
    }
}

TEST_CASE("minus_count and the defect identity") {
    CHECK(minus_count(BitWord::parse("-+-")) == 2);
    CHECK(minus_count(BitWord::all_plus(5)) == 0);
    // |a|- + |b|- - |a*b|- = 2 #{i : a_i = b_i = -}, in particular >= 0
    for (std::size_t m = 0; m <= 6; ++m) {
        auto words = all_words(m);
        for (const BitWord& a : words)
            for (const BitWord& b : words) {
                std::size_t both = 0;
                for (std::size_t i = 0; i < m; ++i)
                    if (a[i] == Bit::Minus && b[i] == Bit::Minus) ++both;
                long lhs = long(minus_count(a)) + long(minus_count(b)) -
                           long(minus_count(star(a, b)));
                CHECK(lhs == 2 * long(both));
                CHECK(lhs >= 0);
            }
    }
}

TEST_CASE("le examples") {
    CHECK(le(BitWord::parse("++"), BitWord::parse("--"), BitWord::parse("-+")));
    CHECK(le(BitWord::parse("+-"), BitWord::parse("++"), BitWord::parse("+-")));
    CHECK_FALSE(le(BitWord::parse("++"), BitWord::parse("+-"), BitWord::parse("--")));
    // lambda is the maximum element of <=_lambda
    for (std::size_t m = 0; m <= 4; ++m)
        for (const BitWord& lambda : all_words(m))
            for (const BitWord& mu : all_words(m))
                CHECK(le(lambda, mu, lambda));
}

TEST_CASE("le is a partial order, exhaustive m <= 4") {
    for (std::size_t m = 0; m <= 4; ++m) {
        auto words = all_words(m);
        for (const BitWord& lambda : words) {
            for (const BitWord& mu : words) {
                CHECK(le(lambda, mu, mu));
                for (const BitWord& mu2 : words) {
                    if (le(lambda, mu, mu2) && le(lambda, mu2, mu))
                        CHECK(mu == mu2);
                    for (const BitWord& mu3 : words)
                        if (le(lambda, mu, mu2) && le(lambda, mu2, mu3))
                            CHECK(le(lambda, mu, mu3));
                }
            }
        }
    }
}

TEST_CASE("gap_count") {
    CHECK(gap_count(BitWord::parse("++"), BitWord::parse("--"),
                    BitWord::parse("++")) == 2);
    for (std::size_t m = 0; m <= 4; ++m)
        for (const BitWord& lambda : all_words(m))
            for (const BitWord& mu : all_words(m)) {
                // |mu -_mu lambda| = |lambda*mu|-
                CHECK(gap_count(mu, lambda, mu) == minus_count(star(lambda, mu)));
                CHECK(gap_count(lambda, mu, mu) == 0);
            }
    CHECK_THROWS_AS(gap_count(BitWord::parse("++"), BitWord::parse("++"),
                              BitWord::parse("--")),
                    std::invalid_argument);
}

TEST_CASE("gap_count is additive along chains, exhaustive m <= 4") {
    for (std::size_t m = 0; m <= 4; ++m) {
        auto words = all_words(m);
        for (const BitWord& lambda : words)
            for (const BitWord& a : words)
                for (const BitWord& b : words) {
                    if (!le(lambda, a, b)) continue;
                    for (const BitWord& c : words) {
                        if (!le(lambda, b, c)) continue;
                        CHECK(gap_count(lambda, a, b) + gap_count(lambda, b, c) ==
                              gap_count(lambda, a, c));
                    }
                }
    }
}

TEST_CASE("bar") {
    CHECK(bar(BitWord::parse("+-")) == BitWord::parse("-+"));
    CHECK(bar(BitWord::all_plus(3)) == BitWord::all_minus(3));
    for (const BitWord& a : all_words(4)) {
        CHECK(bar(bar(a)) == a);
        CHECK(bar(a) == star(BitWord::all_minus(4), a));
    }
}

TEST_CASE("all_words enumeration") {
    auto words = all_words(3);
    REQUIRE(words.size() == 8);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::set<BitWord>(words.begin(), words.end()).size() == 8);
    CHECK(words.front() == BitWord::parse("+++"));
    CHECK(words.back() == BitWord::parse("---"));
    CHECK(all_words(0).size() == 1);
}

TEST_CASE("parse and print round trips") {
    CHECK(BitWord::parse("+-+").str() == "+-+");
    CHECK(BitWord::parse("").str() == "");
    CHECK_THROWS_AS(BitWord::parse("+*"), std::invalid_argument);
    CHECK_THROWS_AS(BitWord::parse("+x"), std::invalid_argument);
    CHECK(ExtBitWord::parse("+-+*").str() == "+-+*");
    CHECK_THROWS_AS(ExtBitWord::parse("+?"), std::invalid_argument);
}

TEST_CASE("extended words read as subsets") {
    ExtBitWord d = ExtBitWord::parse("+*-*");
    CHECK(d.both_count() == 2);
    CHECK(d.minus_count() == 1);
    auto words = d.expand();
    REQUIRE(words.size() == 4);
    CHECK(std::set<BitWord>(words.begin(), words.end()).size() == 4);
    for (const BitWord& w : words) {
        CHECK(d.contains(w));
        CHECK(w[0] == Bit::Plus);
        CHECK(w[2] == Bit::Minus);
    }
    CHECK_FALSE(d.contains(BitWord::parse("-+-+")));
    CHECK_FALSE(d.contains(BitWord::parse("+-")));

    // the subset reading is a sub-hypercube: closed under toggling free slots
    for (const BitWord& w : words)
        for (std::size_t i = 0; i < 4; ++i) {
            if (d[i] != Ext::Both) continue;
            std::vector<Bit> e = w.entries();
            e[i] = (e[i] == Bit::Plus) ? Bit::Minus : Bit::Plus;
            CHECK(d.contains(BitWord(std::move(e))));
        }
}

TEST_CASE("extended bar matches elementwise bar of the subset") {
    ExtBitWord d = ExtBitWord::parse("+*-");
    ExtBitWord bd = bar(d);
    CHECK(bd == ExtBitWord::parse("-*+"));
    std::set<BitWord> flipped;
    for (const BitWord& w : d.expand()) flipped.insert(bar(w));
    auto expanded = bd.expand();
    CHECK(flipped == std::set<BitWord>(expanded.begin(), expanded.end()));
    CHECK(bar(bar(d)) == d);
}

TEST_CASE("word concatenation") {
    CHECK(concat(BitWord::parse("+-"), BitWord::parse("-")) ==
          BitWord::parse("+--"));
    CHECK(concat(ExtBitWord::parse("+*"), ExtBitWord::parse("-")) ==
          ExtBitWord::parse("+*-"));
    CHECK(slice(BitWord::parse("+-+"), 1, 3) == BitWord::parse("-+"));
}
