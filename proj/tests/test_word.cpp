#include "quasicover/word.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace quasicover;
namespace oc = quasicover::oracles;

namespace {
Word W(const char* text) { return Word::from_ascii(text); }
}  // namespace

TEST_CASE("word construction and accessors") {
    const Word w = W("abaab");
    CHECK(w.size() == 5);
    CHECK(w[0] == 0);
    CHECK(w[2] == 0);
    CHECK(w.ascii() == "abaab");
    CHECK(w.factor(2, 4) == W("baa"));
    CHECK(w.factor(4, 2).empty());
    CHECK(w.prefix(0).empty());
    CHECK(w.suffix(2) == W("ab"));
    CHECK(w.reversed() == W("baaba"));
    CHECK(W("ab") + W("ba") == W("abba"));
    CHECK_THROWS_AS(Word::from_ascii("aBc"), std::invalid_argument);
    CHECK_THROWS_AS(w.factor(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(w.factor(1, 6), std::invalid_argument);
}

TEST_CASE("border array of known words") {
    CHECK(border_array(W("abaab")).values == std::vector<int>{0, 0, 1, 1, 2});
    CHECK(border_array(W("aaaa")).values == std::vector<int>{0, 1, 2, 3});
    CHECK(border_array(W("abc")).values == std::vector<int>{0, 0, 0});
    CHECK(border_array(Word{}).values.empty());
}

TEST_CASE("border array matches the brute-force definition") {
    oc::for_all_words_up_to(2, 12, [](const Word& w) {
        REQUIRE(border_array(w).values == oc::naive_border_array(w));
    });
    oc::for_all_words_up_to(3, 7, [](const Word& w) {
        REQUIRE(border_array(w).values == oc::naive_border_array(w));
    });
}

TEST_CASE("border array structural invariants") {
    oc::for_all_words_up_to(2, 10, [](const Word& w) {
        const BorderArray ba = border_array(w);
        for (std::size_t i = 1; i <= w.size(); ++i) {
            const int b = ba.of_prefix(i);
            REQUIRE(b >= 0);
            REQUIRE(b < static_cast<int>(i));
            if (i > 1) REQUIRE(ba.of_prefix(i) <= ba.of_prefix(i - 1) + 1);
            REQUIRE(w.prefix(static_cast<std::size_t>(b)) ==
                    w.factor(i - static_cast<std::size_t>(b) + 1, i));
        }
    });
}

TEST_CASE("periods of known words") {
    CHECK(periods(W("abaab")) == std::vector<int>{3, 5});
    CHECK(periods(W("aaaa")) == std::vector<int>{1, 2, 3, 4});
    CHECK(periods(W("ab")) == std::vector<int>{2});
    CHECK(periods(W("abaababa")) == std::vector<int>{5, 7, 8});
    CHECK_THROWS_AS(periods(Word{}), std::invalid_argument);
}

TEST_CASE("periods match the direct definition and border duality") {
    oc::for_all_words_up_to(2, 14, [](const Word& w) {
        const std::vector<int> from_borders = periods(w);
        REQUIRE(from_borders == oc::naive_periods(w));
        // p is a period iff n - p appears in the iterated border chain
        const int n = static_cast<int>(w.size());
        std::set<int> border_lengths{0};
        const BorderArray ba = border_array(w);
        for (int b = ba.whole(); b > 0; b = ba.of_prefix(static_cast<std::size_t>(b)))
            border_lengths.insert(b);
        for (int p = 1; p <= n; ++p) {
            const bool is_period =
                std::find(from_borders.begin(), from_borders.end(), p) != from_borders.end();
            REQUIRE(is_period == border_lengths.contains(n - p));
        }
    });
}

TEST_CASE("periodicity predicate") {
    CHECK(is_periodic(W("abab")));
    CHECK_FALSE(is_periodic(W("abaab")));
    CHECK(is_periodic(W("aaaa")));
    CHECK_FALSE(is_periodic(W("a")));
    CHECK_THROWS_AS(is_periodic(Word{}), std::invalid_argument);
    oc::for_all_words_up_to(2, 12, [](const Word& w) {
        REQUIRE(is_periodic(w) == (2 * oc::naive_periods(w).front() <= static_cast<int>(w.size())));
    });
}

TEST_CASE("mismatch positions") {
    CHECK(mismatch_positions(W("abaab"), W("abbab")) == std::vector<int>{3});
    CHECK(mismatch_positions(W("abc"), W("abc")).empty());
    CHECK(mismatch_positions(W("aaabaaab"), W("aaaaaaaa")) == std::vector<int>{4, 8});
    CHECK_THROWS_AS(mismatch_positions(W("ab"), W("abc")), std::invalid_argument);
}

TEST_CASE("mismatch pair validation") {
    const MismatchPair pair = MismatchPair::make(W("abaab"), W("abbab"));
    CHECK(pair.j == 3);
    CHECK_THROWS_AS(MismatchPair::make(W("ab"), W("ab")), std::invalid_argument);
    CHECK_THROWS_AS(MismatchPair::make(W("ab"), W("ba")), std::invalid_argument);
}

TEST_CASE("cyclic shifts") {
    CHECK(cyclic_shift(W("abaab"), 2) == W("aabab"));
    CHECK(cyclic_shift(W("abaab"), 0) == W("abaab"));
    CHECK(cyclic_shift(W("abaab"), 5) == W("abaab"));
    CHECK(cyclic_shift(W("ab"), 1) == W("ba"));
    CHECK_THROWS_AS(cyclic_shift(W("ab"), 3), std::invalid_argument);
}

TEST_CASE("cyclic shift recognition") {
    CHECK(is_cyclic_shift(W("abaab"), W("aabab")));
    CHECK(is_cyclic_shift(W("ab"), W("ab")));
    CHECK_FALSE(is_cyclic_shift(W("aab"), W("abb")));
    CHECK_FALSE(is_cyclic_shift(W("aab"), W("aabb")));
    CHECK(is_cyclic_shift(Word{}, Word{}));
}

TEST_CASE("cyclic shift is an equivalence relation") {
    // Same rotation class iff same lexicographically minimal rotation; the
    // class oracle carries reflexivity, symmetry and transitivity with it.
    for (int n = 1; n <= 8; ++n) {
        std::vector<Word> words;
        oc::for_all_words(2, n, [&](const Word& w) { words.push_back(w); });
        std::vector<Word> reps;
        reps.reserve(words.size());
        for (const Word& w : words) reps.push_back(oc::min_rotation(w));
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = 0; b < words.size(); ++b)
                REQUIRE(is_cyclic_shift(words[a], words[b]) == (reps[a] == reps[b]));
    }
    // direct transitivity sweep at a smaller size
    for (int n = 1; n <= 4; ++n) {
        std::vector<Word> words;
        oc::for_all_words(2, n, [&](const Word& w) { words.push_back(w); });
        for (const Word& a : words)
            for (const Word& b : words)
                for (const Word& c : words)
                    if (is_cyclic_shift(a, b) && is_cyclic_shift(b, c)) REQUIRE(is_cyclic_shift(a, c));
    }
}

TEST_CASE("occurrence listing") {
    CHECK(occurrences(W("aabaa"), W("aabaabaaaabaaabaa")) == std::vector<int>{1, 4, 9, 13});
    CHECK(occurrences(W("a"), W("aaa")) == std::vector<int>{1, 2, 3});
    CHECK(occurrences(W("ba"), W("aaa")).empty());
    CHECK(occurrences(W("ab"), W("a")).empty());
    CHECK_THROWS_AS(occurrences(Word{}, W("a")), std::invalid_argument);
}

TEST_CASE("occurrences agree with a sliding-window scan") {
    for (int n = 1; n <= 10; ++n) {
        oc::for_all_words(2, n, [&](const Word& text) {
            for (int m = 1; m <= n; ++m) {
                oc::for_all_words(2, m, [&](const Word& pattern) {
                    REQUIRE(occurrences(pattern, text) == oc::naive_occurrences(pattern, text));
                });
            }
        });
    }
}

TEST_CASE("longest overlaps") {
    const Word w_prime = W("abaababaababbababba");
    const Word w = W("abaababbababbababba");
    CHECK(overlaps(w_prime, w).alpha == 14);
    CHECK(overlaps(w, w) == OverlapPair{19, 19});
    CHECK(overlaps(W("ab"), W("ba")) == OverlapPair{1, 1});
    CHECK_THROWS_AS(overlaps(W("ab"), W("abc")), std::invalid_argument);
    CHECK_THROWS_AS(overlaps(Word{}, Word{}), std::invalid_argument);
}

TEST_CASE("overlap reversal symmetry") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Word> words;
        oc::for_all_words(2, n, [&](const Word& w) { words.push_back(w); });
        for (const Word& a : words) {
            for (const Word& b : words) {
                // reversing both words (roles kept) swaps the two overlaps
                const OverlapPair forward = overlaps(a, b);
                REQUIRE(forward.beta == overlaps(a.reversed(), b.reversed()).alpha);
                REQUIRE(forward.alpha == overlaps(a.reversed(), b.reversed()).beta);
                // spot-check alpha against the definition
                int alpha = 0;
                for (int t = n; t > 0; --t) {
                    if (a.suffix(static_cast<std::size_t>(t)) == b.prefix(static_cast<std::size_t>(t))) {
                        alpha = t;
                        break;
                    }
                }
                REQUIRE(forward.alpha == alpha);
            }
        }
    }
}
