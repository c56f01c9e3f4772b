#pragma once

#include "quasicover/word.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace quasicover {

/// Parameters of an exhaustive run: all words over the alphabet
/// [0, sigma) of each length in [n_min, n_max]. With canonical = true the
/// enumeration is restricted to letter-renaming representatives (words in
/// which letter k first appears before letter k+1).
struct EnumerationSpec {
    int sigma = 2;
    int n_min = 1;
    int n_max = 1;
    bool canonical = false;

    /// Throws std::invalid_argument when the spec is unusable.
    void validate() const;

    /// Number of raw (unfiltered) enumeration ranks, sum of sigma^n.
    std::uint64_t raw_word_count() const;

    bool operator==(const EnumerationSpec&) const = default;
};

/// sigma^n with an overflow guard.
std::uint64_t words_of_length(int sigma, int n);

/// True iff the first occurrence of letter k precedes the first occurrence
/// of letter k+1 for every k (so the word starts with letter 0).
bool is_canonical(const Word& w);

/// The rank-th word of length n over [0, sigma) in lexicographic order.
Word word_from_rank(int sigma, int n, std::uint64_t rank);

/// Materializes the whole enumeration in deterministic lexicographic order
/// (lengths ascending, words lexicographic within a length).
std::vector<Word> enumerate_words(const EnumerationSpec& spec);

/// Visits all (w', j) with w' equal to w except at position j (1-based);
/// positions ascending, replacement letters ascending. Exactly
/// n * (sigma - 1) visits. Requires every letter of w to be < sigma.
template <typename Fn>
void for_each_hamming1_neighbor(const Word& w, int sigma, Fn&& fn) {
    std::vector<Letter> scratch(w.letters());
    for (std::size_t idx = 0; idx < scratch.size(); ++idx) {
        const Letter original = scratch[idx];
        for (int a = 0; a < sigma; ++a) {
            if (a == static_cast<int>(original)) continue;
            scratch[idx] = static_cast<Letter>(a);
            fn(Word(std::vector<Letter>(scratch)), static_cast<int>(idx) + 1);
        }
        scratch[idx] = original;
    }
}

/// Materialized Hamming-distance-1 neighborhood of w.
std::vector<std::pair<Word, int>> hamming1_neighbors(const Word& w, int sigma);

}  // namespace quasicover
