#include "quasicover/enumerate.hpp"

#include <limits>
#include <stdexcept>

namespace quasicover {

namespace {

// Exhaustive scans beyond this many raw ranks are out of the question
// anyway; refuse early instead of overflowing.
constexpr std::uint64_t kMaxRawWords = std::uint64_t{1} << 40;

}  // namespace

std::uint64_t words_of_length(int sigma, int n) {
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        if (count > kMaxRawWords / static_cast<std::uint64_t>(sigma))
            throw std::invalid_argument("words_of_length: enumeration size out of supported range");
        count *= static_cast<std::uint64_t>(sigma);
    }
    return count;
}

void EnumerationSpec::validate() const {
    if (sigma < 2) throw std::invalid_argument("EnumerationSpec: sigma must be at least 2");
    if (sigma > 26) throw std::invalid_argument("EnumerationSpec: sigma above 26 is not supported");
    if (n_min < 1) throw std::invalid_argument("EnumerationSpec: n_min must be at least 1");
    if (n_max < n_min) throw std::invalid_argument("EnumerationSpec: n_max must not be below n_min");
    raw_word_count();  // throws when the range is absurdly large
}

std::uint64_t EnumerationSpec::raw_word_count() const {
    std::uint64_t total = 0;
    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t count = words_of_length(sigma, n);
        if (total > kMaxRawWords - count)
            throw std::invalid_argument("EnumerationSpec: enumeration size out of supported range");
        total += count;
    }
    return total;
}

bool is_canonical(const Word& w) {
    Letter next_new = 0;
    for (Letter a : w.letters()) {
        if (a > next_new) return false;
        if (a == next_new) ++next_new;
    }
    return true;
}

Word word_from_rank(int sigma, int n, std::uint64_t rank) {
    std::vector<Letter> letters(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<Letter>(rank % static_cast<std::uint64_t>(sigma));
        rank /= static_cast<std::uint64_t>(sigma);
    }
    return Word(std::move(letters));
}

std::vector<Word> enumerate_words(const EnumerationSpec& spec) {
    spec.validate();
    std::vector<Word> out;
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        const std::uint64_t count = words_of_length(spec.sigma, n);
        for (std::uint64_t rank = 0; rank < count; ++rank) {
            Word w = word_from_rank(spec.sigma, n, rank);
            if (spec.canonical && !is_canonical(w)) continue;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<std::pair<Word, int>> hamming1_neighbors(const Word& w, int sigma) {
    if (sigma < 2) throw std::invalid_argument("hamming1_neighbors: sigma must be at least 2");
    for (Letter a : w.letters())
        if (static_cast<int>(a) >= sigma)
            throw std::invalid_argument("hamming1_neighbors: word uses letters outside the alphabet");
    std::vector<std::pair<Word, int>> out;
    out.reserve(w.size() * static_cast<std::size_t>(sigma - 1));
    for_each_hamming1_neighbor(w, sigma,
                               [&](Word neighbor, int j) { out.emplace_back(std::move(neighbor), j); });
    return out;
}

}  // namespace quasicover
