#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace quasicover {

using Letter = std::uint8_t;

/// Immutable sequence of small integer letters.
///
/// Storage is 0-based, but every position that crosses the public API --
/// occurrence lists, mismatch indices, interval endpoints -- is 1-based.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Maps 'a' -> 0, ..., 'z' -> 25; rejects anything else.
    static Word from_ascii(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// Raw 0-based letter access.
    Letter operator[](std::size_t i) const { return letters_[i]; }

    /// w[first..last], 1-based inclusive; empty when first > last.
    Word factor(std::size_t first, std::size_t last) const;
    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;
    Word reversed() const;

    /// Renders letters as 'a'..; requires every letter < 26.
    std::string ascii() const;

    const std::vector<Letter>& letters() const noexcept { return letters_; }

    friend Word operator+(const Word& lhs, const Word& rhs);
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Longest proper border per prefix: of_prefix(i) is the length of the
/// longest factor that is both a proper prefix and a suffix of w[1..i].
struct BorderArray {
    std::vector<int> values;

    int of_prefix(std::size_t prefix_len) const { return values.at(prefix_len - 1); }
    int whole() const { return values.empty() ? 0 : values.back(); }
};

/// Longest overlaps between two equal-length words: alpha is the length of
/// the longest suffix of w' that is a prefix of w, beta the length of the
/// longest prefix of w' that is a suffix of w.
struct OverlapPair {
    int alpha = 0;
    int beta = 0;
    bool operator==(const OverlapPair&) const = default;
};

/// Two equal-length words that differ at exactly one position j (1-based).
struct MismatchPair {
    Word w;
    Word w_prime;
    int j = 0;

    /// Validates the distance-1 relation; throws std::invalid_argument otherwise.
    static MismatchPair make(Word w, Word w_prime);
};

BorderArray border_array(const Word& w);

/// All periods of w in ascending order, up to and including the trivial
/// period n. Throws on the empty word.
std::vector<int> periods(const Word& w);

/// True iff w has a period p with 2p <= n. Throws on the empty word.
bool is_periodic(const Word& w);

/// Ascending 1-based positions where the two words differ.
/// Throws when the lengths differ.
std::vector<int> mismatch_positions(const Word& w, const Word& v);

/// Rotation w[offset+1..n] w[1..offset]; offset in [0, n].
Word cyclic_shift(const Word& w, std::size_t offset);

/// True iff v is some rotation of w (equivalently: |v| = |w| and v occurs
/// in w concatenated with itself).
bool is_cyclic_shift(const Word& w, const Word& v);

/// Ascending 1-based start positions of the pattern in the text,
/// overlapping occurrences included. Linear time. Throws on empty pattern.
std::vector<int> occurrences(const Word& pattern, const Word& text);

/// Longest overlaps between equal-length nonempty words; see OverlapPair.
OverlapPair overlaps(const Word& w_prime, const Word& w);

}  // namespace quasicover
