#pragma once

#include "quasicover/word.hpp"

namespace quasicover {

/// Shortest-cover lengths per prefix: of_prefix(i) is the length of the
/// shortest cover of w[1..i], which is i itself when the prefix has no
/// proper cover.
struct CoverArray {
    std::vector<int> values;

    int of_prefix(std::size_t prefix_len) const { return values.at(prefix_len - 1); }
    int whole() const { return values.empty() ? 0 : values.back(); }
};

/// True iff every position of w lies inside an occurrence of c.
/// Throws when c is empty or longer than w.
bool is_cover(const Word& c, const Word& w);

/// Online shortest-cover-array construction. Appending a letter costs
/// amortized constant time; previously computed entries never change.
class CoverArrayBuilder {
public:
    void push(Letter a);

    std::size_t size() const noexcept { return text_.size(); }
    const std::vector<int>& values() const noexcept { return cover_; }
    const std::vector<int>& border_values() const noexcept { return border_; }

    /// Shortest cover length of everything pushed so far; requires size() >= 1.
    int shortest_cover_length() const { return cover_.back(); }

    CoverArray snapshot() const { return CoverArray{cover_}; }

private:
    std::vector<Letter> text_;
    std::vector<int> border_;  // longest proper border per prefix
    std::vector<int> cover_;   // shortest cover per prefix
    std::vector<int> reach_;   // reach_[c] = longest prefix covered by w[1..c] so far
};

/// Shortest-cover array of the whole word. Throws on the empty word.
CoverArray cover_array(const Word& w);

/// The prefix of length cover_array(w).whole(); equals w itself iff w is
/// not quasiperiodic. Throws on the empty word.
Word shortest_cover(const Word& w);

/// Ascending lengths l < n such that w[1..l] is a (proper) cover of w.
/// Candidates are the iterated borders of w, filtered by is_cover.
std::vector<int> all_cover_lengths(const Word& w);

/// True iff w has a cover strictly shorter than itself.
bool is_quasiperiodic(const Word& w);

}  // namespace quasicover
