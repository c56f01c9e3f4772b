#include "quasicover/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasicover {

bool is_cover(const Word& c, const Word& w) {
    if (c.empty()) throw std::invalid_argument("is_cover: empty cover candidate");
    if (c.size() > w.size()) throw std::invalid_argument("is_cover: candidate longer than the word");
    const int m = static_cast<int>(c.size());
    const int n = static_cast<int>(w.size());
    int covered_to = 0;  // positions [1, covered_to] are covered
    for (int start : occurrences(c, w)) {
        if (start > covered_to + 1) return false;
        covered_to = start + m - 1;
    }
    return covered_to == n;
}

void CoverArrayBuilder::push(Letter a) {
    const std::size_t i = text_.size();  // 0-based index of the new letter
    text_.push_back(a);

    int b = 0;
    if (i > 0) {
        int t = border_[i - 1];
        while (t > 0 && text_[static_cast<std::size_t>(t)] != a) t = border_[static_cast<std::size_t>(t) - 1];
        b = (text_[static_cast<std::size_t>(t)] == a) ? t + 1 : 0;
    }
    border_.push_back(b);

    // The shortest cover of a prefix is either the prefix itself or the
    // shortest cover of its longest proper border; the candidate wins iff
    // the prefix it is known to cover reaches the new occurrence ending here.
    const int len = static_cast<int>(i) + 1;
    if (reach_.empty()) reach_.push_back(0);  // slot for length 0
    reach_.push_back(0);                      // slot for length `len`
    int cv = len;
    if (b > 0) {
        const int cand = cover_[static_cast<std::size_t>(b) - 1];
        if (reach_[static_cast<std::size_t>(cand)] >= len - cand) cv = cand;
    }
    cover_.push_back(cv);
    reach_[static_cast<std::size_t>(cv)] = len;
}

CoverArray cover_array(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cover_array: empty word");
    CoverArrayBuilder builder;
    for (Letter a : w.letters()) builder.push(a);
    return builder.snapshot();
}

Word shortest_cover(const Word& w) {
    return w.prefix(static_cast<std::size_t>(cover_array(w).whole()));
}

std::vector<int> all_cover_lengths(const Word& w) {
    if (w.empty()) throw std::invalid_argument("all_cover_lengths: empty word");
    const BorderArray ba = border_array(w);
    std::vector<int> result;
    for (int b = ba.whole(); b > 0; b = ba.of_prefix(static_cast<std::size_t>(b)))
        if (is_cover(w.prefix(static_cast<std::size_t>(b)), w)) result.push_back(b);
    std::reverse(result.begin(), result.end());
    return result;
}

bool is_quasiperiodic(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_quasiperiodic: empty word");
    return cover_array(w).whole() < static_cast<int>(w.size());
}

}  // namespace quasicover
