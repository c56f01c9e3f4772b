#include "quasicover/seed.hpp"

#include "quasicover/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasicover {

namespace {

void require_seed_args(const Word& s, const Word& w) {
    if (s.empty()) throw std::invalid_argument("is_seed: empty seed candidate");
    if (s.size() > w.size()) throw std::invalid_argument("is_seed: candidate longer than the word");
}

// Longest proper suffix of s that is a prefix of w (0 if none).
int longest_left_overhang(const Word& s, const Word& w) {
    for (int t = static_cast<int>(s.size()) - 1; t > 0; --t) {
        if (std::equal(s.letters().end() - t, s.letters().end(), w.letters().begin())) return t;
    }
    return 0;
}

// Longest proper prefix of s that is a suffix of w (0 if none).
int longest_right_overhang(const Word& s, const Word& w) {
    for (int t = static_cast<int>(s.size()) - 1; t > 0; --t) {
        if (std::equal(s.letters().begin(), s.letters().begin() + t, w.letters().end() - t)) return t;
    }
    return 0;
}

}  // namespace

std::vector<SeedInterval> seed_cover_intervals(const Word& s, const Word& w) {
    require_seed_args(s, w);
    const int m = static_cast<int>(s.size());
    const int n = static_cast<int>(w.size());
    std::vector<SeedInterval> out;
    const int tl = longest_left_overhang(s, w);
    if (tl > 0) out.push_back({1, tl, SeedIntervalKind::left_overhang});
    for (int start : occurrences(s, w)) out.push_back({start, start + m - 1, SeedIntervalKind::occurrence});
    const int tr = longest_right_overhang(s, w);
    if (tr > 0) out.push_back({n - tr + 1, n, SeedIntervalKind::right_overhang});
    std::sort(out.begin(), out.end(), [](const SeedInterval& a, const SeedInterval& b) {
        return a.first != b.first ? a.first < b.first : a.last < b.last;
    });
    return out;
}

bool is_seed(const Word& s, const Word& w) {
    const int n = static_cast<int>(w.size());
    int covered_to = 0;
    for (const SeedInterval& iv : seed_cover_intervals(s, w)) {
        if (iv.first > covered_to + 1) return false;
        covered_to = std::max(covered_to, iv.last);
    }
    return covered_to == n;
}

std::optional<SeedWitness> find_seed_witness(const Word& s, const Word& w) {
    require_seed_args(s, w);
    // A minimal superstring starts and ends with an occurrence of s, so the
    // prepended prefix and appended suffix of s never need more than |s|-1
    // letters each.
    const int m = static_cast<int>(s.size());
    for (int d = 0; d < m; ++d) {
        for (int e = 0; e < m; ++e) {
            Word u = s.prefix(static_cast<std::size_t>(d)) + w + s.suffix(static_cast<std::size_t>(e));
            if (is_cover(s, u)) return SeedWitness{std::move(u), d, e};
        }
    }
    return std::nullopt;
}

bool is_left_seed(const Word& s, const Word& w) {
    require_seed_args(s, w);
    return s == w.prefix(s.size()) && is_seed(s, w);
}

}  // namespace quasicover
