#pragma once

// Exhaustive property sweeps shared by the unit tests and the acceptance
// suite. Each returns the number of cases visited and a first-failure
// description instead of asserting, so both harnesses can report their way.

#include "quasicover/almost.hpp"
#include "quasicover/cover.hpp"
#include "quasicover/seed.hpp"
#include "quasicover/word.hpp"

#include "support/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>

namespace quasicover::properties {

struct SweepResult {
    std::uint64_t cases = 0;
    bool ok = true;
    std::string failure;

    void fail(const std::string& detail) {
        if (ok) {
            ok = false;
            failure = detail;
        }
    }
};

inline std::string show(const Word& w) { return w.ascii(); }

// cover_array equals the brute-force per-prefix shortest covers.
inline SweepResult cover_array_matches_bruteforce(int sigma, int n_max) {
    SweepResult result;
    oracles::for_all_words_up_to(sigma, n_max, [&](const Word& w) {
        if (!result.ok) return;
        ++result.cases;
        if (cover_array(w).values != oracles::naive_cover_array(w))
            result.fail("cover array mismatch on " + show(w));
    });
    return result;
}

// is_seed, the witness search and the naive definitional test all agree.
inline SweepResult seed_decisions_agree(int sigma, int w_max) {
    SweepResult result;
    oracles::for_all_words_up_to(sigma, w_max, [&](const Word& w) {
        if (!result.ok) return;
        oracles::for_all_words_up_to(sigma, static_cast<int>(w.size()), [&](const Word& s) {
            if (!result.ok) return;
            ++result.cases;
            const bool fast = is_seed(s, w);
            const auto witness = find_seed_witness(s, w);
            if (fast != witness.has_value())
                result.fail("is_seed and witness search disagree on s=" + show(s) + " w=" + show(w));
            else if (fast != oracles::naive_is_seed(s, w))
                result.fail("is_seed and the naive test disagree on s=" + show(s) + " w=" + show(w));
        });
    });
    return result;
}

// A proper cover of at least half the length forces the dual period.
inline SweepResult long_cover_implies_periodicity(int sigma, int n_max) {
    SweepResult result;
    oracles::for_all_words_up_to(sigma, n_max, [&](const Word& w) {
        if (!result.ok) return;
        const int n = static_cast<int>(w.size());
        for (int len : all_cover_lengths(w)) {
            if (2 * len < n) continue;
            ++result.cases;
            const std::vector<int> ps = periods(w);
            if (std::find(ps.begin(), ps.end(), n - len) == ps.end()) {
                std::ostringstream oss;
                oss << "cover of length " << len << " of " << show(w) << " without period " << n - len;
                result.fail(oss.str());
            }
        }
    });
    return result;
}

// Any cover of a cover of w also covers w.
inline SweepResult cover_of_cover_covers(int sigma, int n_max) {
    SweepResult result;
    oracles::for_all_words_up_to(sigma, n_max, [&](const Word& w) {
        if (!result.ok) return;
        for (int len : all_cover_lengths(w)) {
            const Word c = w.prefix(static_cast<std::size_t>(len));
            std::vector<int> inner_lengths = all_cover_lengths(c);
            inner_lengths.push_back(len);
            for (int inner : inner_lengths) {
                ++result.cases;
                if (!is_cover(c.prefix(static_cast<std::size_t>(inner)), w))
                    result.fail("cover chain broken on " + show(w));
            }
        }
    });
    return result;
}

// A seed of w is a seed of every factor of w no shorter than itself.
inline SweepResult seed_covers_long_factors(int sigma, int w_max) {
    SweepResult result;
    oracles::for_all_words_up_to(sigma, w_max, [&](const Word& w) {
        if (!result.ok) return;
        oracles::for_all_words_up_to(sigma, static_cast<int>(w.size()), [&](const Word& c) {
            if (!result.ok || !is_seed(c, w)) return;
            for (std::size_t first = 1; first <= w.size(); ++first) {
                for (std::size_t last = first + c.size() - 1; last <= w.size(); ++last) {
                    ++result.cases;
                    if (!is_seed(c, w.factor(first, last)))
                        result.fail("seed " + show(c) + " fails on a factor of " + show(w));
                }
            }
        });
    });
    return result;
}

// When w has period p, every cover of a prefix of length >= p is a left seed of w.
inline SweepResult prefix_cover_is_left_seed(int sigma, int w_max) {
    SweepResult result;
    oracles::for_all_words_up_to(sigma, w_max, [&](const Word& w) {
        if (!result.ok) return;
        for (int p : periods(w)) {
            for (std::size_t len = static_cast<std::size_t>(p); len <= w.size(); ++len) {
                const Word prefix = w.prefix(len);
                std::vector<int> cover_lengths = all_cover_lengths(prefix);
                cover_lengths.push_back(static_cast<int>(len));
                for (int cl : cover_lengths) {
                    ++result.cases;
                    if (!is_left_seed(prefix.prefix(static_cast<std::size_t>(cl)), w)) {
                        std::ostringstream oss;
                        oss << "cover of length " << cl << " of the length-" << len << " prefix of "
                            << show(w) << " is not a left seed";
                        result.fail(oss.str());
                    }
                }
            }
        }
    });
    return result;
}

// A word is a seed of each of its rotations.
inline SweepResult word_seeds_its_rotations(int sigma, int w_max) {
    SweepResult result;
    oracles::for_all_words_up_to(sigma, w_max, [&](const Word& w) {
        if (!result.ok) return;
        for (std::size_t offset = 0; offset <= w.size(); ++offset) {
            ++result.cases;
            if (!is_seed(w, cyclic_shift(w, offset)))
                result.fail(show(w) + " is not a seed of its rotation by " + std::to_string(offset));
        }
    });
    return result;
}

// (p, j) is an almost period exactly when (n - p, j) is an almost border.
inline SweepResult almost_periods_match_almost_borders(int sigma, int n_min, int n_max) {
    SweepResult result;
    for (int n = n_min; n <= n_max; ++n) {
        oracles::for_all_words(sigma, n, [&](const Word& w) {
            if (!result.ok) return;
            ++result.cases;
            std::vector<AlmostBorder> from_periods;
            for (const AlmostPeriod& ap : almost_periods(w))
                from_periods.push_back({n - ap.period, ap.mismatch});
            std::sort(from_periods.begin(), from_periods.end(),
                      [](const AlmostBorder& a, const AlmostBorder& b) { return a.length < b.length; });
            if (from_periods != almost_borders(w))
                result.fail("almost periods and almost borders disagree on " + show(w));
        });
        if (!result.ok) break;
    }
    return result;
}

}  // namespace quasicover::properties
