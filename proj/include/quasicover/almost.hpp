#pragma once

#include "quasicover/word.hpp"

namespace quasicover {

/// w[i] = w[i+p] for every i in [1, n-p] except exactly one index j,
/// where the letters differ.
struct AlmostPeriod {
    int period = 0;    // p
    int mismatch = 0;  // j, 1-based
    bool operator==(const AlmostPeriod&) const = default;
};

/// Prefix and suffix of length b that differ at exactly one position j
/// (j measured inside the prefix copy).
struct AlmostBorder {
    int length = 0;    // b
    int mismatch = 0;  // j, 1-based
    bool operator==(const AlmostBorder&) const = default;
};

/// All almost periods of w, ascending by period. Each period admits at
/// most one mismatch position. Throws when n < 2.
std::vector<AlmostPeriod> almost_periods(const Word& w);

/// All almost borders of w, ascending by length. Throws when n < 2.
std::vector<AlmostBorder> almost_borders(const Word& w);

}  // namespace quasicover
