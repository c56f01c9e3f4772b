#include "quasicover/almost.hpp"

#include <stdexcept>

namespace quasicover {

namespace {

void require_length(const Word& w, const char* what) {
    if (w.size() < 2) throw std::invalid_argument(std::string(what) + ": word must have length at least 2");
}

}  // namespace

std::vector<AlmostPeriod> almost_periods(const Word& w) {
    require_length(w, "almost_periods");
    const int n = static_cast<int>(w.size());
    std::vector<AlmostPeriod> out;
    for (int p = 1; p < n; ++p) {
        int mismatch = 0;
        int count = 0;
        for (int i = 1; i <= n - p && count < 2; ++i) {
            if (w[static_cast<std::size_t>(i) - 1] != w[static_cast<std::size_t>(i + p) - 1]) {
                mismatch = i;
                ++count;
            }
        }
        if (count == 1) out.push_back({p, mismatch});
    }
    return out;
}

std::vector<AlmostBorder> almost_borders(const Word& w) {
    require_length(w, "almost_borders");
    const int n = static_cast<int>(w.size());
    std::vector<AlmostBorder> out;
    for (int b = 1; b < n; ++b) {
        int mismatch = 0;
        int count = 0;
        for (int i = 1; i <= b && count < 2; ++i) {
            if (w[static_cast<std::size_t>(i) - 1] != w[static_cast<std::size_t>(n - b + i) - 1]) {
                mismatch = i;
                ++count;
            }
        }
        if (count == 1) out.push_back({b, mismatch});
    }
    return out;
}

}  // namespace quasicover
