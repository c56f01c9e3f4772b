#pragma once

#include "quasicover/word.hpp"

#include <optional>

namespace quasicover {

enum class SeedIntervalKind { left_overhang, occurrence, right_overhang };

/// A 1-based inclusive interval of w covered by one (possibly partial)
/// occurrence of the seed candidate.
struct SeedInterval {
    int first = 0;
    int last = 0;
    SeedIntervalKind kind = SeedIntervalKind::occurrence;
    bool operator==(const SeedInterval&) const = default;
};

/// Explicit superstring u = s[1..d] w s[|s|-e+1..|s|] covered by s,
/// proving that s is a seed of w.
struct SeedWitness {
    Word superstring;
    int left_trim = 0;   // d
    int right_trim = 0;  // e
    bool operator==(const SeedWitness&) const = default;
};

/// The intervals the seed decision is based on: full occurrences of s in w
/// plus the longest left/right overhang alignments (a proper suffix of s
/// that is a prefix of w, and a proper prefix of s that is a suffix of w).
/// Sorted by (first, last). Throws when s is empty or longer than w.
std::vector<SeedInterval> seed_cover_intervals(const Word& s, const Word& w);

/// True iff w is a factor of some superstring covered by s; decided by
/// checking that seed_cover_intervals covers every position of w.
bool is_seed(const Word& s, const Word& w);

/// Definitional witness search: tries all trims d, e in [0, |s|-1] in
/// ascending (d, e) order and returns the first superstring covered by s,
/// or nothing. Independent of the interval-based is_seed decision.
std::optional<SeedWitness> find_seed_witness(const Word& s, const Word& w);

/// True iff s is both a prefix of w and a seed of w.
bool is_left_seed(const Word& s, const Word& w);

}  // namespace quasicover
