#pragma once

#include "quasicover/enumerate.hpp"
#include "quasicover/word.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quasicover {

enum class PropertyId { fact_periodic, lemma_seed, lemma_cover_seed, theorem_quasi };

std::string_view property_name(PropertyId id);
std::optional<PropertyId> property_from_name(std::string_view name);

/// A Hamming-1 pair that violated the checked property, with a short
/// human-readable explanation of what went wrong.
struct Counterexample {
    Word w;
    Word w_prime;
    int j = 0;
    std::string diagnostics;
    bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
    EnumerationSpec spec;
    std::string property;
    std::uint64_t words_tested = 0;
    std::uint64_t pairs_tested = 0;
    std::vector<Counterexample> counterexamples;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return counterexamples.empty(); }
};

struct VerifyOptions {
    int workers = 1;
    /// Stop scanning once a counterexample is found. The report then holds
    /// the first counterexample in enumeration order and counts only the
    /// words/pairs up to and including the word that produced it, so the
    /// outcome stays independent of the worker count.
    bool stop_on_first = false;
};

/// One property checked over every enumerated word and its Hamming-1
/// neighborhood. Workers each own a private instance.
class PairwiseCheck {
public:
    virtual ~PairwiseCheck() = default;

    /// Called once per enumerated word; may cache per-word state. Return
    /// false to declare that no neighbor of w can violate the property
    /// (the word's pairs still count as tested).
    virtual bool begin_word(const Word& w) {
        (void)w;
        return true;
    }

    /// Called for each visited pair w =_j w'. Unordered pairs whose both
    /// sides are enumerated are visited exactly once, so role-asymmetric
    /// checks must examine both orientations here.
    virtual void check_pair(const Word& w, const Word& w_prime, int j,
                            std::vector<Counterexample>& out) = 0;
};

using CheckFactory = std::function<std::unique_ptr<PairwiseCheck>()>;

/// Enumeration engine shared by all checks: streams the spec's words in
/// rank order, splits the stream into contiguous blocks across workers,
/// visits Hamming-1 neighborhoods, and merges per-block results in rank
/// order so identical inputs always give identical reports.
VerificationReport run_pairwise_check(std::string property, const EnumerationSpec& spec,
                                      const VerifyOptions& options,
                                      const CheckFactory& make_check);

/// No two words at Hamming distance 1 are both periodic.
VerificationReport check_fact_periodic(const EnumerationSpec& spec,
                                       const VerifyOptions& options = {});

/// A word is never a seed of a word at Hamming distance 1 from it
/// (checked in both orientations).
VerificationReport check_lemma_not_seed(const EnumerationSpec& spec,
                                        const VerifyOptions& options = {});

/// No string is simultaneously a cover of one word and a seed of a word
/// at Hamming distance 1 from it (both orientations, proper and full covers).
VerificationReport check_lemma_cover_seed(const EnumerationSpec& spec,
                                          const VerifyOptions& options = {});

/// No two words at Hamming distance 1 are both quasiperiodic.
VerificationReport check_theorem_quasi(const EnumerationSpec& spec,
                                       const VerifyOptions& options = {});

VerificationReport run_check(PropertyId id, const EnumerationSpec& spec,
                             const VerifyOptions& options = {});

/// The two-mismatch tightness pair for even n: w places letter 'b' at
/// positions n/2 and n of an otherwise unary word, w' is the unary word.
/// The pair is at Hamming distance exactly 2; quasiperiodicity of both
/// sides is reported as data.
struct TightnessResult {
    Word w;
    Word w_prime;
    std::vector<int> mismatches;
    bool w_quasiperiodic = false;
    bool w_prime_quasiperiodic = false;
};

TightnessResult tightness_search(int n);

}  // namespace quasicover
