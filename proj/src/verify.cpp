#include "quasicover/verify.hpp"

#include "quasicover/cover.hpp"
#include "quasicover/seed.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace quasicover {

std::string_view property_name(PropertyId id) {
    switch (id) {
        case PropertyId::fact_periodic: return "fact-periodic";
        case PropertyId::lemma_seed: return "lemma-seed";
        case PropertyId::lemma_cover_seed: return "lemma-cover-seed";
        case PropertyId::theorem_quasi: return "theorem-quasi";
    }
    return "unknown";
}

std::optional<PropertyId> property_from_name(std::string_view name) {
    if (name == "fact-periodic") return PropertyId::fact_periodic;
    if (name == "lemma-seed") return PropertyId::lemma_seed;
    if (name == "lemma-cover-seed") return PropertyId::lemma_cover_seed;
    if (name == "theorem-quasi") return PropertyId::theorem_quasi;
    return std::nullopt;
}

namespace {

struct BlockResult {
    std::uint64_t words = 0;
    std::uint64_t pairs = 0;
    std::vector<Counterexample> counterexamples;
    bool stopped_early = false;
};

// Scans raw enumeration ranks [lo, hi) of the spec's word stream in order.
BlockResult run_block(const EnumerationSpec& spec, std::uint64_t lo, std::uint64_t hi,
                      bool stop_on_first, PairwiseCheck& check) {
    BlockResult out;
    std::uint64_t base = 0;
    for (int n = spec.n_min; n <= spec.n_max && !out.stopped_early; ++n) {
        const std::uint64_t count = words_of_length(spec.sigma, n);
        const std::uint64_t seg_lo = std::max(lo, base);
        const std::uint64_t seg_hi = std::min(hi, base + count);
        for (std::uint64_t rank = seg_lo; rank < seg_hi; ++rank) {
            const Word w = word_from_rank(spec.sigma, n, rank - base);
            if (spec.canonical && !is_canonical(w)) continue;
            out.words += 1;
            out.pairs += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(spec.sigma - 1);
            if (check.begin_word(w)) {
                for_each_hamming1_neighbor(w, spec.sigma, [&](Word w_prime, int j) {
                    // Each unordered pair whose both sides are enumerated is
                    // visited from its lexicographically smaller side only.
                    if (w_prime < w && (!spec.canonical || is_canonical(w_prime))) return;
                    check.check_pair(w, w_prime, j, out.counterexamples);
                });
            }
            if (stop_on_first && !out.counterexamples.empty()) {
                out.stopped_early = true;
                break;
            }
        }
        base += count;
    }
    return out;
}

std::string describe(const Word& w) { return w.ascii(); }

class FactPeriodicCheck final : public PairwiseCheck {
public:
    bool begin_word(const Word& w) override { return is_periodic(w); }

    void check_pair(const Word& w, const Word& w_prime, int j,
                    std::vector<Counterexample>& out) override {
        if (!is_periodic(w_prime)) return;
        std::ostringstream oss;
        oss << "both periodic: shortest periods " << periods(w).front() << " and "
            << periods(w_prime).front();
        out.push_back({w, w_prime, j, oss.str()});
    }
};

class TheoremQuasiCheck final : public PairwiseCheck {
public:
    bool begin_word(const Word& w) override { return is_quasiperiodic(w); }

    void check_pair(const Word& w, const Word& w_prime, int j,
                    std::vector<Counterexample>& out) override {
        if (!is_quasiperiodic(w_prime)) return;
        std::ostringstream oss;
        oss << "both quasiperiodic: shortest covers " << describe(shortest_cover(w)) << " and "
            << describe(shortest_cover(w_prime));
        out.push_back({w, w_prime, j, oss.str()});
    }
};

class LemmaNotSeedCheck final : public PairwiseCheck {
public:
    void check_pair(const Word& w, const Word& w_prime, int j,
                    std::vector<Counterexample>& out) override {
        if (is_seed(w, w_prime))
            out.push_back({w, w_prime, j, "first word is a seed of the second"});
        if (is_seed(w_prime, w))
            out.push_back({w, w_prime, j, "second word is a seed of the first"});
    }
};

class LemmaCoverSeedCheck final : public PairwiseCheck {
public:
    bool begin_word(const Word& w) override {
        covers_of_word_ = all_cover_lengths(w);
        covers_of_word_.push_back(static_cast<int>(w.size()));
        return true;
    }

    void check_pair(const Word& w, const Word& w_prime, int j,
                    std::vector<Counterexample>& out) override {
        report_shared(w, covers_of_word_, w_prime, j, w, w_prime, out);
        std::vector<int> reverse_covers = all_cover_lengths(w_prime);
        reverse_covers.push_back(static_cast<int>(w_prime.size()));
        report_shared(w_prime, reverse_covers, w, j, w, w_prime, out);
    }

private:
    static void report_shared(const Word& covered, const std::vector<int>& cover_lengths,
                              const Word& seeded, int j, const Word& w, const Word& w_prime,
                              std::vector<Counterexample>& out) {
        for (int len : cover_lengths) {
            const Word c = covered.prefix(static_cast<std::size_t>(len));
            if (is_seed(c, seeded)) {
                std::ostringstream oss;
                oss << describe(c) << " covers " << describe(covered) << " and is a seed of "
                    << describe(seeded);
                out.push_back({w, w_prime, j, oss.str()});
            }
        }
    }

    std::vector<int> covers_of_word_;
};

}  // namespace

VerificationReport run_pairwise_check(std::string property, const EnumerationSpec& spec,
                                      const VerifyOptions& options, const CheckFactory& make_check) {
    spec.validate();
    if (options.workers < 1) throw std::invalid_argument("run_pairwise_check: workers must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = spec.raw_word_count();
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), total));

    std::vector<BlockResult> blocks(static_cast<std::size_t>(workers));
    if (workers <= 1) {
        auto check = make_check();
        blocks[0] = run_block(spec, 0, total, options.stop_on_first, *check);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        threads.reserve(static_cast<std::size_t>(workers));
        for (int k = 0; k < workers; ++k) {
            const std::uint64_t lo = total * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(workers);
            const std::uint64_t hi =
                total * static_cast<std::uint64_t>(k + 1) / static_cast<std::uint64_t>(workers);
            threads.emplace_back([&, k, lo, hi] {
                try {
                    auto check = make_check();
                    blocks[static_cast<std::size_t>(k)] =
                        run_block(spec, lo, hi, options.stop_on_first, *check);
                } catch (...) {
                    errors[static_cast<std::size_t>(k)] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    VerificationReport report;
    report.spec = spec;
    report.property = std::move(property);
    for (const BlockResult& block : blocks) {
        report.words_tested += block.words;
        report.pairs_tested += block.pairs;
        report.counterexamples.insert(report.counterexamples.end(), block.counterexamples.begin(),
                                      block.counterexamples.end());
        if (options.stop_on_first && !block.counterexamples.empty()) {
            report.counterexamples.resize(1);
            break;
        }
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

VerificationReport check_fact_periodic(const EnumerationSpec& spec, const VerifyOptions& options) {
    return run_pairwise_check(std::string(property_name(PropertyId::fact_periodic)), spec, options,
                              [] { return std::make_unique<FactPeriodicCheck>(); });
}

VerificationReport check_lemma_not_seed(const EnumerationSpec& spec, const VerifyOptions& options) {
    return run_pairwise_check(std::string(property_name(PropertyId::lemma_seed)), spec, options,
                              [] { return std::make_unique<LemmaNotSeedCheck>(); });
}

VerificationReport check_lemma_cover_seed(const EnumerationSpec& spec, const VerifyOptions& options) {
    return run_pairwise_check(std::string(property_name(PropertyId::lemma_cover_seed)), spec, options,
                              [] { return std::make_unique<LemmaCoverSeedCheck>(); });
}

VerificationReport check_theorem_quasi(const EnumerationSpec& spec, const VerifyOptions& options) {
    return run_pairwise_check(std::string(property_name(PropertyId::theorem_quasi)), spec, options,
                              [] { return std::make_unique<TheoremQuasiCheck>(); });
}

VerificationReport run_check(PropertyId id, const EnumerationSpec& spec, const VerifyOptions& options) {
    switch (id) {
        case PropertyId::fact_periodic: return check_fact_periodic(spec, options);
        case PropertyId::lemma_seed: return check_lemma_not_seed(spec, options);
        case PropertyId::lemma_cover_seed: return check_lemma_cover_seed(spec, options);
        case PropertyId::theorem_quasi: return check_theorem_quasi(spec, options);
    }
    throw std::invalid_argument("run_check: unknown property");
}

TightnessResult tightness_search(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("tightness_search: n must be an even integer >= 2");
    const std::size_t size = static_cast<std::size_t>(n);
    std::vector<Letter> unary(size, 0);
    std::vector<Letter> marked = unary;
    marked[size / 2 - 1] = 1;
    marked[size - 1] = 1;

    TightnessResult out;
    out.w = Word(std::move(marked));
    out.w_prime = Word(std::move(unary));
    out.mismatches = mismatch_positions(out.w, out.w_prime);
    out.w_quasiperiodic = is_quasiperiodic(out.w);
    out.w_prime_quasiperiodic = is_quasiperiodic(out.w_prime);
    return out;
}

}  // namespace quasicover
