#include "quasicover/report.hpp"

#include <sstream>

namespace quasicover {

std::string render_text(const VerificationReport& report) {
    std::ostringstream oss;
    oss << "property: " << report.property << "\n";
    oss << "sigma: " << report.spec.sigma << "\n";
    oss << "n: " << report.spec.n_min << ".." << report.spec.n_max << "\n";
    oss << "canonical: " << (report.spec.canonical ? "true" : "false") << "\n";
    oss << "words tested: " << report.words_tested << "\n";
    oss << "pairs tested: " << report.pairs_tested << "\n";
    oss << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const Counterexample& cx : report.counterexamples) {
        oss << "  w=" << cx.w.ascii() << " w'=" << cx.w_prime.ascii() << " j=" << cx.j << " -- "
            << cx.diagnostics << "\n";
    }
    oss << "elapsed ms: " << report.elapsed.count() << "\n";
    oss << "result: " << (report.passed() ? "verified" : "counterexample found") << "\n";
    return oss.str();
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const Counterexample& cx : report.counterexamples) {
        counterexamples.push_back({{"w", cx.w.ascii()},
                                   {"w_prime", cx.w_prime.ascii()},
                                   {"j", cx.j},
                                   {"diagnostics", cx.diagnostics}});
    }
    return nlohmann::json{{"spec",
                           {{"sigma", report.spec.sigma},
                            {"n_min", report.spec.n_min},
                            {"n_max", report.spec.n_max},
                            {"canonical", report.spec.canonical}}},
                          {"property", report.property},
                          {"words_tested", report.words_tested},
                          {"pairs_tested", report.pairs_tested},
                          {"counterexamples", std::move(counterexamples)},
                          {"elapsed_ms", report.elapsed.count()}};
}

std::string_view seed_interval_kind_name(SeedIntervalKind kind) {
    switch (kind) {
        case SeedIntervalKind::left_overhang: return "left-overhang";
        case SeedIntervalKind::occurrence: return "occurrence";
        case SeedIntervalKind::right_overhang: return "right-overhang";
    }
    return "unknown";
}

std::vector<std::string> seed_diagram_lines(const std::vector<SeedInterval>& intervals) {
    std::vector<std::string> lines;
    lines.reserve(intervals.size());
    for (const SeedInterval& iv : intervals) {
        const std::size_t len = static_cast<std::size_t>(iv.last - iv.first + 1);
        std::string line(static_cast<std::size_t>(iv.first - 1), ' ');
        switch (iv.kind) {
            case SeedIntervalKind::left_overhang:
                line += std::string(len - 1, '-');
                line += ']';
                break;
            case SeedIntervalKind::right_overhang:
                line += '[';
                line += std::string(len - 1, '-');
                break;
            case SeedIntervalKind::occurrence:
                if (len == 1) {
                    line += '[';
                } else {
                    line += '[';
                    line += std::string(len - 2, '-');
                    line += ']';
                }
                break;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace quasicover
