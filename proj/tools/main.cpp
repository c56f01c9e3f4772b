#include "quasicover/almost.hpp"
#include "quasicover/cover.hpp"
#include "quasicover/enumerate.hpp"
#include "quasicover/report.hpp"
#include "quasicover/seed.hpp"
#include "quasicover/verify.hpp"
#include "quasicover/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace quasicover;
using nlohmann::json;

// Maps lowercase ASCII input to integer letters in first-appearance order,
// shared across all words of one invocation so they stay comparable.
class AsciiAlphabet {
public:
    Word intern(const std::string& text) {
        std::vector<Letter> letters;
        letters.reserve(text.size());
        for (char ch : text) {
            if (ch < 'a' || ch > 'z')
                throw std::invalid_argument("words must consist of lowercase ASCII letters");
            auto& code = code_of_[static_cast<std::size_t>(ch - 'a')];
            if (code < 0) {
                code = static_cast<int>(char_of_.size());
                char_of_.push_back(ch);
            }
            letters.push_back(static_cast<Letter>(code));
        }
        return Word(std::move(letters));
    }

    std::string render(const Word& w) const {
        std::string out;
        out.reserve(w.size());
        for (Letter a : w.letters()) out.push_back(char_of_.at(a));
        return out;
    }

private:
    std::array<int, 26> code_of_{[] {
        std::array<int, 26> init{};
        init.fill(-1);
        return init;
    }()};
    std::string char_of_;
};

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_pairs(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) out += ' ';
        out += '(' + std::to_string(pairs[i].first) + ',' + std::to_string(pairs[i].second) + ')';
    }
    return out;
}

json almost_periods_json(const std::vector<AlmostPeriod>& list) {
    json out = json::array();
    for (const AlmostPeriod& ap : list) out.push_back({{"period", ap.period}, {"mismatch", ap.mismatch}});
    return out;
}

json almost_borders_json(const std::vector<AlmostBorder>& list) {
    json out = json::array();
    for (const AlmostBorder& ab : list) out.push_back({{"length", ab.length}, {"mismatch", ab.mismatch}});
    return out;
}

struct AnalyzeArgs {
    std::string word;
    bool almost = false;
    bool json_out = false;
};

int run_analyze(const AnalyzeArgs& args) {
    AsciiAlphabet alphabet;
    const Word w = alphabet.intern(args.word);
    const std::size_t n = w.size();

    const BorderArray borders = border_array(w);
    const std::vector<int> period_list = periods(w);
    const bool periodic = is_periodic(w);
    const CoverArray covers = cover_array(w);
    const Word cover = shortest_cover(w);
    const std::vector<int> proper_covers = all_cover_lengths(w);
    const bool quasi = is_quasiperiodic(w);

    if (args.json_out) {
        json out{{"word", args.word},
                 {"length", n},
                 {"border_array", borders.values},
                 {"periods", period_list},
                 {"periodic", periodic},
                 {"cover_array", covers.values},
                 {"cover_array_tail", covers.whole()},
                 {"shortest_cover", alphabet.render(cover)},
                 {"proper_cover_lengths", proper_covers},
                 {"quasiperiodic", quasi}};
        if (args.almost) {
            out["almost_periods"] = almost_periods_json(n >= 2 ? almost_periods(w) : std::vector<AlmostPeriod>{});
            out["almost_borders"] = almost_borders_json(n >= 2 ? almost_borders(w) : std::vector<AlmostBorder>{});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "word: " << args.word << "\n";
    std::cout << "length: " << n << "\n";
    std::cout << "border array: " << join_ints(borders.values) << "\n";
    std::cout << "periods: " << join_ints(period_list) << "\n";
    std::cout << "periodic: " << (periodic ? "true" : "false") << "\n";
    std::cout << "cover array tail: " << covers.whole() << "\n";
    std::cout << "shortest cover: " << alphabet.render(cover) << "\n";
    std::cout << "proper cover lengths: " << (proper_covers.empty() ? "none" : join_ints(proper_covers))
              << "\n";
    std::cout << "quasiperiodic: " << (quasi ? "true" : "false") << "\n";
    if (args.almost) {
        std::vector<std::pair<int, int>> ap;
        std::vector<std::pair<int, int>> ab;
        if (n >= 2) {
            for (const AlmostPeriod& e : almost_periods(w)) ap.emplace_back(e.period, e.mismatch);
            for (const AlmostBorder& e : almost_borders(w)) ab.emplace_back(e.length, e.mismatch);
        }
        std::cout << "almost periods: " << format_pairs(ap) << "\n";
        std::cout << "almost borders: " << format_pairs(ab) << "\n";
    }
    return 0;
}

struct WordArgs {
    std::string word;
    bool json_out = false;
};

int run_cover_array(const WordArgs& args) {
    AsciiAlphabet alphabet;
    const Word w = alphabet.intern(args.word);
    const BorderArray borders = border_array(w);
    const CoverArray covers = cover_array(w);
    const Word cover = shortest_cover(w);
    const bool quasi = is_quasiperiodic(w);

    if (args.json_out) {
        json out{{"word", args.word},
                 {"length", w.size()},
                 {"border_array", borders.values},
                 {"cover_array", covers.values},
                 {"shortest_cover", alphabet.render(cover)},
                 {"quasiperiodic", quasi}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << args.word << "\n";
    std::cout << "length: " << w.size() << "\n";
    std::cout << "border array: " << join_ints(borders.values) << "\n";
    std::cout << "cover array: " << join_ints(covers.values) << "\n";
    std::cout << "shortest cover: " << alphabet.render(cover) << "\n";
    std::cout << "quasiperiodic: " << (quasi ? "true" : "false") << "\n";
    return 0;
}

int run_covers(const WordArgs& args) {
    AsciiAlphabet alphabet;
    const Word w = alphabet.intern(args.word);
    const std::vector<int> lengths = all_cover_lengths(w);
    std::vector<std::string> covers;
    covers.reserve(lengths.size());
    for (int len : lengths) covers.push_back(alphabet.render(w.prefix(static_cast<std::size_t>(len))));
    const bool quasi = is_quasiperiodic(w);

    if (args.json_out) {
        json out{{"word", args.word},
                 {"length", w.size()},
                 {"proper_cover_lengths", lengths},
                 {"covers", covers},
                 {"quasiperiodic", quasi}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << args.word << "\n";
    std::cout << "proper cover lengths: " << (lengths.empty() ? "none" : join_ints(lengths)) << "\n";
    std::cout << "covers:";
    if (covers.empty()) {
        std::cout << " none";
    } else {
        for (const std::string& c : covers) std::cout << ' ' << c;
    }
    std::cout << "\n";
    std::cout << "quasiperiodic: " << (quasi ? "true" : "false") << "\n";
    return 0;
}

int run_almost(const WordArgs& args) {
    AsciiAlphabet alphabet;
    const Word w = alphabet.intern(args.word);
    const std::vector<AlmostPeriod> ap = almost_periods(w);
    const std::vector<AlmostBorder> ab = almost_borders(w);

    if (args.json_out) {
        json out{{"word", args.word},
                 {"length", w.size()},
                 {"almost_periods", almost_periods_json(ap)},
                 {"almost_borders", almost_borders_json(ab)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<std::pair<int, int>> periods_pairs;
    std::vector<std::pair<int, int>> borders_pairs;
    for (const AlmostPeriod& e : ap) periods_pairs.emplace_back(e.period, e.mismatch);
    for (const AlmostBorder& e : ab) borders_pairs.emplace_back(e.length, e.mismatch);
    std::cout << "word: " << args.word << "\n";
    std::cout << "length: " << w.size() << "\n";
    std::cout << "almost periods: " << format_pairs(periods_pairs) << "\n";
    std::cout << "almost borders: " << format_pairs(borders_pairs) << "\n";
    return 0;
}

struct SeedCheckArgs {
    std::string s;
    std::string w;
    bool witness = false;
    bool diagram = false;
    bool json_out = false;
};

int run_seed_check(const SeedCheckArgs& args) {
    AsciiAlphabet alphabet;
    const Word s = alphabet.intern(args.s);
    const Word w = alphabet.intern(args.w);
    const std::vector<SeedInterval> intervals = seed_cover_intervals(s, w);
    const bool seed = is_seed(s, w);
    std::optional<SeedWitness> witness;
    if (args.witness) witness = find_seed_witness(s, w);

    if (args.json_out) {
        json interval_list = json::array();
        for (const SeedInterval& iv : intervals) {
            interval_list.push_back(
                {{"first", iv.first}, {"last", iv.last}, {"kind", seed_interval_kind_name(iv.kind)}});
        }
        json out{{"s", args.s}, {"w", args.w}, {"seed", seed}, {"intervals", std::move(interval_list)}};
        if (args.witness) {
            if (witness) {
                out["witness"] = {{"superstring", alphabet.render(witness->superstring)},
                                  {"left_trim", witness->left_trim},
                                  {"right_trim", witness->right_trim}};
            } else {
                out["witness"] = nullptr;
            }
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "s: " << args.s << "\n";
    std::cout << "w: " << args.w << "\n";
    std::cout << "seed: " << (seed ? "true" : "false") << "\n";
    if (args.witness) {
        if (witness) {
            std::cout << "witness: u=" << alphabet.render(witness->superstring)
                      << " d=" << witness->left_trim << " e=" << witness->right_trim << "\n";
        } else {
            std::cout << "witness: none\n";
        }
    }
    if (args.diagram) {
        std::cout << "diagram:\n" << args.w << "\n";
        for (const std::string& line : seed_diagram_lines(intervals)) std::cout << line << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string property;
    int sigma = 2;
    std::string range;
    bool canonical = false;
    int workers = 1;
    bool first = false;
    bool json_out = false;
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int lo = std::stoi(text.substr(0, sep));
        const int hi = std::stoi(text.substr(sep + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid length range '" + text + "', expected A..B");
    }
}

int run_verify(const VerifyArgs& args) {
    const std::optional<PropertyId> id = property_from_name(args.property);
    if (!id)
        throw std::invalid_argument("unknown property '" + args.property +
                                    "', expected one of fact-periodic, lemma-seed, "
                                    "lemma-cover-seed, theorem-quasi");
    const auto [n_min, n_max] = parse_range(args.range);
    EnumerationSpec spec{args.sigma, n_min, n_max, args.canonical};
    spec.validate();
    VerifyOptions options;
    options.workers = args.workers;
    options.stop_on_first = args.first;

    const VerificationReport report = run_check(*id, spec, options);
    if (args.json_out)
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << render_text(report);
    return report.passed() ? 0 : 1;
}

struct TightnessArgs {
    int n = 0;
    bool json_out = false;
};

int run_tightness(const TightnessArgs& args) {
    const TightnessResult result = tightness_search(args.n);
    if (args.json_out) {
        json out{{"n", args.n},
                 {"w", result.w.ascii()},
                 {"w_prime", result.w_prime.ascii()},
                 {"mismatch_positions", result.mismatches},
                 {"w_quasiperiodic", result.w_quasiperiodic},
                 {"w_prime_quasiperiodic", result.w_prime_quasiperiodic},
                 {"w_shortest_cover", shortest_cover(result.w).ascii()},
                 {"w_prime_shortest_cover", shortest_cover(result.w_prime).ascii()}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n: " << args.n << "\n";
    std::cout << "w: " << result.w.ascii() << "\n";
    std::cout << "w': " << result.w_prime.ascii() << "\n";
    std::cout << "mismatch positions: " << join_ints(result.mismatches) << "\n";
    std::cout << "w quasiperiodic: " << (result.w_quasiperiodic ? "true" : "false")
              << " (shortest cover " << shortest_cover(result.w).ascii() << ")\n";
    std::cout << "w' quasiperiodic: " << (result.w_prime_quasiperiodic ? "true" : "false")
              << " (shortest cover " << shortest_cover(result.w_prime).ascii() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covers, seeds, almost periods and exhaustive Hamming-1 verification"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "borders, periods, covers and friends of one word");
    analyze->add_option("word", analyze_args.word, "lowercase word")->required();
    analyze->add_flag("--almost", analyze_args.almost, "also list almost periods/borders");
    analyze->add_flag("--json", analyze_args.json_out, "emit JSON");

    WordArgs cover_array_args;
    auto* cover_array_cmd = app.add_subcommand("cover-array", "per-prefix shortest-cover lengths");
    cover_array_cmd->add_option("word", cover_array_args.word, "lowercase word")->required();
    cover_array_cmd->add_flag("--json", cover_array_args.json_out, "emit JSON");

    WordArgs covers_args;
    auto* covers_cmd = app.add_subcommand("covers", "all proper covers of one word");
    covers_cmd->add_option("word", covers_args.word, "lowercase word")->required();
    covers_cmd->add_flag("--json", covers_args.json_out, "emit JSON");

    WordArgs almost_args;
    auto* almost_cmd = app.add_subcommand("almost", "almost periods and almost borders");
    almost_cmd->add_option("word", almost_args.word, "lowercase word")->required();
    almost_cmd->add_flag("--json", almost_args.json_out, "emit JSON");

    SeedCheckArgs seed_args;
    auto* seed_cmd = app.add_subcommand("seed-check", "decide whether s is a seed of w");
    seed_cmd->add_option("s", seed_args.s, "seed candidate")->required();
    seed_cmd->add_option("w", seed_args.w, "word")->required();
    seed_cmd->add_flag("--witness", seed_args.witness, "print a covered superstring with trims");
    seed_cmd->add_flag("--diagram", seed_args.diagram, "print the occurrence/overhang diagram");
    seed_cmd->add_flag("--json", seed_args.json_out, "emit JSON");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustively check a property over small alphabets");
    verify_cmd
        ->add_option("property", verify_args.property,
                     "fact-periodic | lemma-seed | lemma-cover-seed | theorem-quasi")
        ->required();
    verify_cmd->add_option("--sigma", verify_args.sigma, "alphabet size")->capture_default_str();
    verify_cmd->add_option("--n", verify_args.range, "length range A..B (inclusive)")->required();
    verify_cmd->add_flag("--canonical", verify_args.canonical,
                         "enumerate letter-renaming representatives only");
    verify_cmd->add_option("--workers", verify_args.workers, "parallel workers")
        ->envname("QUASICOVER_WORKERS")
        ->capture_default_str();
    verify_cmd->add_flag("--first", verify_args.first, "stop at the first counterexample");
    verify_cmd->add_flag("--json", verify_args.json_out, "emit JSON");

    TightnessArgs tightness_args;
    auto* tightness_cmd =
        app.add_subcommand("tightness", "two-mismatch pair of quasiperiodic words for even n");
    tightness_cmd->add_option("n", tightness_args.n, "even length >= 2")->required();
    tightness_cmd->add_flag("--json", tightness_args.json_out, "emit JSON");

    int exit_code = 0;
    analyze->callback([&] { exit_code = run_analyze(analyze_args); });
    cover_array_cmd->callback([&] { exit_code = run_cover_array(cover_array_args); });
    covers_cmd->callback([&] { exit_code = run_covers(covers_args); });
    almost_cmd->callback([&] { exit_code = run_almost(almost_args); });
    seed_cmd->callback([&] { exit_code = run_seed_check(seed_args); });
    verify_cmd->callback([&] { exit_code = run_verify(verify_args); });
    tightness_cmd->callback([&] { exit_code = run_tightness(tightness_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
