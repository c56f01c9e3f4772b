#include "quasicover/report.hpp"

#include "quasicover/seed.hpp"
#include "quasicover/verify.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace quasicover;

namespace {
Word W(const char* text) { return Word::from_ascii(text); }
}  // namespace

TEST_CASE("text report layout") {
    VerificationReport report;
    report.spec = {2, 1, 14, false};
    report.property = "theorem-quasi";
    report.words_tested = 32766;
    report.pairs_tested = 425986;
    report.elapsed = std::chrono::milliseconds{123};

    const std::string text = render_text(report);
    CHECK(text.find("property: theorem-quasi\n") != std::string::npos);
    CHECK(text.find("sigma: 2\n") != std::string::npos);
    CHECK(text.find("n: 1..14\n") != std::string::npos);
    CHECK(text.find("canonical: false\n") != std::string::npos);
    CHECK(text.find("words tested: 32766\n") != std::string::npos);
    CHECK(text.find("pairs tested: 425986\n") != std::string::npos);
    CHECK(text.find("counterexamples: 0\n") != std::string::npos);
    CHECK(text.find("result: verified\n") != std::string::npos);

    report.counterexamples.push_back({W("abab"), W("aaab"), 2, "made up"});
    const std::string failing = render_text(report);
    CHECK(failing.find("counterexamples: 1\n") != std::string::npos);
    CHECK(failing.find("  w=abab w'=aaab j=2 -- made up\n") != std::string::npos);
    CHECK(failing.find("result: counterexample found\n") != std::string::npos);
}

TEST_CASE("json report schema fields") {
    VerificationReport report;
    report.spec = {3, 2, 9, true};
    report.property = "fact-periodic";
    report.words_tested = 17;
    report.pairs_tested = 99;
    report.counterexamples.push_back({W("ab"), W("bb"), 1, "made up"});
    report.elapsed = std::chrono::milliseconds{7};

    const nlohmann::json j = to_json(report);
    CHECK(j.at("spec").at("sigma") == 3);
    CHECK(j.at("spec").at("n_min") == 2);
    CHECK(j.at("spec").at("n_max") == 9);
    CHECK(j.at("spec").at("canonical") == true);
    CHECK(j.at("property") == "fact-periodic");
    CHECK(j.at("words_tested") == 17);
    CHECK(j.at("pairs_tested") == 99);
    CHECK(j.at("elapsed_ms") == 7);
    REQUIRE(j.at("counterexamples").size() == 1);
    CHECK(j.at("counterexamples")[0].at("w") == "ab");
    CHECK(j.at("counterexamples")[0].at("w_prime") == "bb");
    CHECK(j.at("counterexamples")[0].at("j") == 1);
    CHECK(j.at("counterexamples")[0].at("diagnostics") == "made up");

    // round-trips through serialized text
    CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("seed diagram rendering") {
    const auto intervals = seed_cover_intervals(W("aabaa"), W("abaabaaaabaaabaaa"));
    const auto lines = seed_diagram_lines(intervals);
    const std::vector<std::string> expected{
        "---]",
        "  [---]",
        "       [---]",
        "           [---]",
        "               [-",
    };
    CHECK(lines == expected);

    // one line per interval, each spanning exactly its positions
    REQUIRE(lines.size() == intervals.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(static_cast<int>(lines[i].size()) == intervals[i].last);
        const std::string body = lines[i].substr(static_cast<std::size_t>(intervals[i].first) - 1);
        CHECK(static_cast<int>(body.size()) == intervals[i].last - intervals[i].first + 1);
        for (char ch : body) CHECK((ch == '[' || ch == ']' || ch == '-'));
    }
}

TEST_CASE("interval kind names") {
    CHECK(seed_interval_kind_name(SeedIntervalKind::left_overhang) == "left-overhang");
    CHECK(seed_interval_kind_name(SeedIntervalKind::occurrence) == "occurrence");
    CHECK(seed_interval_kind_name(SeedIntervalKind::right_overhang) == "right-overhang");
}

TEST_CASE("single-occurrence diagram") {
    const auto intervals = seed_cover_intervals(W("ab"), W("ab"));
    const auto lines = seed_diagram_lines(intervals);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == "[]");
}
