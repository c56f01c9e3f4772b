#pragma once

#include "quasicover/seed.hpp"
#include "quasicover/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace quasicover {

/// Line-oriented text form of a verification report: one "key: value" line
/// per field, counterexamples as an indented list.
std::string render_text(const VerificationReport& report);

/// Machine-readable form with fields
/// {spec, property, words_tested, pairs_tested, counterexamples, elapsed_ms};
/// see docs/report-schema.json.
nlohmann::json to_json(const VerificationReport& report);

/// One line per interval, aligned under the word: full occurrences as
/// "[--]", overhangs open at the end that extends past the word.
std::vector<std::string> seed_diagram_lines(const std::vector<SeedInterval>& intervals);

std::string_view seed_interval_kind_name(SeedIntervalKind kind);

}  // namespace quasicover
