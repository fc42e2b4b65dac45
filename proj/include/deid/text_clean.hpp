// text_clean.hpp - rules-based scrubbing of free-text element values.
//
// Four fixed rules run over the original text and their matches are
// merged: R1 patient name/ID tokens, R2 trigger words to end of value,
// R3 dates and years, R4 long runs of digit-like characters. Removal is
// deletion with whitespace collapse so the scientific remainder keeps
// its shape.

#pragma once

#include <cstddef>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace deid::text {

struct CleanContext {
  // Case-insensitive whole-word tokens from PatientName (0010,0010),
  // split on '^' and whitespace, and PatientID (0010,0020). Tokens
  // shorter than two characters are kept out (see make_clean_context).
  std::set<std::string> name_tokens;
  std::set<std::string> id_tokens;
  std::set<std::string> extra_tokens;

  bool empty() const {
    return name_tokens.empty() && id_tokens.empty() && extra_tokens.empty();
  }
};

// Tokenizes the two identity values; single-character tokens are dropped
// (returned in *rejected when supplied) rather than applied.
CleanContext make_clean_context(std::string_view patient_name,
                                std::string_view patient_id,
                                const std::vector<std::string>& extra = {},
                                std::vector<std::string>* rejected = nullptr);

struct Redaction {
  std::string rule_id;       // "R1".."R4", "R5" gazetteer, or extension id
  std::size_t begin = 0;     // character span in the original text
  std::size_t end = 0;
  std::string replacement;   // usually empty
  bool operator==(const Redaction&) const = default;
};

struct ExtensionRule {
  std::string id;
  std::regex pattern;   // case-insensitive
  std::string description;
};

struct RuleSet {
  // Union of the trigger words seen in the source material; each can be
  // disabled individually.
  std::set<std::string> triggers = {"in", "for", "by", "at", "to", "on"};
  // Street/state keywords for the optional address heuristic; empty = off.
  std::set<std::string> gazetteer;
  std::vector<ExtensionRule> extensions;
  std::string replacement_token;  // default: delete + collapse whitespace
};

struct Match {
  std::string rule_id;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Individual rules, exposed for rule-by-rule tests.
std::vector<Match> rule_r1_tokens(std::string_view text, const CleanContext& ctx);
std::vector<Match> rule_r2_triggers(std::string_view text,
                                    const std::set<std::string>& triggers);
std::vector<Match> rule_r3_dates(std::string_view text);
std::vector<Match> rule_r4_digit_runs(std::string_view text);

// Full pipeline: R1..R4, gazetteer, extensions; overlapping matches
// merged; result never longer than the input under the default
// (deleting) replacement.
std::pair<std::string, std::vector<Redaction>> clean_text(
    std::string_view text, const CleanContext& ctx, const RuleSet& rules = {});

// Replays redactions against the original text; reproduces the cleaned
// string exactly.
std::string apply_redactions(std::string_view text,
                             const std::vector<Redaction>& redactions);

// Extension file grammar: `RULEID;REGEX;DESCRIPTION`, '#' comments.
std::vector<ExtensionRule> load_extension_rules(std::string_view document);

}  // namespace deid::text
