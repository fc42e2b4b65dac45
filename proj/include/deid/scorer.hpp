// scorer.hpp - grades a deidentified output tree against an answer key,
// reproducing the instance/series error taxonomy of the benchmark.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deid/dataset.hpp"
#include "deid/uid_map.hpp"

namespace deid {

// Closed category set; `action` names the operation that should have
// happened to the element.
enum class ScoreCategory : std::uint8_t {
  Remove,
  Retain,
  ReplaceDummy,
  RemapUid,
  TextRemove,
  TextRetain,
  DateAction,
};

std::string_view score_category_name(ScoreCategory c);
std::optional<ScoreCategory> score_category_parse(std::string_view text);

struct AnswerKeyEntry {
  std::string instance_uid;  // original SOPInstanceUID
  ElementPath path;
  ScoreCategory category;
  // remove: ignored. retain/text_retain/date_action: expected value.
  // text_remove: '|'-separated PHI tokens that must not appear.
  // remap_uid/replace_dummy: the original value.
  std::string expected;
};

// CSV: original_sop_instance_uid,tag_path,category,expected_or_phi_tokens
std::vector<AnswerKeyEntry> load_answer_key(std::string_view csv);
std::vector<AnswerKeyEntry> load_answer_key_file(const std::string& path);

struct ScoreFailure {
  AnswerKeyEntry entry;
  std::string series_uid;
  std::string detail;
};

struct CategoryScore {
  std::size_t instance_pass = 0;
  std::size_t instance_fail = 0;
  std::size_t series_pass = 0;
  std::size_t series_fail = 0;
};

struct ScoreReport {
  std::map<ScoreCategory, CategoryScore> categories;
  std::vector<ScoreFailure> failures;

  std::size_t total_pass() const;
  std::size_t total_fail() const;
  // passes / (passes + failures) over all categories, two decimals.
  double overall_percent() const;
  std::string render_table() const;     // human-readable
  std::string render_machine() const;   // category \t level \t pass \t fail \t pct
};

// Scores the parseable files under `outputs_dir`. Instances are located
// by remapped SOPInstanceUID via `map` (originals not in the map are
// looked up as-is, which covers scoring an identity transform). A series
// fails a category iff any member instance fails it.
ScoreReport score(const std::string& outputs_dir,
                  const std::vector<AnswerKeyEntry>& key, const UidMap& map);

}  // namespace deid
