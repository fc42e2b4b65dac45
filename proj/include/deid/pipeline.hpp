// pipeline.hpp - batch orchestration: filter -> harmonize -> deidentify ->
// clean -> write, with config, audit log, and UID-map persistence.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deid/codec.hpp"
#include "deid/profile.hpp"

namespace deid {

enum class FailurePolicy : std::uint8_t { Halt, SkipAndLog };

struct PixelMaskRect {
  std::uint32_t x = 0, y = 0, width = 0, height = 0;
};

struct PixelMaskSpec {
  // SOP class UID, series UID, or "all".
  std::string selector = "all";
  std::vector<PixelMaskRect> rectangles;
  std::uint16_t fill = 0;
};

struct JobConfig {
  std::string input_root;
  std::string output_root;
  std::string profile_spec = "basic";
  std::string action_table_path;
  std::string type_policy_path;
  std::string type2_list_path;
  std::string safe_private_kb_path;
  std::string extension_rules_path;
  std::string uid_map_path;
  std::string uid_root = "2.25";
  std::string salt_env = "DEID_SALT";
  std::string salt;  // resolved from the environment, never from the CLI
  std::optional<std::int32_t> date_shift_days;
  std::vector<std::string> allow_sop_classes;
  std::vector<std::string> deny_sop_classes;
  std::vector<Tag> harmonize_tags;
  std::vector<std::string> clean_extra_tokens;
  std::vector<std::string> gazetteer;
  std::vector<PixelMaskSpec> pixel_masks;
  FailurePolicy failure_policy = FailurePolicy::SkipAndLog;
  unsigned jobs = 1;
  bool dry_run = false;
  std::string audit_log_path;  // default: <output>/audit.log

  // input != output, at most one of allow/deny, salt present when needed.
  void validate() const;
};

// Declarative `key = value` file with `[list]` sections; '#' comments.
JobConfig load_config_file(const std::string& path);
JobConfig load_config(std::string_view text, const std::string& base_dir);

enum class FilterDecision : std::uint8_t { Keep, Reject };

struct FilterResult {
  FilterDecision decision;
  std::string reason;
};

// Allow-list keeps only listed SOP classes; deny-list rejects listed;
// a missing (0008,0016) always rejects.
FilterResult filter_sop_class(const DicomObject& obj, const JobConfig& config);

// Fills the given rectangles across all frames. Uncompressed 8/16-bit
// pixel data only; rectangles must lie within Rows x Columns.
DicomObject apply_pixel_masks(const DicomObject& obj, const PixelMaskSpec& spec);

struct RunSummary {
  std::size_t files_in = 0;
  std::size_t written = 0;
  std::size_t rejected = 0;
  std::size_t failed = 0;

  bool conserved() const { return files_in == written + rejected + failed; }
};

// Exit codes: 0 success, 1 processing failures present, 2 config error.
int run(const JobConfig& config, RunSummary* summary = nullptr);

}  // namespace deid
