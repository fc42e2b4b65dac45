// config.cpp - declarative job configuration: `key = value` lines plus
// `[name]` list sections, '#' comments.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "deid/errors.hpp"
#include "deid/pipeline.hpp"

namespace deid {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

std::string resolve_path(const std::string& path, const std::string& base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

PixelMaskSpec parse_mask_line(const std::string& line, int line_no) {
  // selector;x,y,w,h[|x,y,w,h...];fill
  auto first = line.find(';');
  auto last = line.rfind(';');
  if (first == std::string::npos || first == last) {
    throw ConfigError("pixel mask line " + std::to_string(line_no) +
                      ": expected selector;rects;fill");
  }
  PixelMaskSpec spec;
  spec.selector = trim(line.substr(0, first));
  std::string rects = line.substr(first + 1, last - first - 1);
  std::string fill = trim(line.substr(last + 1));
  spec.fill = static_cast<std::uint16_t>(std::strtoul(fill.c_str(), nullptr, 10));

  std::stringstream ss(rects);
  std::string rect;
  while (std::getline(ss, rect, '|')) {
    PixelMaskRect r;
    if (std::sscanf(rect.c_str(), "%u,%u,%u,%u", &r.x, &r.y, &r.width, &r.height) != 4) {
      throw ConfigError("pixel mask line " + std::to_string(line_no) +
                        ": bad rectangle '" + rect + "'");
    }
    spec.rectangles.push_back(r);
  }
  return spec;
}

}  // namespace

void JobConfig::validate() const {
  if (input_root.empty() || output_root.empty()) {
    throw ConfigError("input and output roots are required");
  }
  namespace fs = std::filesystem;
  if (fs::weakly_canonical(input_root) == fs::weakly_canonical(output_root)) {
    throw ConfigError("input and output roots must differ");
  }
  if (!allow_sop_classes.empty() && !deny_sop_classes.empty()) {
    throw ConfigError("allow and deny SOP class lists are mutually exclusive");
  }
  ProfileOptions opts = ProfileOptions::parse(profile_spec);
  bool needs_uid_hash = !opts.retain_uids;
  bool needs_date_hash = opts.retain_modified_dates && !date_shift_days.has_value() &&
                         !opts.date_shift_days.has_value();
  if ((needs_uid_hash || needs_date_hash) && salt.empty()) {
    throw ConfigError("salt is required (set $" + salt_env + ")");
  }
  if (action_table_path.empty()) throw ConfigError("action_table is required");
}

JobConfig load_config(std::string_view text, const std::string& base_dir) {
  JobConfig cfg;
  std::string section;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string raw(nl == std::string_view::npos ? text.substr(start)
                                                 : text.substr(start, nl - start));
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }

    if (!section.empty()) {
      if (section == "allow_sop_classes") {
        cfg.allow_sop_classes.push_back(line);
      } else if (section == "deny_sop_classes") {
        cfg.deny_sop_classes.push_back(line);
      } else if (section == "harmonize_tags") {
        auto tag = Tag::parse(line);
        if (!tag) {
          throw ConfigError("config line " + std::to_string(line_no) +
                            ": bad tag '" + line + "'");
        }
        cfg.harmonize_tags.push_back(*tag);
      } else if (section == "clean_extra_tokens") {
        cfg.clean_extra_tokens.push_back(line);
      } else if (section == "gazetteer") {
        cfg.gazetteer.push_back(line);
      } else if (section == "pixel_masks") {
        cfg.pixel_masks.push_back(parse_mask_line(line, line_no));
      } else {
        throw ConfigError("unknown config section [" + section + "]");
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "input") cfg.input_root = resolve_path(value, base_dir);
    else if (key == "output") cfg.output_root = resolve_path(value, base_dir);
    else if (key == "profile") cfg.profile_spec = value;
    else if (key == "action_table") cfg.action_table_path = resolve_path(value, base_dir);
    else if (key == "type_policy") cfg.type_policy_path = resolve_path(value, base_dir);
    else if (key == "type2_list") cfg.type2_list_path = resolve_path(value, base_dir);
    else if (key == "safe_private_kb") cfg.safe_private_kb_path = resolve_path(value, base_dir);
    else if (key == "extension_rules") cfg.extension_rules_path = resolve_path(value, base_dir);
    else if (key == "uid_map") cfg.uid_map_path = resolve_path(value, base_dir);
    else if (key == "uid_root") cfg.uid_root = value;
    else if (key == "salt_env") cfg.salt_env = value;
    else if (key == "date_shift_days") cfg.date_shift_days = std::stol(value);
    else if (key == "audit_log") cfg.audit_log_path = resolve_path(value, base_dir);
    else if (key == "jobs") cfg.jobs = static_cast<unsigned>(std::stoul(value));
    else if (key == "dry_run") cfg.dry_run = value == "true" || value == "1";
    else if (key == "failure_policy") {
      if (value == "halt") cfg.failure_policy = FailurePolicy::Halt;
      else if (value == "skip-and-log") cfg.failure_policy = FailurePolicy::SkipAndLog;
      else throw ConfigError("failure_policy must be halt or skip-and-log");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  // The salt never appears in the file or on a command line.
  if (const char* salt = std::getenv(cfg.salt_env.c_str())) cfg.salt = salt;
  return cfg;
}

JobConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string base = std::filesystem::path(path).parent_path().string();
  return load_config(ss.str(), base);
}

}  // namespace deid
