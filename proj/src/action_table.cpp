#include "deid/action_table.hpp"

#include <fstream>
#include <sstream>

#include "deid/errors.hpp"

namespace deid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DicomError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Strips a trailing comment, honoring none inside the grammar.
std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

}  // namespace

std::string_view action_code_name(ActionCode a) {
  switch (a) {
    case ActionCode::X: return "X";
    case ActionCode::Z: return "Z";
    case ActionCode::D: return "D";
    case ActionCode::U: return "U";
    case ActionCode::C: return "C";
    case ActionCode::K: return "K";
    case ActionCode::ZD: return "Z/D";
    case ActionCode::XZ: return "X/Z";
    case ActionCode::XD: return "X/D";
    case ActionCode::XZD: return "X/Z/D";
    case ActionCode::XZU: return "X/Z/U*";
  }
  return "?";
}

std::optional<ActionCode> action_code_parse(std::string_view text) {
  if (text == "X") return ActionCode::X;
  if (text == "Z") return ActionCode::Z;
  if (text == "D") return ActionCode::D;
  if (text == "U") return ActionCode::U;
  if (text == "C") return ActionCode::C;
  if (text == "K") return ActionCode::K;
  if (text == "Z/D") return ActionCode::ZD;
  if (text == "X/Z") return ActionCode::XZ;
  if (text == "X/D") return ActionCode::XD;
  if (text == "X/Z/D") return ActionCode::XZD;
  if (text == "X/Z/U*" || text == "X/Z/U") return ActionCode::XZU;
  return std::nullopt;
}

std::string_view option_key_name(OptionKey k) {
  switch (k) {
    case OptionKey::CleanDescriptors: return "CLEANDESC";
    case OptionKey::RetainSafePrivate: return "RSP";
    case OptionKey::RetainUids: return "RUID";
    case OptionKey::RetainFullDates: return "RFD";
    case OptionKey::RetainModifiedDates: return "RMD";
    case OptionKey::RetainPatientCharacteristics: return "RPC";
    case OptionKey::RetainDeviceIdentity: return "RDEV";
    case OptionKey::RetainInstitutionIdentity: return "RINST";
  }
  return "?";
}

std::optional<OptionKey> option_key_parse(std::string_view text) {
  if (text == "CLEANDESC") return OptionKey::CleanDescriptors;
  if (text == "RSP") return OptionKey::RetainSafePrivate;
  if (text == "RUID") return OptionKey::RetainUids;
  if (text == "RFD") return OptionKey::RetainFullDates;
  if (text == "RMD") return OptionKey::RetainModifiedDates;
  if (text == "RPC") return OptionKey::RetainPatientCharacteristics;
  if (text == "RDEV") return OptionKey::RetainDeviceIdentity;
  if (text == "RINST") return OptionKey::RetainInstitutionIdentity;
  return std::nullopt;
}

std::vector<DeidActionEntry> load_action_table(std::string_view document) {
  std::vector<DeidActionEntry> entries;
  int line_no = 0;
  for (std::string_view line : split(document, '\n')) {
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;

    auto fields = split(line, ';');
    if (fields.size() < 2 || fields.size() > 3) {
      throw TableParseError("expected TAG;ACTION[;OVERRIDES]", line_no);
    }
    DeidActionEntry entry;
    auto pattern = TagPattern::parse(trim(fields[0]));
    if (!pattern) {
      throw TableParseError("bad tag pattern '" + std::string(fields[0]) + "'",
                            line_no);
    }
    entry.pattern = *pattern;
    auto action = action_code_parse(trim(fields[1]));
    if (!action) {
      throw TableParseError("unknown action '" + std::string(fields[1]) + "'",
                            line_no);
    }
    entry.basic_action = *action;

    if (fields.size() == 3 && !trim(fields[2]).empty()) {
      for (std::string_view pair : split(trim(fields[2]), ',')) {
        auto eq = pair.find('=');
        if (eq == std::string_view::npos) {
          throw TableParseError("override needs OPT=ACTION", line_no);
        }
        auto key = option_key_parse(trim(pair.substr(0, eq)));
        if (!key) {
          throw TableParseError("unknown option '" +
                                    std::string(pair.substr(0, eq)) + "'",
                                line_no);
        }
        auto value = action_code_parse(trim(pair.substr(eq + 1)));
        if (!value) {
          throw TableParseError("unknown override action", line_no);
        }
        entry.overrides[*key] = *value;
      }
    }

    for (const DeidActionEntry& existing : entries) {
      if (existing.pattern.group == entry.pattern.group &&
          existing.pattern.element == entry.pattern.element &&
          existing.pattern.group_mask == entry.pattern.group_mask &&
          existing.pattern.element_mask == entry.pattern.element_mask) {
        throw DuplicateTag("duplicate table row for " +
                           entry.pattern.to_string());
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<DeidActionEntry> load_action_table_file(const std::string& path) {
  return load_action_table(read_file(path));
}

TypePolicy TypePolicy::load(std::string_view document) {
  TypePolicy policy;
  int line_no = 0;
  for (std::string_view line : split(document, '\n')) {
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    auto fields = split(line, ';');
    if (fields.size() != 2) throw TableParseError("expected TAG;1|2|U", line_no);
    auto tag = Tag::parse(trim(fields[0]));
    if (!tag) throw TableParseError("bad tag", line_no);
    std::string_view kind = trim(fields[1]);
    if (kind == "1") {
      policy.entries_[*tag] = TypeLikeness::Type1;
    } else if (kind == "2") {
      policy.entries_[*tag] = TypeLikeness::Type2;
    } else if (kind == "U" || kind == "u") {
      policy.entries_[*tag] = TypeLikeness::KeepReferences;
    } else {
      throw TableParseError("bad type-likeness '" + std::string(kind) + "'",
                            line_no);
    }
  }
  return policy;
}

TypePolicy TypePolicy::load_file(const std::string& path) {
  return load(read_file(path));
}

std::optional<TypeLikeness> TypePolicy::lookup(Tag tag) const {
  auto it = entries_.find(tag);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<Tag> load_tag_list(std::string_view document) {
  std::vector<Tag> tags;
  int line_no = 0;
  for (std::string_view line : split(document, '\n')) {
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    auto tag = Tag::parse(line);
    if (!tag) throw TableParseError("bad tag '" + std::string(line) + "'", line_no);
    tags.push_back(*tag);
  }
  return tags;
}

std::vector<Tag> load_tag_list_file(const std::string& path) {
  return load_tag_list(read_file(path));
}

}  // namespace deid
