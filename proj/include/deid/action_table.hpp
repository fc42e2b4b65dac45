// action_table.hpp - the confidentiality-profile action table, loaded
// from a line-oriented data file so a standard-edition update is a data
// change, not a code change.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deid/tag.hpp"

namespace deid {

// Closed vocabulary of per-tag actions, including the compound forms
// whose choice is element- and policy-dependent.
enum class ActionCode : std::uint8_t {
  X,     // remove
  Z,     // replace with zero length
  D,     // replace with a VR-consistent dummy
  U,     // replace UID consistently
  C,     // clean (retain but scrub identifying text)
  K,     // keep (option overlays only)
  ZD,    // Z/D
  XZ,    // X/Z
  XD,    // X/D
  XZD,   // X/Z/D
  XZU,   // X/Z/U*
};

std::string_view action_code_name(ActionCode a);
std::optional<ActionCode> action_code_parse(std::string_view text);

// Options a table row may override, keyed by the identifiers used in the
// data file.
enum class OptionKey : std::uint8_t {
  CleanDescriptors,        // CLEANDESC
  RetainSafePrivate,       // RSP
  RetainUids,              // RUID
  RetainFullDates,         // RFD
  RetainModifiedDates,     // RMD
  RetainPatientCharacteristics,  // RPC
  RetainDeviceIdentity,    // RDEV
  RetainInstitutionIdentity,     // RINST
};

std::string_view option_key_name(OptionKey k);
std::optional<OptionKey> option_key_parse(std::string_view text);

struct DeidActionEntry {
  TagPattern pattern;
  ActionCode basic_action;
  std::map<OptionKey, ActionCode> overrides;
};

// Grammar: `TAG_OR_PATTERN;BASIC_ACTION;OPT=ACTION,...` with `#` comments
// and blank lines. Duplicate tags/patterns are rejected.
std::vector<DeidActionEntry> load_action_table(std::string_view document);
std::vector<DeidActionEntry> load_action_table_file(const std::string& path);

// X/Z/D-style multiplex resolution policy: tags marked here resolve to D
// (type-1-like) or Z (type-2-like) when present; 'u' marks reference
// sequences that should keep their structure under X/Z/U*.
enum class TypeLikeness : std::uint8_t { Type1, Type2, KeepReferences };

class TypePolicy {
 public:
  // Grammar: `TAG;1|2|U` with `#` comments.
  static TypePolicy load(std::string_view document);
  static TypePolicy load_file(const std::string& path);

  std::optional<TypeLikeness> lookup(Tag tag) const;
  void set(Tag tag, TypeLikeness t) { entries_[tag] = t; }

 private:
  std::map<Tag, TypeLikeness> entries_;
};

// Type-2 tags inserted zero-length when the insert option is on.
std::vector<Tag> load_tag_list(std::string_view document);
std::vector<Tag> load_tag_list_file(const std::string& path);

}  // namespace deid
