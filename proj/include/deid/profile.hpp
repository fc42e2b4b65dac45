// profile.hpp - composition of the Basic confidentiality profile with
// retain/clean options into an effective per-tag action table, plus the
// application of that table to a dataset.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deid/action_table.hpp"
#include "deid/codec.hpp"
#include "deid/dataset.hpp"
#include "deid/safe_private.hpp"
#include "deid/text_clean.hpp"
#include "deid/uid_map.hpp"

namespace deid {

struct ProfileOptions {
  bool clean_descriptors = false;
  bool retain_safe_private = false;
  bool retain_uids = false;
  bool retain_full_dates = false;
  bool retain_modified_dates = false;
  // Days added to every DA/DT value under retain_modified_dates; when
  // unset the offset is derived per patient from a salted hash.
  std::optional<std::int32_t> date_shift_days;
  bool retain_patient_characteristics = false;
  bool retain_device_identity = false;
  bool retain_institution_identity = false;
  bool insert_missing_type2 = false;

  // retain_full_dates and retain_modified_dates are mutually exclusive.
  void validate() const;

  // "BasicProfile" plus "+OPTION" suffixes in canonical order.
  std::string method_string() const;

  // e.g. "basic+cleandesc+retainsafeprivate"; unknown parts throw.
  static ProfileOptions parse(std::string_view spec);
};

enum class ResolvedAction : std::uint8_t {
  Remove,
  Zero,
  Dummy,
  RemapUid,
  Clean,
  Keep,
  ShiftDate,
};

std::string_view resolved_action_name(ResolvedAction a);

// A composed table entry: either final, or still a compound code whose
// choice depends on element presence and the type policy.
struct PlannedAction {
  ActionCode code = ActionCode::X;
  bool shift_instead_of_keep = false;  // RMD overlay on date/time tags
};

class EffectiveTable {
 public:
  const PlannedAction* lookup(Tag tag) const;
  void put(const TagPattern& pattern, PlannedAction action);

  const std::vector<std::pair<TagPattern, PlannedAction>>& rows() const {
    return rows_;
  }

 private:
  std::map<Tag, std::size_t> exact_;
  std::vector<std::pair<TagPattern, PlannedAction>> rows_;
};

// Applies option overlays to the loaded table. Two enabled options
// assigning different non-Keep actions to one tag is a ConflictingOverride.
EffectiveTable compose_profile(const std::vector<DeidActionEntry>& table,
                               const ProfileOptions& opts);

// Deterministic choice for compound codes. Absent elements resolve to
// Remove (a no-op); present ones follow the type policy, constrained to
// the compound's permitted set.
ResolvedAction resolve_multiplex(ActionCode action, Tag tag, const DataSet& ds,
                                 const TypePolicy& policy);

// Final per-element action for a composed entry.
ResolvedAction resolve_action(const PlannedAction& planned, Tag tag,
                              const DataSet& ds, const TypePolicy& policy,
                              const ProfileOptions& opts);

// Fixed documented dummy constants per VR (UI mints a fresh UID).
// Sequences are handled by the recursive path, not here.
std::vector<std::uint8_t> dummy_value_for(VR vr, UidMap* uids = nullptr);

struct AuditRecord {
  ElementPath path;
  ResolvedAction action;
  bool original_present = false;
  std::string category;  // scoring taxonomy label
};

struct Profile {
  ProfileOptions options;
  EffectiveTable table;
  TypePolicy type_policy;
  std::vector<Tag> type2_required;
  text::RuleSet clean_rules;
  const SafePrivateKb* safe_private = nullptr;
  // Feeds the per-patient date-shift derivation when no fixed offset is
  // configured; the UID map carries its own copy.
  std::string salt;
};

// One pass over every element (all nesting levels): table actions,
// free-text cleaning, UID remapping, date policy, deidentification
// markers. Returns the rewritten object plus the audit trail.
std::pair<DicomObject, std::vector<AuditRecord>> apply_profile(
    const DicomObject& obj, const Profile& profile, UidMap& uids,
    const text::CleanContext& clean_ctx);

// Deletes private elements absent from the safe list (or all of them when
// the option is off); retained ones keep their bytes untouched. A creator
// survives only while its block still has kept elements.
DataSet strip_unsafe_private(const DataSet& ds, const SafePrivateKb& kb,
                             bool retain_safe_private);

// Inserts each listed tag zero-length when absent; present tags untouched.
DataSet insert_missing_type2(const DataSet& ds, const std::vector<Tag>& required);

// Recursive handling of a sequence whose table action is Dummy: item
// structure preserved, nested elements processed by the table, untabled
// text leaves cleaned when the option is on.
DataElement anonymize_sequence_recursive(const DataElement& seq,
                                         const Profile& profile, UidMap& uids,
                                         const text::CleanContext& clean_ctx,
                                         std::vector<AuditRecord>& audit);

// Calendar-exact day shift of DA ("YYYYMMDD") and the date part of DT.
std::string shift_date_value(std::string_view value, std::int32_t days);

// Per-patient shift offset derived from a salted hash (range [-364,-1]).
std::int32_t derive_date_shift(std::string_view salt, std::string_view patient_id);

}  // namespace deid
