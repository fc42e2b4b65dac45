#include "deid/profile.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>

#include "deid/dictionary.hpp"
#include "deid/errors.hpp"

namespace deid {

void ProfileOptions::validate() const {
  if (retain_full_dates && retain_modified_dates) {
    throw ConfigError(
        "retain_full_dates and retain_modified_dates are mutually exclusive");
  }
}

std::string ProfileOptions::method_string() const {
  std::string s = "BasicProfile";
  if (clean_descriptors) s += "+CLEANDESC";
  if (retain_safe_private) s += "+RSP";
  if (retain_uids) s += "+RUID";
  if (retain_full_dates) s += "+RFD";
  if (retain_modified_dates) s += "+RMD";
  if (retain_patient_characteristics) s += "+RPC";
  if (retain_device_identity) s += "+RDEV";
  if (retain_institution_identity) s += "+RINST";
  if (insert_missing_type2) s += "+TYPE2";
  return s;
}

ProfileOptions ProfileOptions::parse(std::string_view spec) {
  ProfileOptions opts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto plus = spec.find('+', start);
    std::string_view part = plus == std::string_view::npos
                                ? spec.substr(start)
                                : spec.substr(start, plus - start);
    start = plus == std::string_view::npos ? spec.size() + 1 : plus + 1;
    if (part.empty()) continue;
    std::string_view arg;
    if (auto colon = part.find(':'); colon != std::string_view::npos) {
      arg = part.substr(colon + 1);
      part = part.substr(0, colon);
    }
    if (part == "basic") {
      // the always-on baseline
    } else if (part == "cleandesc") {
      opts.clean_descriptors = true;
    } else if (part == "retainsafeprivate") {
      opts.retain_safe_private = true;
    } else if (part == "retainuids") {
      opts.retain_uids = true;
    } else if (part == "retainfulldates") {
      opts.retain_full_dates = true;
    } else if (part == "retainmoddates") {
      opts.retain_modified_dates = true;
      if (!arg.empty()) {
        opts.date_shift_days = static_cast<std::int32_t>(std::stol(std::string(arg)));
      }
    } else if (part == "retainpatchars") {
      opts.retain_patient_characteristics = true;
    } else if (part == "retaindevid") {
      opts.retain_device_identity = true;
    } else if (part == "retaininstid") {
      opts.retain_institution_identity = true;
    } else if (part == "inserttype2") {
      opts.insert_missing_type2 = true;
    } else {
      throw ConfigError("unknown profile option '" + std::string(part) + "'");
    }
  }
  opts.validate();
  return opts;
}

std::string_view resolved_action_name(ResolvedAction a) {
  switch (a) {
    case ResolvedAction::Remove: return "remove";
    case ResolvedAction::Zero: return "zero";
    case ResolvedAction::Dummy: return "dummy";
    case ResolvedAction::RemapUid: return "remap_uid";
    case ResolvedAction::Clean: return "clean";
    case ResolvedAction::Keep: return "keep";
    case ResolvedAction::ShiftDate: return "shift_date";
  }
  return "?";
}

const PlannedAction* EffectiveTable::lookup(Tag tag) const {
  if (auto it = exact_.find(tag); it != exact_.end()) {
    return &rows_[it->second].second;
  }
  const PlannedAction* best = nullptr;
  int best_wildcards = 99;
  for (const auto& [pattern, action] : rows_) {
    if (pattern.is_exact() || !pattern.matches(tag)) continue;
    int w = pattern.wildcard_digits();
    if (w < best_wildcards) {
      best = &action;
      best_wildcards = w;
    }
  }
  return best;
}

void EffectiveTable::put(const TagPattern& pattern, PlannedAction action) {
  if (pattern.is_exact()) {
    exact_[Tag{pattern.group, pattern.element}] = rows_.size();
  }
  rows_.emplace_back(pattern, action);
}

namespace {

bool option_enabled(OptionKey key, const ProfileOptions& opts) {
  switch (key) {
    case OptionKey::CleanDescriptors: return opts.clean_descriptors;
    case OptionKey::RetainSafePrivate: return opts.retain_safe_private;
    case OptionKey::RetainUids: return opts.retain_uids;
    case OptionKey::RetainFullDates: return opts.retain_full_dates;
    case OptionKey::RetainModifiedDates: return opts.retain_modified_dates;
    case OptionKey::RetainPatientCharacteristics:
      return opts.retain_patient_characteristics;
    case OptionKey::RetainDeviceIdentity: return opts.retain_device_identity;
    case OptionKey::RetainInstitutionIdentity:
      return opts.retain_institution_identity;
  }
  return false;
}

}  // namespace

EffectiveTable compose_profile(const std::vector<DeidActionEntry>& table,
                               const ProfileOptions& opts) {
  opts.validate();
  EffectiveTable effective;
  for (const DeidActionEntry& entry : table) {
    PlannedAction planned{entry.basic_action, false};

    std::optional<ActionCode> override_action;
    bool override_from_rmd = false;
    for (const auto& [key, action] : entry.overrides) {
      if (!option_enabled(key, opts)) continue;
      if (override_action && *override_action != action) {
        // Keep yields to a more specific action; different non-Keep
        // actions from two options have no defined composition.
        if (*override_action != ActionCode::K && action != ActionCode::K) {
          throw ConflictingOverride("options assign both " +
                                    std::string(action_code_name(*override_action)) +
                                    " and " + std::string(action_code_name(action)) +
                                    " to " + entry.pattern.to_string());
        }
        if (*override_action == ActionCode::K) {
          override_action = action;
          override_from_rmd = key == OptionKey::RetainModifiedDates;
        }
      } else if (!override_action) {
        override_action = action;
        override_from_rmd = key == OptionKey::RetainModifiedDates;
      }
    }

    if (override_action) {
      planned.code = *override_action;
      if (override_from_rmd && *override_action == ActionCode::K &&
          entry.pattern.is_exact()) {
        VR vr = dict_vr(Tag{entry.pattern.group, entry.pattern.element});
        if (vr == VR::DA || vr == VR::DT) planned.shift_instead_of_keep = true;
      }
    }
    effective.put(entry.pattern, planned);
  }
  return effective;
}

namespace {

struct AllowedSet {
  bool x = false, z = false, d = false, u = false;
};

AllowedSet allowed_for(ActionCode code) {
  switch (code) {
    case ActionCode::ZD: return {false, true, true, false};
    case ActionCode::XZ: return {true, true, false, false};
    case ActionCode::XD: return {true, false, true, false};
    case ActionCode::XZD: return {true, true, true, false};
    case ActionCode::XZU: return {true, true, false, true};
    default: return {};
  }
}

}  // namespace

ResolvedAction resolve_multiplex(ActionCode action, Tag tag, const DataSet& ds,
                                 const TypePolicy& policy) {
  const DataElement* element = ds.find(tag);
  if (!element) return ResolvedAction::Remove;  // removing the absent is a no-op

  AllowedSet allowed = allowed_for(action);
  auto likeness = policy.lookup(tag);

  if (likeness == TypeLikeness::KeepReferences && allowed.u) {
    return ResolvedAction::RemapUid;
  }
  if (likeness == TypeLikeness::Type1) {
    if (allowed.d) return ResolvedAction::Dummy;
    if (allowed.z) return ResolvedAction::Zero;
    return ResolvedAction::Remove;
  }
  if (likeness == TypeLikeness::Type2) {
    if (allowed.z) return ResolvedAction::Zero;
    if (allowed.d) return ResolvedAction::Dummy;
    return ResolvedAction::Remove;
  }
  // Unlisted: a kept slot must never hold an empty UID, otherwise take
  // the most aggressive permitted action.
  if (element->vr == VR::UI && allowed.d) return ResolvedAction::Dummy;
  if (allowed.x) return ResolvedAction::Remove;
  if (allowed.z) return ResolvedAction::Zero;
  if (allowed.d) return ResolvedAction::Dummy;
  return ResolvedAction::RemapUid;
}

ResolvedAction resolve_action(const PlannedAction& planned, Tag tag,
                              const DataSet& ds, const TypePolicy& policy,
                              const ProfileOptions& opts) {
  switch (planned.code) {
    case ActionCode::X: return ResolvedAction::Remove;
    case ActionCode::Z: return ResolvedAction::Zero;
    case ActionCode::D: return ResolvedAction::Dummy;
    case ActionCode::U:
      return opts.retain_uids ? ResolvedAction::Keep : ResolvedAction::RemapUid;
    case ActionCode::C: return ResolvedAction::Clean;
    case ActionCode::K:
      return planned.shift_instead_of_keep ? ResolvedAction::ShiftDate
                                           : ResolvedAction::Keep;
    default: return resolve_multiplex(planned.code, tag, ds, policy);
  }
}

std::vector<std::uint8_t> dummy_value_for(VR vr, UidMap* uids) {
  auto str = [](std::string_view s) {
    std::vector<std::uint8_t> v(s.begin(), s.end());
    if (v.size() % 2) v.push_back(' ');
    return v;
  };
  switch (vr) {
    case VR::DA: return str("19000101");
    case VR::TM: return str("000000");
    case VR::DT: return str("19000101000000");
    case VR::AS: return str("000Y");
    case VR::PN: return str("ANONYMIZED");
    case VR::CS: return str("UNKNOWN");
    case VR::DS: return str("0");
    case VR::IS: return str("0");
    case VR::UI: {
      std::string uid = uids ? uids->mint("dummy") : "2.25.680086960152518197";
      std::vector<std::uint8_t> v(uid.begin(), uid.end());
      if (v.size() % 2) v.push_back('\0');
      return v;
    }
    case VR::AE: return str("ANON");
    case VR::UR: return str("http://anonymized.invalid");
    case VR::US:
    case VR::SS: return {0, 0};
    case VR::UL:
    case VR::SL:
    case VR::FL:
    case VR::AT: return {0, 0, 0, 0};
    case VR::FD: return {0, 0, 0, 0, 0, 0, 0, 0};
    case VR::SQ:
      throw DicomError("dummy_value_for does not handle sequences");
    default:
      // Text and binary blobs: a short non-empty placeholder.
      if (vr_is_string(vr)) return str("ANONYMIZED");
      return {0, 0};
  }
}

// -----------------------------------------------------------------------
// Calendar arithmetic (proleptic Gregorian, no timezone concerns).

namespace {

std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) -
         719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y_ = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  y = static_cast<int>(y_ + (m <= 2));
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return !s.empty();
}

}  // namespace

std::string shift_date_value(std::string_view value, std::int32_t days) {
  // Needs at least YYYYMMDD; partial-precision values pass through.
  if (value.size() < 8 || !all_digits(value.substr(0, 8))) {
    return std::string(value);
  }
  int y = std::stoi(std::string(value.substr(0, 4)));
  int m = std::stoi(std::string(value.substr(4, 2)));
  int d = std::stoi(std::string(value.substr(6, 2)));
  if (m < 1 || m > 12 || d < 1 || d > 31) return std::string(value);
  std::int64_t serial = days_from_civil(y, m, d) + days;
  civil_from_days(serial, y, m, d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d%02d%02d", y, m, d);
  return std::string(buf) + std::string(value.substr(8));
}

std::int32_t derive_date_shift(std::string_view salt, std::string_view patient_id) {
  std::string material = std::string(salt) + "|dateshift|" + std::string(patient_id);
  unsigned char digest[32];
  unsigned len = 0;
  EVP_Digest(material.data(), material.size(), digest, &len, EVP_sha256(), nullptr);
  std::uint32_t v = (std::uint32_t(digest[0]) << 24) | (std::uint32_t(digest[1]) << 16) |
                    (std::uint32_t(digest[2]) << 8) | digest[3];
  return -static_cast<std::int32_t>(1 + v % 364);
}

}  // namespace deid
