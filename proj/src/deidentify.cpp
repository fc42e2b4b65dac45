// deidentify.cpp - application of a composed profile to a dataset: table
// actions at every nesting level, free-text cleaning, UID remapping,
// date policy, private-tag stripping and deidentification markers.

#include <map>
#include <string>

#include "deid/dictionary.hpp"
#include "deid/errors.hpp"
#include "deid/profile.hpp"

namespace deid {

namespace {

// Standard-defined UIDs (SOP classes, transfer syntaxes, coding schemes,
// well-known instances) live under the DICOM org root and must survive
// remapping untouched.
constexpr std::string_view kDicomOrgRoot = "1.2.840.10008.";

bool is_standard_uid(std::string_view uid) {
  return uid.substr(0, kDicomOrgRoot.size()) == kDicomOrgRoot;
}

std::string category_for(ResolvedAction action) {
  switch (action) {
    case ResolvedAction::Remove:
    case ResolvedAction::Zero: return "remove";
    case ResolvedAction::Dummy: return "replace_dummy";
    case ResolvedAction::RemapUid: return "remap_uid";
    case ResolvedAction::Clean: return "text_remove";
    case ResolvedAction::ShiftDate: return "date_action";
    case ResolvedAction::Keep: return "retain";
  }
  return "?";
}

struct EngineContext {
  const Profile& profile;
  UidMap& uids;
  const text::CleanContext& clean_ctx;
  std::int32_t date_shift = 0;
  bool shift_dates = false;  // false once the object is marked processed
  std::vector<AuditRecord>* audit = nullptr;

  void record(const ElementPath& path, ResolvedAction action, bool present) {
    if (action == ResolvedAction::Keep || !audit) return;
    audit->push_back({path, action, present, category_for(action)});
  }
};

DataSet deid_dataset(const DataSet& in, EngineContext& ctx, ElementPath& prefix,
                     bool inside_dummy_sequence);

// Remaps every UID value of a UI element through the shared map; values
// under the standard org root pass through. Returns true on change.
bool remap_uid_values(DataElement& element, EngineContext& ctx) {
  if (element.vr != VR::UI || ctx.profile.options.retain_uids) return false;
  bool changed = false;
  std::vector<std::string> values = element.string_values();
  for (std::string& value : values) {
    if (value.empty() || is_standard_uid(value)) continue;
    if (!uid_is_valid(value)) {
      throw InvalidUid("element " + element.tag.to_string() +
                       " holds invalid UID '" + value + "'");
    }
    std::string replacement = ctx.uids.remap(value);
    if (replacement != value) {
      value = replacement;
      changed = true;
    }
  }
  if (changed) element.set_strings(values);
  return changed;
}

DataElement clean_element(const DataElement& in, const DataSet& parent,
                          EngineContext& ctx) {
  DataElement out = in;
  std::vector<std::string> values = in.string_values();
  bool changed = false;
  for (std::string& value : values) {
    std::string decoded = decode_text(value, parent.charset);
    auto [cleaned, redactions] =
        text::clean_text(decoded, ctx.clean_ctx, ctx.profile.clean_rules);
    if (!redactions.empty()) {
      value = encode_text(cleaned, parent.charset);
      changed = true;
    }
  }
  if (changed) out.set_strings(values);
  return out;
}

DataElement dummy_element(const DataElement& in, EngineContext& ctx,
                          const ElementPath& path) {
  DataElement out(in.tag, in.vr);
  if (in.vr == VR::UI) {
    // Keeps the slot unique and referentially consistent: a present UID
    // remaps, an empty one gets a minted stand-in.
    std::string original = in.string_value();
    std::string uid =
        original.empty() ? ctx.uids.mint(path.to_string()) : ctx.uids.remap(original);
    out.set_string(uid);
  } else {
    out.raw = dummy_value_for(in.vr, &ctx.uids);
  }
  return out;
}

DataElement process_sequence_items(const DataElement& in, EngineContext& ctx,
                                   ElementPath& prefix, bool as_dummy) {
  DataElement out(in.tag, VR::SQ);
  out.undefined_length = in.undefined_length;
  for (std::uint32_t i = 0; i < in.items.size(); ++i) {
    prefix.steps.push_back({in.tag, i});
    out.items.push_back(deid_dataset(in.items[i], ctx, prefix, as_dummy));
    prefix.steps.pop_back();
  }
  return out;
}

DataSet deid_dataset(const DataSet& in, EngineContext& ctx, ElementPath& prefix,
                     bool inside_dummy_sequence) {
  const ProfileOptions& opts = ctx.profile.options;
  DataSet out;
  out.charset = in.charset;
  out.undefined_length_item = in.undefined_length_item;

  for (const auto& [tag, element] : in) {
    prefix.leaf = tag;

    // Private elements that survived the strip phase are retained
    // byte-identically; rewriting them is exactly the failure mode this
    // engine exists to avoid.
    if (tag.is_private()) {
      out.set(element);
      continue;
    }

    const PlannedAction* planned = ctx.profile.table.lookup(tag);
    ResolvedAction action;
    if (planned) {
      action = resolve_action(*planned, tag, in, ctx.profile.type_policy, opts);
    } else if (opts.clean_descriptors && vr_is_text_capable(element.vr)) {
      // Untabled free text is the channel the cleaner exists for; this
      // covers nested report text at any depth.
      action = ResolvedAction::Clean;
    } else {
      action = ResolvedAction::Keep;
    }

    switch (action) {
      case ResolvedAction::Remove:
        ctx.record(prefix, action, true);
        break;
      case ResolvedAction::Zero: {
        ctx.record(prefix, action, true);
        out.set(DataElement(tag, element.vr));
        break;
      }
      case ResolvedAction::Dummy: {
        if (element.is_sequence()) {
          // Structure-preserving recursion instead of a literal dummy.
          ctx.record(prefix, action, true);
          out.set(process_sequence_items(element, ctx, prefix, true));
        } else {
          ctx.record(prefix, action, true);
          out.set(dummy_element(element, ctx, prefix));
        }
        break;
      }
      case ResolvedAction::RemapUid: {
        if (element.is_sequence()) {
          out.set(process_sequence_items(element, ctx, prefix, inside_dummy_sequence));
          ctx.record(prefix, action, true);
        } else {
          DataElement e = element;
          if (remap_uid_values(e, ctx)) ctx.record(prefix, action, true);
          out.set(std::move(e));
        }
        break;
      }
      case ResolvedAction::Clean: {
        if (element.is_sequence()) {
          out.set(process_sequence_items(element, ctx, prefix, inside_dummy_sequence));
          break;
        }
        if (element.vr == VR::UN) {
          // Cannot safely scrub undecodable bytes.
          ctx.record(prefix, ResolvedAction::Remove, true);
          break;
        }
        if (!vr_is_text_capable(element.vr)) {
          out.set(element);
          break;
        }
        DataElement cleaned = clean_element(element, in, ctx);
        if (!(cleaned == element)) ctx.record(prefix, action, true);
        out.set(std::move(cleaned));
        break;
      }
      case ResolvedAction::ShiftDate: {
        DataElement e = element;
        if (ctx.shift_dates && (e.vr == VR::DA || e.vr == VR::DT)) {
          std::vector<std::string> values = e.string_values();
          for (std::string& v : values) {
            if (!v.empty()) v = shift_date_value(v, ctx.date_shift);
          }
          e.set_strings(values);
          ctx.record(prefix, action, true);
        }
        out.set(std::move(e));
        break;
      }
      case ResolvedAction::Keep: {
        if (element.is_sequence()) {
          out.set(process_sequence_items(element, ctx, prefix, inside_dummy_sequence));
        } else {
          DataElement e = element;
          if (remap_uid_values(e, ctx)) {
            ctx.record(prefix, ResolvedAction::RemapUid, true);
          }
          out.set(std::move(e));
        }
        break;
      }
    }
  }
  return out;
}

void add_method_code(DataElement& seq, const char* code, const char* meaning) {
  DataSet item;
  item.set_string(Tag{0x0008, 0x0100}, VR::SH, code);
  item.set_string(Tag{0x0008, 0x0102}, VR::SH, "DCM");
  item.set_string(Tag{0x0008, 0x0104}, VR::LO, meaning);
  seq.items.push_back(std::move(item));
}

void set_deid_markers(DataSet& ds, const ProfileOptions& opts) {
  ds.set_string(Tag{0x0012, 0x0062}, VR::CS, "YES");
  ds.set_string(Tag{0x0012, 0x0063}, VR::LO, opts.method_string());

  DataElement codes(Tag{0x0012, 0x0064}, VR::SQ);
  add_method_code(codes, "113100", "Basic Application Confidentiality Profile");
  if (opts.clean_descriptors) {
    add_method_code(codes, "113105", "Clean Descriptors Option");
  }
  if (opts.retain_safe_private) {
    add_method_code(codes, "113111", "Retain Safe Private Option");
  }
  if (opts.retain_uids) add_method_code(codes, "113110", "Retain UIDs Option");
  if (opts.retain_full_dates) {
    add_method_code(codes, "113106",
                    "Retain Longitudinal Temporal Information Full Dates Option");
  }
  if (opts.retain_modified_dates) {
    add_method_code(
        codes, "113107",
        "Retain Longitudinal Temporal Information Modified Dates Option");
  }
  if (opts.retain_patient_characteristics) {
    add_method_code(codes, "113108", "Retain Patient Characteristics Option");
  }
  if (opts.retain_device_identity) {
    add_method_code(codes, "113109", "Retain Device Identity Option");
  }
  if (opts.retain_institution_identity) {
    add_method_code(codes, "113112", "Retain Institution Identity Option");
  }
  ds.set(std::move(codes));
}

bool already_deidentified(const DataSet& ds) {
  auto removed = ds.find(Tag{0x0012, 0x0062});
  if (!removed || removed->string_value() != "YES") return false;
  auto method = ds.find(Tag{0x0012, 0x0063});
  return method && method->string_value().rfind("BasicProfile", 0) == 0;
}

}  // namespace

DataElement anonymize_sequence_recursive(const DataElement& seq,
                                         const Profile& profile, UidMap& uids,
                                         const text::CleanContext& clean_ctx,
                                         std::vector<AuditRecord>& audit) {
  if (!seq.is_sequence()) {
    throw DicomError("anonymize_sequence_recursive needs a sequence element");
  }
  EngineContext ctx{profile, uids, clean_ctx};
  ctx.audit = &audit;
  if (profile.options.retain_modified_dates) {
    ctx.shift_dates = true;
    ctx.date_shift = profile.options.date_shift_days.value_or(0);
  }
  ElementPath prefix;
  prefix.leaf = seq.tag;
  return process_sequence_items(seq, ctx, prefix, true);
}

std::pair<DicomObject, std::vector<AuditRecord>> apply_profile(
    const DicomObject& obj, const Profile& profile, UidMap& uids,
    const text::CleanContext& clean_ctx) {
  profile.options.validate();
  std::vector<AuditRecord> audit;

  EngineContext ctx{profile, uids, clean_ctx};
  ctx.audit = &audit;
  if (profile.options.retain_modified_dates) {
    // Reprocessing an already-marked object must not shift twice.
    ctx.shift_dates = !already_deidentified(obj.dataset);
    if (ctx.shift_dates) {
      if (profile.options.date_shift_days) {
        ctx.date_shift = *profile.options.date_shift_days;
      } else {
        std::string patient_id;
        if (auto pid = obj.dataset.find(Tag{0x0010, 0x0020})) {
          patient_id = pid->string_value();
        }
        ctx.date_shift = derive_date_shift(profile.salt, patient_id);
      }
    }
  }

  DicomObject out = obj;
  ElementPath prefix;
  out.dataset = deid_dataset(obj.dataset, ctx, prefix, false);
  set_deid_markers(out.dataset, profile.options);
  if (profile.options.insert_missing_type2) {
    out.dataset = insert_missing_type2(out.dataset, profile.type2_required);
  }

  // File meta follows the dataset identity.
  if (auto sop = out.dataset.find(Tag{0x0008, 0x0018})) {
    out.file_meta.set_string(Tag{0x0002, 0x0003}, VR::UI, sop->string_value());
  }
  if (auto cls = out.dataset.find(Tag{0x0008, 0x0016})) {
    out.file_meta.set_string(Tag{0x0002, 0x0002}, VR::UI, cls->string_value());
  }
  return {std::move(out), std::move(audit)};
}

namespace {

DataSet strip_private_level(const DataSet& in, const SafePrivateKb& kb,
                            bool retain_safe) {
  DataSet out;
  out.charset = in.charset;
  out.undefined_length_item = in.undefined_length_item;

  // Creator strings per block, needed to scope the safe-list lookup.
  std::map<std::pair<std::uint16_t, std::uint8_t>, std::string> creators;
  for (const auto& [tag, element] : in) {
    if (tag.is_private_creator()) {
      creators[{tag.group, static_cast<std::uint8_t>(tag.element & 0xFF)}] =
          element.string_value();
    }
  }

  std::map<std::pair<std::uint16_t, std::uint8_t>, bool> block_has_kept;
  for (const auto& [tag, element] : in) {
    if (!tag.is_private()) {
      if (element.is_sequence()) {
        DataElement copy = element;
        copy.items.clear();
        for (const DataSet& item : element.items) {
          copy.items.push_back(strip_private_level(item, kb, retain_safe));
        }
        out.set(std::move(copy));
      } else {
        out.set(element);
      }
      continue;
    }
    if (tag.is_private_creator() || tag.is_group_length()) continue;  // later / drop
    if (!retain_safe) continue;
    auto creator_it = creators.find({tag.group, tag.private_block()});
    if (creator_it == creators.end()) continue;  // unbound block
    if (kb.is_safe(creator_it->second, tag)) {
      out.set(element);  // byte-identical, VR untouched
      block_has_kept[{tag.group, tag.private_block()}] = true;
    }
  }

  // A creator survives only while its block still has kept elements.
  for (const auto& [tag, element] : in) {
    if (!tag.is_private_creator()) continue;
    auto key = std::make_pair(tag.group, static_cast<std::uint8_t>(tag.element & 0xFF));
    if (block_has_kept.count(key)) out.set(element);
  }
  return out;
}

}  // namespace

DataSet strip_unsafe_private(const DataSet& ds, const SafePrivateKb& kb,
                             bool retain_safe_private) {
  return strip_private_level(ds, kb, retain_safe_private);
}

DataSet insert_missing_type2(const DataSet& ds, const std::vector<Tag>& required) {
  DataSet out = ds;
  for (Tag tag : required) {
    if (out.contains(tag)) continue;
    out.set(DataElement(tag, dict_vr(tag)));
  }
  return out;
}

}  // namespace deid
