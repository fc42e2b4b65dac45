// dictionary.hpp - standard tag dictionary subset used to resolve
// implicit-VR elements and to validate writes.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "deid/tag.hpp"
#include "deid/vr.hpp"

namespace deid {

struct DictEntry {
  TagPattern pattern;
  std::string_view keyword;
  VR vr;
  // Some tags legitimately carry one of several VRs (e.g. OB/OW data);
  // alternates are informational and never used to rewrite bytes.
  std::vector<VR> alternate_vrs;
  std::string_view vm = "1";
};

// Exact entries win over patterns; among patterns the one with fewer
// wildcard digits wins. Unknown (including private) tags return nullptr.
const DictEntry* dict_lookup(Tag tag);

// Dictionary VR for a tag; UN when unknown.
VR dict_vr(Tag tag);

std::optional<Tag> dict_tag_by_keyword(std::string_view keyword);

}  // namespace deid
