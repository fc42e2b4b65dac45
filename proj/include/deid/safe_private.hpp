// safe_private.hpp - knowledge base of manufacturer private tags safe to
// retain, loaded from the TCIA-convertible CSV format.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deid/tag.hpp"
#include "deid/vr.hpp"

namespace deid {

struct SafePrivateEntry {
  std::string private_creator;
  std::uint16_t group = 0;
  std::uint8_t element_offset = 0;  // low byte within the creator block
  std::vector<VR> candidate_vrs;    // informational, never used to rewrite
  std::string meaning;
};

class SafePrivateKb {
 public:
  // CSV columns: private_creator,group_hex,element_offset_hex,vr_list,meaning
  // (vr_list is '/'-separated). A header row is recognized and skipped.
  static SafePrivateKb load(std::string_view csv);
  static SafePrivateKb load_file(const std::string& path);

  // True when the creator declares tag's block offset as safe. The caller
  // resolves which creator owns the element's block.
  bool is_safe(std::string_view creator, Tag tag) const;

  const std::vector<SafePrivateEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  struct Key {
    std::string creator;
    std::uint16_t group;
    std::uint8_t offset;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<SafePrivateEntry> entries_;
  std::map<Key, std::size_t> index_;
};

}  // namespace deid
