// dataset.hpp - in-memory model of parsed DICOM attributes.
//
// A DataSet keeps elements strictly ordered by tag; sequence items are
// nested DataSets. Leaf payloads stay as raw bytes so that untouched
// elements re-serialize byte-exactly.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deid/tag.hpp"
#include "deid/vr.hpp"

namespace deid {

class DataSet;

// Character repertoires we decode; anything else is carried as raw bytes.
enum class Charset : std::uint8_t { Ascii, Latin1, Utf8, Unsupported };

Charset charset_from_specific_character_set(std::string_view value);
std::string charset_to_specific_character_set(Charset cs);

// Decode dataset bytes to UTF-8 / encode UTF-8 back to dataset bytes.
std::string decode_text(std::string_view bytes, Charset cs);
std::string encode_text(std::string_view utf8, Charset cs);

class DataElement {
 public:
  Tag tag;
  VR vr = VR::UN;

  // Leaf payload (even length as parsed). For opaque carry-through of
  // encapsulated pixel data this holds the whole fragment stream.
  std::vector<std::uint8_t> raw;

  // Sequence items when vr == SQ.
  std::vector<DataSet> items;

  // Length-form as parsed; preserved on write. New elements are written
  // with defined lengths.
  bool undefined_length = false;

  DataElement() = default;
  DataElement(Tag t, VR v) : tag(t), vr(v) {}
  DataElement(Tag t, VR v, std::vector<std::uint8_t> bytes)
      : tag(t), vr(v), raw(std::move(bytes)) {}

  bool is_sequence() const { return vr == VR::SQ; }
  bool empty() const { return raw.empty() && items.empty(); }
  std::size_t value_length() const { return raw.size(); }

  // Raw bytes as a string with trailing pad (space/NUL) stripped.
  std::string string_value() const;
  // VM-split on backslash (single-element vector for non-multi VRs).
  std::vector<std::string> string_values() const;

  // Replace the payload with a padded string value.
  void set_string(std::string_view value);
  void set_strings(const std::vector<std::string>& values);

  std::optional<long long> int_value() const;

  bool operator==(const DataElement& rhs) const;
};

class DataSet {
 public:
  using Map = std::map<Tag, DataElement>;

  Charset charset = Charset::Ascii;
  // Encoding form of this set when it is a sequence item.
  bool undefined_length_item = false;

  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }

  Map::const_iterator begin() const { return elements_.begin(); }
  Map::const_iterator end() const { return elements_.end(); }
  Map::iterator begin() { return elements_.begin(); }
  Map::iterator end() { return elements_.end(); }

  bool contains(Tag tag) const { return elements_.count(tag) != 0; }
  const DataElement* find(Tag tag) const;
  DataElement* find(Tag tag);

  // Insert or replace. Returns a warning message when the supplied VR
  // conflicts with the dictionary VR for the tag (the set still happens);
  // pass strict=true to get a VrMismatch throw instead.
  std::optional<std::string> set(DataElement element, bool strict = false);
  std::optional<std::string> set_string(Tag tag, VR vr, std::string_view value,
                                        bool strict = false);

  // Deleting an absent tag is a no-op.
  void erase(Tag tag) { elements_.erase(tag); }

  // Decoded (UTF-8) string at tag, trailing pad stripped.
  std::optional<std::string> string_at(Tag tag) const;

  bool operator==(const DataSet& rhs) const;

 private:
  Map elements_;
};

// Path to a (possibly nested) element: zero or more (sequence tag, item
// index) steps followed by the leaf tag.
struct PathStep {
  Tag tag;
  std::uint32_t item = 0;
  bool operator==(const PathStep&) const = default;
};

struct ElementPath {
  std::vector<PathStep> steps;
  Tag leaf;

  // Renders as "(0040,A730)[0].(0040,A160)".
  std::string to_string() const;
  static std::optional<ElementPath> parse(std::string_view text);
  bool operator==(const ElementPath&) const = default;
};

// Element at a nested location; nullptr when any step is missing.
const DataElement* get_path(const DataSet& ds, const ElementPath& path);

// Depth-first visit of every element (sequence items in order, elements
// in tag order) with its full path.
void walk(const DataSet& ds,
          const std::function<void(const ElementPath&, const DataElement&)>& visit);

}  // namespace deid
