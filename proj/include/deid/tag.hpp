// tag.hpp - DICOM tag (group, element) with the usual lexicographic order.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace deid {

struct Tag {
  std::uint16_t group = 0;
  std::uint16_t element = 0;

  constexpr Tag() = default;
  constexpr Tag(std::uint16_t g, std::uint16_t e) : group(g), element(e) {}

  // Odd groups are reserved for private vendor blocks.
  constexpr bool is_private() const { return (group & 1u) != 0; }

  // (gggg,0000) group length elements, retired outside group 0002.
  constexpr bool is_group_length() const { return element == 0; }

  // (gggg,0010)..(gggg,00FF) in a private group reserve a creator block.
  constexpr bool is_private_creator() const {
    return is_private() && element >= 0x0010 && element <= 0x00FF;
  }

  // High byte of the element selects the creator block of a private tag.
  constexpr std::uint8_t private_block() const {
    return static_cast<std::uint8_t>(element >> 8);
  }
  constexpr std::uint8_t private_offset() const {
    return static_cast<std::uint8_t>(element & 0xFF);
  }

  auto operator<=>(const Tag&) const = default;

  // Renders as "(GGGG,EEEE)" in uppercase hex.
  std::string to_string() const;

  // Accepts "(GGGG,EEEE)" or "GGGG,EEEE", case-insensitive hex.
  static std::optional<Tag> parse(std::string_view text);
};

// Item / delimiter markers used by the encoding, never stored as elements.
inline constexpr Tag kItemTag{0xFFFE, 0xE000};
inline constexpr Tag kItemDelimiterTag{0xFFFE, 0xE00D};
inline constexpr Tag kSequenceDelimiterTag{0xFFFE, 0xE0DD};

// A tag pattern with 'x' wildcards per hex digit, e.g. "50xx,xxxx".
struct TagPattern {
  std::uint16_t group = 0;
  std::uint16_t element = 0;
  std::uint16_t group_mask = 0xFFFF;    // 0 bits are wildcards
  std::uint16_t element_mask = 0xFFFF;

  constexpr bool matches(Tag t) const {
    return (t.group & group_mask) == (group & group_mask) &&
           (t.element & element_mask) == (element & element_mask);
  }
  constexpr bool is_exact() const {
    return group_mask == 0xFFFF && element_mask == 0xFFFF;
  }
  // Count of wildcard hex digits; fewer wildcards = more specific.
  int wildcard_digits() const;

  std::string to_string() const;
  static std::optional<TagPattern> parse(std::string_view text);
};

}  // namespace deid
