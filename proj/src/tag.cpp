#include "deid/tag.hpp"

#include <cctype>
#include <cstdio>

namespace deid {

namespace {

// Parses 4 hex digits with 'x' wildcards; returns false on bad input.
bool parse_hex4(std::string_view s, std::uint16_t& value, std::uint16_t& mask) {
  if (s.size() != 4) return false;
  value = 0;
  mask = 0;
  for (char c : s) {
    value <<= 4;
    mask <<= 4;
    if (c == 'x' || c == 'X') continue;  // wildcard nibble
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else return false;
    value |= static_cast<std::uint16_t>(digit);
    mask |= 0xF;
  }
  return true;
}

std::string_view strip_parens(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    return text.substr(1, text.size() - 2);
  }
  return text;
}

}  // namespace

std::string Tag::to_string() const {
  char buf[12];
  std::snprintf(buf, sizeof(buf), "(%04X,%04X)", group, element);
  return buf;
}

std::optional<Tag> Tag::parse(std::string_view text) {
  auto pattern = TagPattern::parse(text);
  if (!pattern || !pattern->is_exact()) return std::nullopt;
  return Tag{pattern->group, pattern->element};
}

int TagPattern::wildcard_digits() const {
  int n = 0;
  for (std::uint16_t m : {group_mask, element_mask}) {
    for (int shift = 0; shift < 16; shift += 4) {
      if (((m >> shift) & 0xF) == 0) ++n;
    }
  }
  return n;
}

std::string TagPattern::to_string() const {
  std::string out = "(";
  auto render = [&out](std::uint16_t value, std::uint16_t mask) {
    for (int shift = 12; shift >= 0; shift -= 4) {
      int m = (mask >> shift) & 0xF;
      if (m == 0) {
        out += 'x';
      } else {
        out += "0123456789ABCDEF"[(value >> shift) & 0xF];
      }
    }
  };
  render(group, group_mask);
  out += ',';
  render(element, element_mask);
  out += ')';
  return out;
}

std::optional<TagPattern> TagPattern::parse(std::string_view text) {
  text = strip_parens(text);
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  TagPattern p;
  if (!parse_hex4(text.substr(0, comma), p.group, p.group_mask)) return std::nullopt;
  if (!parse_hex4(text.substr(comma + 1), p.element, p.element_mask)) return std::nullopt;
  return p;
}

}  // namespace deid
