#include "support/raw_builder.hpp"

#include <cstring>

namespace deid::testsupport {

namespace {

bool long_form(const char* vr) {
  static const char* kLong[] = {"OB", "OD", "OF", "OL", "OW",
                                "SQ", "UC", "UN", "UR", "UT"};
  for (const char* code : kLong) {
    if (std::strncmp(vr, code, 2) == 0) return true;
  }
  return false;
}

}  // namespace

void RawBuilder::u16(std::uint16_t v) {
  out_.push_back(static_cast<std::uint8_t>(v));
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
}

void RawBuilder::u32(std::uint32_t v) {
  out_.push_back(static_cast<std::uint8_t>(v));
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v >> 16));
  out_.push_back(static_cast<std::uint8_t>(v >> 24));
}

void RawBuilder::text(const std::string& s) {
  out_.insert(out_.end(), s.begin(), s.end());
}

void RawBuilder::blob(const std::vector<std::uint8_t>& b) {
  out_.insert(out_.end(), b.begin(), b.end());
}

void RawBuilder::element_header(std::uint16_t group, std::uint16_t elem,
                                const char* vr, std::uint32_t length) {
  u16(group);
  u16(elem);
  if (explicit_vr_) {
    out_.push_back(static_cast<std::uint8_t>(vr[0]));
    out_.push_back(static_cast<std::uint8_t>(vr[1]));
    if (long_form(vr)) {
      u16(0);
      u32(length);
    } else {
      u16(static_cast<std::uint16_t>(length));
    }
  } else {
    u32(length);
  }
}

void RawBuilder::element(std::uint16_t group, std::uint16_t elem, const char* vr,
                         std::string payload, char pad) {
  if (payload.size() % 2 != 0) payload.push_back(pad);
  element_header(group, elem, vr, static_cast<std::uint32_t>(payload.size()));
  text(payload);
}

void RawBuilder::element_bytes(std::uint16_t group, std::uint16_t elem,
                               const char* vr, std::vector<std::uint8_t> payload) {
  if (payload.size() % 2 != 0) payload.push_back(0);
  element_header(group, elem, vr, static_cast<std::uint32_t>(payload.size()));
  blob(payload);
}

void RawBuilder::sequence_defined(
    std::uint16_t group, std::uint16_t elem,
    const std::vector<std::vector<std::uint8_t>>& items) {
  std::vector<std::uint8_t> content;
  for (const auto& item : items) {
    RawBuilder w(explicit_vr_);
    w.u16(0xFFFE);
    w.u16(0xE000);
    w.u32(static_cast<std::uint32_t>(item.size()));
    w.blob(item);
    content.insert(content.end(), w.bytes().begin(), w.bytes().end());
  }
  element_header(group, elem, "SQ", static_cast<std::uint32_t>(content.size()));
  blob(content);
}

void RawBuilder::sequence_undefined(
    std::uint16_t group, std::uint16_t elem,
    const std::vector<std::vector<std::uint8_t>>& items, bool undefined_items) {
  element_header(group, elem, "SQ", 0xFFFFFFFF);
  for (const auto& item : items) {
    u16(0xFFFE);
    u16(0xE000);
    if (undefined_items) {
      u32(0xFFFFFFFF);
      blob(item);
      u16(0xFFFE);
      u16(0xE00D);
      u32(0);
    } else {
      u32(static_cast<std::uint32_t>(item.size()));
      blob(item);
    }
  }
  u16(0xFFFE);
  u16(0xE0DD);
  u32(0);
}

std::vector<std::uint8_t> part10_file(const std::string& transfer_syntax,
                                      const std::string& sop_class,
                                      const std::string& sop_instance,
                                      const std::vector<std::uint8_t>& body) {
  RawBuilder meta(true);
  meta.element_bytes(0x0002, 0x0001, "OB", {0x00, 0x01});
  meta.element(0x0002, 0x0002, "UI", sop_class, '\0');
  meta.element(0x0002, 0x0003, "UI", sop_instance, '\0');
  meta.element(0x0002, 0x0010, "UI", transfer_syntax, '\0');

  RawBuilder file(true);
  for (int i = 0; i < 128; ++i) file.u8(0);
  file.text("DICM");
  file.u16(0x0002);
  file.u16(0x0000);
  file.text("UL");
  file.u16(4);
  file.u32(static_cast<std::uint32_t>(meta.bytes().size()));
  file.blob(meta.bytes());
  file.blob(body);
  return file.bytes();
}

}  // namespace deid::testsupport
