// raw_builder.hpp - hand-rolled byte-level DICOM encoder for fixtures.
//
// Written directly from the encoding rules and kept independent of the
// library's writer, so fixtures built here serve as the oracle for the
// codec round-trip and decode tests.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace deid::testsupport {

class RawBuilder {
 public:
  explicit RawBuilder(bool explicit_vr) : explicit_vr_(explicit_vr) {}

  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void text(const std::string& s);
  void blob(const std::vector<std::uint8_t>& b);

  // One data element; pads odd payloads with `pad` (space for text, NUL
  // for UIDs and binary).
  void element(std::uint16_t group, std::uint16_t elem, const char* vr,
               std::string payload, char pad = ' ');
  void element_bytes(std::uint16_t group, std::uint16_t elem, const char* vr,
                     std::vector<std::uint8_t> payload);

  // Sequences. Items are pre-encoded dataset bodies (use a nested builder
  // with the same VR mode).
  void sequence_defined(std::uint16_t group, std::uint16_t elem,
                        const std::vector<std::vector<std::uint8_t>>& items);
  void sequence_undefined(std::uint16_t group, std::uint16_t elem,
                          const std::vector<std::vector<std::uint8_t>>& items,
                          bool undefined_items);

  const std::vector<std::uint8_t>& bytes() const { return out_; }

 private:
  void element_header(std::uint16_t group, std::uint16_t elem, const char* vr,
                      std::uint32_t length);
  bool explicit_vr_;
  std::vector<std::uint8_t> out_;
};

// Full Part 10 file: 128-byte preamble, "DICM", Explicit VR LE meta with
// correct group length, then the given dataset body.
std::vector<std::uint8_t> part10_file(const std::string& transfer_syntax,
                                      const std::string& sop_class,
                                      const std::string& sop_instance,
                                      const std::vector<std::uint8_t>& body);

}  // namespace deid::testsupport
