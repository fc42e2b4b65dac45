#include "deid/vr.hpp"

#include <array>

namespace deid {

namespace {

struct VrTraits {
  VR vr;
  const char* code;
  bool long_form;
  bool string;
  bool text_capable;
  bool multi;          // backslash VM splitting
  int pad;             // -1 = unpaddable
  std::size_t max_len; // per value; 0 = unlimited
  std::size_t width;   // fixed binary width; 0 = n/a
};

// Encoding rules and length limits per PS3.5 chapter 6.2.
constexpr std::array<VrTraits, 31> kTraits{{
    {VR::AE, "AE", false, true,  false, true,  ' ',  16, 0},
    {VR::AS, "AS", false, true,  false, true,  ' ',   4, 0},
    {VR::AT, "AT", false, false, false, false, -1,    0, 4},
    {VR::CS, "CS", false, true,  false, true,  ' ',  16, 0},
    {VR::DA, "DA", false, true,  false, true,  ' ',   8, 0},
    {VR::DS, "DS", false, true,  false, true,  ' ',  16, 0},
    {VR::DT, "DT", false, true,  false, true,  ' ',  26, 0},
    {VR::FL, "FL", false, false, false, false, -1,    0, 4},
    {VR::FD, "FD", false, false, false, false, -1,    0, 8},
    {VR::IS, "IS", false, true,  false, true,  ' ',  12, 0},
    {VR::LO, "LO", false, true,  true,  true,  ' ',  64, 0},
    {VR::LT, "LT", false, true,  true,  false, ' ', 10240, 0},
    {VR::OB, "OB", true,  false, false, false, '\0',  0, 1},
    {VR::OD, "OD", true,  false, false, false, -1,    0, 8},
    {VR::OF, "OF", true,  false, false, false, -1,    0, 4},
    {VR::OL, "OL", true,  false, false, false, -1,    0, 4},
    {VR::OW, "OW", true,  false, false, false, -1,    0, 2},
    {VR::PN, "PN", false, true,  true,  true,  ' ', 194, 0},
    {VR::SH, "SH", false, true,  true,  true,  ' ',  16, 0},
    {VR::SL, "SL", false, false, false, false, -1,    0, 4},
    {VR::SQ, "SQ", true,  false, false, false, -1,    0, 0},
    {VR::SS, "SS", false, false, false, false, -1,    0, 2},
    {VR::ST, "ST", false, true,  true,  false, ' ', 1024, 0},
    {VR::TM, "TM", false, true,  false, true,  ' ',  16, 0},
    {VR::UC, "UC", true,  true,  true,  true,  ' ',   0, 0},
    {VR::UI, "UI", false, true,  false, true,  '\0', 64, 0},
    {VR::UL, "UL", false, false, false, false, -1,    0, 4},
    {VR::UN, "UN", true,  false, false, false, '\0',  0, 1},
    {VR::UR, "UR", true,  true,  false, false, ' ',   0, 0},
    {VR::US, "US", false, false, false, false, -1,    0, 2},
    {VR::UT, "UT", true,  true,  true,  false, ' ',   0, 0},
}};

constexpr const VrTraits& traits(VR vr) {
  return kTraits[static_cast<std::size_t>(vr)];
}

}  // namespace

std::string_view vr_code(VR vr) { return traits(vr).code; }

std::optional<VR> vr_from_code(std::string_view code) {
  for (const auto& t : kTraits) {
    if (code == t.code) return t.vr;
  }
  return std::nullopt;
}

bool vr_uses_long_form(VR vr) { return traits(vr).long_form; }
bool vr_is_string(VR vr) { return traits(vr).string; }
bool vr_is_text_capable(VR vr) { return traits(vr).text_capable; }
bool vr_splits_on_backslash(VR vr) { return traits(vr).multi; }

std::optional<char> vr_pad_char(VR vr) {
  int pad = traits(vr).pad;
  if (pad < 0) return std::nullopt;
  return static_cast<char>(pad);
}

std::size_t vr_max_value_length(VR vr) { return traits(vr).max_len; }
std::size_t vr_fixed_width(VR vr) { return traits(vr).width; }

}  // namespace deid
