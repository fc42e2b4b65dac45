// vr.hpp - value representation codes and their encoding/validation traits.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace deid {

enum class VR : std::uint8_t {
  AE, AS, AT, CS, DA, DS, DT, FL, FD, IS, LO, LT, OB, OD, OF, OL, OW,
  PN, SH, SL, SQ, SS, ST, TM, UC, UI, UL, UN, UR, US, UT,
};

// Two-character code, e.g. "PN".
std::string_view vr_code(VR vr);
std::optional<VR> vr_from_code(std::string_view code);

// Explicit VR encodes these with a 2-byte reserved field and 4-byte length.
bool vr_uses_long_form(VR vr);

// Character-data VRs (value is text in the dataset charset).
bool vr_is_string(VR vr);

// Free-text VRs eligible for the Clean action.
bool vr_is_text_capable(VR vr);

// String VRs whose multiple values are separated by backslash.
bool vr_splits_on_backslash(VR vr);

// Padding byte used to even out odd-length values; 0 when padding would
// corrupt the value (fixed-width binary VRs).
std::optional<char> vr_pad_char(VR vr);

// Maximum encoded length of a single value in bytes; 0 = no fixed limit.
std::size_t vr_max_value_length(VR vr);

// Width in bytes of one element for fixed-width binary VRs, else 0.
std::size_t vr_fixed_width(VR vr);

}  // namespace deid
