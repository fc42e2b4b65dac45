// codec.hpp - DICOM Part 10 reader/writer for the little-endian syntaxes.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "deid/dataset.hpp"

namespace deid {

inline constexpr const char* kImplicitVrLittleEndian = "1.2.840.10008.1.2";
inline constexpr const char* kExplicitVrLittleEndian = "1.2.840.10008.1.2.1";
inline constexpr const char* kExplicitVrBigEndian = "1.2.840.10008.1.2.2";
inline constexpr const char* kDeflatedExplicitVrLittleEndian = "1.2.840.10008.1.2.1.99";

struct ParseLimits {
  std::uint32_t max_depth = 16;
  std::uint64_t max_element_length = 2ull * 1024 * 1024 * 1024;  // 2 GiB
};

struct DicomObject {
  std::array<std::uint8_t, 128> preamble{};
  // False for the headerless fallback (stream starting at group 0002).
  bool has_preamble = true;
  // Group 0002, always Explicit VR LE.
  DataSet file_meta;
  std::string transfer_syntax;
  DataSet dataset;

  bool operator==(const DicomObject& rhs) const;
};

// Parses a Part 10 file. Datasets in Implicit/Explicit VR LE decode fully;
// other explicit-LE-based syntaxes decode metadata and carry undefined-
// length pixel data opaquely. Big-endian and deflated syntaxes are refused.
DicomObject parse_file(std::span<const std::uint8_t> bytes,
                       const ParseLimits& limits = {});

// Re-encodes the object in its transfer syntax. Unmodified input
// reproduces its bytes exactly. String values are validated against the
// VR length table (ValueTooLong) and odd raw payloads are padded where
// the VR permits (else OddLengthUnpaddable).
std::vector<std::uint8_t> serialize(const DicomObject& obj);

// Dataset-only encoding (no preamble/meta); used for nested work and tests.
std::vector<std::uint8_t> serialize_dataset(const DataSet& ds, bool explicit_vr);

// Value-grammar findings that are not write errors (e.g. a DA value of
// "ANON"). The writer never rejects these; callers decide.
struct ValidationIssue {
  ElementPath path;
  std::string message;
};
std::vector<ValidationIssue> validate_values(const DataSet& ds);

// Rebuilds group 0002 from the dataset identity (used when writing
// objects whose meta is absent or stale after deidentification).
void sync_file_meta(DicomObject& obj);

}  // namespace deid
