// errors.hpp - exception hierarchy shared by all deid components.

#pragma once

#include <stdexcept>
#include <string>

namespace deid {

class DicomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- codec parse errors ---
class MalformedFile : public DicomError {
 public:
  using DicomError::DicomError;
};
class TruncatedElement : public DicomError {
 public:
  using DicomError::DicomError;
};
class UnevenLength : public DicomError {
 public:
  using DicomError::DicomError;
};
class NestingTooDeep : public DicomError {
 public:
  using DicomError::DicomError;
};
class UnsupportedTransferSyntax : public DicomError {
 public:
  using DicomError::DicomError;
};

// --- codec write errors ---
class ValueTooLong : public DicomError {
 public:
  using DicomError::DicomError;
};
class OddLengthUnpaddable : public DicomError {
 public:
  using DicomError::DicomError;
};
class VrMismatch : public DicomError {
 public:
  using DicomError::DicomError;
};

// --- table / csv loading ---
class TableParseError : public DicomError {
 public:
  TableParseError(const std::string& msg, int line)
      : DicomError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};
class DuplicateTag : public DicomError {
 public:
  using DicomError::DicomError;
};
class CsvFormatError : public DicomError {
 public:
  using DicomError::DicomError;
};
class UnknownCategory : public DicomError {
 public:
  using DicomError::DicomError;
};

// --- profile engine ---
class ConflictingOverride : public DicomError {
 public:
  using DicomError::DicomError;
};
class InvalidUid : public DicomError {
 public:
  using DicomError::DicomError;
};

// --- pipeline ---
class ConfigError : public DicomError {
 public:
  using DicomError::DicomError;
};
class UnsupportedPixelFormat : public DicomError {
 public:
  using DicomError::DicomError;
};
class MaskOutOfBounds : public DicomError {
 public:
  using DicomError::DicomError;
};

}  // namespace deid
