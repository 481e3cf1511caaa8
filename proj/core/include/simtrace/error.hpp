#pragma once

#include <stdexcept>
#include <string>

namespace simtrace {

enum class ErrorCode {
  kIo,
  kEmptyCollection,
  kInsufficientFiles,
  kUnknownLanguage,
  kAmbiguousLanguage,
  kMetadataFormat,
  kUnsupportedLanguage,
  kEncoding,
  kArchiveFormat,
  kArchiveLimit,
  kInvalidOptions,
};

const char* ToString(ErrorCode code) noexcept;

// All failures raised by the analysis pipeline. The CLI maps every Error to
// a one-line diagnostic and exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simtrace
