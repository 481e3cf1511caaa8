#include "simtrace/error.hpp"

namespace simtrace {

const char* ToString(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kEmptyCollection: return "empty-collection";
    case ErrorCode::kInsufficientFiles: return "insufficient-files";
    case ErrorCode::kUnknownLanguage: return "unknown-language";
    case ErrorCode::kAmbiguousLanguage: return "ambiguous-language";
    case ErrorCode::kMetadataFormat: return "metadata-format";
    case ErrorCode::kUnsupportedLanguage: return "unsupported-language";
    case ErrorCode::kEncoding: return "encoding-error";
    case ErrorCode::kArchiveFormat: return "archive-format";
    case ErrorCode::kArchiveLimit: return "archive-limit";
    case ErrorCode::kInvalidOptions: return "invalid-options";
  }
  return "error";
}

}  // namespace simtrace
