#include "simtrace/options.hpp"

#include "simtrace/error.hpp"
#include "simtrace/language.hpp"

namespace simtrace {

void CollectionOptions::Validate() const {
  if (kgram_length == 0) {
    throw Error(ErrorCode::kInvalidOptions, "k-gram length must be at least 1");
  }
  if (window_length == 0) {
    throw Error(ErrorCode::kInvalidOptions, "window length must be at least 1");
  }
  if (min_fragment_length == 0) {
    throw Error(ErrorCode::kInvalidOptions, "minimum fragment length must be at least 1");
  }
  if (similarity_threshold &&
      !(*similarity_threshold >= 0.0 && *similarity_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidOptions, "similarity threshold must lie in [0, 1]");
  }
  if (!auto_language() && !IsKnownLanguage(language)) {
    throw Error(ErrorCode::kUnknownLanguage, "unknown language '" + language + "'");
  }
}

}  // namespace simtrace
