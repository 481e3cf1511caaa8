#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simtrace {

// Static extension -> language map. Extensions include the dot and are
// matched case-insensitively except where case carries meaning.
std::optional<std::string> LanguageForPath(std::string_view path);

// Every language identifier known to the extension map.
const std::vector<std::string>& KnownLanguages();

bool IsKnownLanguage(std::string_view language);

// Majority vote over the recognised extensions of `paths`. Extensions that
// map to the same language vote together.
//
// Throws Error(kUnknownLanguage) when nothing is recognised and
// Error(kAmbiguousLanguage) when the top two languages tie.
std::string DetectLanguage(std::span<const std::string> paths);

}  // namespace simtrace
