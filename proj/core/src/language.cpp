#include "simtrace/language.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "simtrace/error.hpp"

namespace simtrace {
namespace {

const std::map<std::string, std::string, std::less<>>& ExtensionMap() {
  static const std::map<std::string, std::string, std::less<>> map = {
      {".c", "c"},         {".h", "c"},
      {".cc", "cpp"},      {".cpp", "cpp"},       {".cxx", "cpp"},
      {".hh", "cpp"},      {".hpp", "cpp"},       {".hxx", "cpp"},
      {".cs", "csharp"},
      {".go", "go"},
      {".java", "java"},
      {".js", "javascript"}, {".mjs", "javascript"}, {".cjs", "javascript"},
      {".jsx", "javascript"},
      {".py", "python"},   {".pyw", "python"},
      {".rs", "rust"},
      {".ts", "typescript"}, {".tsx", "typescript"},
  };
  return map;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::optional<std::string> LanguageForPath(std::string_view path) {
  auto slash = path.find_last_of('/');
  auto name = slash == std::string_view::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot == std::string_view::npos || dot == 0) return std::nullopt;
  const auto& map = ExtensionMap();
  auto it = map.find(Lower(name.substr(dot)));
  if (it == map.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& KnownLanguages() {
  static const std::vector<std::string> languages = [] {
    std::vector<std::string> out;
    for (const auto& [ext, lang] : ExtensionMap()) out.push_back(lang);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return languages;
}

bool IsKnownLanguage(std::string_view language) {
  const auto& all = KnownLanguages();
  return std::find(all.begin(), all.end(), language) != all.end();
}

std::string DetectLanguage(std::span<const std::string> paths) {
  std::map<std::string, std::size_t> votes;
  for (const auto& path : paths) {
    if (auto lang = LanguageForPath(path)) ++votes[*lang];
  }
  if (votes.empty()) {
    throw Error(ErrorCode::kUnknownLanguage,
                "could not detect the language: no file has a recognised extension");
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(votes.begin(), votes.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > 1 && ranked[0].second == ranked[1].second) {
    throw Error(ErrorCode::kAmbiguousLanguage,
                "ambiguous language: " + ranked[0].first + " and " + ranked[1].first +
                    " are equally common; pass --language explicitly");
  }
  return ranked[0].first;
}

}  // namespace simtrace
