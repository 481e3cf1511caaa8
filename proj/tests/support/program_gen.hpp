#pragma once

// Random structured programs rendered in several languages, with the
// surface variations used by the masking, reordering and scaling checks.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace simtrace::testing {

enum class GenLang { kPython, kJavaScript, kJava, kC, kGo };

inline constexpr GenLang kAllGenLangs[] = {GenLang::kPython, GenLang::kJavaScript, GenLang::kJava,
                                           GenLang::kC, GenLang::kGo};

const char* LanguageId(GenLang lang);
const char* Extension(GenLang lang);

struct GenStmt {
  enum Kind { kAssign, kIf, kFor, kWhile, kCall, kPrint, kReturnEarly };
  Kind kind = kAssign;
  int target = 0;
  int a = 0;
  int b = 0;
  int op = 0;
  int literal = 1;
  int text = 0;
  int callee = -1;
  std::vector<GenStmt> body;
  std::vector<GenStmt> orelse;
};

struct GenFunction {
  int id = 0;
  std::vector<GenStmt> body;
};

struct GenProgram {
  GenLang lang = GenLang::kPython;
  std::vector<GenFunction> functions;
};

GenProgram GenerateProgram(GenLang lang, std::uint64_t seed, std::size_t functions = 4,
                           std::size_t statements = 8);

// Replaces roughly `rate` of the top-level statements with fresh ones.
GenProgram Mutate(const GenProgram& program, std::uint64_t seed, double rate);

struct GenStyle {
  bool rename = false;       // different identifier names throughout
  int string_variant = 0;    // selects the pool string literals come from
  bool comments = false;     // comment lines, trailing and block comments
  std::vector<std::size_t> order;  // function order; empty keeps definition order
};

std::string Render(const GenProgram& program, const GenStyle& style = {});

std::size_t CountRenderedLines(const GenProgram& program);

}  // namespace simtrace::testing
