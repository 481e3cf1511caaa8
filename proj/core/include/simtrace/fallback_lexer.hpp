#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simtrace/parser_adapter.hpp"

namespace simtrace {

// Per-language lexical table for the fallback tokenizer.
//
// Text format, one directive or keyword per line, '#' starts a comment line:
//
//   @version 1
//   @line-comment //
//   @block-comment /* */
//   @quote " '
//   if
//   else
struct LexicalTable {
  std::string language;
  std::string version = "1";
  std::vector<std::string> line_comments;
  std::vector<std::pair<std::string, std::string>> block_comments;
  std::string quotes;
  std::vector<std::string> keywords;  // code = 1000 + index

  static LexicalTable Parse(std::string_view language, std::string_view text);

  // Embedded table for `language`; nullptr if none ships with the library.
  static const LexicalTable* Builtin(std::string_view language);

  // Generic C-like table used for languages without their own table.
  static const LexicalTable& Generic();
};

// Operators recognised by maximal munch; code = 100 + index.
const std::vector<std::string_view>& FallbackOperators();

// Lexes `text` into pre-masking nodes. Words in the keyword list keep their
// keyword code, other words are identifiers; numbers and string literals get
// their shared kinds; comments come back with NodeRole::kComment so the
// masking stage can drop them; whitespace is skipped.
std::vector<CstNode> FallbackLex(std::string_view text,
                                 const LexicalTable& table);

}  // namespace simtrace
