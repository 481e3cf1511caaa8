#pragma once

#include <span>
#include <string>
#include <vector>

#include "simtrace/parser_adapter.hpp"
#include "simtrace/source_file.hpp"
#include "simtrace/token.hpp"

namespace simtrace {

struct TokenizeOptions {
  bool allow_fallback = true;
  bool mask_numbers = false;
};

// Pre-order serialisation of a concrete syntax tree: every named node and
// every leaf becomes one entry. String literals and error nodes are emitted
// as single entries without their children; missing (zero-width, inserted by
// error recovery) nodes are omitted. Internal nodes get a zero-width region
// at their start so k-gram regions stay tight.
std::vector<CstNode> SerialiseCst(const ParserAdapter& adapter,
                                  std::string_view text);

// Identifiers -> kIdentifierKind, strings -> kStringKind, errors ->
// kErrorKind, comments dropped, numbers -> kNumberKind when `mask_numbers`,
// everything else passes through.
std::vector<Token> MaskTokens(std::span<const CstNode> nodes,
                              bool mask_numbers = false);

// Lexical fallback for languages without a grammar.
TokenizedFile FallbackTokenize(const SourceFile& file,
                               bool mask_numbers = false);

// Throws Error(kEncoding) on invalid UTF-8 or NUL bytes and
// Error(kUnsupportedLanguage) when no adapter exists and fallback is off.
TokenizedFile Tokenize(const SourceFile& file,
                       const TokenizeOptions& options = {},
                       const ParserRegistry& registry = ParserRegistry::Default());

// "tree-sitter-python 0.21.0", "fallback-lexer c/1", ...
std::string GrammarVersion(std::string_view language,
                           bool allow_fallback = true,
                           const ParserRegistry& registry = ParserRegistry::Default());

bool IsValidUtf8(std::string_view text) noexcept;

}  // namespace simtrace
