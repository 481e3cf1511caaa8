#pragma once

#include <cstdint>
#include <vector>

#include "simtrace/source_file.hpp"

namespace simtrace {

// 0-based rows and byte columns; the end point is exclusive.
struct Region {
  std::uint32_t start_row = 0;
  std::uint32_t start_col = 0;
  std::uint32_t end_row = 0;
  std::uint32_t end_col = 0;

  friend bool operator==(const Region&, const Region&) = default;
};

// Smallest region covering both.
Region Span(const Region& a, const Region& b) noexcept;

using TokenKind = std::uint32_t;

// Token-kind code space, shared by every tokenizer:
//   [0, 65535]          tree-sitter grammar symbols
//   100 + i             fallback operator i
//   1000 + i            fallback keyword i of the language table
//   100000 + codepoint  fallback punctuation outside the operator list
//   2000000..2000003    shared masked kinds below
// Every code is below the rolling-hash base.
inline constexpr TokenKind kErrorKind = 2'000'000;
inline constexpr TokenKind kIdentifierKind = 2'000'001;
inline constexpr TokenKind kStringKind = 2'000'002;
inline constexpr TokenKind kNumberKind = 2'000'003;
inline constexpr TokenKind kMaxTokenKind = 2'097'168;

struct Token {
  TokenKind kind = 0;
  Region region;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenizedFile {
  FileId file_id = 0;
  std::vector<Token> tokens;

  std::vector<TokenKind> Kinds() const;
};

}  // namespace simtrace
