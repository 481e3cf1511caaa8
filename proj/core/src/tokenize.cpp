#include "simtrace/tokenize.hpp"

#include <algorithm>

#include "simtrace/error.hpp"
#include "simtrace/fallback_lexer.hpp"

namespace simtrace {

Region Span(const Region& a, const Region& b) noexcept {
  Region out = a;
  if (b.start_row < out.start_row || (b.start_row == out.start_row && b.start_col < out.start_col)) {
    out.start_row = b.start_row;
    out.start_col = b.start_col;
  }
  if (b.end_row > out.end_row || (b.end_row == out.end_row && b.end_col > out.end_col)) {
    out.end_row = b.end_row;
    out.end_col = b.end_col;
  }
  return out;
}

std::vector<TokenKind> TokenizedFile::Kinds() const {
  std::vector<TokenKind> kinds;
  kinds.reserve(tokens.size());
  for (const auto& t : tokens) kinds.push_back(t.kind);
  return kinds;
}

bool IsValidUtf8(std::string_view text) noexcept {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == 0) return false;
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (std::size_t j = 1; j < len; ++j) {
      const auto cc = static_cast<unsigned char>(text[i + j]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range codepoints.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      return false;
    }
    i += len;
  }
  return true;
}

std::vector<CstNode> SerialiseCst(const ParserAdapter& adapter, std::string_view text) {
  std::vector<CstNode> out;
  adapter.Walk(text, [&](const CstNode& node) {
    if (node.missing) return false;
    switch (node.role) {
      case NodeRole::kError:
      case NodeRole::kString:
      case NodeRole::kComment:
        out.push_back(node);
        return false;
      default:
        break;
    }
    if (node.named || node.leaf) {
      CstNode entry = node;
      if (!node.leaf) {
        entry.region.end_row = entry.region.start_row;
        entry.region.end_col = entry.region.start_col;
      }
      out.push_back(entry);
    }
    return true;
  });
  return out;
}

std::vector<Token> MaskTokens(std::span<const CstNode> nodes, bool mask_numbers) {
  std::vector<Token> tokens;
  tokens.reserve(nodes.size());
  for (const auto& node : nodes) {
    TokenKind kind = node.symbol;
    switch (node.role) {
      case NodeRole::kComment:
        continue;
      case NodeRole::kIdentifier:
        kind = kIdentifierKind;
        break;
      case NodeRole::kString:
        kind = kStringKind;
        break;
      case NodeRole::kError:
        kind = kErrorKind;
        break;
      case NodeRole::kNumber:
        if (mask_numbers) kind = kNumberKind;
        break;
      case NodeRole::kOther:
        break;
    }
    tokens.push_back({kind, node.region});
  }
  return tokens;
}

namespace {

const LexicalTable& TableFor(std::string_view language) {
  const auto* table = LexicalTable::Builtin(language);
  return table ? *table : LexicalTable::Generic();
}

}  // namespace

TokenizedFile FallbackTokenize(const SourceFile& file, bool mask_numbers) {
  auto nodes = FallbackLex(file.content, TableFor(file.language));
  return {file.id, MaskTokens(nodes, mask_numbers)};
}

TokenizedFile Tokenize(const SourceFile& file, const TokenizeOptions& options,
                       const ParserRegistry& registry) {
  if (!IsValidUtf8(file.content)) {
    throw Error(ErrorCode::kEncoding, "'" + file.path + "' is not valid UTF-8 text");
  }
  if (const auto* adapter = registry.Find(file.language)) {
    auto nodes = SerialiseCst(*adapter, file.content);
    TokenizedFile out{file.id, MaskTokens(nodes, options.mask_numbers)};
    // A tree without any lexeme (empty or comment-only file) has no tokens.
    const bool has_lexeme = std::any_of(out.tokens.begin(), out.tokens.end(), [](const Token& t) {
      return t.region.start_row != t.region.end_row || t.region.start_col != t.region.end_col;
    });
    if (!has_lexeme) out.tokens.clear();
    return out;
  }
  if (!options.allow_fallback) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "no parser registered for language '" + file.language + "'");
  }
  return FallbackTokenize(file, options.mask_numbers);
}

std::string GrammarVersion(std::string_view language, bool allow_fallback,
                           const ParserRegistry& registry) {
  if (const auto* adapter = registry.Find(language)) return adapter->grammar_version();
  if (!allow_fallback) return "unsupported";
  const auto& table = TableFor(language);
  return "fallback-lexer " + table.language + "/" + table.version;
}

}  // namespace simtrace
