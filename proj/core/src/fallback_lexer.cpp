#include "simtrace/fallback_lexer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace simtrace {
namespace detail {
extern const std::pair<std::string_view, std::string_view> kLexerTables[];
extern const std::size_t kLexerTableCount;
}  // namespace detail

namespace {

constexpr TokenKind kOperatorBase = 100;
constexpr TokenKind kKeywordBase = 1000;
constexpr TokenKind kCodepointBase = 100000;

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool IsWordStart(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool IsWordChar(unsigned char c) { return IsWordStart(c) || std::isdigit(c); }

// Tracks row/column while scanning.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? static_cast<unsigned char>(text_[pos_ + ahead]) : 0;
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  std::uint32_t row() const { return row_; }
  std::uint32_t col() const { return col_; }

  void advance(std::size_t n = 1) {
    for (; n > 0 && pos_ < text_.size(); --n, ++pos_) {
      if (text_[pos_] == '\n') {
        ++row_;
        col_ = 0;
      } else {
        ++col_;
      }
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t row_ = 0;
  std::uint32_t col_ = 0;
};

// Length of the UTF-8 sequence starting with `lead`, and its codepoint.
std::pair<std::size_t, std::uint32_t> DecodeCodepoint(std::string_view s, std::size_t pos) {
  auto c = static_cast<unsigned char>(s[pos]);
  if (c < 0x80) return {1, c};
  std::size_t len = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : 2;
  std::uint32_t cp = c & (0x3F >> (len - 1));
  for (std::size_t i = 1; i < len && pos + i < s.size(); ++i) {
    cp = (cp << 6) | (static_cast<unsigned char>(s[pos + i]) & 0x3F);
  }
  return {len, cp};
}

}  // namespace

const std::vector<std::string_view>& FallbackOperators() {
  // Append only: codes are list positions.
  static const std::vector<std::string_view> ops = {
      ">>>=", "<<=", ">>=", ">>>", "...", "**=", "//=", "<=>", "===", "!==",
      "->",   "=>",  "::",  "++",  "--",  "&&",  "||",  "??",  "?.",  "<<",
      ">>",   "<=",  ">=",  "==",  "!=",  "+=",  "-=",  "*=",  "/=",  "%=",
      "&=",   "|=",  "^=",  "**",  "//",  ":=",  "..",  "+",   "-",   "*",
      "/",    "%",   "=",   "<",   ">",   "!",   "~",   "^",   "&",   "|",
      "?",    ":",   ";",   ",",   ".",   "(",   ")",   "[",   "]",   "{",
      "}",    "@",   "#",   "\\",
  };
  return ops;
}

LexicalTable LexicalTable::Parse(std::string_view language, std::string_view text) {
  LexicalTable table;
  table.language = std::string(language);
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = TrimView(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() != '@') {
      for (auto& w : Words(line)) table.keywords.push_back(std::move(w));
      continue;
    }
    auto words = Words(line);
    const auto& directive = words.front();
    if (directive == "@version" && words.size() > 1) {
      table.version = words[1];
    } else if (directive == "@line-comment") {
      table.line_comments.insert(table.line_comments.end(), words.begin() + 1, words.end());
    } else if (directive == "@block-comment" && words.size() == 3) {
      table.block_comments.emplace_back(words[1], words[2]);
    } else if (directive == "@quote") {
      for (std::size_t i = 1; i < words.size(); ++i) table.quotes += words[i];
    }
  }
  // Longest markers first.
  std::sort(table.line_comments.begin(), table.line_comments.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return table;
}

const LexicalTable* LexicalTable::Builtin(std::string_view language) {
  static const std::map<std::string, LexicalTable, std::less<>> tables = [] {
    std::map<std::string, LexicalTable, std::less<>> out;
    for (std::size_t i = 0; i < detail::kLexerTableCount; ++i) {
      const auto& [name, text] = detail::kLexerTables[i];
      out.emplace(std::string(name), Parse(name, text));
    }
    return out;
  }();
  auto it = tables.find(language);
  return it == tables.end() ? nullptr : &it->second;
}

const LexicalTable& LexicalTable::Generic() {
  static const LexicalTable table = Parse("generic",
                                          "@line-comment //\n"
                                          "@block-comment /* */\n"
                                          "@quote \" '\n");
  return table;
}

std::vector<CstNode> FallbackLex(std::string_view text, const LexicalTable& table) {
  const auto& ops = FallbackOperators();
  std::vector<CstNode> nodes;
  Scanner in(text);

  auto emit = [&](TokenKind kind, NodeRole role, std::uint32_t row, std::uint32_t col) {
    CstNode node;
    node.symbol = kind;
    node.role = role;
    node.named = true;
    node.leaf = true;
    node.region = {row, col, in.row(), in.col()};
    nodes.push_back(node);
  };

  while (!in.done()) {
    const auto row = in.row();
    const auto col = in.col();
    const unsigned char c = in.peek();

    if (std::isspace(c)) {
      in.advance();
      continue;
    }

    if (auto it = std::find_if(table.line_comments.begin(), table.line_comments.end(),
                               [&](const auto& m) { return in.starts_with(m); });
        it != table.line_comments.end()) {
      while (!in.done() && in.peek() != '\n') in.advance();
      emit(0, NodeRole::kComment, row, col);
      continue;
    }

    if (auto it = std::find_if(table.block_comments.begin(), table.block_comments.end(),
                               [&](const auto& m) { return in.starts_with(m.first); });
        it != table.block_comments.end()) {
      in.advance(it->first.size());
      while (!in.done() && !in.starts_with(it->second)) in.advance();
      in.advance(it->second.size());
      emit(0, NodeRole::kComment, row, col);
      continue;
    }

    if (table.quotes.find(static_cast<char>(c)) != std::string::npos) {
      const std::string triple(3, static_cast<char>(c));
      if (in.starts_with(triple)) {
        in.advance(3);
        while (!in.done() && !in.starts_with(triple)) in.advance(in.peek() == '\\' ? 2 : 1);
        in.advance(3);
      } else {
        // Only backtick literals span lines.
        const bool multiline = c == '`';
        in.advance();
        while (!in.done() && in.peek() != c && (multiline || in.peek() != '\n')) {
          in.advance(in.peek() == '\\' ? 2 : 1);
        }
        if (in.peek() == c) in.advance();
      }
      emit(kStringKind, NodeRole::kString, row, col);
      continue;
    }

    if (std::isdigit(c) || (c == '.' && std::isdigit(in.peek(1)))) {
      const bool hex = c == '0' && (in.peek(1) == 'x' || in.peek(1) == 'X');
      in.advance();
      while (!in.done()) {
        const unsigned char d = in.peek();
        if (std::isalnum(d) || d == '_' || d == '.') {
          in.advance();
          if (!hex && (d == 'e' || d == 'E') && (in.peek() == '+' || in.peek() == '-')) in.advance();
        } else {
          break;
        }
      }
      emit(kNumberKind, NodeRole::kNumber, row, col);
      continue;
    }

    if (IsWordStart(c)) {
      const auto start = in.pos();
      while (!in.done() && IsWordChar(in.peek())) in.advance();
      auto word = text.substr(start, in.pos() - start);
      auto kw = std::find(table.keywords.begin(), table.keywords.end(), word);
      if (kw != table.keywords.end()) {
        emit(kKeywordBase + static_cast<TokenKind>(kw - table.keywords.begin()), NodeRole::kOther,
             row, col);
      } else {
        emit(kIdentifierKind, NodeRole::kIdentifier, row, col);
      }
      continue;
    }

    std::size_t best = ops.size();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (in.starts_with(ops[i]) && (best == ops.size() || ops[i].size() > ops[best].size())) {
        best = i;
      }
    }
    if (best != ops.size()) {
      in.advance(ops[best].size());
      emit(kOperatorBase + static_cast<TokenKind>(best), NodeRole::kOther, row, col);
      continue;
    }

    auto [len, cp] = DecodeCodepoint(text, in.pos());
    in.advance(len);
    emit(kCodepointBase + cp, NodeRole::kOther, row, col);
  }
  return nodes;
}

}  // namespace simtrace
