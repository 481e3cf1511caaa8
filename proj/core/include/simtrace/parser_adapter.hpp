#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "simtrace/token.hpp"

namespace simtrace {

// What the masking stage needs to know about a syntax node.
enum class NodeRole : std::uint8_t {
  kOther,
  kIdentifier,
  kString,
  kComment,
  kNumber,
  kError,
};

struct CstNode {
  TokenKind symbol = 0;
  std::string_view type;
  NodeRole role = NodeRole::kOther;
  bool named = false;
  bool leaf = false;
  bool missing = false;
  Region region;
};

// Called once per node in pre-order; returning false skips the children.
using CstVisitor = std::function<bool(const CstNode&)>;

// Narrow parser interface: parse text and walk the resulting concrete syntax
// tree. Implementations must be safe to call concurrently.
class ParserAdapter {
 public:
  virtual ~ParserAdapter() = default;

  virtual std::string_view language() const = 0;
  virtual std::string grammar_version() const = 0;
  virtual void Walk(std::string_view text, const CstVisitor& visit) const = 0;
};

class ParserRegistry {
 public:
  // Registry with the bundled tree-sitter grammars (java, javascript,
  // python).
  static const ParserRegistry& Default();

  void Register(std::unique_ptr<ParserAdapter> adapter);

  // nullptr when no adapter is registered for `language`.
  const ParserAdapter* Find(std::string_view language) const;

 private:
  std::map<std::string, std::unique_ptr<ParserAdapter>, std::less<>> adapters_;
};

// Tree-sitter backed adapter for one of the bundled grammars, or nullptr.
std::unique_ptr<ParserAdapter> MakeTreeSitterAdapter(std::string_view language);

}  // namespace simtrace
