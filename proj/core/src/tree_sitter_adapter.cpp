#include <tree_sitter/api.h>

#include <memory>
#include <string>
#include <vector>

#include "simtrace/parser_adapter.hpp"

extern "C" {
const TSLanguage* tree_sitter_java();
const TSLanguage* tree_sitter_javascript();
const TSLanguage* tree_sitter_python();
}

namespace simtrace {
namespace {

struct Grammar {
  std::string_view language;
  const TSLanguage* (*load)();
  std::string_view version;
};

constexpr Grammar kGrammars[] = {
    {"java", tree_sitter_java, "0.21.0"},
    {"javascript", tree_sitter_javascript, "0.21.4"},
    {"python", tree_sitter_python, "0.21.0"},
};

bool EndsWith(std::string_view s, std::string_view suffix) { return s.ends_with(suffix); }

NodeRole RoleForType(std::string_view type) {
  if (EndsWith(type, "comment")) return NodeRole::kComment;
  if (type == "identifier" || EndsWith(type, "_identifier")) return NodeRole::kIdentifier;
  if (type == "string" || EndsWith(type, "_string") || type == "string_literal" ||
      type == "text_block") {
    return NodeRole::kString;
  }
  if (type == "integer" || type == "float" || type == "number" ||
      (EndsWith(type, "_literal") &&
       (type.find("integer") != std::string_view::npos ||
        type.find("floating") != std::string_view::npos))) {
    return NodeRole::kNumber;
  }
  return NodeRole::kOther;
}

struct ParserDeleter {
  void operator()(TSParser* p) const { ts_parser_delete(p); }
};
struct TreeDeleter {
  void operator()(TSTree* t) const { ts_tree_delete(t); }
};

class TreeSitterAdapter final : public ParserAdapter {
 public:
  TreeSitterAdapter(const Grammar& grammar)
      : language_(grammar.language), grammar_(grammar.load()), version_(grammar.version) {
    const auto count = ts_language_symbol_count(grammar_);
    roles_.resize(count, NodeRole::kOther);
    for (TSSymbol symbol = 0; symbol < count; ++symbol) {
      if (ts_language_symbol_type(grammar_, symbol) != TSSymbolTypeRegular) continue;
      roles_[symbol] = RoleForType(ts_language_symbol_name(grammar_, symbol));
    }
  }

  std::string_view language() const override { return language_; }

  std::string grammar_version() const override {
    return "tree-sitter-" + std::string(language_) + " " + std::string(version_) + " (abi " +
           std::to_string(ts_language_version(grammar_)) + ")";
  }

  void Walk(std::string_view text, const CstVisitor& visit) const override {
    std::unique_ptr<TSParser, ParserDeleter> parser(ts_parser_new());
    ts_parser_set_language(parser.get(), grammar_);
    std::unique_ptr<TSTree, TreeDeleter> tree(ts_parser_parse_string(
        parser.get(), nullptr, text.data(), static_cast<uint32_t>(text.size())));
    if (!tree) return;

    TSTreeCursor cursor = ts_tree_cursor_new(ts_tree_root_node(tree.get()));
    for (;;) {
      const TSNode node = ts_tree_cursor_current_node(&cursor);
      const bool descend = visit(Describe(node));
      if (descend && ts_tree_cursor_goto_first_child(&cursor)) continue;
      bool moved = false;
      do {
        if (ts_tree_cursor_goto_next_sibling(&cursor)) {
          moved = true;
          break;
        }
      } while (ts_tree_cursor_goto_parent(&cursor));
      if (!moved) break;
    }
    ts_tree_cursor_delete(&cursor);
  }

 private:
  CstNode Describe(TSNode node) const {
    CstNode out;
    out.symbol = ts_node_symbol(node);
    out.type = ts_node_type(node);
    out.named = ts_node_is_named(node);
    out.leaf = ts_node_child_count(node) == 0;
    out.missing = ts_node_is_missing(node);
    if (ts_node_is_error(node)) {
      out.role = NodeRole::kError;
    } else if (out.named && out.symbol < roles_.size()) {
      out.role = roles_[out.symbol];
    }
    const auto start = ts_node_start_point(node);
    const auto end = ts_node_end_point(node);
    out.region = {start.row, start.column, end.row, end.column};
    return out;
  }

  std::string_view language_;
  const TSLanguage* grammar_;
  std::string_view version_;
  std::vector<NodeRole> roles_;
};

}  // namespace

std::unique_ptr<ParserAdapter> MakeTreeSitterAdapter(std::string_view language) {
  for (const auto& grammar : kGrammars) {
    if (grammar.language == language) return std::make_unique<TreeSitterAdapter>(grammar);
  }
  return nullptr;
}

void ParserRegistry::Register(std::unique_ptr<ParserAdapter> adapter) {
  std::string key(adapter->language());
  adapters_[std::move(key)] = std::move(adapter);
}

const ParserAdapter* ParserRegistry::Find(std::string_view language) const {
  auto it = adapters_.find(language);
  return it == adapters_.end() ? nullptr : it->second.get();
}

const ParserRegistry& ParserRegistry::Default() {
  static const ParserRegistry registry = [] {
    ParserRegistry r;
    for (const auto& grammar : kGrammars) r.Register(MakeTreeSitterAdapter(grammar.language));
    return r;
  }();
  return registry;
}

}  // namespace simtrace
