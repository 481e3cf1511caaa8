#include <gtest/gtest.h>

#include "program_gen.hpp"
#include "simtrace/error.hpp"
#include "simtrace/fallback_lexer.hpp"
#include "simtrace/tokenize.hpp"

namespace simtrace {
namespace {

SourceFile File(std::string language, std::string content) {
  SourceFile f;
  f.language = std::move(language);
  f.line_count = CountLines(content);
  f.content = std::move(content);
  return f;
}

std::vector<TokenKind> KindsOf(const std::string& language, const std::string& content,
                               TokenizeOptions options = {}) {
  return Tokenize(File(language, content), options).Kinds();
}

TEST(Tokenize, EmptyFile) {
  EXPECT_TRUE(KindsOf("python", "").empty());
  EXPECT_TRUE(KindsOf("c", "").empty());
}

TEST(Tokenize, LiteralsAndNamesAreMasked) {
  EXPECT_EQ(KindsOf("python", "x = 1"), KindsOf("python", "y = 2"));
  EXPECT_EQ(KindsOf("python", "foo(bar)"), KindsOf("python", "baz(qux)"));
  EXPECT_EQ(KindsOf("python", "s = \"hello\""), KindsOf("python", "s = \"world\""));
  EXPECT_EQ(KindsOf("python", "x=1 # comment"), KindsOf("python", "x=1"));
  EXPECT_NE(KindsOf("python", "x = 1"), KindsOf("python", "x = 1.5"));
}

TEST(Tokenize, NumberMaskingIsOptional) {
  TokenizeOptions mask{.allow_fallback = true, .mask_numbers = true};
  EXPECT_EQ(KindsOf("python", "x = 1", mask), KindsOf("python", "x = 1.5", mask));
  EXPECT_EQ(KindsOf("c", "x = 1;", mask), KindsOf("c", "x = 0x1f;", mask));
}

TEST(Tokenize, MaskingAcrossGrammars) {
  EXPECT_EQ(KindsOf("javascript", "let a = 'x'; // hi\nconsole.log(a);"),
            KindsOf("javascript", "let b = \"yy\";\nwindow.print(b); /* c */"));
  EXPECT_EQ(KindsOf("java", "class A { String s = \"a\"; /* x */ }"),
            KindsOf("java", "class B { String t = \"bb\"; // y\n}"));
  EXPECT_NE(KindsOf("java", "class A { int x; }"), KindsOf("java", "class A { long x; }"));
}

TEST(Tokenize, SyntaxErrorStillTokenizes) {
  const std::string broken = "def f(x):\n    return x +\n\ndef g(y):\n    return y * 2\n";
  const auto kinds = KindsOf("python", broken);
  ASSERT_FALSE(kinds.empty());
  EXPECT_NE(std::find(kinds.begin(), kinds.end(), kErrorKind), kinds.end());

  const auto js = KindsOf("javascript", "function f( { return 1 }\nlet x = ;\n");
  EXPECT_NE(std::find(js.begin(), js.end(), kErrorKind), js.end());
}

TEST(Tokenize, RegionsPointIntoSource) {
  const auto tokens = Tokenize(File("python", "a = 1\nbb = 22\n")).tokens;
  ASSERT_FALSE(tokens.empty());
  bool saw_bb = false;
  for (const auto& t : tokens) {
    EXPECT_LE(t.region.start_row, t.region.end_row);
    if (t.kind == kIdentifierKind && t.region.start_row == 1) {
      EXPECT_EQ(t.region.start_col, 0u);
      EXPECT_EQ(t.region.end_col, 2u);
      saw_bb = true;
    }
  }
  EXPECT_TRUE(saw_bb);
}

TEST(Tokenize, Errors) {
  try {
    Tokenize(File("c", "int x;"), {.allow_fallback = false, .mask_numbers = false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedLanguage);
  }
  for (const std::string bad : {std::string("x = 1\0", 6), std::string("x = \xff\n"),
                                std::string("\xc0\xaf"), std::string("\xed\xa0\x80")}) {
    try {
      Tokenize(File("python", bad));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kEncoding);
    }
  }
  EXPECT_TRUE(IsValidUtf8("naïve ✓ 𝄞"));
}

TEST(Tokenize, GrammarVersions) {
  EXPECT_EQ(GrammarVersion("python").rfind("tree-sitter-python 0.21.0", 0), 0u);
  EXPECT_EQ(GrammarVersion("c").rfind("fallback-lexer c/", 0), 0u);
}

TEST(Fallback, OperatorsAndKeywords) {
  const auto* c = LexicalTable::Builtin("python");
  ASSERT_NE(c, nullptr);
  const auto kinds = FallbackTokenize(File("python", "a + b")).Kinds();
  ASSERT_EQ(kinds.size(), 3u);
  EXPECT_EQ(kinds[0], kIdentifierKind);
  EXPECT_EQ(kinds[2], kIdentifierKind);
  const auto& ops = FallbackOperators();
  const auto plus = std::find(ops.begin(), ops.end(), "+") - ops.begin();
  EXPECT_EQ(kinds[1], static_cast<TokenKind>(100 + plus));

  const auto kw = FallbackTokenize(File("python", "if x:")).Kinds();
  ASSERT_EQ(kw.size(), 3u);
  const auto if_index = std::find(c->keywords.begin(), c->keywords.end(), "if") - c->keywords.begin();
  EXPECT_EQ(kw[0], static_cast<TokenKind>(1000 + if_index));
  EXPECT_EQ(kw[1], kIdentifierKind);
  EXPECT_EQ(kw[2], static_cast<TokenKind>(100 + (std::find(ops.begin(), ops.end(), ":") - ops.begin())));
}

TEST(Fallback, MaximalMunchAndComments) {
  const auto table = LexicalTable::Parse("toy",
                                         "@version 3\n@line-comment //\n@block-comment /* */\n"
                                         "@quote \" '\n# keywords\nwhile\n");
  EXPECT_EQ(table.version, "3");
  EXPECT_EQ(table.keywords, std::vector<std::string>{"while"});

  const auto nodes = FallbackLex("a >>= 0x1F; /* x\n y */ s = \"q\\\"r\" // tail\n", table);
  std::vector<TokenKind> symbols;
  for (const auto& n : nodes) {
    if (n.role != NodeRole::kComment) symbols.push_back(n.symbol);
  }
  const auto& ops = FallbackOperators();
  const auto shift = std::find(ops.begin(), ops.end(), ">>=") - ops.begin();
  ASSERT_EQ(symbols.size(), 7u);
  EXPECT_EQ(symbols[1], static_cast<TokenKind>(100 + shift));
  EXPECT_EQ(symbols[2], kNumberKind);
  EXPECT_EQ(symbols[6], kStringKind);
  const auto comments = std::count_if(nodes.begin(), nodes.end(),
                                      [](const CstNode& n) { return n.role == NodeRole::kComment; });
  EXPECT_EQ(comments, 2);
  EXPECT_EQ(nodes.back().region.start_row, 1u);
}

TEST(Fallback, RenameInvariance) {
  const auto a = FallbackTokenize(File("go", "func f(x int) int { y := x * 2; return y }")).Kinds();
  const auto b = FallbackTokenize(File("go", "func g(q int) int { w := q * 2; return w }")).Kinds();
  EXPECT_EQ(a, b);
  const auto c = FallbackTokenize(File("go", "func g(q int) int { w := q + 2; return w }")).Kinds();
  EXPECT_NE(a, c);
}

TEST(Fallback, EveryBuiltinTableParses) {
  for (const char* lang : {"c", "cpp", "csharp", "go", "java", "javascript", "python", "rust",
                           "typescript"}) {
    const auto* table = LexicalTable::Builtin(lang);
    ASSERT_NE(table, nullptr) << lang;
    EXPECT_FALSE(table->keywords.empty()) << lang;
  }
  EXPECT_EQ(LexicalTable::Builtin("cobol"), nullptr);
}

TEST(Tokenize, KindsStayBelowHashBase) {
  for (auto lang : testing::kAllGenLangs) {
    const auto program = testing::GenerateProgram(lang, 7, 3, 6);
    for (auto kind : KindsOf(testing::LanguageId(lang), testing::Render(program, {.comments = true}))) {
      ASSERT_LE(kind, kMaxTokenKind);
    }
  }
}

TEST(Tokenize, GeneratedProgramsParseCleanly) {
  for (auto lang : {testing::GenLang::kPython, testing::GenLang::kJavaScript, testing::GenLang::kJava}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto program = testing::GenerateProgram(lang, seed);
      const auto kinds = KindsOf(testing::LanguageId(lang), testing::Render(program));
      EXPECT_EQ(std::count(kinds.begin(), kinds.end(), kErrorKind), 0)
          << testing::LanguageId(lang) << " seed " << seed << "\n"
          << testing::Render(program);
    }
  }
}

}  // namespace
}  // namespace simtrace
