#include "program_gen.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace simtrace::testing {
namespace {

constexpr int kParams = 2;
constexpr int kLocals = 4;
constexpr int kVars = kParams + kLocals;

const char* const kPlainNames[kVars] = {"left", "right", "total", "count", "index", "value"};
const char* const kRenamedNames[kVars] = {"alpha", "beta", "acc", "tally", "pos", "item"};

const std::vector<std::string> kTextPools[] = {
    {"total is", "value now", "result", "checking", "done with step", "loop"},
    {"QQ zz 9", "another text entirely", "x", "lorem ipsum dolor", "!", "--"},
};

const char* const kArith[] = {"+", "-", "*"};

struct Generator {
  std::mt19937_64 rng;
  int functions;

  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  GenStmt Simple(int self) {
    GenStmt s;
    const int roll = Pick(10);
    if (roll < 5) {
      s.kind = GenStmt::kAssign;
    } else if (roll < 7) {
      s.kind = GenStmt::kPrint;
    } else if (roll < 9 && functions > 1) {
      s.kind = GenStmt::kCall;
      do s.callee = Pick(functions); while (s.callee == self);
    } else {
      s.kind = GenStmt::kAssign;
    }
    s.target = kParams + Pick(kLocals);
    s.a = Pick(kVars);
    s.b = Pick(3) == 0 ? -1 : Pick(kVars);
    s.op = Pick(3);
    s.literal = 1 + Pick(9);
    s.text = Pick(6);
    return s;
  }

  GenStmt Any(int self) {
    const int roll = Pick(12);
    GenStmt s = Simple(self);
    if (roll < 6) return s;
    auto block = [&](std::vector<GenStmt>& out) {
      const int n = 1 + Pick(3);
      for (int i = 0; i < n; ++i) out.push_back(Simple(self));
    };
    switch (roll) {
      case 6:
      case 7:
        s.kind = GenStmt::kIf;
        block(s.body);
        block(s.orelse);
        break;
      case 8:
      case 9:
        s.kind = GenStmt::kFor;
        block(s.body);
        break;
      case 10:
        s.kind = GenStmt::kWhile;
        block(s.body);
        break;
      default:
        s.kind = GenStmt::kReturnEarly;
        break;
    }
    return s;
  }
};

struct Renderer {
  const GenProgram& program;
  const GenStyle& style;
  std::string out;
  int comment_counter = 0;

  bool Python() const { return program.lang == GenLang::kPython; }
  bool Braces() const { return !Python(); }
  bool Semicolons() const { return program.lang != GenLang::kPython && program.lang != GenLang::kGo; }
  const char* Semi() const { return Semicolons() ? ";" : ""; }

  std::string Var(int v) const {
    return (style.rename ? kRenamedNames : kPlainNames)[v];
  }
  std::string Fn(int id) const {
    return fmt::format("{}_{}", style.rename ? "routine" : "compute", id);
  }
  std::string Loop(int depth) const {
    return fmt::format("{}{}", style.rename ? "k" : "step", depth);
  }
  std::string Text(int t) const {
    if (style.string_variant < 2) return kTextPools[style.string_variant][t % 6];
    return fmt::format("s{} {}", style.string_variant, kTextPools[0][t % 6]);
  }
  std::string Operand(const GenStmt& s) const {
    return s.b < 0 ? std::to_string(s.literal) : Var(s.b);
  }
  std::string Expr(const GenStmt& s) const {
    return fmt::format("{} {} {}", Var(s.a), kArith[s.op], Operand(s));
  }

  void Line(int indent, const std::string& text) {
    out.append(static_cast<std::size_t>(indent) * 4, ' ');
    out += text;
    out += '\n';
  }
  void Comment(int indent) {
    if (!style.comments) return;
    Line(indent, fmt::format("{} note {}", Python() ? "#" : "//", comment_counter++));
  }
  std::string Trailing() {
    if (!style.comments) return "";
    return fmt::format("  {} trailing {}", Python() ? "#" : "//", comment_counter++);
  }
  void Open(int indent, const std::string& head) { Line(indent, head + (Python() ? ":" : " {")); }
  void Close(int indent) {
    if (Braces()) Line(indent, "}");
  }

  std::string Cond(const std::string& c) const {
    return program.lang == GenLang::kPython || program.lang == GenLang::kGo ? c : "(" + c + ")";
  }

  std::string Print(const GenStmt& s) const {
    const std::string text = Text(s.text);
    switch (program.lang) {
      case GenLang::kPython: return fmt::format("print(\"{}\", {})", text, Var(s.a));
      case GenLang::kJavaScript: return fmt::format("console.log(\"{}\", {});", text, Var(s.a));
      case GenLang::kJava: return fmt::format("System.out.println(\"{}\" + {});", text, Var(s.a));
      case GenLang::kC: return fmt::format("printf(\"{} %d\\n\", {});", text, Var(s.a));
      case GenLang::kGo: return fmt::format("fmt.Println(\"{}\", {})", text, Var(s.a));
    }
    return {};
  }

  void Stmt(const GenStmt& s, int indent, int depth) {
    Comment(indent);
    switch (s.kind) {
      case GenStmt::kAssign:
        Line(indent, fmt::format("{} = {}{}{}", Var(s.target), Expr(s), Semi(), Trailing()));
        break;
      case GenStmt::kPrint:
        Line(indent, Print(s));
        break;
      case GenStmt::kCall:
        Line(indent, fmt::format("{} = {}({}, {}){}", Var(s.target), Fn(s.callee), Var(s.a),
                                 Operand(s), Semi()));
        break;
      case GenStmt::kIf:
        Open(indent, "if " + Cond(fmt::format("{} > {}", Var(s.a), Operand(s))));
        for (const auto& c : s.body) Stmt(c, indent + 1, depth + 1);
        if (Python()) {
          Line(indent, "else:");
        } else {
          Line(indent, "} else {");
        }
        for (const auto& c : s.orelse) Stmt(c, indent + 1, depth + 1);
        Close(indent);
        break;
      case GenStmt::kFor: {
        const std::string i = Loop(depth);
        const int n = s.literal + 2;
        switch (program.lang) {
          case GenLang::kPython: Open(indent, fmt::format("for {} in range({})", i, n)); break;
          case GenLang::kJavaScript:
            Open(indent, fmt::format("for (let {0} = 0; {0} < {1}; {0}++)", i, n));
            break;
          case GenLang::kJava:
          case GenLang::kC:
            Open(indent, fmt::format("for (int {0} = 0; {0} < {1}; {0}++)", i, n));
            break;
          case GenLang::kGo: Open(indent, fmt::format("for {0} := 0; {0} < {1}; {0}++", i, n)); break;
        }
        for (const auto& c : s.body) Stmt(c, indent + 1, depth + 1);
        Close(indent);
        break;
      }
      case GenStmt::kWhile: {
        const std::string cond = fmt::format("{} < {}", Var(s.target), s.literal * 10);
        Open(indent, (program.lang == GenLang::kGo ? "for " : "while ") + Cond(cond));
        for (const auto& c : s.body) Stmt(c, indent + 1, depth + 1);
        Line(indent + 1, fmt::format("{0} = {0} + 1{1}", Var(s.target), Semi()));
        Close(indent);
        break;
      }
      case GenStmt::kReturnEarly:
        Open(indent, "if " + Cond(fmt::format("{} > {}", Var(s.a), s.literal * 7)));
        Line(indent + 1, fmt::format("return {}{}", Operand(s), Semi()));
        Close(indent);
        break;
    }
  }

  void Function(const GenFunction& f, int indent) {
    const std::string params = [&] {
      switch (program.lang) {
        case GenLang::kJava:
        case GenLang::kC: return fmt::format("int {}, int {}", Var(0), Var(1));
        case GenLang::kGo: return fmt::format("{} int, {} int", Var(0), Var(1));
        default: return fmt::format("{}, {}", Var(0), Var(1));
      }
    }();
    switch (program.lang) {
      case GenLang::kPython: Open(indent, fmt::format("def {}({})", Fn(f.id), params)); break;
      case GenLang::kJavaScript: Open(indent, fmt::format("function {}({})", Fn(f.id), params)); break;
      case GenLang::kJava: Open(indent, fmt::format("static int {}({})", Fn(f.id), params)); break;
      case GenLang::kC: Open(indent, fmt::format("int {}({})", Fn(f.id), params)); break;
      case GenLang::kGo: Open(indent, fmt::format("func {}({}) int", Fn(f.id), params)); break;
    }
    if (style.comments && Braces()) Line(indent + 1, "/* block remark */");
    for (int v = kParams; v < kVars; ++v) {
      switch (program.lang) {
        case GenLang::kPython: Line(indent + 1, fmt::format("{} = 0", Var(v))); break;
        case GenLang::kJavaScript: Line(indent + 1, fmt::format("let {} = 0;", Var(v))); break;
        case GenLang::kJava:
        case GenLang::kC: Line(indent + 1, fmt::format("int {} = 0;", Var(v))); break;
        case GenLang::kGo: Line(indent + 1, fmt::format("{} := 0", Var(v))); break;
      }
    }
    for (const auto& s : f.body) Stmt(s, indent + 1, 0);
    Comment(indent + 1);
    Line(indent + 1, fmt::format("return {}{}", Var(kParams), Semi()));
    Close(indent);
  }

  std::string Run() {
    std::vector<std::size_t> order = style.order;
    if (order.empty()) {
      order.resize(program.functions.size());
      std::iota(order.begin(), order.end(), 0);
    }
    if (style.comments) Line(0, Python() ? "# generated module" : "// generated module");
    int indent = 0;
    switch (program.lang) {
      case GenLang::kJava:
        Line(0, "public class Main {");
        indent = 1;
        break;
      case GenLang::kC: Line(0, "#include <stdio.h>"); break;
      case GenLang::kGo:
        Line(0, "package main");
        Line(0, "import \"fmt\"");
        break;
      default: break;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 || program.lang != GenLang::kPython) out += '\n';
      Function(program.functions[order[i]], indent);
    }
    if (program.lang == GenLang::kJava) Line(0, "}");
    return std::move(out);
  }
};

}  // namespace

const char* LanguageId(GenLang lang) {
  switch (lang) {
    case GenLang::kPython: return "python";
    case GenLang::kJavaScript: return "javascript";
    case GenLang::kJava: return "java";
    case GenLang::kC: return "c";
    case GenLang::kGo: return "go";
  }
  return "";
}

const char* Extension(GenLang lang) {
  switch (lang) {
    case GenLang::kPython: return ".py";
    case GenLang::kJavaScript: return ".js";
    case GenLang::kJava: return ".java";
    case GenLang::kC: return ".c";
    case GenLang::kGo: return ".go";
  }
  return "";
}

GenProgram GenerateProgram(GenLang lang, std::uint64_t seed, std::size_t functions,
                           std::size_t statements) {
  Generator gen{std::mt19937_64(seed), static_cast<int>(functions)};
  GenProgram program{lang, {}};
  for (std::size_t f = 0; f < functions; ++f) {
    GenFunction fn{static_cast<int>(f), {}};
    GenStmt greet = gen.Simple(static_cast<int>(f));
    greet.kind = GenStmt::kPrint;
    fn.body.push_back(greet);
    for (std::size_t s = 1; s < statements; ++s) fn.body.push_back(gen.Any(static_cast<int>(f)));
    program.functions.push_back(std::move(fn));
  }
  return program;
}

GenProgram Mutate(const GenProgram& program, std::uint64_t seed, double rate) {
  Generator gen{std::mt19937_64(seed), static_cast<int>(program.functions.size())};
  std::bernoulli_distribution hit(rate);
  GenProgram out = program;
  for (auto& fn : out.functions) {
    for (auto& s : fn.body) {
      if (hit(gen.rng)) s = gen.Any(fn.id);
    }
  }
  return out;
}

std::string Render(const GenProgram& program, const GenStyle& style) {
  return Renderer{program, style, {}, 0}.Run();
}

std::size_t CountRenderedLines(const GenProgram& program) {
  const std::string text = Render(program);
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace simtrace::testing
