#ifndef CORECHOR_TEXT_PROGRAM_TEXT_HPP
#define CORECHOR_TEXT_PROGRAM_TEXT_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corechor/chor/print.hpp"
#include "corechor/chor/syntax.hpp"
#include "corechor/concrete.hpp"
#include "corechor/error.hpp"

namespace corechor::text {

using CProgram = chor::Program<ConcreteParams>;
using CChor = chor::Choreography<ConcreteParams>;
using CState = chor::GlobalState<ConcreteParams>;

struct ParseOptions {
  /// Accept `rtcall X{ps} { C }`; source programs are initial, so this is
  /// only for replaying saved configurations.
  bool allow_runtime_terms = false;
};

namespace detail {

enum class Tok { ident, number, punct, eof };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::punct, "->", line, col});
      advance(2);
    } else if (std::string_view(".;[]{}(),=?").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::eof, "", line, col});
  return out;
}

class ProgramParser {
 public:
  ProgramParser(std::string_view src, ParseOptions opts) : toks_(tokenize(src)), opts_(opts) {}

  CProgram program() {
    CProgram prog;
    bool have_main = false;
    while (peek().kind != Tok::eof) {
      if (accept_word("def")) {
        const Token& at = peek();
        ProcName x = proc_name();
        if (prog.procedures.defines(x)) fail("procedure X" + std::to_string(x) + " defined twice", at);
        expect("(");
        chor::PidSet<ConcreteParams> ann;
        if (!accept(")")) {
          ann = pid_list();
          expect(")");
        }
        expect("=");
        prog.procedures.define(x, {std::move(ann), chor()});
      } else if (peek().kind == Tok::ident && peek().text == "main") {
        if (have_main) fail("main defined twice", peek());
        next();
        expect("=");
        prog.main = chor();
        have_main = true;
      } else {
        fail("expected 'def' or 'main'", peek());
      }
    }
    if (!have_main) fail("missing 'main'", peek());
    return prog;
  }

  CState state() {
    CState s(0);
    while (peek().kind != Tok::eof) {
      Pid p = number();
      expect(".");
      Var x = var();
      expect("=");
      s = s.update(p, x, number());
      accept(";");
    }
    return s;
  }

  CChor chor_only() {
    CChor c = chor();
    if (peek().kind != Tok::eof) fail("trailing input", peek());
    return c;
  }

 private:
  [[noreturn]] static void fail(const std::string& message, const Token& at) {
    throw ParseError(message, at.line, at.column);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool accept(std::string_view punct) {
    if (peek().kind == Tok::punct && peek().text == punct) {
      next();
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view word) {
    if (peek().kind == Tok::ident && peek().text == word) {
      next();
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'", peek());
  }

  void expect_word(std::string_view word) {
    if (!accept_word(word)) fail("expected '" + std::string(word) + "'", peek());
  }

  std::uint64_t number() {
    const Token& t = peek();
    if (t.kind != Tok::number) fail("expected a number", t);
    try {
      std::uint64_t v = std::stoull(t.text);
      next();
      return v;
    } catch (const std::out_of_range&) {
      fail("number out of range", t);
    }
  }

  ProcName proc_name() {
    const Token& t = peek();
    if (t.kind != Tok::ident || t.text.size() < 2 || t.text[0] != 'X' ||
        t.text.find_first_not_of("0123456789", 1) != std::string::npos) {
      fail("expected a procedure name like X0", t);
    }
    next();
    return std::stoull(t.text.substr(1));
  }

  Var var() {
    if (accept_word("xx")) return Var::xx;
    if (accept_word("yy")) return Var::yy;
    fail("expected a variable (xx or yy)", peek());
  }

  Expr expr() {
    if (accept_word("this")) return Expr::this_value;
    if (accept_word("zero")) return Expr::zero;
    if (accept_word("succ")) return Expr::succ_this;
    fail("expected an expression (this, zero or succ)", peek());
  }

  chor::PidSet<ConcreteParams> pid_list() {
    chor::PidSet<ConcreteParams> ps{number()};
    while (accept(",")) ps.insert(number());
    return ps;
  }

  CChor block() {
    expect("{");
    CChor c = chor();
    expect("}");
    return c;
  }

  CChor chor() {
    std::vector<chor::Eta<ConcreteParams>> prefix;
    CChor tail;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::number) {
        Pid p = number();
        if (accept(".")) {
          Expr e = expr();
          expect("->");
          Pid q = number();
          expect(".");
          prefix.push_back(chor::Com<ConcreteParams>{p, e, q, var()});
        } else {
          expect("->");
          Pid q = number();
          expect("[");
          chor::Label l = chor::Label::left;
          if (accept_word("left")) {
            l = chor::Label::left;
          } else if (accept_word("right")) {
            l = chor::Label::right;
          } else {
            fail("expected 'left' or 'right'", peek());
          }
          expect("]");
          prefix.push_back(chor::Sel<ConcreteParams>{p, q, l});
        }
        expect(";");
        continue;
      }
      if (accept_word("end")) {
        tail = CChor{};
      } else if (accept_word("call")) {
        tail = chor::call<ConcreteParams>(proc_name());
      } else if (accept_word("if")) {
        Pid p = number();
        expect("?");
        expect_word("compare");
        expect_word("then");
        CChor then_branch = block();
        expect_word("else");
        CChor else_branch = block();
        tail = chor::cond<ConcreteParams>(p, BExpr::compare, then_branch, else_branch);
      } else if (t.kind == Tok::ident && t.text == "rtcall") {
        if (!opts_.allow_runtime_terms) fail("runtime terms are not allowed in source programs", t);
        next();
        ProcName x = proc_name();
        expect("{");
        chor::PidSet<ConcreteParams> ps;
        if (!accept("}")) {
          ps = pid_list();
          expect("}");
        }
        tail = chor::rt_call<ConcreteParams>(x, std::move(ps), block());
      } else {
        fail("expected a choreography", t);
      }
      break;
    }
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) tail = chor::interact<ConcreteParams>(*it, tail);
    return tail;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions opts_;
};

}  // namespace detail

/// Grammar:
///   program := ('def' X<n> '(' pids ')' '=' chor)* 'main' '=' chor
///   chor    := p '.' e '->' q '.' x ';' chor | p '->' q '[' left|right ']' ';' chor
///            | 'if' p '?' 'compare' 'then' '{' chor '}' 'else' '{' chor '}'
///            | 'call' X<n> | 'end'
/// with e in {this, zero, succ}, x in {xx, yy}, and `//` line comments.
inline CProgram parse_program(std::string_view src, ParseOptions opts = {}) {
  return detail::ProgramParser(src, opts).program();
}

inline CChor parse_choreography(std::string_view src, ParseOptions opts = {}) {
  return detail::ProgramParser(src, opts).chor_only();
}

/// Lines of `p.x = v`; everything else is 0.
inline CState parse_state(std::string_view src) { return detail::ProgramParser(src, {}).state(); }

inline std::string print_program(const CProgram& prog) { return chor::to_string(prog); }

inline std::string print_state(const CState& s) {
  std::ostringstream os;
  chor::print_state(os, s);
  return os.str();
}

}  // namespace corechor::text

#endif  // CORECHOR_TEXT_PROGRAM_TEXT_HPP
