#include "aspdbg/parser.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <optional>

namespace aspdbg {

namespace {

enum class Tok {
  Ident,
  Var,
  Number,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  If,
  Bar,
  Minus,
  Not,
  Plus,
  Star,
  Cmp,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePosition pos;
  std::size_t end = 0;  // byte offset one past the token
  CompareOp cmp = CompareOp::Eq;
  std::int64_t number = 0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.pos = here();
      if (at_end()) {
        t.end = i_;
        out.push_back(t);
        return out;
      }
      char c = text_[i_];
      if (std::islower(static_cast<unsigned char>(c))) {
        t.text = word();
        t.kind = t.text == "not" ? Tok::Not : Tok::Ident;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        t.text = word();
        t.kind = Tok::Var;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = i_;
        std::int64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          int d = text_[i_] - '0';
          if (value > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
            throw ParseError(ErrorKind::Syntax, t.pos, "number too large");
          }
          value = value * 10 + d;
          advance();
        }
        t.kind = Tok::Number;
        t.number = value;
        t.text = std::string(text_.substr(start, i_ - start));
      } else {
        t.text = std::string(1, c);
        switch (c) {
          case '(': t.kind = Tok::LParen; advance(); break;
          case ')': t.kind = Tok::RParen; advance(); break;
          case '{': t.kind = Tok::LBrace; advance(); break;
          case '}': t.kind = Tok::RBrace; advance(); break;
          case ',': t.kind = Tok::Comma; advance(); break;
          case '.': t.kind = Tok::Dot; advance(); break;
          case '|': t.kind = Tok::Bar; advance(); break;
          case '-': t.kind = Tok::Minus; advance(); break;
          case '+': t.kind = Tok::Plus; advance(); break;
          case '*': t.kind = Tok::Star; advance(); break;
          case ':':
            advance();
            if (at_end() || text_[i_] != '-') {
              throw ParseError(ErrorKind::Syntax, t.pos, "expected ':-'");
            }
            advance();
            t.kind = Tok::If;
            t.text = ":-";
            break;
          case '=': t.kind = Tok::Cmp; t.cmp = CompareOp::Eq; advance(); break;
          case '!':
            advance();
            if (at_end() || text_[i_] != '=') {
              throw ParseError(ErrorKind::Syntax, t.pos, "expected '!='");
            }
            advance();
            t.kind = Tok::Cmp;
            t.cmp = CompareOp::Neq;
            t.text = "!=";
            break;
          case '<':
          case '>': {
            advance();
            bool eq = !at_end() && text_[i_] == '=';
            if (eq) advance();
            t.kind = Tok::Cmp;
            t.cmp = c == '<' ? (eq ? CompareOp::Leq : CompareOp::Lt)
                             : (eq ? CompareOp::Geq : CompareOp::Gt);
            t.text = std::string(1, c) + (eq ? "=" : "");
            break;
          }
          default:
            throw ParseError(ErrorKind::Syntax, t.pos,
                             "unexpected character '" + std::string(1, c) + "'");
        }
      }
      t.end = i_;
      out.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }

  SourcePosition here() const { return {line_, col_, i_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end()) {
      char c = text_[i_];
      if (c == '%') {
        while (!at_end() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string word() {
    std::size_t start = i_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
      advance();
    }
    return std::string(text_.substr(start, i_ - start));
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  ParsedProgram program() {
    std::vector<Rule> rules;
    while (peek().kind != Tok::End) rules.push_back(rule());
    ParsedProgram out{Program(std::move(rules)), {}};
    arity_warnings(out);
    return out;
  }

  Interpretation interpretation() {
    LiteralSet literals;
    auto add = [&](const Token& at, Literal lit) {
      if (!lit.is_ground()) {
        throw ParseError(ErrorKind::Syntax, at.pos,
                         "interpretation literal '" + lit.str() + "' is not ground");
      }
      if (literals.count(complement(lit))) {
        throw ParseError(ErrorKind::InconsistentInterpretation, at.pos,
                         "interpretation contains both " + lit.str() + " and " +
                             complement(lit).str());
      }
      literals.insert(std::move(lit));
    };
    if (peek().kind == Tok::LBrace) {
      next();
      if (peek().kind != Tok::RBrace) {
        for (;;) {
          const Token& at = peek();
          add(at, interpretation_literal());
          if (peek().kind == Tok::Comma) {
            next();
            continue;
          }
          break;
        }
      }
      expect(Tok::RBrace, "'}'");
      if (peek().kind == Tok::Dot) next();
    } else {
      while (peek().kind != Tok::End) {
        const Token& at = peek();
        add(at, interpretation_literal());
        if (peek().kind == Tok::Dot || peek().kind == Tok::Comma) next();
      }
    }
    expect(Tok::End, "end of input");
    return Interpretation(std::move(literals));
  }

  Literal single_literal() {
    BodyAtom atom = body_atom();
    if (!std::holds_alternative<Literal>(atom)) {
      throw ParseError(ErrorKind::Syntax, tokens_.front().pos, "expected a literal");
    }
    if (peek().kind == Tok::Dot) next();
    expect(Tok::End, "end of input");
    return std::get<Literal>(std::move(atom));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(ErrorKind::Syntax, peek().pos,
                       std::string("expected ") + what + ", found " + describe(peek()));
    }
    return next();
  }

  Rule rule() {
    const Token& first = peek();
    std::vector<Literal> head;
    std::vector<BodyAtom> pos;
    std::vector<Literal> neg;
    if (first.kind != Tok::If) {
      for (;;) {
        const Token& at = peek();
        BodyAtom atom = body_atom();
        if (std::holds_alternative<Builtin>(atom)) {
          throw ParseError(ErrorKind::BuiltinInHead, at.pos,
                           "comparison '" + to_string(atom) + "' may not appear in a rule head");
        }
        head.push_back(std::get<Literal>(std::move(atom)));
        if (peek().kind != Tok::Bar) break;
        next();
      }
    }
    if (peek().kind == Tok::If) {
      next();
      for (;;) {
        const Token& at = peek();
        if (at.kind == Tok::Not) {
          next();
          BodyAtom atom = body_atom();
          if (std::holds_alternative<Builtin>(atom)) {
            throw ParseError(ErrorKind::BuiltinInNegativeBody, at.pos,
                             "comparison '" + to_string(atom) + "' may not appear under 'not'");
          }
          neg.push_back(std::get<Literal>(std::move(atom)));
        } else {
          pos.push_back(body_atom());
        }
        if (peek().kind != Tok::Comma) break;
        next();
      }
    }
    const Token& dot = expect(Tok::Dot, "'.'");
    SourceSpan span{first.pos.offset, dot.end};
    return Rule(std::move(head), std::move(pos), std::move(neg), span);
  }

  // A classical literal or a comparison.
  BodyAtom body_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) {
      next();
      const Token& name = expect(Tok::Ident, "a predicate name after '-'");
      return literal_rest(name, true);
    }
    if (t.kind == Tok::Ident) {
      Tok after = peek(1).kind;
      if (after == Tok::LParen) {
        next();
        Literal lit = literal_rest(t, false);
        if (peek().kind == Tok::Cmp || peek().kind == Tok::Plus || peek().kind == Tok::Star) {
          throw ParseError(ErrorKind::Syntax, t.pos, "function symbols are not supported");
        }
        return lit;
      }
      if (after != Tok::Cmp && after != Tok::Plus && after != Tok::Star) {
        next();
        return literal_rest(t, false);
      }
    }
    if (t.kind == Tok::Ident || t.kind == Tok::Var || t.kind == Tok::Number ||
        t.kind == Tok::LParen) {
      Term lhs = sum();
      if (peek().kind != Tok::Cmp) {
        throw ParseError(ErrorKind::Syntax, peek().pos,
                         "expected a comparison operator, found " + describe(peek()));
      }
      CompareOp op = next().cmp;
      Term rhs = sum();
      return Builtin{std::move(lhs), op, std::move(rhs)};
    }
    throw ParseError(ErrorKind::Syntax, t.pos, "expected a literal, found " + describe(t));
  }

  Literal literal_rest(const Token& name, bool strong_neg) {
    std::vector<Term> args;
    if (peek().kind == Tok::LParen) {
      next();
      for (;;) {
        const Token& a = peek();
        switch (a.kind) {
          case Tok::Ident: args.emplace_back(Constant::symbol(a.text)); break;
          case Tok::Var: args.emplace_back(Variable{a.text}); break;
          case Tok::Number: args.emplace_back(Constant::number(a.number)); break;
          default:
            throw ParseError(ErrorKind::Syntax, a.pos, "expected an argument, found " + describe(a));
        }
        next();
        Tok k = peek().kind;
        if (k == Tok::LParen) {
          throw ParseError(ErrorKind::Syntax, a.pos, "function symbols are not supported");
        }
        if (k == Tok::Plus || k == Tok::Star) {
          throw ParseError(ErrorKind::Syntax, peek().pos,
                           "arithmetic is only allowed inside comparisons");
        }
        if (k == Tok::Comma) {
          next();
          continue;
        }
        expect(Tok::RParen, "')' or ','");
        break;
      }
    }
    occurrences_.emplace_back(name.text, args.size(), name.pos);
    return Literal(name.text, strong_neg, std::move(args));
  }

  Term sum() {
    Term t = product();
    while (peek().kind == Tok::Plus) {
      next();
      t = Term(ArithOp::Plus, std::move(t), product());
    }
    return t;
  }

  Term product() {
    Term t = primary();
    while (peek().kind == Tok::Star) {
      next();
      t = Term(ArithOp::Times, std::move(t), primary());
    }
    return t;
  }

  Term primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Ident:
        if (peek().kind == Tok::LParen) {
          throw ParseError(ErrorKind::Syntax, t.pos, "function symbols are not supported");
        }
        return Constant::symbol(t.text);
      case Tok::Var: return Variable{t.text};
      case Tok::Number: return Constant::number(t.number);
      case Tok::LParen: {
        Term inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(ErrorKind::Syntax, t.pos, "expected a term, found " + describe(t));
    }
  }

  Literal interpretation_literal() {
    const Token& at = peek();
    if (at.kind == Tok::Not) {
      throw ParseError(ErrorKind::Syntax, at.pos, "'not' is not allowed in an interpretation");
    }
    BodyAtom atom = body_atom();
    if (std::holds_alternative<Builtin>(atom)) {
      throw ParseError(ErrorKind::BuiltinInInterpretation, at.pos,
                       "comparison '" + to_string(atom) + "' may not appear in an interpretation");
    }
    return std::get<Literal>(std::move(atom));
  }

  void arity_warnings(ParsedProgram& out) const {
    std::map<std::string, std::size_t> first_arity;
    std::map<std::pair<std::string, std::size_t>, bool> reported;
    for (const auto& [name, arity, pos] : occurrences_) {
      auto [it, inserted] = first_arity.emplace(name, arity);
      if (!inserted && it->second != arity && !reported[{name, arity}]) {
        reported[{name, arity}] = true;
        out.warnings.emplace_back(ErrorKind::ArityClashWarning, pos,
                                  "predicate '" + name + "' used with arities " +
                                      std::to_string(it->second) + " and " +
                                      std::to_string(arity));
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::tuple<std::string, std::size_t, SourcePosition>> occurrences_;
};

}  // namespace

ParsedProgram parse_program_with_warnings(std::string_view text) {
  return Parser(text).program();
}

Program parse_program(std::string_view text) { return parse_program_with_warnings(text).program; }

Interpretation parse_interpretation(std::string_view text) {
  return Parser(text).interpretation();
}

Literal parse_literal(std::string_view text) { return Parser(text).single_literal(); }

}  // namespace aspdbg
