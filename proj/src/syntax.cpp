#include "clat/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "clat/resolution.hpp"

namespace clat {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}

namespace {

enum class Tok { lower, upper, lparen, rparen, comma, semicolon, neck, dot, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const SourcePos at = pos_;
    if (i_ >= text_.size()) return {Tok::end, "", at};
    const char ch = text_[i_];
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string word;
      while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
        word += text_[i_];
        advance();
      }
      const bool var = std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_';
      return {var ? Tok::upper : Tok::lower, word, at};
    }
    advance();
    switch (ch) {
      case '(':
        return {Tok::lparen, "(", at};
      case ')':
        return {Tok::rparen, ")", at};
      case ',':
        return {Tok::comma, ",", at};
      case ';':
        return {Tok::semicolon, ";", at};
      case '.':
        return {Tok::dot, ".", at};
      case ':':
        if (i_ < text_.size() && text_[i_] == '-') {
          advance();
          return {Tok::neck, ":-", at};
        }
        break;
      default:
        break;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", at);
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_blank() {
    while (i_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[i_]))) {
        advance();
      } else if (text_[i_] == '%') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  Program program() {
    Program p;
    while (tok_.kind != Tok::end) {
      p.source_spans.push_back(tok_.pos);
      p.clauses.push_back(clause());
    }
    return p;
  }

 private:
  Token take(Tok kind, const char* what) {
    if (tok_.kind != kind) {
      throw ParseError(std::string("expected ") + what + (tok_.kind == Tok::end ? ", found end of input" : ", found '" + tok_.text + "'"),
                       tok_.pos);
    }
    Token t = tok_;
    tok_ = lex_.next();
    return t;
  }

  Clause clause() {
    std::vector<Literal> lits;
    if (tok_.kind == Tok::neck) {
      take(Tok::neck, "':-'");
      body(lits);
      take(Tok::dot, "'.'");
      return Clause(std::move(lits));
    }
    if (tok_.kind == Tok::lower && tok_.text == "false") {
      const Token f = take(Tok::lower, "atom");
      if (tok_.kind == Tok::dot) {
        take(Tok::dot, "'.'");
        return Clause();
      }
      throw ParseError("'false' is reserved for the empty clause", f.pos);
    }
    lits.push_back(atom(true));
    while (tok_.kind == Tok::semicolon) {
      take(Tok::semicolon, "';'");
      lits.push_back(atom(true));
    }
    if (tok_.kind == Tok::neck) {
      take(Tok::neck, "':-'");
      body(lits);
    }
    take(Tok::dot, "'.' or ':-'");
    return Clause(std::move(lits));
  }

  void body(std::vector<Literal>& lits) {
    lits.push_back(atom(false));
    while (tok_.kind == Tok::comma) {
      take(Tok::comma, "','");
      lits.push_back(atom(false));
    }
  }

  std::string symbol() {
    const Token t = take(Tok::lower, "a lowercase name");
    if (is_reserved_name(t.text)) throw ParseError("name '" + t.text + "' is reserved", t.pos);
    return t.text;
  }

  std::vector<Term> args() {
    std::vector<Term> out;
    if (tok_.kind != Tok::lparen) return out;
    take(Tok::lparen, "'('");
    out.push_back(term());
    while (tok_.kind == Tok::comma) {
      take(Tok::comma, "','");
      out.push_back(term());
    }
    take(Tok::rparen, "')'");
    return out;
  }

  Literal atom(bool positive) {
    if (tok_.kind == Tok::lower && tok_.text == "false") throw ParseError("'false' cannot be used as a predicate", tok_.pos);
    std::string pred = symbol();
    return Literal(positive, std::move(pred), args());
  }

  Term term() {
    if (tok_.kind == Tok::upper) return Term::variable(take(Tok::upper, "term").text);
    std::string name = symbol();
    std::vector<Term> a = args();
    if (a.empty()) return Term::constant(std::move(name));
    return Term::compound(std::move(name), std::move(a));
  }

  Lexer lex_;
  Token tok_;
};

// Structural comparison with every variable treated as equal.
int masked_compare(const Term& a, const Term& b) {
  if (a.is_variable() || b.is_variable()) return int(!a.is_variable()) - int(!b.is_variable());
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (const int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (const int c = masked_compare(a.args()[i], b.args()[i]); c != 0) return c;
  }
  return 0;
}

bool masked_less(const Literal& a, const Literal& b) {
  if (a.positive() != b.positive()) return a.positive();
  if (a.predicate() != b.predicate()) return a.predicate() < b.predicate();
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (const int c = masked_compare(a.args()[i], b.args()[i]); c != 0) return c < 0;
  }
  return false;
}

void print_term(std::string& out, const Term& t, std::map<std::string, std::string>& names) {
  if (t.is_variable()) {
    auto [it, inserted] = names.try_emplace(t.name(), "X" + std::to_string(names.size()));
    out += it->second;
    return;
  }
  out += t.name();
  if (t.is_compound()) {
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) out += ',';
      print_term(out, t.args()[i], names);
    }
    out += ')';
  }
}

void print_atom(std::string& out, const Literal& l, std::map<std::string, std::string>& names) {
  out += l.predicate();
  if (l.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < l.arity(); ++i) {
    if (i) out += ',';
    print_term(out, l.args()[i], names);
  }
  out += ')';
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Clause parse_clause(std::string_view text) {
  Program p = parse_program(text);
  if (p.clauses.size() != 1) {
    throw ParseError("expected exactly one clause, found " + std::to_string(p.clauses.size()), SourcePos{});
  }
  return p.clauses.front();
}

namespace {

// One rendering pass; `names` receives the X<i> naming it used.
std::string render(const Clause& c, std::map<std::string, std::string>& names) {
  std::vector<Literal> lits(c.begin(), c.end());
  std::stable_sort(lits.begin(), lits.end(), masked_less);
  std::string out;
  bool first = true;
  for (const Literal& l : lits) {
    if (!l.positive()) continue;
    if (!first) out += " ; ";
    first = false;
    print_atom(out, l, names);
  }
  bool body = false;
  for (const Literal& l : lits) {
    if (l.positive()) continue;
    out += body ? ", " : (first ? ":- " : " :- ");
    body = true;
    print_atom(out, l, names);
  }
  out += '.';
  return out;
}

}  // namespace

// Literals that differ only in variable names are tied by the masked order
// and fall back to the clause's own order, which depends on the names. So
// the clause is renamed to the printed names and printed again until the
// text repeats; on a cycle the smallest text of the cycle is used.
std::string print_clause(const Clause& c) {
  if (c.empty()) return "false.";
  std::vector<std::string> texts;
  Clause cur = c;
  while (true) {
    std::map<std::string, std::string> names;
    std::string text = render(cur, names);
    auto seen = std::find(texts.begin(), texts.end(), text);
    if (seen != texts.end()) return *std::min_element(seen, texts.end());
    texts.push_back(std::move(text));
    Substitution rename;
    for (const auto& [from, to] : names) rename.bind(from, Term::variable(to));
    cur = apply(cur, rename);
  }
}

}  // namespace clat
