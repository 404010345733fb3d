#include "stratcat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace stratcat::logic {

TermPtr t_var(std::string name, Span s) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->span = s;
  t->name = std::move(name);
  return t;
}

TermPtr t_abst(std::string bound, FormulaPtr body, Span s) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Abst;
  t->span = s;
  t->name = std::move(bound);
  t->body = std::move(body);
  return t;
}

TermPtr t_enum(std::vector<TermPtr> elems, Span s) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Enum;
  t->span = s;
  t->elems = std::move(elems);
  return t;
}

TermPtr t_pair(TermPtr a, TermPtr b, Span s) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Pair;
  t->span = s;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

TermPtr t_sng(TermPtr a, Span s) { return t_enum({std::move(a)}, s); }

static TermPtr unary_term(Term::Kind k, TermPtr a, Span s) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->span = s;
  t->a = std::move(a);
  return t;
}

TermPtr t_union(TermPtr a, Span s) { return unary_term(Term::Kind::Union, std::move(a), s); }
TermPtr t_pow(TermPtr a, Span s) { return unary_term(Term::Kind::Pow, std::move(a), s); }

TermPtr t_app(TermPtr fun, TermPtr arg, Span s) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->span = s;
  t->a = std::move(fun);
  t->b = std::move(arg);
  return t;
}

static FormulaPtr atom2(Formula::Kind k, TermPtr l, TermPtr r, Span s) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->span = s;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr f_eq(TermPtr l, TermPtr r, Span s) { return atom2(Formula::Kind::Eq, std::move(l), std::move(r), s); }
FormulaPtr f_mem(TermPtr l, TermPtr r, Span s) { return atom2(Formula::Kind::Mem, std::move(l), std::move(r), s); }

FormulaPtr f_not(FormulaPtr f, Span s) {
  auto out = std::make_shared<Formula>();
  out->kind = Formula::Kind::Not;
  out->span = s;
  out->f = std::move(f);
  return out;
}

static FormulaPtr binop(Formula::Kind k, FormulaPtr a, FormulaPtr b, Span s) {
  auto out = std::make_shared<Formula>();
  out->kind = k;
  out->span = s;
  out->f = std::move(a);
  out->g = std::move(b);
  return out;
}

FormulaPtr f_and(FormulaPtr f, FormulaPtr g, Span s) { return binop(Formula::Kind::And, std::move(f), std::move(g), s); }
FormulaPtr f_or(FormulaPtr f, FormulaPtr g, Span s) { return binop(Formula::Kind::Or, std::move(f), std::move(g), s); }
FormulaPtr f_implies(FormulaPtr f, FormulaPtr g, Span s) { return binop(Formula::Kind::Implies, std::move(f), std::move(g), s); }
FormulaPtr f_iff(FormulaPtr f, FormulaPtr g, Span s) { return binop(Formula::Kind::Iff, std::move(f), std::move(g), s); }

static FormulaPtr quant(Formula::Kind k, std::string var, FormulaPtr body, Span s) {
  auto out = std::make_shared<Formula>();
  out->kind = k;
  out->span = s;
  out->var = std::move(var);
  out->f = std::move(body);
  return out;
}

FormulaPtr f_forall(std::string var, FormulaPtr body, Span s) { return quant(Formula::Kind::Forall, std::move(var), std::move(body), s); }
FormulaPtr f_exists(std::string var, FormulaPtr body, Span s) { return quant(Formula::Kind::Exists, std::move(var), std::move(body), s); }

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Ident, In, Not, And, Or, Forall, Exists,
  Eq, LParen, RParen, LBrace, RBrace, Bar, Comma,
  LAngle, RAngle, Backtick, Dot, Arrow, IffArrow, End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::In: return "'in'";
    case Tok::Not: return "'not'";
    case Tok::And: return "'and'";
    case Tok::Or: return "'or'";
    case Tok::Forall: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::Eq: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Bar: return "'|'";
    case Tok::Comma: return "','";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::Backtick: return "'`'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::IffArrow: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok type;
  std::string text;
  int line, col;
};

struct Lexer {
  std::string_view src;
  std::size_t i = 0;
  int line = 1, col = 1;

  bool starts_with(std::string_view s) const { return src.substr(i).starts_with(s); }

  void advance(std::size_t bytes, int cols = -1) {
    // cols counts code points; callers pass 1 for a multibyte alias
    col += cols < 0 ? static_cast<int>(bytes) : cols;
    i += bytes;
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i < src.size()) {
      char c = src[i];
      if (c == '\n') {
        ++i;
        ++line;
        col = 1;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      int tl = line, tc = col;
      auto push = [&](Tok t, std::string text) { out.push_back({t, std::move(text), tl, tc}); };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
          ++j;
        std::string word(src.substr(i, j - i));
        advance(j - i);
        if (word == "in") push(Tok::In, word);
        else if (word == "not") push(Tok::Not, word);
        else if (word == "and") push(Tok::And, word);
        else if (word == "or") push(Tok::Or, word);
        else if (word == "forall") push(Tok::Forall, word);
        else if (word == "exists") push(Tok::Exists, word);
        else push(Tok::Ident, word);
        continue;
      }
      // Unicode aliases (UTF-8 byte sequences)
      if (starts_with("∈")) { push(Tok::In, "in"); advance(3, 1); continue; }       // ∈
      if (starts_with("¬")) { push(Tok::Not, "not"); advance(2, 1); continue; }     // ¬
      if (starts_with("∧")) { push(Tok::And, "and"); advance(3, 1); continue; }     // ∧
      if (starts_with("∨")) { push(Tok::Or, "or"); advance(3, 1); continue; }       // ∨
      if (starts_with("→")) { push(Tok::Arrow, "->"); advance(3, 1); continue; }    // →
      if (starts_with("↔")) { push(Tok::IffArrow, "<->"); advance(3, 1); continue; } // ↔
      if (starts_with("∀")) { push(Tok::Forall, "forall"); advance(3, 1); continue; } // ∀
      if (starts_with("∃")) { push(Tok::Exists, "exists"); advance(3, 1); continue; } // ∃
      if (starts_with("<->")) { push(Tok::IffArrow, "<->"); advance(3); continue; }
      if (starts_with("->")) { push(Tok::Arrow, "->"); advance(2); continue; }
      switch (c) {
        case '=': push(Tok::Eq, "="); advance(1); continue;
        case '(': push(Tok::LParen, "("); advance(1); continue;
        case ')': push(Tok::RParen, ")"); advance(1); continue;
        case '{': push(Tok::LBrace, "{"); advance(1); continue;
        case '}': push(Tok::RBrace, "}"); advance(1); continue;
        case '|': push(Tok::Bar, "|"); advance(1); continue;
        case ',': push(Tok::Comma, ","); advance(1); continue;
        case '<': push(Tok::LAngle, "<"); advance(1); continue;
        case '>': push(Tok::RAngle, ">"); advance(1); continue;
        case '`': push(Tok::Backtick, "`"); advance(1); continue;
        case '.': push(Tok::Dot, "."); advance(1); continue;
        default:
          throw ParseError(tl, tc, std::string("unexpected character '") + c + "'", {});
      }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
  }
};

// ---------------------------------------------------------------------------
// Parser

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos + ahead, toks.size() - 1);
    return toks[k];
  }
  Token eat() { return toks[std::min(pos++, toks.size() - 1)]; }
  bool at(Tok t) const { return peek().type == t; }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    const Token& t = peek();
    std::vector<std::string> names;
    names.reserve(expected.size());
    for (Tok e : expected) names.emplace_back(tok_name(e));
    std::ostringstream msg;
    msg << "unexpected " << tok_name(t.type);
    if (!t.text.empty() && t.type == Tok::Ident) msg << " '" << t.text << "'";
    throw ParseError(t.line, t.col, msg.str(), std::move(names));
  }

  Token expect(Tok t) {
    if (!at(t)) fail({t});
    return eat();
  }

  static Span span(const Token& t) { return {t.line, t.col}; }

  FormulaPtr formula() { return iff(); }

  FormulaPtr iff() {
    FormulaPtr lhs = imp();
    while (at(Tok::IffArrow)) {
      Token op = eat();
      lhs = f_iff(lhs, imp(), span(op));
    }
    return lhs;
  }

  FormulaPtr imp() {
    FormulaPtr lhs = disj();
    if (at(Tok::Arrow)) {
      Token op = eat();
      return f_implies(lhs, imp(), span(op)); // right-associative
    }
    return lhs;
  }

  FormulaPtr disj() {
    FormulaPtr lhs = conj();
    while (at(Tok::Or)) {
      Token op = eat();
      lhs = f_or(lhs, conj(), span(op));
    }
    return lhs;
  }

  FormulaPtr conj() {
    FormulaPtr lhs = neg();
    while (at(Tok::And)) {
      Token op = eat();
      lhs = f_and(lhs, neg(), span(op));
    }
    return lhs;
  }

  FormulaPtr neg() {
    if (at(Tok::Not)) {
      Token op = eat();
      return f_not(neg(), span(op));
    }
    return atom();
  }

  FormulaPtr atom() {
    if (at(Tok::LParen)) {
      eat();
      FormulaPtr f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (at(Tok::Forall) || at(Tok::Exists)) {
      Token q = eat();
      Token v = expect(Tok::Ident);
      expect(Tok::Dot);
      FormulaPtr body = formula();
      return q.type == Tok::Forall ? f_forall(v.text, body, span(q))
                                   : f_exists(v.text, body, span(q));
    }
    TermPtr l = term();
    if (at(Tok::Eq)) {
      Token op = eat();
      return f_eq(l, term(), span(op));
    }
    if (at(Tok::In)) {
      Token op = eat();
      return f_mem(l, term(), span(op));
    }
    fail({Tok::Eq, Tok::In});
  }

  TermPtr term() {
    TermPtr t = primary();
    while (at(Tok::Backtick)) {
      Token op = eat();
      t = t_app(t, primary(), span(op)); // left-associative
    }
    return t;
  }

  TermPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Ident: {
        Token id = eat();
        // U(t) and P(t) are term formers; U and P otherwise parse as variables
        if ((id.text == "U" || id.text == "P") && at(Tok::LParen)) {
          eat();
          TermPtr inner = term();
          expect(Tok::RParen);
          return id.text == "U" ? t_union(inner, span(id)) : t_pow(inner, span(id));
        }
        return t_var(id.text, span(id));
      }
      case Tok::LBrace: {
        Token open = eat();
        if (at(Tok::RBrace)) {
          eat();
          return t_enum({}, span(open));
        }
        if (at(Tok::Ident) && peek(1).type == Tok::Bar) {
          Token v = eat();
          eat(); // bar
          FormulaPtr body = formula();
          expect(Tok::RBrace);
          return t_abst(v.text, body, span(open));
        }
        std::vector<TermPtr> elems;
        elems.push_back(term());
        while (at(Tok::Comma)) {
          eat();
          elems.push_back(term());
        }
        expect(Tok::RBrace);
        return t_enum(std::move(elems), span(open));
      }
      case Tok::LAngle: {
        Token open = eat();
        TermPtr a = term();
        expect(Tok::Comma);
        TermPtr b = term();
        expect(Tok::RAngle);
        return t_pair(a, b, span(open));
      }
      case Tok::LParen: {
        // term grouping, needed for right-nested application f`(g`x)
        eat();
        TermPtr inner = term();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail({Tok::Ident, Tok::LBrace, Tok::LAngle, Tok::LParen});
    }
  }
};

} // namespace

ParseError::ParseError(int line, int col, std::string message, std::vector<std::string> expected)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + message +
                         (expected.empty() ? std::string{} : [&] {
                           std::string s = " (expected ";
                           for (std::size_t i = 0; i < expected.size(); ++i) {
                             if (i) s += expected.size() == 2 ? " or " : ", ";
                             s += expected[i];
                           }
                           return s + ")";
                         }())),
      line_(line), col_(col), expected_(std::move(expected)) {}

FormulaPtr parse(std::string_view text) {
  Parser p{Lexer{text}.run()};
  FormulaPtr f = p.formula();
  if (!p.at(Tok::End)) p.fail({Tok::End});
  return f;
}

TermPtr parse_term(std::string_view text) {
  Parser p{Lexer{text}.run()};
  TermPtr t = p.term();
  if (!p.at(Tok::End)) p.fail({Tok::End});
  return t;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Precedence levels follow the grammar: 0 quantifier (greedy body),
// 1 iff, 2 implies, 3 or, 4 and, 5 not, 6 atom.
int formula_prec(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 0;
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    case Formula::Kind::Eq:
    case Formula::Kind::Mem: return 6;
  }
  return 6;
}

void render_formula(const Formula& f, int ctx, std::string& out);

void render_term_app(const Term& t, std::string& out);

void render_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      out += t.name;
      return;
    case Term::Kind::Abst:
      out += "{ " + t.name + " | ";
      render_formula(*t.body, 0, out);
      out += " }";
      return;
    case Term::Kind::Enum: {
      out += "{";
      for (std::size_t i = 0; i < t.elems.size(); ++i) {
        if (i) out += ",";
        render_term_app(*t.elems[i], out);
      }
      out += "}";
      return;
    }
    case Term::Kind::Pair:
      out += "<";
      render_term_app(*t.a, out);
      out += ",";
      render_term_app(*t.b, out);
      out += ">";
      return;
    case Term::Kind::Union:
      out += "U(";
      render_term_app(*t.a, out);
      out += ")";
      return;
    case Term::Kind::Pow:
      out += "P(";
      render_term_app(*t.a, out);
      out += ")";
      return;
    case Term::Kind::App:
      // handled by render_term_app; a bare App in primary position needs parens
      out += "(";
      render_term_app(t, out);
      out += ")";
      return;
  }
}

void render_term_app(const Term& t, std::string& out) {
  if (t.kind == Term::Kind::App) {
    render_term_app(*t.a, out); // fun side chains without parens
    out += "`";
    render_term(*t.b, out);     // arg must be primary
    return;
  }
  render_term(t, out);
}

void render_formula(const Formula& f, int ctx, std::string& out) {
  int prec = formula_prec(f);
  bool parens = prec < ctx;
  if (parens) out += "(";
  switch (f.kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Mem:
      render_term_app(*f.lhs, out);
      out += f.kind == Formula::Kind::Eq ? " = " : " in ";
      render_term_app(*f.rhs, out);
      break;
    case Formula::Kind::Not:
      out += "not ";
      // parenthesize everything but a chained not, e.g. "not (x in x)"
      render_formula(*f.f, f.f->kind == Formula::Kind::Not ? 5 : 7, out);
      break;
    case Formula::Kind::And:
      render_formula(*f.f, 4, out);
      out += " and ";
      render_formula(*f.g, 5, out);
      break;
    case Formula::Kind::Or:
      render_formula(*f.f, 3, out);
      out += " or ";
      render_formula(*f.g, 4, out);
      break;
    case Formula::Kind::Implies:
      render_formula(*f.f, 3, out);
      out += " -> ";
      render_formula(*f.g, 2, out);
      break;
    case Formula::Kind::Iff:
      render_formula(*f.f, 1, out);
      out += " <-> ";
      render_formula(*f.g, 2, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out += f.kind == Formula::Kind::Forall ? "forall " : "exists ";
      out += f.var + ". ";
      render_formula(*f.f, 0, out);
      break;
  }
  if (parens) out += ")";
}

} // namespace

std::string render(const FormulaPtr& f) {
  std::string out;
  render_formula(*f, 0, out);
  return out;
}

std::string render(const TermPtr& t) {
  std::string out;
  render_term_app(*t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Free variables, α-canonicalization, structural equality

namespace {

void free_vars_term(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out);

void free_vars_formula(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Mem:
      free_vars_term(*f.lhs, bound, out);
      free_vars_term(*f.rhs, bound, out);
      return;
    case Formula::Kind::Not:
      free_vars_formula(*f.f, bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      free_vars_formula(*f.f, bound, out);
      free_vars_formula(*f.g, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f.var);
      free_vars_formula(*f.f, bound, out);
      bound.pop_back();
      return;
  }
}

void free_vars_term(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (std::find(bound.rbegin(), bound.rend(), t.name) == bound.rend()) out.insert(t.name);
      return;
    case Term::Kind::Abst:
      bound.push_back(t.name);
      free_vars_formula(*t.body, bound, out);
      bound.pop_back();
      return;
    case Term::Kind::Enum:
      for (const auto& e : t.elems) free_vars_term(*e, bound, out);
      return;
    case Term::Kind::Pair:
    case Term::Kind::App:
      free_vars_term(*t.a, bound, out);
      free_vars_term(*t.b, bound, out);
      return;
    case Term::Kind::Union:
    case Term::Kind::Pow:
      free_vars_term(*t.a, bound, out);
      return;
  }
}

struct Canonicalizer {
  std::set<std::string> avoid; // free variables of the whole formula
  int next = 0;
  std::vector<std::pair<std::string, std::string>> scope; // original → canonical

  std::string fresh() {
    for (;;) {
      std::string cand = "x" + std::to_string(next++);
      if (!avoid.count(cand)) return cand;
    }
  }

  std::string lookup(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    return name;
  }

  TermPtr term(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Var:
        return t_var(lookup(t.name), t.span);
      case Term::Kind::Abst: {
        std::string canon = fresh();
        scope.emplace_back(t.name, canon);
        FormulaPtr body = formula(*t.body);
        scope.pop_back();
        return t_abst(canon, body, t.span);
      }
      case Term::Kind::Enum: {
        std::vector<TermPtr> elems;
        elems.reserve(t.elems.size());
        for (const auto& e : t.elems) elems.push_back(term(*e));
        return t_enum(std::move(elems), t.span);
      }
      case Term::Kind::Pair:
        return t_pair(term(*t.a), term(*t.b), t.span);
      case Term::Kind::Union:
        return t_union(term(*t.a), t.span);
      case Term::Kind::Pow:
        return t_pow(term(*t.a), t.span);
      case Term::Kind::App:
        return t_app(term(*t.a), term(*t.b), t.span);
    }
    throw std::logic_error("unreachable");
  }

  FormulaPtr formula(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Eq:
        return f_eq(term(*f.lhs), term(*f.rhs), f.span);
      case Formula::Kind::Mem:
        return f_mem(term(*f.lhs), term(*f.rhs), f.span);
      case Formula::Kind::Not:
        return f_not(formula(*f.f), f.span);
      case Formula::Kind::And:
        return f_and(formula(*f.f), formula(*f.g), f.span);
      case Formula::Kind::Or:
        return f_or(formula(*f.f), formula(*f.g), f.span);
      case Formula::Kind::Implies:
        return f_implies(formula(*f.f), formula(*f.g), f.span);
      case Formula::Kind::Iff:
        return f_iff(formula(*f.f), formula(*f.g), f.span);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        std::string canon = fresh();
        scope.emplace_back(f.var, canon);
        FormulaPtr body = formula(*f.f);
        scope.pop_back();
        return f.kind == Formula::Kind::Forall ? f_forall(canon, body, f.span)
                                               : f_exists(canon, body, f.span);
      }
    }
    throw std::logic_error("unreachable");
  }
};

} // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  free_vars_formula(*f, bound, out);
  return out;
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  free_vars_term(*t, bound, out);
  return out;
}

FormulaPtr alpha_canonical(const FormulaPtr& f) {
  Canonicalizer c;
  c.avoid = free_vars(f);
  return c.formula(*f);
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->name == b->name;
    case Term::Kind::Abst: return a->name == b->name && equal(a->body, b->body);
    case Term::Kind::Enum:
      if (a->elems.size() != b->elems.size()) return false;
      for (std::size_t i = 0; i < a->elems.size(); ++i)
        if (!equal(a->elems[i], b->elems[i])) return false;
      return true;
    case Term::Kind::Pair:
    case Term::Kind::App: return equal(a->a, b->a) && equal(a->b, b->b);
    case Term::Kind::Union:
    case Term::Kind::Pow: return equal(a->a, b->a);
  }
  return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Mem: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case Formula::Kind::Not: return equal(a->f, b->f);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: return equal(a->f, b->f) && equal(a->g, b->g);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return a->var == b->var && equal(a->f, b->f);
  }
  return false;
}

} // namespace stratcat::logic
