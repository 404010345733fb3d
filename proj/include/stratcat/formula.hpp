#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stratcat::logic {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Span {
  int line = 0;
  int col = 0;
};

/// Terms of untyped set theory. Abst is the set abstract {x | φ}; Enum
/// is a finite enumeration {t1,...,tn} (empty = ∅, a one-element Enum is
/// the singleton {t}); App is first-class application f`x.
struct Term {
  enum class Kind { Var, Abst, Enum, Pair, Union, Pow, App };
  Kind kind;
  Span span;
  std::string name;            // Var name, Abst bound variable
  FormulaPtr body;             // Abst
  std::vector<TermPtr> elems;  // Enum
  TermPtr a, b;                // Pair(a,b), App(a=fun,b=arg); Sng/Union/Pow use a
};

struct Formula {
  enum class Kind { Eq, Mem, Not, And, Or, Implies, Iff, Forall, Exists };
  Kind kind;
  Span span;
  TermPtr lhs, rhs;   // Eq, Mem
  FormulaPtr f, g;    // Not: f; binary connectives: f,g; quantifiers: body f
  std::string var;    // quantifier bound variable
};

// Construction helpers. Spans default to 0:0 for programmatic ASTs.
TermPtr t_var(std::string name, Span s = {});
TermPtr t_abst(std::string bound, FormulaPtr body, Span s = {});
TermPtr t_enum(std::vector<TermPtr> elems, Span s = {});
TermPtr t_pair(TermPtr a, TermPtr b, Span s = {});
TermPtr t_sng(TermPtr a, Span s = {}); // one-element Enum
TermPtr t_union(TermPtr a, Span s = {});
TermPtr t_pow(TermPtr a, Span s = {});
TermPtr t_app(TermPtr fun, TermPtr arg, Span s = {});

FormulaPtr f_eq(TermPtr l, TermPtr r, Span s = {});
FormulaPtr f_mem(TermPtr l, TermPtr r, Span s = {});
FormulaPtr f_not(FormulaPtr f, Span s = {});
FormulaPtr f_and(FormulaPtr f, FormulaPtr g, Span s = {});
FormulaPtr f_or(FormulaPtr f, FormulaPtr g, Span s = {});
FormulaPtr f_implies(FormulaPtr f, FormulaPtr g, Span s = {});
FormulaPtr f_iff(FormulaPtr f, FormulaPtr g, Span s = {});
FormulaPtr f_forall(std::string var, FormulaPtr body, Span s = {});
FormulaPtr f_exists(std::string var, FormulaPtr body, Span s = {});

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, std::string message, std::vector<std::string> expected);
  int line() const { return line_; }
  int col() const { return col_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  int line_, col_;
  std::vector<std::string> expected_;
};

/// Parses the ASCII/Unicode surface syntax; throws ParseError with
/// line/column and the expected-token set.
FormulaPtr parse(std::string_view text);

/// Parses a bare term (used by tests and diagnostics).
TermPtr parse_term(std::string_view text);

/// Prints with minimal parentheses; parse(render(f)) is α-equivalent to f.
std::string render(const FormulaPtr& f);
std::string render(const TermPtr& t);

/// Renames bound variables to a canonical scheme (x0, x1, ... in
/// traversal order, skipping names that collide with free variables).
/// α-equivalent formulas canonicalize identically.
FormulaPtr alpha_canonical(const FormulaPtr& f);

/// Structural equality (spans ignored).
bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool equal(const TermPtr& a, const TermPtr& b);

/// Variables with at least one free occurrence.
std::set<std::string> free_vars(const FormulaPtr& f);
std::set<std::string> free_vars(const TermPtr& t);

} // namespace stratcat::logic
