/* sexpr.h -- SMT-LIB 2 concrete syntax: lexer and s-expression reader. */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vmtkit/diag.h"

namespace vmtkit {

// Parse tree carrier. Atom text is stored in logical form: symbols without
// |..| quoting, keywords without the leading ':', string literals unescaped,
// numerals/decimals/hex/binary as written (including #x/#b prefixes).
struct SExpr {
  enum class Kind {
    Symbol,
    Keyword,
    Numeral,
    Decimal,
    Hexadecimal,
    Binary,
    String,
    List,
  };

  Kind kind = Kind::List;
  std::string text;
  std::vector<SExpr> items;
  Pos pos;

  bool is_atom() const { return kind != Kind::List; }
  bool is_list() const { return kind == Kind::List; }
  bool is_symbol(std::string_view s) const
  {
    return kind == Kind::Symbol && text == s;
  }
  size_t size() const { return items.size(); }
  const SExpr& operator[](size_t i) const { return items[i]; }

  bool operator==(const SExpr& o) const;

  // Canonical concrete syntax (symbols re-quoted when required).
  std::string str() const;
};

// Reads a whole script: a sequence of top-level s-expressions.
// Line comments (';' to end of line) are skipped.
// Throws Error with UnbalancedParens / MalformedToken.
std::vector<SExpr> read_sexprs(std::string_view text);

// True when `s` can be printed as a simple (unquoted) SMT-LIB symbol.
bool is_simple_symbol(std::string_view s);

// Prints a symbol, adding |..| quoting when needed.
std::string print_symbol(std::string_view s);

}  // namespace vmtkit
