/* commands.h -- the VMT-LIB command subset of SMT-LIB 2 scripts. */

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vmtkit/sexpr.h"
#include "vmtkit/sort.h"
#include "vmtkit/term.h"

namespace vmtkit {

// One top-level script command. Only the commands below are representable;
// parse_script rejects everything else. declare-const is normalized to a
// 0-ary DeclareFun on input and printed back as declare-fun.
//
// The *_raw fields hold unresolved concrete syntax straight from the reader;
// elaborate() fills the resolved fields (arg_sorts, result_sort, params,
// body) for DeclareFun/DefineFun commands.
struct Command {
  enum class Kind {
    SetLogic,
    SetOption,
    DeclareSort,
    DefineSort,
    DeclareFun,
    DefineFun,
    TrailingAssertTrue,
  };

  Kind kind = Kind::TrailingAssertTrue;
  Pos pos;
  std::string name;  // logic, option keyword, sort or function symbol

  // set-option
  SExpr option_value;
  bool has_option_value = false;

  // declare-sort
  unsigned sort_arity = 0;

  // define-sort
  std::vector<std::string> sort_params;
  SExpr sort_body;

  // declare-fun / define-fun, unresolved
  std::vector<SExpr> arg_sorts_raw;
  SExpr result_sort_raw;
  std::vector<std::pair<std::string, SExpr>> params_raw;
  SExpr body_raw;

  // filled by elaborate()
  std::vector<Sort> arg_sorts;
  Sort result_sort;
  std::vector<std::pair<std::string, Sort>> params;
  Term body;  // null() until elaborated

  bool is(Kind k) const { return kind == k; }

  // Concrete syntax, printed from the raw fields (valid pre-elaboration).
  std::string str() const;
};

// Builders for programmatically assembled scripts (converters, printers);
// they fill the raw fields so Command::str() works.
Command make_declare_fun(const std::string& name, const std::vector<Sort>& args,
                         const Sort& result);
Command make_declare_sort(const std::string& name, unsigned arity);
Command make_set_logic(const std::string& name);

// Parses a whole script into commands, enforcing the command whitelist:
// set-logic, set-option, declare-sort, define-sort, declare-fun, define-fun,
// declare-const (sugar), plus one optional final `(assert true)`.
// Throws Error: UnbalancedParens, MalformedToken, MalformedCommand,
// DisallowedCommand.
std::vector<Command> parse_script(std::string_view text);

// Same whitelist applied to pre-read s-expressions.
std::vector<Command> parse_script(const std::vector<SExpr>& sexprs);

// One command per line.
std::string print_script(const std::vector<Command>& cmds);

}  // namespace vmtkit
