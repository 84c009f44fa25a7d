/* commands.cpp -- script-level parsing: command whitelist and shapes. */

#include "vmtkit/commands.h"

#include <set>

namespace vmtkit {

namespace {

[[noreturn]] void malformed(const SExpr& e, const std::string& what)
{
  throw Error(ErrCode::MalformedCommand, what, e.pos);
}

const SExpr& want_symbol(const SExpr& e, size_t i, const char* what)
{
  if (i >= e.size() || e[i].kind != SExpr::Kind::Symbol)
    malformed(e, std::string("expected ") + what);
  return e[i];
}

void want_size(const SExpr& e, size_t n, const char* shape)
{
  if (e.size() != n)
    malformed(e, std::string("expected ") + shape);
}

Command parse_set_logic(const SExpr& e)
{
  want_size(e, 2, "(set-logic <symbol>)");
  Command c;
  c.kind = Command::Kind::SetLogic;
  c.pos = e.pos;
  c.name = want_symbol(e, 1, "a logic name").text;
  return c;
}

Command parse_set_option(const SExpr& e)
{
  if (e.size() != 2 && e.size() != 3)
    malformed(e, "expected (set-option :keyword [<value>])");
  if (e[1].kind != SExpr::Kind::Keyword)
    malformed(e, "set-option expects a :keyword");
  Command c;
  c.kind = Command::Kind::SetOption;
  c.pos = e.pos;
  c.name = e[1].text;
  if (e.size() == 3) {
    if (e[2].kind == SExpr::Kind::Keyword)
      malformed(e, "set-option value cannot itself be a keyword");
    c.option_value = e[2];
    c.has_option_value = true;
  }
  return c;
}

Command parse_declare_sort(const SExpr& e)
{
  want_size(e, 3, "(declare-sort <symbol> <numeral>)");
  Command c;
  c.kind = Command::Kind::DeclareSort;
  c.pos = e.pos;
  c.name = want_symbol(e, 1, "a sort name").text;
  if (e[2].kind != SExpr::Kind::Numeral || e[2].text.size() > 6)
    malformed(e, "declare-sort arity must be a (small) numeral");
  c.sort_arity = static_cast<unsigned>(std::stoul(e[2].text));
  return c;
}

Command parse_define_sort(const SExpr& e)
{
  want_size(e, 4, "(define-sort <symbol> (<symbol>*) <sort>)");
  Command c;
  c.kind = Command::Kind::DefineSort;
  c.pos = e.pos;
  c.name = want_symbol(e, 1, "a sort name").text;
  if (!e[2].is_list()) malformed(e, "define-sort parameters must be a list");
  std::set<std::string> seen;
  for (const auto& p : e[2].items) {
    if (p.kind != SExpr::Kind::Symbol)
      malformed(e, "define-sort parameters must be symbols");
    if (!seen.insert(p.text).second)
      malformed(e, "duplicate sort parameter " + p.text);
    c.sort_params.push_back(p.text);
  }
  c.sort_body = e[3];
  return c;
}

Command parse_declare_fun(const SExpr& e)
{
  want_size(e, 4, "(declare-fun <symbol> (<sort>*) <sort>)");
  Command c;
  c.kind = Command::Kind::DeclareFun;
  c.pos = e.pos;
  c.name = want_symbol(e, 1, "a function name").text;
  if (!e[2].is_list()) malformed(e, "declare-fun argument sorts must be a list");
  for (const auto& s : e[2].items) c.arg_sorts_raw.push_back(s);
  c.result_sort_raw = e[3];
  return c;
}

Command parse_declare_const(const SExpr& e)
{
  want_size(e, 3, "(declare-const <symbol> <sort>)");
  Command c;
  c.kind = Command::Kind::DeclareFun;  // sugar for the 0-ary form
  c.pos = e.pos;
  c.name = want_symbol(e, 1, "a constant name").text;
  c.result_sort_raw = e[2];
  return c;
}

Command parse_define_fun(const SExpr& e)
{
  want_size(e, 5, "(define-fun <symbol> ((<symbol> <sort>)*) <sort> <term>)");
  Command c;
  c.kind = Command::Kind::DefineFun;
  c.pos = e.pos;
  c.name = want_symbol(e, 1, "a function name").text;
  if (!e[2].is_list()) malformed(e, "define-fun parameters must be a list");
  std::set<std::string> seen;
  for (const auto& p : e[2].items) {
    if (!p.is_list() || p.size() != 2 || p[0].kind != SExpr::Kind::Symbol)
      malformed(e, "define-fun parameter must be (<symbol> <sort>)");
    if (!seen.insert(p[0].text).second)
      malformed(e, "duplicate parameter " + p[0].text);
    c.params_raw.emplace_back(p[0].text, p[1]);
  }
  c.result_sort_raw = e[3];
  c.body_raw = e[4];
  return c;
}

}  // namespace

Command make_declare_fun(const std::string& name, const std::vector<Sort>& args,
                         const Sort& result)
{
  Command c;
  c.kind = Command::Kind::DeclareFun;
  c.name = name;
  for (const auto& a : args) {
    c.arg_sorts_raw.push_back(read_sexprs(a.str())[0]);
    c.arg_sorts.push_back(a);
  }
  c.result_sort_raw = read_sexprs(result.str())[0];
  c.result_sort = result;
  return c;
}

Command make_declare_sort(const std::string& name, unsigned arity)
{
  Command c;
  c.kind = Command::Kind::DeclareSort;
  c.name = name;
  c.sort_arity = arity;
  return c;
}

Command make_set_logic(const std::string& name)
{
  Command c;
  c.kind = Command::Kind::SetLogic;
  c.name = name;
  return c;
}

std::vector<Command> parse_script(const std::vector<SExpr>& sexprs)
{
  std::vector<Command> cmds;
  for (size_t i = 0; i < sexprs.size(); ++i) {
    const SExpr& e = sexprs[i];
    if (!e.is_list() || e.size() == 0 || e[0].kind != SExpr::Kind::Symbol)
      throw Error(ErrCode::MalformedCommand, "expected a (<command> ...) form",
                  e.pos);
    const std::string& head = e[0].text;
    if (head == "set-logic")
      cmds.push_back(parse_set_logic(e));
    else if (head == "set-option")
      cmds.push_back(parse_set_option(e));
    else if (head == "declare-sort")
      cmds.push_back(parse_declare_sort(e));
    else if (head == "define-sort")
      cmds.push_back(parse_define_sort(e));
    else if (head == "declare-fun")
      cmds.push_back(parse_declare_fun(e));
    else if (head == "declare-const")
      cmds.push_back(parse_declare_const(e));
    else if (head == "define-fun")
      cmds.push_back(parse_define_fun(e));
    else if (head == "assert") {
      // only the trailing (assert true) marker is allowed
      if (i + 1 != sexprs.size() || e.size() != 2 || !e[1].is_symbol("true"))
        throw Error(ErrCode::DisallowedCommand,
                    "assert is only allowed as a final (assert true)", e.pos);
      Command c;
      c.kind = Command::Kind::TrailingAssertTrue;
      c.pos = e.pos;
      cmds.push_back(c);
    } else {
      throw Error(ErrCode::DisallowedCommand, head, e.pos);
    }
  }
  return cmds;
}

std::vector<Command> parse_script(std::string_view text)
{
  return parse_script(read_sexprs(text));
}

std::string Command::str() const
{
  switch (kind) {
    case Kind::SetLogic:
      return "(set-logic " + print_symbol(name) + ")";
    case Kind::SetOption: {
      std::string s = "(set-option :" + name;
      if (has_option_value) s += " " + option_value.str();
      return s + ")";
    }
    case Kind::DeclareSort:
      return "(declare-sort " + print_symbol(name) + " " +
             std::to_string(sort_arity) + ")";
    case Kind::DefineSort: {
      std::string s = "(define-sort " + print_symbol(name) + " (";
      for (size_t i = 0; i < sort_params.size(); ++i) {
        if (i) s += ' ';
        s += print_symbol(sort_params[i]);
      }
      return s + ") " + sort_body.str() + ")";
    }
    case Kind::DeclareFun: {
      std::string s = "(declare-fun " + print_symbol(name) + " (";
      for (size_t i = 0; i < arg_sorts_raw.size(); ++i) {
        if (i) s += ' ';
        s += arg_sorts_raw[i].str();
      }
      return s + ") " + result_sort_raw.str() + ")";
    }
    case Kind::DefineFun: {
      std::string s = "(define-fun " + print_symbol(name) + " (";
      for (size_t i = 0; i < params_raw.size(); ++i) {
        if (i) s += ' ';
        s += "(" + print_symbol(params_raw[i].first) + " " +
             params_raw[i].second.str() + ")";
      }
      return s + ") " + result_sort_raw.str() + " " + body_raw.str() + ")";
    }
    case Kind::TrailingAssertTrue:
      return "(assert true)";
  }
  return "";
}

std::string print_script(const std::vector<Command>& cmds)
{
  std::string out;
  for (const auto& c : cmds) {
    out += c.str();
    out += '\n';
  }
  return out;
}

}  // namespace vmtkit
