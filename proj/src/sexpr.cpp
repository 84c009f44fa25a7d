#include "vmtkit/sexpr.h"

#include <cctype>

namespace vmtkit {

const char* err_code_name(ErrCode c)
{
  switch (c) {
    case ErrCode::UnbalancedParens: return "UnbalancedParens";
    case ErrCode::DisallowedCommand: return "DisallowedCommand";
    case ErrCode::MalformedToken: return "MalformedToken";
    case ErrCode::MalformedCommand: return "MalformedCommand";
    case ErrCode::SortMismatch: return "SortMismatch";
    case ErrCode::UnknownSymbol: return "UnknownSymbol";
    case ErrCode::UnknownSort: return "UnknownSort";
    case ErrCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrCode::RecursiveDefinition: return "RecursiveDefinition";
    case ErrCode::NextTargetUndeclared: return "NextTargetUndeclared";
    case ErrCode::NextNotInjective: return "NextNotInjective";
    case ErrCode::NextSortMismatch: return "NextSortMismatch";
    case ErrCode::NextOnNonVariable: return "NextOnNonVariable";
    case ErrCode::MalformedAnnotation: return "MalformedAnnotation";
    case ErrCode::DuplicatePropertyIndex: return "DuplicatePropertyIndex";
    case ErrCode::NonBooleanAnnotation: return "NonBooleanAnnotation";
    case ErrCode::MixedStateVersions: return "MixedStateVersions";
    case ErrCode::InitUsesNextVar: return "InitUsesNextVar";
    case ErrCode::InitUsesInput: return "InitUsesInput";
    case ErrCode::TransUsesForeignSymbol: return "TransUsesForeignSymbol";
    case ErrCode::PropertyUsesNextVar: return "PropertyUsesNextVar";
    case ErrCode::PropertyUsesInput: return "PropertyUsesInput";
    case ErrCode::NoProperties: return "NoProperties";
    case ErrCode::UnusedDefine: return "UnusedDefine";
    case ErrCode::UnsupportedForOracle: return "UnsupportedForOracle";
    case ErrCode::DomainOverflow: return "DomainOverflow";
    case ErrCode::QuantifiedSystem: return "QuantifiedSystem";
    case ErrCode::SolverNotFound: return "SolverNotFound";
    case ErrCode::SolverError: return "SolverError";
    case ErrCode::UnknownResult: return "UnknownResult";
    case ErrCode::ParseModelError: return "ParseModelError";
    case ErrCode::EqualityUnsupported: return "EqualityUnsupported";
    case ErrCode::LivePropertyUnsupported: return "LivePropertyUnsupported";
    case ErrCode::UnsupportedSort: return "UnsupportedSort";
    case ErrCode::UnsupportedSymbol: return "UnsupportedSymbol";
    case ErrCode::MalformedBtor: return "MalformedBtor";
    case ErrCode::UnsupportedNode: return "UnsupportedNode";
    case ErrCode::LtlSyntaxError: return "LtlSyntaxError";
    case ErrCode::AtomNotBoolean: return "AtomNotBoolean";
    case ErrCode::AtomUsesInput: return "AtomUsesInput";
    case ErrCode::IndexInUse: return "IndexInUse";
    case ErrCode::PropertyNotFound: return "PropertyNotFound";
    case ErrCode::IoError: return "IoError";
    case ErrCode::UsageError: return "UsageError";
  }
  return "Error";
}

namespace {

bool is_simple_char(char c)
{
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  switch (c) {
    case '~': case '!': case '@': case '$': case '%': case '^': case '&':
    case '*': case '_': case '-': case '+': case '=': case '<': case '>':
    case '.': case '?': case '/':
      return true;
    default:
      return false;
  }
}

struct Lexer {
  std::string_view text;
  size_t i = 0;
  int line = 1;
  int col = 1;

  Pos pos() const { return {line, col}; }

  bool eof() const { return i >= text.size(); }
  char peek() const { return text[i]; }

  char advance()
  {
    char c = text[i++];
    if (c == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    return c;
  }

  void skip_trivia()
  {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr atom(SExpr::Kind kind, std::string text_, Pos p)
  {
    SExpr e;
    e.kind = kind;
    e.text = std::move(text_);
    e.pos = p;
    return e;
  }

  // Reads one token that is not '(' or ')'.
  SExpr read_atom()
  {
    Pos p = pos();
    char c = peek();

    if (c == '"') {
      advance();
      std::string out;
      while (true) {
        if (eof()) throw Error(ErrCode::MalformedToken, "unterminated string literal", p);
        char d = advance();
        if (d == '"') {
          if (!eof() && peek() == '"') {  // "" escape
            advance();
            out += '"';
            continue;
          }
          break;
        }
        out += d;
      }
      return atom(SExpr::Kind::String, out, p);
    }

    if (c == '|') {
      advance();
      std::string out;
      while (true) {
        if (eof()) throw Error(ErrCode::MalformedToken, "unterminated quoted symbol", p);
        char d = advance();
        if (d == '|') break;
        if (d == '\\') throw Error(ErrCode::MalformedToken, "backslash in quoted symbol", p);
        out += d;
      }
      return atom(SExpr::Kind::Symbol, out, p);
    }

    if (c == ':') {
      advance();
      std::string out;
      while (!eof() && is_simple_char(peek())) out += advance();
      if (out.empty()) throw Error(ErrCode::MalformedToken, "bare ':'", p);
      return atom(SExpr::Kind::Keyword, out, p);
    }

    if (c == '#') {
      advance();
      if (eof()) throw Error(ErrCode::MalformedToken, "bare '#'", p);
      char k = advance();
      std::string out;
      if (k == 'x') {
        while (!eof() && std::isxdigit(static_cast<unsigned char>(peek()))) out += advance();
        if (out.empty()) throw Error(ErrCode::MalformedToken, "empty hexadecimal literal", p);
        return atom(SExpr::Kind::Hexadecimal, "#x" + out, p);
      }
      if (k == 'b') {
        while (!eof() && (peek() == '0' || peek() == '1')) out += advance();
        if (out.empty()) throw Error(ErrCode::MalformedToken, "empty binary literal", p);
        return atom(SExpr::Kind::Binary, "#b" + out, p);
      }
      throw Error(ErrCode::MalformedToken, std::string("unknown literal prefix '#") + k + "'", p);
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string out;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) out += advance();
      if (!eof() && peek() == '.') {
        out += advance();
        std::string frac;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) frac += advance();
        if (frac.empty())
          throw Error(ErrCode::MalformedToken, "decimal with no fractional digits", p);
        // normalize trailing zeros, keeping at least one fractional digit
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        out += frac;
        if (!eof() && is_simple_char(peek()))
          throw Error(ErrCode::MalformedToken, "garbage after decimal", p);
        return atom(SExpr::Kind::Decimal, out, p);
      }
      if (!eof() && is_simple_char(peek()))
        throw Error(ErrCode::MalformedToken, "symbol may not start with a digit", p);
      if (out.size() > 1 && out[0] == '0')
        throw Error(ErrCode::MalformedToken, "numeral with leading zero", p);
      return atom(SExpr::Kind::Numeral, out, p);
    }

    if (is_simple_char(c)) {
      std::string out;
      while (!eof() && is_simple_char(peek())) out += advance();
      return atom(SExpr::Kind::Symbol, out, p);
    }

    throw Error(ErrCode::MalformedToken, std::string("unexpected character '") + c + "'", p);
  }
};

void escape_string(const std::string& s, std::string& out)
{
  out += '"';
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
}

void print_rec(const SExpr& e, std::string& out)
{
  switch (e.kind) {
    case SExpr::Kind::List: {
      out += '(';
      for (size_t i = 0; i < e.items.size(); i++) {
        if (i) out += ' ';
        print_rec(e.items[i], out);
      }
      out += ')';
      return;
    }
    case SExpr::Kind::Symbol:
      out += print_symbol(e.text);
      return;
    case SExpr::Kind::Keyword:
      out += ':';
      out += e.text;
      return;
    case SExpr::Kind::String:
      escape_string(e.text, out);
      return;
    default:
      out += e.text;
      return;
  }
}

}  // namespace

bool is_simple_symbol(std::string_view s)
{
  if (s.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!is_simple_char(c)) return false;
  return true;
}

std::string print_symbol(std::string_view s)
{
  if (is_simple_symbol(s)) return std::string(s);
  std::string out = "|";
  out += s;
  out += '|';
  return out;
}

bool SExpr::operator==(const SExpr& o) const
{
  if (kind != o.kind || text != o.text) return false;
  if (items.size() != o.items.size()) return false;
  for (size_t i = 0; i < items.size(); i++)
    if (!(items[i] == o.items[i])) return false;
  return true;
}

std::string SExpr::str() const
{
  std::string out;
  print_rec(*this, out);
  return out;
}

std::vector<SExpr> read_sexprs(std::string_view text)
{
  Lexer lx{text};
  std::vector<SExpr> top;
  std::vector<SExpr> stack;  // open lists
  std::vector<Pos> open_pos;

  while (true) {
    lx.skip_trivia();
    if (lx.eof()) break;
    char c = lx.peek();
    if (c == '(') {
      open_pos.push_back(lx.pos());
      lx.advance();
      SExpr list;
      list.kind = SExpr::Kind::List;
      list.pos = open_pos.back();
      stack.push_back(std::move(list));
    } else if (c == ')') {
      Pos p = lx.pos();
      lx.advance();
      if (stack.empty())
        throw Error(ErrCode::UnbalancedParens, "unmatched ')'", p);
      SExpr done = std::move(stack.back());
      stack.pop_back();
      open_pos.pop_back();
      if (stack.empty())
        top.push_back(std::move(done));
      else
        stack.back().items.push_back(std::move(done));
    } else {
      SExpr a = lx.read_atom();
      if (stack.empty())
        top.push_back(std::move(a));
      else
        stack.back().items.push_back(std::move(a));
    }
  }
  if (!stack.empty())
    throw Error(ErrCode::UnbalancedParens, "unclosed '('", open_pos.back());
  return top;
}

}  // namespace vmtkit
