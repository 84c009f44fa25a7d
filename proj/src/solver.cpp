/* solver.cpp -- query rendering and the external-process backend. */

#include "vmtkit/solver.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "vmtkit/diag.h"
#include "vmtkit/sexpr.h"

namespace vmtkit {

std::string SmtQuery::script() const
{
  std::ostringstream out;
  if (!logic.empty()) out << "(set-logic " << logic << ")\n";
  if (!value_queries.empty()) out << "(set-option :produce-models true)\n";
  for (const std::string& d : raw_decls) out << d << "\n";
  for (const auto& [name, sort] : consts)
    out << "(declare-fun " << print_symbol(name) << " () " << sort.str() << ")\n";
  for (const Term& t : assertions) out << "(assert " << t.str() << ")\n";
  out << "(check-sat)\n";
  if (!value_queries.empty()) {
    out << "(get-value (";
    for (size_t i = 0; i < value_queries.size(); ++i) {
      if (i) out << " ";
      out << print_symbol(value_queries[i]);
    }
    out << "))\n";
  }
  out << "(exit)\n";
  return out.str();
}

namespace {

// get-value responses bind symbols to value terms: booleans, numerals,
// (- n), #x/#b literals, or (_ bvN w)
Term value_term(const SExpr& e)
{
  auto bail = [&e]() -> Term {
    throw Error(ErrCode::ParseModelError,
                "cannot read model value " + e.str(), e.pos);
  };
  switch (e.kind) {
    case SExpr::Kind::Symbol:
      if (e.text == "true") return Term::true_();
      if (e.text == "false") return Term::false_();
      return bail();
    case SExpr::Kind::Numeral: {
      errno = 0;
      char* end = nullptr;
      long long v = strtoll(e.text.c_str(), &end, 10);
      if (errno != 0 || end == e.text.c_str() || *end) return bail();
      return Term::int_const(v);
    }
    case SExpr::Kind::Hexadecimal: {
      std::string digits = e.text.substr(2);
      if (digits.size() > 16) return bail();
      return Term::bv_const(strtoull(digits.c_str(), nullptr, 16),
                            4 * (unsigned)digits.size());
    }
    case SExpr::Kind::Binary: {
      std::string digits = e.text.substr(2);
      if (digits.size() > 64) return bail();
      return Term::bv_const(strtoull(digits.c_str(), nullptr, 2),
                            (unsigned)digits.size());
    }
    case SExpr::Kind::Decimal:
      return Term::constant(Sort::real(), e.text);
    case SExpr::Kind::List: {
      if (e.size() == 2 && e[0].is_symbol("-")) {
        Term inner = value_term(e[1]);
        if (inner.sort().is_int()) return Term::int_const(-inner.int_value());
        if (inner.sort().is_real())
          return Term::constant(Sort::real(), "-" + inner.str());
        return bail();
      }
      if (e.size() == 3 && e[0].is_symbol("_") &&
          e[1].kind == SExpr::Kind::Symbol && e[1].text.size() > 2 &&
          e[1].text.compare(0, 2, "bv") == 0 &&
          e[2].kind == SExpr::Kind::Numeral) {
        unsigned long long v = strtoull(e[1].text.c_str() + 2, nullptr, 10);
        unsigned w = (unsigned)strtoul(e[2].text.c_str(), nullptr, 10);
        if (w == 0 || w > 64) return bail();
        return Term::bv_const(v, w);
      }
      return bail();
    }
    default: return bail();
  }
}

std::string trim(const std::string& s)
{
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string excerpt(const std::string& s, size_t limit = 400)
{
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + "...";
}

}  // namespace

ProcessSolver::ProcessSolver(std::string cmd) : cmd_(std::move(cmd)) {}

SolveResult ProcessSolver::solve(const SmtQuery& q)
{
  // one-shot session: script into a temp file, command reads it as stdin
  char path[] = "/tmp/vmtkit-query-XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) throw Error(ErrCode::IoError, "cannot create temporary query file");
  std::string script = q.script();
  FILE* f = fdopen(fd, "w");
  fwrite(script.data(), 1, script.size(), f);
  fclose(f);

  std::string full = cmd_ + " < " + path + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    remove(path);
    throw Error(ErrCode::SolverNotFound, cmd_);
  }
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  remove(path);

  int exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  if (exit_code == 127 || exit_code == 126)
    throw Error(ErrCode::SolverNotFound, cmd_ + ": " + excerpt(trim(out), 200));

  // first sat/unsat/unknown line decides; anything before it is chatter
  std::istringstream lines(out);
  std::string line, rest;
  SolveStatus status = SolveStatus::Unknown;
  bool decided = false;
  while (std::getline(lines, line)) {
    if (decided) {
      rest += line;
      rest += "\n";
      continue;
    }
    std::string t = trim(line);
    if (t == "sat") {
      status = SolveStatus::Sat;
      decided = true;
    } else if (t == "unsat") {
      status = SolveStatus::Unsat;
      decided = true;
    } else if (t == "unknown") {
      status = SolveStatus::Unknown;
      decided = true;
    }
  }
  if (!decided)
    throw Error(ErrCode::SolverError,
                "no sat/unsat/unknown in solver output (exit " +
                    std::to_string(exit_code) + "): " + excerpt(trim(out)));

  SolveResult r;
  r.status = status;
  r.transcript = out;
  if (status != SolveStatus::Sat || q.value_queries.empty()) return r;

  std::vector<SExpr> es;
  try {
    es = read_sexprs(rest);
  } catch (const Error& e) {
    throw Error(ErrCode::ParseModelError, e.detail());
  }
  for (const SExpr& top : es) {
    if (!top.is_list()) continue;
    for (const SExpr& pair : top.items) {
      if (!pair.is_list() || pair.size() != 2 ||
          pair[0].kind != SExpr::Kind::Symbol)
        throw Error(ErrCode::ParseModelError,
                    "value binding is not a (symbol value) pair: " + pair.str(),
                    pair.pos);
      r.model[pair[0].text] = value_term(pair[1]);
    }
  }
  return r;
}

std::unique_ptr<Solver> make_solver(const std::string& cmd)
{
  if (trim(cmd).empty()) return std::make_unique<InternalSolver>();
  return std::make_unique<ProcessSolver>(cmd);
}

}  // namespace vmtkit
