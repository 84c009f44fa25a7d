/* solver.h -- satisfiability backends: an external process speaking the
 * standard text protocol, and a bundled fallback (simplification +
 * bit-blasting + DPLL) for Bool/BitVec formulas when no solver is installed. */

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vmtkit/term.h"

namespace vmtkit {

enum class SolveStatus { Sat, Unsat, Unknown };

// One complete, self-contained query; no incrementality.
struct SmtQuery {
  std::string logic;  // empty = omit set-logic

  // preformatted declaration commands (declare-sort, rigid declare-funs)
  std::vector<std::string> raw_decls;

  // 0-ary constants, in declaration order
  std::vector<std::pair<std::string, Sort>> consts;

  std::vector<Term> assertions;

  // symbols whose values to read back on sat
  std::vector<std::string> value_queries;

  std::string script() const;  // full solver-input text
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::map<std::string, Term> model;  // queried symbol -> constant term
  std::string transcript;             // raw backend output, for diagnostics
};

class Solver {
 public:
  virtual ~Solver() = default;

  // Throws Error: SolverNotFound, SolverError, ParseModelError.
  virtual SolveResult solve(const SmtQuery& q) = 0;

  virtual std::string describe() const = 0;
};

// Runs `cmd` through the shell with the script on standard input; first
// `sat`/`unsat`/`unknown` line decides, value bindings parsed from the rest.
class ProcessSolver : public Solver {
 public:
  explicit ProcessSolver(std::string cmd);
  SolveResult solve(const SmtQuery& q) override;
  std::string describe() const override { return "process: " + cmd_; }

 private:
  std::string cmd_;
};

// Decides constraints that reduce to Bool/BitVec(<=64) structure after
// equality propagation and constant folding; everything residual over Int,
// Real, arrays, quantifiers, uninterpreted functions, or bit-vector
// division yields Unknown. Complete within its fragment.
class InternalSolver : public Solver {
 public:
  SolveResult solve(const SmtQuery& q) override;
  std::string describe() const override { return "internal: propagate + bit-blast + DPLL"; }
};

// empty command line selects the bundled fallback
std::unique_ptr<Solver> make_solver(const std::string& cmd);

// The fallback's simplifier, exposed for reuse and direct testing:
// bottom-up constant folding (shared value kernel with the evaluation
// oracle), boolean identities, ite hoisting over otherwise-constant
// operands. Lets are inlined; annotations are dropped.
Term simplify_term(const Term& t);

}  // namespace vmtkit
