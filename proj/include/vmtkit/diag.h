/* diag.h -- error codes, source positions, diagnostics. */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmtkit {

struct Pos {
  int line = 0;  // 1-based; 0 means "no position"
  int col = 0;

  bool known() const { return line > 0; }
  std::string str() const
  {
    return known() ? std::to_string(line) + ":" + std::to_string(col) : "?:?";
  }
};

enum class ErrCode {
  // smtlib frontend
  UnbalancedParens,
  DisallowedCommand,
  MalformedToken,
  MalformedCommand,
  SortMismatch,
  UnknownSymbol,
  UnknownSort,
  DuplicateDeclaration,
  RecursiveDefinition,
  // vmt model
  NextTargetUndeclared,
  NextNotInjective,
  NextSortMismatch,
  NextOnNonVariable,
  MalformedAnnotation,
  DuplicatePropertyIndex,
  NonBooleanAnnotation,
  MixedStateVersions,
  // scope diagnostics (validate)
  InitUsesNextVar,
  InitUsesInput,
  TransUsesForeignSymbol,
  PropertyUsesNextVar,
  PropertyUsesInput,
  NoProperties,
  UnusedDefine,
  // oracle
  UnsupportedForOracle,
  DomainOverflow,
  // bmc / solver
  QuantifiedSystem,
  SolverNotFound,
  SolverError,
  UnknownResult,
  ParseModelError,
  EqualityUnsupported,
  // converters
  LivePropertyUnsupported,
  UnsupportedSort,
  UnsupportedSymbol,
  MalformedBtor,
  UnsupportedNode,
  // ltl
  LtlSyntaxError,
  AtomNotBoolean,
  AtomUsesInput,
  IndexInUse,
  // cli / misc
  PropertyNotFound,
  IoError,
  UsageError,
};

const char* err_code_name(ErrCode c);

// Thrown for unrecoverable input/usage errors. Well-formedness findings that
// should be collected instead of thrown go through Diagnostic (see validate()).
class Error : public std::runtime_error {
 public:
  Error(ErrCode code, std::string msg, Pos pos = {})
      : std::runtime_error(std::string(err_code_name(code)) + ": " + msg +
                           (pos.known() ? " at " + pos.str() : "")),
        code_(code),
        pos_(pos),
        detail_(std::move(msg))
  {
  }

  ErrCode code() const { return code_; }
  Pos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrCode code_;
  Pos pos_;
  std::string detail_;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  ErrCode code;
  Severity severity;
  std::string message;
  std::string symbol;  // offending symbol, when there is one

  std::string str() const
  {
    std::string s = severity == Severity::Error ? "error: " : "warning: ";
    s += err_code_name(code);
    s += ": ";
    s += message;
    return s;
  }
};

inline bool has_errors(const std::vector<Diagnostic>& ds)
{
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

}  // namespace vmtkit
