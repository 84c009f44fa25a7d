/* oracle.h -- reference interpreter on finite domains: explicit-state
 * reachability, invariant checking, lasso search. Ground truth for the
 * symbolic engines. */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vmtkit/model.h"

namespace vmtkit {

// A concrete value of sort Bool, Int, or (_ BitVec w).
struct Value {
  enum class Kind : uint8_t { Bool, Int, BitVec };

  Kind kind = Kind::Bool;
  bool b = false;
  long long i = 0;
  unsigned long long bv = 0;
  unsigned width = 0;

  static Value boolean(bool v);
  static Value integer(long long v);
  static Value bitvec(unsigned long long v, unsigned w);  // masks to w bits

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const;

  std::string str() const;
};

// Finite domain for every variable: Bool is {false,true}; Int variables get
// the interval [int_lo, int_hi] unless overridden per variable; BitVec(w)
// enumerates all 2^w values and requires w <= 8.
struct DomainBounds {
  long long int_lo = -8;
  long long int_hi = 8;
  std::map<std::string, std::pair<long long, long long>> per_var;

  std::pair<long long, long long> interval(const std::string& var) const
  {
    auto it = per_var.find(var);
    return it == per_var.end() ? std::make_pair(int_lo, int_hi) : it->second;
  }
};

// Positional assignments, aligned with VmtDocument::system.states and
// .inputs respectively.
using State = std::vector<Value>;
using InputVals = std::vector<Value>;

// states[0] satisfies init; eval(trans, states[i], inputs[i],
// states[i+1]) holds for every step.
struct FinitePath {
  std::vector<State> states;
  std::vector<InputVals> inputs;  // one shorter than states
};

// A stem whose last state loops back to states[loop_start] under
// closing_input; at least one state in the loop violates the property.
struct Lasso {
  FinitePath path;
  InputVals closing_input;
  size_t loop_start = 0;
};

struct InvariantResult {
  std::optional<FinitePath> cex;  // shortest violating path, if any
  bool exhausted = false;  // full reachable set explored within the depth
};

// Explicit-state engine over one document and one set of bounds.
// Construction checks that every state and input variable has an
// enumerable sort; quantified or uninterpreted-function terms are rejected
// when evaluated. All methods throw Error(UnsupportedForOracle) or
// Error(DomainOverflow).
class Oracle {
 public:
  Oracle(const VmtDocument& doc, DomainBounds bounds);

  const VmtDocument& doc() const { return *doc_; }
  const DomainBounds& bounds() const { return bounds_; }

  // Total evaluation; `inputs`/`next` may be null when `t` does not mention
  // that variable class. Assignments are bounds-checked (DomainOverflow).
  Value eval(const Term& t, const State& s, const InputVals* inputs = nullptr,
             const State* next = nullptr) const;
  bool holds(const Term& t, const State& s, const InputVals* inputs = nullptr,
             const State* next = nullptr) const;

  // All in-bounds states satisfying init.
  std::vector<State> initial_states() const;

  // Exactly the in-bounds (input, next-state) pairs satisfying trans.
  // Out-of-bounds candidate values are simply not enumerated, so the
  // explicit instance under-approximates the unbounded system.
  std::vector<std::pair<InputVals, State>> successors(const State& s) const;

  // Breadth-first search for a shortest path to a property violation;
  // max_depth bounds the number of steps taken from an initial state.
  InvariantResult check_invariant(const PropertySpec& p, int max_depth) const;

  // A reachable cycle containing a violating state, as a lasso, or nullopt;
  // finite dead-end paths never violate a live property.
  std::optional<Lasso> check_live(const PropertySpec& p) const;

  // Random walk of at most `steps` steps (shorter on deadlock).
  FinitePath simulate(int steps, uint64_t seed) const;

  // Re-validation used by tests and trace printing.
  bool valid_path(const FinitePath& path) const;
  bool valid_lasso(const Lasso& lasso, const Term& property) const;

  std::vector<Value> domain(const std::string& var, const Sort& sort) const;

  // number of distinct reachable states (full exploration)
  size_t reachable_count() const;

 private:
  const VmtDocument* doc_;
  DomainBounds bounds_;
  std::map<std::string, std::pair<char, size_t>> index_;  // 's'/'n'/'i'

  void check_state_bounds(const State& s) const;
  void check_input_bounds(const InputVals& in) const;
  std::vector<std::vector<Value>> state_domains() const;
  std::vector<std::vector<Value>> input_domains() const;

  struct ReachGraph {
    std::vector<State> order;  // BFS discovery order
    std::map<State, size_t> id;
    std::map<size_t, std::vector<std::pair<InputVals, size_t>>> edges;
    std::map<size_t, std::pair<size_t, InputVals>> parent;  // BFS tree
    std::vector<size_t> initial;
  };
  ReachGraph explore() const;
};

// Applies one interpreted operator to constant values; the shared kernel
// between the oracle and the internal solver's constant folder. And/Or/Ite
// here are strict (all arguments evaluated); the oracle's own traversal
// short-circuits them.
Value apply_op_values(Op op, const std::vector<Value>& args,
                      const std::vector<unsigned>& indices);

// Free-function spellings used by the check drivers.
InvariantResult check_invariant_explicit(const VmtDocument& doc,
                                         const PropertySpec& p,
                                         const DomainBounds& bounds,
                                         int max_depth);
std::optional<Lasso> check_live_explicit(const VmtDocument& doc,
                                         const PropertySpec& p,
                                         const DomainBounds& bounds);

}  // namespace vmtkit
