/* sort.h -- many-sorted signature: Bool, Int, Real, BitVec, Array, uninterpreted. */

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vmtkit/diag.h"

namespace vmtkit {

class Sort {
 public:
  enum class Kind { Bool, Int, Real, BitVec, Array, Uninterpreted };

  Sort() : Sort(boolean()) {}

  static Sort boolean();
  static Sort integer();
  static Sort real();
  static Sort bitvec(unsigned width);  // width >= 1
  static Sort array(Sort index, Sort element);
  static Sort uninterpreted(std::string name, std::vector<Sort> args = {});

  Kind kind() const { return n_->kind; }
  bool is_bool() const { return kind() == Kind::Bool; }
  bool is_int() const { return kind() == Kind::Int; }
  bool is_real() const { return kind() == Kind::Real; }
  bool is_bitvec() const { return kind() == Kind::BitVec; }
  bool is_array() const { return kind() == Kind::Array; }
  bool is_arith() const { return is_int() || is_real(); }

  unsigned width() const { return n_->width; }          // BitVec only
  const Sort& index() const { return n_->args[0]; }     // Array only
  const Sort& element() const { return n_->args[1]; }   // Array only
  const std::string& name() const { return n_->name; }  // Uninterpreted only
  const std::vector<Sort>& args() const { return n_->args; }

  bool operator==(const Sort& o) const;
  bool operator!=(const Sort& o) const { return !(*this == o); }

  std::string str() const;  // SMT-LIB concrete syntax

 private:
  struct Node {
    Kind kind;
    unsigned width = 0;
    std::string name;
    std::vector<Sort> args;
  };
  explicit Sort(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

}  // namespace vmtkit
