#include "vmtkit/sort.h"

#include "vmtkit/sexpr.h"

namespace vmtkit {

Sort Sort::boolean()
{
  static const auto n = std::make_shared<const Node>(Node{Kind::Bool});
  return Sort(n);
}

Sort Sort::integer()
{
  static const auto n = std::make_shared<const Node>(Node{Kind::Int});
  return Sort(n);
}

Sort Sort::real()
{
  static const auto n = std::make_shared<const Node>(Node{Kind::Real});
  return Sort(n);
}

Sort Sort::bitvec(unsigned width)
{
  if (width < 1) throw Error(ErrCode::UnknownSort, "BitVec width must be >= 1");
  return Sort(std::make_shared<const Node>(Node{Kind::BitVec, width}));
}

Sort Sort::array(Sort index, Sort element)
{
  return Sort(std::make_shared<const Node>(
      Node{Kind::Array, 0, "", {std::move(index), std::move(element)}}));
}

Sort Sort::uninterpreted(std::string name, std::vector<Sort> args)
{
  return Sort(std::make_shared<const Node>(
      Node{Kind::Uninterpreted, 0, std::move(name), std::move(args)}));
}

bool Sort::operator==(const Sort& o) const
{
  if (n_ == o.n_) return true;
  if (n_->kind != o.n_->kind) return false;
  switch (n_->kind) {
    case Kind::Bool:
    case Kind::Int:
    case Kind::Real:
      return true;
    case Kind::BitVec:
      return n_->width == o.n_->width;
    case Kind::Array:
      return n_->args[0] == o.n_->args[0] && n_->args[1] == o.n_->args[1];
    case Kind::Uninterpreted: {
      if (n_->name != o.n_->name || n_->args.size() != o.n_->args.size())
        return false;
      for (size_t i = 0; i < n_->args.size(); i++)
        if (n_->args[i] != o.n_->args[i]) return false;
      return true;
    }
  }
  return false;
}

std::string Sort::str() const
{
  switch (kind()) {
    case Kind::Bool: return "Bool";
    case Kind::Int: return "Int";
    case Kind::Real: return "Real";
    case Kind::BitVec:
      return "(_ BitVec " + std::to_string(width()) + ")";
    case Kind::Array:
      return "(Array " + index().str() + " " + element().str() + ")";
    case Kind::Uninterpreted: {
      if (args().empty()) return print_symbol(name());
      std::string s = "(" + print_symbol(name());
      for (const auto& a : args()) s += " " + a.str();
      s += ")";
      return s;
    }
  }
  return "?";
}

}  // namespace vmtkit
