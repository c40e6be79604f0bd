#include "doublekit/ring.hpp"

#include <set>

#include "doublekit/rational.hpp"

namespace doublekit {

PolyRing::PolyRing(std::vector<std::string> variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error("ring variable names must be nonempty");
    if (!seen.insert(v).second)
      throw Error("duplicate ring variable '" + v + "'");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

const std::vector<std::string>& PolyRing::vars() const {
  static const std::vector<std::string> empty;
  return vars_ ? *vars_ : empty;
}

const std::string& PolyRing::var_name(std::size_t i) const {
  if (i >= arity()) throw Error("variable index out of range");
  return (*vars_)[i];
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  const auto& vs = vars();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == name) return i;
  return std::nullopt;
}

bool PolyRing::operator==(const PolyRing& other) const {
  if (vars_ == other.vars_) return true;
  return vars() == other.vars();
}

}  // namespace doublekit
