#include "doublekit/module_element.hpp"

#include <cctype>

namespace doublekit {

ModuleElement::ModuleElement(PolyRing ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.ring() != ring_) throw Error("module element component ring mismatch");
}

ModuleElement ModuleElement::zero(const PolyRing& ring, std::size_t rank) {
  return ModuleElement(ring,
                       std::vector<Polynomial>(rank, Polynomial::zero(ring)));
}

ModuleElement ModuleElement::unit(const PolyRing& ring, std::size_t rank,
                                  std::size_t index) {
  ModuleElement e = zero(ring, rank);
  if (index >= rank) throw Error("unit vector index out of range");
  e.components_[index] = Polynomial::constant(ring, Rational(1));
  return e;
}

const Polynomial& ModuleElement::component(std::size_t i) const {
  if (i >= components_.size()) throw Error("component index out of range");
  return components_[i];
}

bool ModuleElement::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& c : r.components_) c = -c;
  return r;
}

ModuleElement ModuleElement::operator+(const ModuleElement& other) const {
  if (rank() != other.rank()) throw Error("module element rank mismatch");
  ModuleElement r = *this;
  for (std::size_t i = 0; i < r.components_.size(); ++i)
    r.components_[i] += other.components_[i];
  return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& other) const {
  return *this + (-other);
}

ModuleElement ModuleElement::scaled(const Polynomial& a) const {
  ModuleElement r = *this;
  for (auto& c : r.components_) c = c * a;
  return r;
}

ModuleElement ModuleElement::axpy_term(const Rational& coeff,
                                       const Monomial& mono,
                                       const ModuleElement& g) const {
  if (rank() != g.rank()) throw Error("module element rank mismatch");
  ModuleElement r = *this;
  for (std::size_t i = 0; i < r.components_.size(); ++i) {
    if (g.components_[i].is_zero()) continue;
    r.components_[i] -= g.components_[i].times_term(mono, coeff);
  }
  return r;
}

bool ModuleElement::operator==(const ModuleElement& other) const {
  return ring_ == other.ring_ && components_ == other.components_;
}

ModuleElement ModuleElement::mapped(const RingMorphism& f) const {
  std::vector<Polynomial> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(f(c));
  return ModuleElement(f.target(), std::move(comps));
}

ModuleElement ModuleElement::concat(const ModuleElement& other) const {
  if (ring_ != other.ring_) throw Error("module element ring mismatch");
  std::vector<Polynomial> comps = components_;
  comps.insert(comps.end(), other.components_.begin(),
               other.components_.end());
  return ModuleElement(ring_, std::move(comps));
}

std::string ModuleElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ", ";
    out += components_[i].to_string();
  }
  out += ")";
  return out;
}

ModuleElement ModuleElement::parse(const PolyRing& ring,
                                   std::string_view text) {
  // Shape: '(' poly (',' poly)* ')'; polynomial syntax is delegated.
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '(')
    throw Error("module element must start with '('");
  ++pos;
  std::vector<Polynomial> comps;
  std::size_t start = pos;
  int depth = 0;
  for (; pos <= text.size(); ++pos) {
    if (pos == text.size())
      throw Error("unterminated module element");
    char c = text[pos];
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if ((c == ',' && depth == 0) || (c == ')' && depth == 0)) {
      comps.push_back(Polynomial::parse(ring, text.substr(start, pos - start)));
      start = pos + 1;
      if (c == ')') {
        ++pos;
        break;
      }
    }
  }
  skip();
  if (pos != text.size())
    throw Error("trailing input after module element");
  return ModuleElement(ring, std::move(comps));
}

int module_order_cmp(std::size_t comp_a, const Monomial& mono_a,
                     std::size_t comp_b, const Monomial& mono_b) {
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
  return grevlex_cmp(mono_a, mono_b);
}

ModulePosition lead_position(const ModuleElement& v) {
  for (std::size_t i = 0; i < v.rank(); ++i) {
    const Polynomial& c = v.component(i);
    if (!c.is_zero()) return ModulePosition{i, c.lead_monomial(), c.lead_coeff()};
  }
  throw Error("zero module element has no leading position");
}

}  // namespace doublekit
