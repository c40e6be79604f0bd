// Elements of a free module R^p, printed and parsed as component tuples.
#pragma once

#include <string>
#include <vector>

#include "doublekit/morphism.hpp"
#include "doublekit/polynomial.hpp"

namespace doublekit {

class ModuleElement {
public:
  ModuleElement() = default;
  ModuleElement(PolyRing ring, std::vector<Polynomial> components);

  static ModuleElement zero(const PolyRing& ring, std::size_t rank);
  static ModuleElement unit(const PolyRing& ring, std::size_t rank,
                            std::size_t index);

  const PolyRing& ring() const { return ring_; }
  std::size_t rank() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::size_t i) const;

  bool is_zero() const;

  ModuleElement operator-() const;
  ModuleElement operator+(const ModuleElement& other) const;
  ModuleElement operator-(const ModuleElement& other) const;
  ModuleElement scaled(const Polynomial& a) const;
  // this - (coeff * mono) * g, the elementary reduction step.
  ModuleElement axpy_term(const Rational& coeff, const Monomial& mono,
                          const ModuleElement& g) const;

  bool operator==(const ModuleElement& other) const;
  bool operator!=(const ModuleElement& other) const {
    return !(*this == other);
  }

  // Componentwise application of a ring morphism.
  ModuleElement mapped(const RingMorphism& f) const;

  // Concatenation (this, other) in R^(p+q).
  ModuleElement concat(const ModuleElement& other) const;

  std::string to_string() const;  // "(p1, p2, ...)"
  static ModuleElement parse(const PolyRing& ring, std::string_view text);

private:
  PolyRing ring_;
  std::vector<Polynomial> components_;
};

// A position in R^p: component index plus monomial.  The module order is
// position-over-term with the lower component index dominating, extended by
// grevlex within a component.
struct ModulePosition {
  std::size_t comp = 0;
  Monomial mono;
  Rational coeff;
};

// Returns +1 when (comp_a, mono_a) > (comp_b, mono_b), -1 or 0 otherwise.
int module_order_cmp(std::size_t comp_a, const Monomial& mono_a,
                     std::size_t comp_b, const Monomial& mono_b);

// Leading position of a nonzero element under the module order.
ModulePosition lead_position(const ModuleElement& v);

}  // namespace doublekit
