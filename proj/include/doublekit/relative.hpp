// Doubles relative to a map germ: the tensor pullback, generator-image
// homomorphisms with syzygy well-definedness, and their doubles.
#pragma once

#include <vector>

#include "doublekit/double_functor.hpp"

namespace doublekit {

// A germ between the spaces underlying two rings, carried as its pullback
// substitution R_X -> R_Y, plus the two doubling contexts and the derived
// tensor pullback S_X -> S_Y (first copy thru first copy, second thru
// second).
class RelativeMap {
public:
  RelativeMap() = default;
  RelativeMap(DoubleContext ctx_x, DoubleContext ctx_y, RingMorphism pullback);

  const DoubleContext& context_x() const { return ctx_x_; }
  const DoubleContext& context_y() const { return ctx_y_; }
  const RingMorphism& pullback() const { return pullback_; }
  const RingMorphism& tensor_pullback() const { return tensor_; }

private:
  DoubleContext ctx_x_;
  DoubleContext ctx_y_;
  RingMorphism pullback_;
  RingMorphism tensor_;
};

// phi_tensor applied to a polynomial over the doubled source ring.
Polynomial phi_tensor(const RelativeMap& rel, const Polynomial& alpha);

// Composite germ: second applied after first (pullbacks compose the same
// way: R_X -> R_Y -> R_Z).
RelativeMap compose_relative(const RelativeMap& first,
                             const RelativeMap& second);

// Slot-fixing identity: substituting the second copy by fresh parameters
// and pulling back must agree with pulling back wholesale and then fixing
// the second copy.  Returns true when both routes give the same polynomial.
bool two_route_slot_identity(const RelativeMap& rel, const Polynomial& alpha);

// A homomorphism M -> N over the germ, M over R_X and N over R_Y, given by
// one image per domain generator.  Linear over R_X through the pullback.
class GeneratorImageHom {
public:
  GeneratorImageHom() = default;
  GeneratorImageHom(RelativeMap rel, Submodule domain, Submodule codomain,
                    std::vector<ModuleElement> images);

  const RelativeMap& relative() const { return rel_; }
  const Submodule& domain() const { return domain_; }
  const Submodule& codomain() const { return codomain_; }
  const std::vector<ModuleElement>& images() const { return images_; }

  // Evaluation: lift h over the domain generators, push the coefficients
  // through the pullback.  Well-definedness is established at construction.
  ModuleElement apply(const ModuleElement& h) const;

private:
  RelativeMap rel_;
  Submodule domain_;
  Submodule codomain_;
  std::vector<ModuleElement> images_;
};

// Composite over composite germs: images are second(first(g)).
GeneratorImageHom compose_generator_image(const GeneratorImageHom& second,
                                          const GeneratorImageHom& first);

// The double of a generator-image homomorphism: an assignment on the finite
// generating family of M_D, evaluated anywhere in M_D by lifting and
// pushing coefficients through the tensor pullback.
class RelativeDoubledHom {
public:
  RelativeDoubledHom() = default;
  explicit RelativeDoubledHom(GeneratorImageHom source);

  const GeneratorImageHom& source() const { return source_; }
  const DoubledModule& domain_double() const { return domain_d_; }
  const DoubledModule& codomain_double() const { return codomain_d_; }
  // One image per generator of domain_double().value(), in declaration
  // order (doubled generators first, then auxiliaries).
  const std::vector<ModuleElement>& assignments() const { return assigned_; }

  ModuleElement apply(const ModuleElement& u) const;

private:
  GeneratorImageHom source_;
  DoubledModule domain_d_;
  DoubledModule codomain_d_;
  std::vector<ModuleElement> assigned_;
};

RelativeDoubledHom relative_double_hom(const GeneratorImageHom& phi);

}  // namespace doublekit
