// Ring morphisms Q[x1..xn] -> Q[t1..tm] given by substitution.
#pragma once

#include <vector>

#include "doublekit/polynomial.hpp"

namespace doublekit {

// Determined by one target polynomial per source variable; application is
// simultaneous substitution, which is automatically a ring homomorphism.
class RingMorphism {
public:
  RingMorphism() = default;
  RingMorphism(PolyRing source, PolyRing target,
               std::vector<Polynomial> images);

  static RingMorphism identity(const PolyRing& ring);

  const PolyRing& source() const { return source_; }
  const PolyRing& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial operator()(const Polynomial& p) const;

  // Composition: (g.after(f))(p) = g(f(p)); requires f.target == g.source.
  RingMorphism after(const RingMorphism& f) const;

  bool operator==(const RingMorphism& other) const;

private:
  PolyRing source_;
  PolyRing target_;
  std::vector<Polynomial> images_;
};

}  // namespace doublekit
