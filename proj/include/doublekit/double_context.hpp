// The doubled ring Q[x.., y..] with its two substitution embeddings.
#pragma once

#include <vector>

#include "doublekit/morphism.hpp"

namespace doublekit {

// Houses the base ring R, the doubled ring S on two disjoint variable
// copies, and the substitutions pi1 (into the first copy) and pi2 (into the
// second copy).  Default naming: if every base variable starts with 'x',
// the second copy swaps that prefix for 'y' (x -> y, x1 -> y1); otherwise
// the copy is prefixed with 'y' (t -> yt).  Explicit names override.
class DoubleContext {
public:
  DoubleContext() = default;
  explicit DoubleContext(PolyRing base);
  // Explicit copy names; both lists must have base arity and the 2n names
  // must be pairwise distinct.
  DoubleContext(PolyRing base, std::vector<std::string> first_copy,
                std::vector<std::string> second_copy);

  const PolyRing& base() const { return base_; }
  const PolyRing& doubled() const { return doubled_; }
  const RingMorphism& pi1() const { return pi1_; }
  const RingMorphism& pi2() const { return pi2_; }

  std::size_t first_index(std::size_t i) const { return i; }
  std::size_t second_index(std::size_t i) const { return base_.arity() + i; }

private:
  void init(std::vector<std::string> first_copy,
            std::vector<std::string> second_copy);

  PolyRing base_;
  PolyRing doubled_;
  RingMorphism pi1_;
  RingMorphism pi2_;
};

// The default second-copy name for a base variable (see above).
std::string doubled_var_name(const std::string& name, bool all_start_with_x);

}  // namespace doublekit
