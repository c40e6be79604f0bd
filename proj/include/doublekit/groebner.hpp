// Buchberger engine for submodules of free modules R^p under the
// position-over-term order (lower component index dominant, grevlex within).
#pragma once

#include <vector>

#include "doublekit/module_element.hpp"

namespace doublekit {

// Full normal form of v modulo basis: every term of the result lies outside
// the leading-term module of the basis.  The basis need not be complete; a
// complete basis makes the result a canonical representative.
ModuleElement normal_form(const ModuleElement& v,
                          const std::vector<ModuleElement>& basis);

// Fast membership check: top-reduces v and reports whether it vanished.
// Equivalent to normal_form(v, basis).is_zero() for a complete basis, but
// stops at the first irreducible lead instead of normalizing the tail.
bool reduces_to_zero(const ModuleElement& v,
                     const std::vector<ModuleElement>& basis);

// Buchberger-complete basis of the span of gens.  Every S-vector of the
// result reduces to zero.  No pair-pruning shortcuts: the classical
// coprimality criterion is unsound for module orders, and correctness of
// the algebra on top depends on completeness.
std::vector<ModuleElement> buchberger(std::vector<ModuleElement> gens);

// The unique reduced basis: leads are monic and pairwise indivisible, tails
// are fully reduced, elements sorted by decreasing leading position.
std::vector<ModuleElement> reduced_basis(const std::vector<ModuleElement>& gens);

// Rescales each element so its coefficients are coprime integers with a
// positive leading coefficient; presentation-friendly, same span.
std::vector<ModuleElement> primitive_scaled(std::vector<ModuleElement> basis);

}  // namespace doublekit
