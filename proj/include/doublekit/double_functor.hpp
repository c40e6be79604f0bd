// The double construction on elements, modules, homs, quotients and sums.
#pragma once

#include <string>
#include <vector>

#include "doublekit/double_context.hpp"
#include "doublekit/matrix_hom.hpp"

namespace doublekit {

// h |-> h_D = (h thru pi1, h thru pi2), doubling the rank.
ModuleElement double_element(const DoubleContext& ctx, const ModuleElement& h);

// The double of a module with its finite generating family kept explicit:
// one doubled generator per source generator, plus the auxiliary elements
// (0, (y_j - x_j) * (g_i thru pi2)) that absorb multiplication by the two
// variable copies.  `value` spans exactly { h_D : h in source }.
class DoubledModule {
public:
  DoubledModule() = default;
  DoubledModule(DoubleContext ctx, Submodule source);

  const DoubleContext& context() const { return ctx_; }
  const Submodule& source() const { return source_; }
  const Submodule& value() const { return value_; }

  // The generators of value() in declaration order: first the doubled
  // source generators, then the auxiliaries indexed (generator, variable).
  std::size_t doubled_generator_count() const {
    return source_.generators().size();
  }
  const ModuleElement& generator(std::size_t k) const;
  // Auxiliary slot k = i * arity + j for generator i and variable j.
  std::size_t aux_count() const;

  // Human-facing form of the generating family: doubled generators print
  // canonically, auxiliaries keep the factored (second - first) * g shape.
  std::vector<std::string> structural_generator_strings() const;

private:
  DoubleContext ctx_;
  Submodule source_;
  Submodule value_;
};

DoubledModule double_module(const DoubleContext& ctx, const Submodule& m);

// The block matrix diag(A thru pi1, A thru pi2) together with the doubled
// domain and codomain; satisfies apply(h_D) = (phi(h))_D.
class DoubledHom {
public:
  DoubledHom() = default;
  DoubledHom(DoubleContext ctx, MatrixHom source);

  const DoubleContext& context() const { return ctx_; }
  const MatrixHom& source() const { return source_; }
  const MatrixHom& value() const { return value_; }

private:
  DoubleContext ctx_;
  MatrixHom source_;
  MatrixHom value_;
};

DoubledHom double_matrix_hom(const DoubleContext& ctx, const MatrixHom& phi);

// Structural invariant of doubled matrices: off-diagonal blocks are zero,
// the first block uses only first-copy variables, the second only
// second-copy variables, and the blocks are the two substitutions of one
// base matrix.
bool has_double_block_structure(const DoubleContext& ctx,
                                const MatrixHom& hom);

// Coset double (h + W)_D = (h_D, W_D); representative independence is
// guaranteed by membership transfer.
struct DoubledCoset {
  ModuleElement representative;
  Submodule denominator;
};
DoubledCoset double_quotient_element(const DoubleContext& ctx,
                                     const ModuleElement& h,
                                     const Submodule& w);

PresentedQuotient double_quotient_module(const DoubleContext& ctx,
                                         const PresentedQuotient& q);

// The canonical isomorphism (M + N)_D -> M_D + N_D and its inverse,
// realized as permutation matrices reordering (p, q, p, q) to (p, p, q, q).
struct DirectSumIso {
  MatrixHom eta;
  MatrixHom delta;
};
DirectSumIso direct_sum_iso(const DoubleContext& ctx, const Submodule& m,
                            const Submodule& n);

// r-fold version: (M1 + ... + Mr)_D -> (M1)_D + ... + (Mr)_D.
DirectSumIso direct_sum_iso_many(const DoubleContext& ctx,
                                 const std::vector<Submodule>& parts);

// One functor-law / transfer audit over a sample, entry per check.
struct FunctorCheckEntry {
  std::string name;
  bool pass;
  std::string detail;
};
std::vector<FunctorCheckEntry> functor_check(
    const DoubleContext& ctx, const std::vector<Submodule>& modules,
    const std::vector<MatrixHom>& homs);

}  // namespace doublekit
