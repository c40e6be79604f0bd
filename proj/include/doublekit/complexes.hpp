// Bounded chain complexes, chain maps, homotopies, and their doubles.
#pragma once

#include <optional>
#include <vector>

#include "doublekit/double_functor.hpp"

namespace doublekit {

// Modules M[top] .. M[bottom] with differentials d[i]: M[i] -> M[i-1].
// Degrees run top_degree() down to top_degree() - length + 1; everything
// outside is the zero module.  Construction checks shapes only: the
// composition law is a predicate (is_complex), not an invariant, because
// the library must be able to represent non-complexes to test it.
class ChainComplex {
public:
  ChainComplex() = default;
  // modules[k] sits in degree top - k; diffs[k] maps modules[k] ->
  // modules[k+1] (one fewer differential than modules).
  ChainComplex(int top_degree, std::vector<Submodule> modules,
               std::vector<MatrixHom> diffs);

  const PolyRing& ring() const;
  int top_degree() const { return top_; }
  int bottom_degree() const { return top_ - static_cast<int>(modules_.size()) + 1; }
  std::size_t length() const { return modules_.size(); }

  bool in_range(int degree) const;
  const Submodule& module_at(int degree) const;  // zero outside the range
  // Differential leaving degree i (into i-1); nullopt when either end is
  // outside the range (treated as the zero map by predicates).
  std::optional<MatrixHom> diff_at(int degree) const;

  const std::vector<Submodule>& modules() const { return modules_; }
  const std::vector<MatrixHom>& diffs() const { return diffs_; }

private:
  int top_ = 0;
  std::vector<Submodule> modules_;
  std::vector<MatrixHom> diffs_;
  mutable std::optional<Submodule> zero_cache_;
};

bool is_complex(const ChainComplex& c);
bool is_exact_at(const ChainComplex& c, int degree);
bool is_exact_everywhere(const ChainComplex& c);

ChainComplex double_complex(const DoubleContext& ctx, const ChainComplex& c);

// Degreewise maps alpha[i]: C[i] -> C'[i]; construction checks shapes, the
// commuting-squares law is a predicate.
class ChainMap {
public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target,
           std::vector<MatrixHom> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  // Component in degree i; nullopt outside the shared range.
  std::optional<MatrixHom> at(int degree) const;
  const std::vector<MatrixHom>& components() const { return comps_; }

  ChainMap operator-(const ChainMap& other) const;

private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<MatrixHom> comps_;
};

bool is_chain_map(const ChainMap& alpha);
bool chain_map_eq(const ChainMap& alpha, const ChainMap& beta);

ChainMap identity_chain_map(const ChainComplex& c);
ChainMap zero_chain_map(const ChainComplex& source,
                        const ChainComplex& target);
ChainMap compose_chain_maps(const ChainMap& beta, const ChainMap& alpha);
ChainMap double_chain_map(const DoubleContext& ctx, const ChainMap& alpha);

// Degree-one collection mu[i]: C[i] -> C'[i+1]; shape only, no law.
class DegreeOneMap {
public:
  DegreeOneMap() = default;
  DegreeOneMap(ChainComplex source, ChainComplex target,
               std::vector<MatrixHom> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  std::optional<MatrixHom> at(int degree) const;
  const std::vector<MatrixHom>& components() const { return comps_; }

private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<MatrixHom> comps_;
};

DegreeOneMap double_degree_one_map(const DoubleContext& ctx,
                                   const DegreeOneMap& mu);

// The induced chain map: tilde(mu)[i] = d'[i+1] . mu[i] + mu[i-1] . d[i].
ChainMap tilde(const DegreeOneMap& mu);

// True when tilde(mu) = alpha - beta as maps in every degree.
bool is_homotopy(const ChainMap& alpha, const ChainMap& beta,
                 const DegreeOneMap& mu);

// Reports for the transfer experiments.
struct ContractibilityReport {
  bool witness_valid = false;  // mu witnesses id ~ 0 downstairs
  bool doubled_valid = false;  // mu_D witnesses id ~ 0 upstairs
};
ContractibilityReport contractibility_transfer(const DoubleContext& ctx,
                                               const ChainComplex& c,
                                               const DegreeOneMap& mu);

struct ExactnessReport {
  bool base_complex = false;
  bool doubled_complex = false;
  bool base_exact = false;
  bool doubled_exact = false;
  bool implication_holds = false;  // doubled exact => base exact
};
ExactnessReport exactness_propagation_check(const DoubleContext& ctx,
                                            const ChainComplex& c);

}  // namespace doublekit
