// Matrix-induced homomorphisms between submodules, and presented quotients.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doublekit/submodule.hpp"

namespace doublekit {

// A homomorphism domain -> codomain given by a (codomain rank) x (domain
// rank) matrix acting on column vectors.  Construction checks that every
// domain generator lands inside the codomain, so the object really is a map
// of the stated submodules and not merely of ambient free modules.
class MatrixHom {
public:
  MatrixHom() = default;
  MatrixHom(Submodule domain, Submodule codomain,
            std::vector<std::vector<Polynomial>> matrix);

  static MatrixHom identity(const Submodule& m);
  static MatrixHom zero(const Submodule& domain, const Submodule& codomain);

  const Submodule& domain() const { return domain_; }
  const Submodule& codomain() const { return codomain_; }
  const std::vector<std::vector<Polynomial>>& matrix() const { return matrix_; }

  ModuleElement apply(const ModuleElement& h) const;

  MatrixHom operator+(const MatrixHom& other) const;
  MatrixHom operator-() const;

  std::string matrix_to_string() const;  // "[[a, b], [c, d]]"

private:
  Submodule domain_;
  Submodule codomain_;
  std::vector<std::vector<Polynomial>> matrix_;
};

// Composition gamma . phi; requires image(phi) inside domain(gamma),
// which is checked on generators.
MatrixHom hom_compose(const MatrixHom& gamma, const MatrixHom& phi);

// Equality as maps on the shared domain (not matrix equality).
bool hom_eq_on_domain(const MatrixHom& phi, const MatrixHom& psi);

// {h in domain : matrix . h = 0}, complete via syzygies of the generator
// images.
Submodule kernel(const MatrixHom& phi);

// Submodule generated by the images of the domain generators.
Submodule image(const MatrixHom& phi);

bool is_injective(const MatrixHom& phi);
bool is_surjective(const MatrixHom& phi);
bool is_zero_map(const MatrixHom& phi);

// M/W presented by numerator and denominator, with W inside M checked.
class PresentedQuotient {
public:
  PresentedQuotient() = default;
  PresentedQuotient(Submodule numerator, Submodule denominator);

  const Submodule& numerator() const { return numerator_; }
  const Submodule& denominator() const { return denominator_; }

  bool is_zero() const;  // numerator inside denominator
  bool coset_eq(const ModuleElement& h, const ModuleElement& g) const;

private:
  Submodule numerator_;
  Submodule denominator_;
};

}  // namespace doublekit
