#include "doublekit/matrix_hom.hpp"

namespace doublekit {

MatrixHom::MatrixHom(Submodule domain, Submodule codomain,
                     std::vector<std::vector<Polynomial>> matrix)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      matrix_(std::move(matrix)) {
  if (domain_.ring() != codomain_.ring())
    throw Error("hom domain/codomain ring mismatch");
  if (matrix_.size() != codomain_.rank())
    throw Error("hom matrix must have one row per codomain component");
  for (const auto& row : matrix_) {
    if (row.size() != domain_.rank())
      throw Error("hom matrix must have one column per domain component");
    for (const auto& entry : row)
      if (entry.ring() != domain_.ring())
        throw Error("hom matrix entry ring mismatch");
  }
  // The matrix must map the domain into the codomain as submodules; a
  // membership check per generator is what makes that claim honest.
  for (const auto& g : domain_.generators())
    if (!codomain_.contains(apply(g)))
      throw Error("hom matrix does not map the domain into the codomain");
}

MatrixHom MatrixHom::identity(const Submodule& m) {
  std::vector<std::vector<Polynomial>> a(
      m.rank(), std::vector<Polynomial>(m.rank(), Polynomial::zero(m.ring())));
  for (std::size_t i = 0; i < m.rank(); ++i)
    a[i][i] = Polynomial::constant(m.ring(), Rational(1));
  return MatrixHom(m, m, std::move(a));
}

MatrixHom MatrixHom::zero(const Submodule& domain, const Submodule& codomain) {
  std::vector<std::vector<Polynomial>> a(
      codomain.rank(),
      std::vector<Polynomial>(domain.rank(), Polynomial::zero(domain.ring())));
  return MatrixHom(domain, codomain, std::move(a));
}

ModuleElement MatrixHom::apply(const ModuleElement& h) const {
  if (h.ring() != domain_.ring() || h.rank() != domain_.rank())
    throw Error("hom applied to element of the wrong ambient");
  std::vector<Polynomial> out;
  out.reserve(codomain_.rank());
  for (std::size_t i = 0; i < codomain_.rank(); ++i) {
    Polynomial acc = Polynomial::zero(domain_.ring());
    for (std::size_t j = 0; j < domain_.rank(); ++j) {
      if (matrix_[i][j].is_zero() || h.component(j).is_zero()) continue;
      acc += matrix_[i][j] * h.component(j);
    }
    out.push_back(std::move(acc));
  }
  return ModuleElement(domain_.ring(), std::move(out));
}

MatrixHom MatrixHom::operator+(const MatrixHom& other) const {
  if (domain_ != other.domain_ || codomain_ != other.codomain_)
    throw Error("hom sum requires equal domain and codomain");
  std::vector<std::vector<Polynomial>> a = matrix_;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      a[i][j] += other.matrix_[i][j];
  return MatrixHom(domain_, codomain_, std::move(a));
}

MatrixHom MatrixHom::operator-() const {
  std::vector<std::vector<Polynomial>> a = matrix_;
  for (auto& row : a)
    for (auto& entry : row) entry = -entry;
  return MatrixHom(domain_, codomain_, std::move(a));
}

std::string MatrixHom::matrix_to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < matrix_[i].size(); ++j) {
      if (j > 0) out += ", ";
      out += matrix_[i][j].to_string();
    }
    out += "]";
  }
  out += "]";
  return out;
}

MatrixHom hom_compose(const MatrixHom& gamma, const MatrixHom& phi) {
  if (!gamma.domain().contains(image(phi)))
    throw Error("hom composition: image does not land in the domain");
  const std::size_t rows = gamma.codomain().rank();
  const std::size_t mid = phi.codomain().rank();
  const std::size_t cols = phi.domain().rank();
  const PolyRing& ring = phi.domain().ring();
  std::vector<std::vector<Polynomial>> a(
      rows, std::vector<Polynomial>(cols, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < mid; ++k) {
        if (gamma.matrix()[i][k].is_zero() || phi.matrix()[k][j].is_zero())
          continue;
        a[i][j] += gamma.matrix()[i][k] * phi.matrix()[k][j];
      }
  return MatrixHom(phi.domain(), gamma.codomain(), std::move(a));
}

bool hom_eq_on_domain(const MatrixHom& phi, const MatrixHom& psi) {
  if (phi.domain() != psi.domain() || phi.codomain() != psi.codomain())
    throw Error("hom comparison requires equal domain and codomain");
  // Equality as maps: the difference must kill every domain generator.
  for (const auto& g : phi.domain().generators())
    if (phi.apply(g) != psi.apply(g)) return false;
  return true;
}

Submodule kernel(const MatrixHom& phi) {
  const auto& gens = phi.domain().generators();
  std::vector<ModuleElement> images;
  images.reserve(gens.size());
  for (const auto& g : gens) images.push_back(phi.apply(g));
  // A domain element sum a_i g_i maps to zero exactly when a is a relation
  // of the image vectors, so the kernel is spanned by those combinations.
  Submodule rel = syzygies(phi.domain().ring(), phi.codomain().rank(), images);
  std::vector<ModuleElement> kernel_gens;
  for (const auto& r : rel.generators()) {
    ModuleElement v =
        ModuleElement::zero(phi.domain().ring(), phi.domain().rank());
    for (std::size_t i = 0; i < gens.size(); ++i)
      v = v + gens[i].scaled(r.component(i));
    if (!v.is_zero()) kernel_gens.push_back(std::move(v));
  }
  return Submodule(phi.domain().ring(), phi.domain().rank(),
                   std::move(kernel_gens));
}

Submodule image(const MatrixHom& phi) {
  std::vector<ModuleElement> gens;
  for (const auto& g : phi.domain().generators()) {
    ModuleElement v = phi.apply(g);
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return Submodule(phi.domain().ring(), phi.codomain().rank(),
                   std::move(gens));
}

bool is_injective(const MatrixHom& phi) { return kernel(phi).is_zero(); }

bool is_surjective(const MatrixHom& phi) {
  return image(phi).contains(phi.codomain());
}

bool is_zero_map(const MatrixHom& phi) {
  for (const auto& g : phi.domain().generators())
    if (!phi.apply(g).is_zero()) return false;
  return true;
}

PresentedQuotient::PresentedQuotient(Submodule numerator,
                                     Submodule denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.ring() != denominator_.ring() ||
      numerator_.rank() != denominator_.rank())
    throw Error("quotient ambient mismatch");
  if (!numerator_.contains(denominator_))
    throw Error("quotient denominator is not contained in the numerator");
}

bool PresentedQuotient::is_zero() const {
  return denominator_.contains(numerator_);
}

bool PresentedQuotient::coset_eq(const ModuleElement& h,
                                 const ModuleElement& g) const {
  return denominator_.contains(h - g);
}

}  // namespace doublekit
