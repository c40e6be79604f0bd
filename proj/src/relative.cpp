#include "doublekit/relative.hpp"

namespace doublekit {

RelativeMap::RelativeMap(DoubleContext ctx_x, DoubleContext ctx_y,
                         RingMorphism pullback)
    : ctx_x_(std::move(ctx_x)),
      ctx_y_(std::move(ctx_y)),
      pullback_(std::move(pullback)) {
  if (pullback_.source() != ctx_x_.base() ||
      pullback_.target() != ctx_y_.base())
    throw Error("pullback does not match the doubling contexts");
  // Tensor pullback: each copy of an X variable goes to the matching copy
  // of its pullback image.
  const std::size_t n = ctx_x_.base().arity();
  std::vector<Polynomial> images(2 * n, Polynomial::zero(ctx_y_.doubled()));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& img = pullback_.images()[i];
    images[ctx_x_.first_index(i)] = ctx_y_.pi1()(img);
    images[ctx_x_.second_index(i)] = ctx_y_.pi2()(img);
  }
  tensor_ = RingMorphism(ctx_x_.doubled(), ctx_y_.doubled(),
                         std::move(images));
}

Polynomial phi_tensor(const RelativeMap& rel, const Polynomial& alpha) {
  return rel.tensor_pullback()(alpha);
}

RelativeMap compose_relative(const RelativeMap& first,
                             const RelativeMap& second) {
  if (first.context_y().base() != second.context_x().base())
    throw Error("relative map composition mismatch");
  return RelativeMap(first.context_x(), second.context_y(),
                     second.pullback().after(first.pullback()));
}

bool two_route_slot_identity(const RelativeMap& rel,
                             const Polynomial& alpha) {
  // Build Q[y-vars, fresh parameters], one parameter per Y variable.
  const PolyRing& ry = rel.context_y().base();
  std::vector<std::string> names = ry.vars();
  for (const auto& v : ry.vars()) names.push_back("par_" + v);
  PolyRing combined(names);
  const std::size_t m = ry.arity();
  std::vector<Polynomial> to_y, to_par;
  for (std::size_t i = 0; i < m; ++i) {
    to_y.push_back(Polynomial::variable(combined, i));
    to_par.push_back(Polynomial::variable(combined, m + i));
  }
  RingMorphism y_embed(ry, combined, to_y);
  RingMorphism par_embed(ry, combined, to_par);

  // Route one: substitute each copy of the source variables directly,
  // first copy through the Y variables, second copy through the
  // parameters.
  const std::size_t n = rel.context_x().base().arity();
  std::vector<Polynomial> direct(2 * n, Polynomial::zero(combined));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& img = rel.pullback().images()[i];
    direct[rel.context_x().first_index(i)] = y_embed(img);
    direct[rel.context_x().second_index(i)] = par_embed(img);
  }
  RingMorphism route_one(rel.context_x().doubled(), combined,
                         std::move(direct));

  // Route two: pull back wholesale, then fix the second copy.
  std::vector<Polynomial> fix(2 * m, Polynomial::zero(combined));
  for (std::size_t i = 0; i < m; ++i) {
    fix[rel.context_y().first_index(i)] = to_y[i];
    fix[rel.context_y().second_index(i)] = to_par[i];
  }
  RingMorphism slot_fix(rel.context_y().doubled(), combined, std::move(fix));

  return route_one(alpha) == slot_fix(phi_tensor(rel, alpha));
}

GeneratorImageHom::GeneratorImageHom(RelativeMap rel, Submodule domain,
                                     Submodule codomain,
                                     std::vector<ModuleElement> images)
    : rel_(std::move(rel)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (domain_.ring() != rel_.context_x().base())
    throw Error("generator-image hom domain ring mismatch");
  if (codomain_.ring() != rel_.context_y().base())
    throw Error("generator-image hom codomain ring mismatch");
  if (images_.size() != domain_.generators().size())
    throw Error("generator-image hom needs one image per generator");
  for (const auto& v : images_)
    if (!codomain_.contains(v))
      throw Error("generator image lies outside the codomain");
  // Well-definedness: every relation among the generators must be killed
  // by the images after pulling the coefficients back.
  Submodule rels = syzygies(domain_);
  for (const auto& r : rels.generators()) {
    ModuleElement acc =
        ModuleElement::zero(codomain_.ring(), codomain_.rank());
    for (std::size_t i = 0; i < images_.size(); ++i)
      acc = acc + images_[i].scaled(rel_.pullback()(r.component(i)));
    if (!acc.is_zero())
      throw Error(
          "generator images do not define a homomorphism: a relation "
          "among the generators is not preserved");
  }
}

ModuleElement GeneratorImageHom::apply(const ModuleElement& h) const {
  auto coeffs = lift(domain_, h);
  if (!coeffs) throw Error("element lies outside the hom domain");
  ModuleElement acc = ModuleElement::zero(codomain_.ring(), codomain_.rank());
  for (std::size_t i = 0; i < images_.size(); ++i)
    acc = acc + images_[i].scaled(rel_.pullback()((*coeffs)[i]));
  return acc;
}

GeneratorImageHom compose_generator_image(const GeneratorImageHom& second,
                                          const GeneratorImageHom& first) {
  if (first.codomain().ring() != second.domain().ring())
    throw Error("generator-image composition ring mismatch");
  if (!second.domain().contains(first.codomain()))
    throw Error("generator-image composition: image does not land in domain");
  std::vector<ModuleElement> images;
  images.reserve(first.images().size());
  for (const auto& v : first.images()) images.push_back(second.apply(v));
  return GeneratorImageHom(
      compose_relative(first.relative(), second.relative()), first.domain(),
      second.codomain(), std::move(images));
}

RelativeDoubledHom::RelativeDoubledHom(GeneratorImageHom source)
    : source_(std::move(source)) {
  const RelativeMap& rel = source_.relative();
  domain_d_ = double_module(rel.context_x(), source_.domain());
  codomain_d_ = double_module(rel.context_y(), source_.codomain());
  // Images of the closed-form generating family of the doubled domain:
  // doubled generators map to doubled images; the auxiliary generator for
  // (g_i, x_j) maps to (0, (f_j thru pi2 - f_j thru pi1) * (v_i thru pi2))
  // where f_j is the pullback of x_j -- the image of (x_j g_i)_D minus
  // f_j-thru-pi1 times (v_i)_D, exactly what linearity over the germ forces.
  const DoubleContext& cy = rel.context_y();
  const std::size_t n = rel.context_x().base().arity();
  for (const auto& v : source_.images())
    assigned_.push_back(double_element(cy, v));
  for (std::size_t i = 0; i < source_.images().size(); ++i) {
    const ModuleElement& v = source_.images()[i];
    ModuleElement second = v.mapped(cy.pi2());
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& fj = rel.pullback().images()[j];
      Polynomial factor = cy.pi2()(fj) - cy.pi1()(fj);
      assigned_.push_back(
          ModuleElement::zero(cy.doubled(), v.rank())
              .concat(second.scaled(factor)));
    }
  }
  for (const auto& img : assigned_)
    if (!codomain_d_.value().contains(img))
      throw Error("doubled image lies outside the doubled codomain");
}

ModuleElement RelativeDoubledHom::apply(const ModuleElement& u) const {
  auto coeffs = lift(domain_d_.value(), u);
  if (!coeffs) throw Error("element lies outside the doubled domain");
  const RelativeMap& rel = source_.relative();
  ModuleElement acc = ModuleElement::zero(
      rel.context_y().doubled(), 2 * source_.codomain().rank());
  for (std::size_t k = 0; k < assigned_.size(); ++k)
    acc = acc + assigned_[k].scaled(rel.tensor_pullback()((*coeffs)[k]));
  return acc;
}

RelativeDoubledHom relative_double_hom(const GeneratorImageHom& phi) {
  return RelativeDoubledHom(phi);
}

}  // namespace doublekit
