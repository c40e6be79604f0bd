#include "doublekit/morphism.hpp"

namespace doublekit {

RingMorphism::RingMorphism(PolyRing source, PolyRing target,
                           std::vector<Polynomial> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.arity())
    throw Error("ring morphism needs one image per source variable");
  for (const auto& img : images_)
    if (img.ring() != target_)
      throw Error("ring morphism image lives in the wrong ring");
}

RingMorphism RingMorphism::identity(const PolyRing& ring) {
  std::vector<Polynomial> images;
  images.reserve(ring.arity());
  for (std::size_t i = 0; i < ring.arity(); ++i)
    images.push_back(Polynomial::variable(ring, i));
  return RingMorphism(ring, ring, std::move(images));
}

Polynomial RingMorphism::operator()(const Polynomial& p) const {
  if (p.ring() != source_) throw Error("polynomial ring mismatch");
  Polynomial result = Polynomial::zero(target_);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target_, t.coeff);
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      unsigned e = t.mono.exps[i];
      if (e > 0) prod = prod * images_[i].pow(e);
    }
    result += prod;
  }
  return result;
}

RingMorphism RingMorphism::after(const RingMorphism& f) const {
  if (f.target() != source_)
    throw Error("ring morphism composition mismatch");
  std::vector<Polynomial> images;
  images.reserve(f.images().size());
  for (const auto& img : f.images()) images.push_back((*this)(img));
  return RingMorphism(f.source(), target_, std::move(images));
}

bool RingMorphism::operator==(const RingMorphism& other) const {
  return source_ == other.source_ && target_ == other.target_ &&
         images_ == other.images_;
}

}  // namespace doublekit
