// Finitely generated submodules of R^p and the algebra built on the
// Groebner engine: membership, equality, syzygies, lifts, colength, rank.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "doublekit/groebner.hpp"
#include "doublekit/module_element.hpp"

namespace doublekit {

// Value type with structural sharing: copying a Submodule shares both the
// generator list and the lazily computed basis cache, so the basis is
// computed at most once per value no matter how it is passed around.
class Submodule {
public:
  Submodule() = default;
  Submodule(PolyRing ring, std::size_t rank,
            std::vector<ModuleElement> generators);

  static Submodule zero(const PolyRing& ring, std::size_t rank);
  // The full free module R^rank.
  static Submodule full(const PolyRing& ring, std::size_t rank);

  const PolyRing& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleElement>& generators() const { return gens_; }
  bool is_zero() const;

  // The reduced monic basis (unique for the span); computed once, cached.
  const std::vector<ModuleElement>& basis() const;
  // Presentation form of the basis: integer-primitive, positive leads.
  std::vector<ModuleElement> canonical_generators() const;

  bool contains(const ModuleElement& h) const;
  bool contains(const Submodule& other) const;
  ModuleElement reduce(const ModuleElement& h) const;

  bool operator==(const Submodule& other) const;  // equality of spans
  bool operator!=(const Submodule& other) const { return !(*this == other); }

private:
  struct Cache {
    std::once_flag once;
    std::vector<ModuleElement> basis;
  };

  PolyRing ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleElement> gens_;
  std::shared_ptr<Cache> cache_;
};

// Relations among generators: {(a_1..a_s) : sum a_i gens[i] = 0} as a
// complete submodule of R^s.
Submodule syzygies(const PolyRing& ring, std::size_t rank,
                   const std::vector<ModuleElement>& gens);
Submodule syzygies(const Submodule& m);

// Expresses h in terms of the generators of m: returns a with
// h = sum a_i gens[i], or nullopt when h is not a member.
std::optional<std::vector<Polynomial>> lift(const Submodule& m,
                                            const ModuleElement& h);

// Relation module of n's generators with respect to m:
// {(a_1..a_t) : sum a_i n.gens[i] lies in m}.  Presents n/m as R^t / K.
Submodule quotient_relations(const Submodule& n, const Submodule& m);

// dim_Q(n/m) when finite.  Requires m contained in n.
struct Colength {
  bool finite = false;
  unsigned long value = 0;  // meaningful only when finite
};
Colength colength(const Submodule& m, const Submodule& n);

// Rank of the generator matrix over the fraction field Q(x1..xn), by
// fraction-free (Bareiss) elimination.
std::size_t generic_rank(const Submodule& m);

// Embeds generators side by side in R^(p+q).
Submodule direct_sum(const Submodule& m, const Submodule& n);

// Intersection of two submodules of the same ambient module.
Submodule intersect(const Submodule& m, const Submodule& n);

}  // namespace doublekit
