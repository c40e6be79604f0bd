#include "doublekit/groebner.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

namespace doublekit {

namespace {

std::size_t term_count(const ModuleElement& v) {
  std::size_t n = 0;
  for (const auto& comp : v.components()) n += comp.terms().size();
  return n;
}

// Extracts one term (the current lead) from v, leaving the rest intact.
ModuleElement without_lead(const ModuleElement& v, const ModulePosition& lp) {
  std::vector<Polynomial> comps = v.components();
  comps[lp.comp] -= Polynomial::term(v.ring(), lp.mono, lp.coeff);
  return ModuleElement(v.ring(), std::move(comps));
}

// Content-and-sign normalization: integer coefficients with gcd one and a
// positive lead.  Renormalizing every basis insertion keeps the bignum
// arithmetic cheap across long reduction chains.
ModuleElement primitive_one(const ModuleElement& v) {
  if (v.is_zero()) return v;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& comp : v.components()) {
    for (const auto& t : comp.terms()) {
      mpz_class num = t.coeff.get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
      mpz_class den = t.coeff.get_den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
  }
  if (num_gcd == 0) return v;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  ModuleElement out = v.scaled(Polynomial::constant(v.ring(), scale));
  if (lead_position(out).coeff < 0)
    out = out.scaled(Polynomial::constant(v.ring(), Rational(-1)));
  return out;
}

// A module element held as geometrically capped chunks, so that adding a
// small quantity costs a merge with a similarly small chunk instead of a
// rebuild of everything accumulated so far.  The true value is the sum of
// the chunks; one monomial position may sit in several chunks at once, but
// only at their heads when it is maximal, which is what lead() exploits.
class Geobucket {
public:
  explicit Geobucket(const ModuleElement& v)
      : ring_(v.ring()), rank_(v.rank()) {
    if (!v.is_zero()) insert(v);
  }

  // += coeff * mono * g
  void add_scaled(const ModuleElement& g, const Rational& coeff,
                  const Monomial& mono) {
    ModuleElement scaled =
        g.scaled(Polynomial::term(ring_, mono, coeff));
    if (!scaled.is_zero()) insert(std::move(scaled));
  }

  // The position and total coefficient of the maximal monomial position,
  // with exact cancellations already dropped; nullopt when the value is 0.
  std::optional<ModulePosition> lead() {
    while (true) {
      const ModulePosition* best = nullptr;
      heads_.clear();
      for (std::size_t b = 0; b < chunks_.size(); ++b) {
        if (chunks_[b].is_zero()) continue;
        ModulePosition lp = lead_position(chunks_[b]);
        if (best == nullptr ||
            module_order_cmp(lp.comp, lp.mono, best->comp, best->mono) > 0) {
          lead_cache_ = lp;
          best = &lead_cache_;
          heads_.clear();
          heads_.push_back(b);
        } else if (lp.comp == best->comp && lp.mono == best->mono) {
          heads_.push_back(b);
        }
      }
      if (best == nullptr) return std::nullopt;
      // A position equal to the global maximum can only sit at chunk heads,
      // so summing the head coefficients gives the true coefficient.
      Rational total(0);
      for (std::size_t b : heads_) total += lead_position(chunks_[b]).coeff;
      if (total != 0) {
        ModulePosition out = lead_cache_;
        out.coeff = std::move(total);
        return out;
      }
      drop_heads();  // exact cancellation: remove and look again
    }
  }

  // Removes the position reported by the last lead() from every chunk.
  void extract_lead() { drop_heads(); }

  // Sum of everything still in the bucket.
  ModuleElement drain() {
    ModuleElement total = ModuleElement::zero(ring_, rank_);
    for (auto& chunk : chunks_)
      if (!chunk.is_zero()) total = total + chunk;
    return total;
  }

private:
  void drop_heads() {
    for (std::size_t b : heads_) {
      ModulePosition lp = lead_position(chunks_[b]);
      chunks_[b] = without_lead(chunks_[b], lp);
    }
  }

  static std::size_t cap(std::size_t level) {
    std::size_t c = 16;
    for (std::size_t i = 0; i < level; ++i) c *= 4;
    return c;
  }

  void insert(ModuleElement e) {
    std::size_t level = 0;
    while (cap(level) < term_count(e)) ++level;
    while (true) {
      if (level >= chunks_.size()) {
        chunks_.resize(level + 1, ModuleElement::zero(ring_, rank_));
      }
      if (chunks_[level].is_zero()) {
        chunks_[level] = std::move(e);
        return;
      }
      ModuleElement merged = chunks_[level] + e;
      if (term_count(merged) <= cap(level)) {
        chunks_[level] = std::move(merged);
        return;
      }
      chunks_[level] = ModuleElement::zero(ring_, rank_);
      e = std::move(merged);
      ++level;
    }
  }

  PolyRing ring_;
  std::size_t rank_;
  std::vector<ModuleElement> chunks_;
  ModulePosition lead_cache_;
  std::vector<std::size_t> heads_;
};

// Shared reduction core against the reducers listed in `use`, which indexes
// into basis/leads.  With top_only the loop stops as soon as the lead is
// irreducible and returns whatever is left unreduced — that is all a
// membership test needs, and it never walks the (possibly long) tail.
// Without it, every term of the result is irreducible: the full normal form.
// When `sugar` is given it carries the homogenized degree of v in and is
// raised to the homogenized degree of the result (sugar bookkeeping for the
// selection strategy); `sugars` must then hold one entry per basis element.
ModuleElement normal_form_against(
    const ModuleElement& v, const std::vector<ModuleElement>& basis,
    const std::vector<ModulePosition>& leads,
    const std::vector<std::size_t>& use, bool top_only,
    const std::vector<unsigned>* sugars = nullptr,
    unsigned* sugar = nullptr) {
  if (v.is_zero()) return v;
  const PolyRing& ring = v.ring();
  Geobucket bucket(v);
  std::vector<std::vector<Term>> kept(v.rank());
  unsigned long nf_steps = 0;
  while (auto lp = bucket.lead()) {
    if (getenv("DOUBLEKIT_TRACE") && ++nf_steps % 500 == 0)
      fprintf(stderr, "[nf] steps=%lu deg=%u comp=%zu nbits=%zu dbits=%zu\n",
              nf_steps, lp->mono.degree, lp->comp,
              mpz_sizeinbase(lp->coeff.get_num().get_mpz_t(), 2),
              mpz_sizeinbase(lp->coeff.get_den().get_mpz_t(), 2));
    // First match in `use` order: oldest reducers first.  The early basis
    // elements carry the smallest coefficients, and routing reductions
    // through them is what keeps coefficient growth in check.
    std::size_t pick = basis.size();
    for (std::size_t k : use) {
      if (leads[k].comp != lp->comp) continue;
      if (!mono_divides(leads[k].mono, lp->mono)) continue;
      pick = k;
      break;
    }
    if (pick < basis.size()) {
      // The added multiple cancels the lead exactly; the cancellation is
      // collected lazily by the next lead() call.
      Monomial cof = mono_div(lp->mono, leads[pick].mono);
      if (sugar)
        *sugar = std::max(*sugar, (*sugars)[pick] + cof.degree);
      bucket.add_scaled(basis[pick], -(lp->coeff / leads[pick].coeff),
                        std::move(cof));
    } else if (top_only) {
      // Lead survives: the element does not reduce to zero, and the caller
      // only needs a representative whose lead is irreducible.
      return bucket.drain();
    } else {
      // Lead is irreducible: move it to the remainder and keep going so the
      // lower terms get reduced too (full normal form).
      kept[lp->comp].push_back({lp->mono, lp->coeff});
      bucket.extract_lead();
    }
  }
  if (top_only) return ModuleElement::zero(ring, v.rank());
  std::vector<Polynomial> comps;
  comps.reserve(v.rank());
  for (auto& terms : kept)
    comps.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return ModuleElement(ring, std::move(comps));
}

// Cross-multiplied S-vector of two elements whose leads share a component:
// lc(g)*(L/lm(f))*f - lc(f)*(L/lm(g))*g.  Integer inputs stay integer.
ModuleElement s_vector(const ModuleElement& f, const ModulePosition& lf,
                       const ModuleElement& g, const ModulePosition& lg) {
  Monomial lcm = mono_lcm(lf.mono, lg.mono);
  ModuleElement left =
      f.scaled(Polynomial::term(f.ring(), mono_div(lcm, lf.mono), lg.coeff));
  ModuleElement right =
      g.scaled(Polynomial::term(g.ring(), mono_div(lcm, lg.mono), lf.coeff));
  return left - right;
}

struct Pair {
  std::size_t i, j;  // i < j, leads in the same component
  Monomial lcm;
  unsigned sugar;  // homogenized degree of the S-vector
};

// Homogenized degree of an element: the degree its terms would share after
// homogenizing with one extra variable.
unsigned sugar_degree(const ModuleElement& v) {
  unsigned d = 0;
  for (std::size_t c = 0; c < v.rank(); ++c)
    for (const auto& t : v.component(c).terms()) d = std::max(d, t.mono.degree);
  return d;
}

}  // namespace

namespace {

ModuleElement reduce_all(const ModuleElement& v,
                         const std::vector<ModuleElement>& basis,
                         bool top_only) {
  std::vector<ModulePosition> leads;
  std::vector<std::size_t> use;
  leads.reserve(basis.size());
  use.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    leads.push_back(lead_position(basis[k]));
    use.push_back(k);
  }
  return normal_form_against(v, basis, leads, use, top_only);
}

}  // namespace

ModuleElement normal_form(const ModuleElement& v,
                          const std::vector<ModuleElement>& basis) {
  return reduce_all(v, basis, /*top_only=*/false);
}

bool reduces_to_zero(const ModuleElement& v,
                     const std::vector<ModuleElement>& basis) {
  return reduce_all(v, basis, /*top_only=*/true).is_zero();
}

std::vector<ModuleElement> buchberger(std::vector<ModuleElement> gens) {
  std::vector<ModuleElement> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(primitive_one(std::move(g)));
  if (basis.empty()) return basis;

  std::vector<ModulePosition> leads;
  std::vector<std::size_t> use;  // every element, oldest first
  std::vector<unsigned> sugars;
  leads.reserve(basis.size());
  use.reserve(basis.size());
  sugars.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    leads.push_back(lead_position(basis[k]));
    use.push_back(k);
    sugars.push_back(sugar_degree(basis[k]));
  }

  std::vector<Pair> queue;
  auto queue_pairs_with = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i)
      if (leads[i].comp == leads[t].comp) {
        Monomial lcm = mono_lcm(leads[i].mono, leads[t].mono);
        unsigned sugar =
            std::max(sugars[i] + lcm.degree - leads[i].mono.degree,
                     sugars[t] + lcm.degree - leads[t].mono.degree);
        queue.push_back({i, t, std::move(lcm), sugar});
      }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

  unsigned long gb_steps = 0;
  while (!queue.empty()) {
    if (getenv("DOUBLEKIT_TRACE") && ++gb_steps % 50 == 0)
      fprintf(stderr, "[gb] steps=%lu pairs=%zu basis=%zu\n", gb_steps,
              queue.size(), basis.size());
    // Sugar selection: smallest homogenized degree first, then smallest lcm
    // degree; index order breaks the remaining ties deterministically.  The
    // component order is elimination-like, so plain degree selection would
    // chase high-degree pairs in the deep components far too early.
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const Pair &a = queue[k], &b = queue[best];
      auto key = [](const Pair& q) {
        return std::make_tuple(q.sugar, q.lcm.degree, q.j, q.i);
      };
      if (key(a) < key(b)) best = k;
    }
    Pair p = queue[best];
    queue[best] = queue.back();
    queue.pop_back();

    ModuleElement s =
        s_vector(basis[p.i], leads[p.i], basis[p.j], leads[p.j]);
    unsigned sugar = p.sugar;
    ModuleElement r = normal_form_against(s, basis, leads, use,
                                          /*top_only=*/false, &sugars, &sugar);
    if (r.is_zero()) continue;
    basis.push_back(primitive_one(std::move(r)));
    leads.push_back(lead_position(basis.back()));
    use.push_back(basis.size() - 1);
    sugars.push_back(sugar);
    if (getenv("DOUBLEKIT_TRACE")) {
      std::size_t mb = 0;
      for (std::size_t c = 0; c < basis.back().rank(); ++c)
        for (const auto& term : basis.back().component(c).terms())
          mb = std::max(
              mb,
              std::max(mpz_sizeinbase(term.coeff.get_num().get_mpz_t(), 2),
                       mpz_sizeinbase(term.coeff.get_den().get_mpz_t(), 2)));
      fprintf(stderr, "[ins] t=%zu comp=%zu deg=%u terms=%zu bits=%zu\n",
              basis.size() - 1, leads.back().comp, leads.back().mono.degree,
              term_count(basis.back()), mb);
    }
    queue_pairs_with(basis.size() - 1);
  }
  return basis;
}

std::vector<ModuleElement> reduced_basis(
    const std::vector<ModuleElement>& gens) {
  std::vector<ModuleElement> gb = buchberger(gens);
  if (gb.empty()) return gb;

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<ModulePosition> leads;
  for (const auto& g : gb) leads.push_back(lead_position(g));
  std::vector<bool> keep(gb.size(), true);
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (leads[j].comp != leads[i].comp) continue;
      if (!mono_divides(leads[j].mono, leads[i].mono)) continue;
      // A strict divisor always displaces i; equal leads keep the earlier.
      if (!(leads[i].mono == leads[j].mono) || j < i) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<ModuleElement> minimal;
  for (std::size_t i = 0; i < gb.size(); ++i)
    if (keep[i]) minimal.push_back(gb[i]);

  // Tail-reduce each survivor against the others; leads are untouched
  // because they are pairwise indivisible.
  std::vector<ModuleElement> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ModuleElement r = normal_form(minimal[i], others);
    // Make monic.
    ModulePosition lp = lead_position(r);
    reduced.push_back(r.scaled(
        Polynomial::constant(r.ring(), Rational(1) / lp.coeff)));
  }

  std::sort(reduced.begin(), reduced.end(),
            [](const ModuleElement& a, const ModuleElement& b) {
              ModulePosition la = lead_position(a), lb = lead_position(b);
              return module_order_cmp(la.comp, la.mono, lb.comp, lb.mono) > 0;
            });
  return reduced;
}

std::vector<ModuleElement> primitive_scaled(std::vector<ModuleElement> basis) {
  for (auto& v : basis) v = primitive_one(v);
  return basis;
}

}  // namespace doublekit
