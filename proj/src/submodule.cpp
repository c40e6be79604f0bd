#include "doublekit/submodule.hpp"

#include <algorithm>

namespace doublekit {

Submodule::Submodule(PolyRing ring, std::size_t rank,
                     std::vector<ModuleElement> generators)
    : ring_(std::move(ring)),
      rank_(rank),
      gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.ring() != ring_) throw Error("generator ring mismatch");
    if (g.rank() != rank_) throw Error("generator rank mismatch");
  }
}

Submodule Submodule::zero(const PolyRing& ring, std::size_t rank) {
  return Submodule(ring, rank, {});
}

Submodule Submodule::full(const PolyRing& ring, std::size_t rank) {
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < rank; ++i)
    gens.push_back(ModuleElement::unit(ring, rank, i));
  return Submodule(ring, rank, std::move(gens));
}

bool Submodule::is_zero() const { return basis().empty(); }

const std::vector<ModuleElement>& Submodule::basis() const {
  if (!cache_) throw Error("uninitialized submodule");
  std::call_once(cache_->once,
                 [this] { cache_->basis = reduced_basis(gens_); });
  return cache_->basis;
}

std::vector<ModuleElement> Submodule::canonical_generators() const {
  return primitive_scaled(basis());
}

bool Submodule::contains(const ModuleElement& h) const {
  if (h.ring() != ring_) throw Error("module element ring mismatch");
  if (h.rank() != rank_) throw Error("module element rank mismatch");
  return reduces_to_zero(h, basis());
}

bool Submodule::contains(const Submodule& other) const {
  if (other.ring() != ring_ || other.rank() != rank_)
    throw Error("submodule ambient mismatch");
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

ModuleElement Submodule::reduce(const ModuleElement& h) const {
  if (h.ring() != ring_ || h.rank() != rank_)
    throw Error("module element ambient mismatch");
  return normal_form(h, basis());
}

bool Submodule::operator==(const Submodule& other) const {
  if (ring_ != other.ring_ || rank_ != other.rank_) return false;
  // The reduced monic basis is unique for the span.
  const auto& a = basis();
  const auto& b = other.basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// ----------------------------------------------------------------- syzygies

namespace {

// Appends tag components: out = (v, e_tag) in R^(rank + count).
ModuleElement with_tag(const ModuleElement& v, std::size_t count,
                       std::size_t tag_index) {
  ModuleElement tags = ModuleElement::zero(v.ring(), count);
  if (tag_index < count)
    tags = ModuleElement::unit(v.ring(), count, tag_index);
  return v.concat(tags);
}

ModuleElement main_block(const ModuleElement& v, std::size_t rank) {
  std::vector<Polynomial> comps(v.components().begin(),
                                v.components().begin() + rank);
  return ModuleElement(v.ring(), std::move(comps));
}

ModuleElement tag_block(const ModuleElement& v, std::size_t rank) {
  std::vector<Polynomial> comps(v.components().begin() + rank,
                                v.components().end());
  return ModuleElement(v.ring(), std::move(comps));
}

}  // namespace

Submodule syzygies(const PolyRing& ring, std::size_t rank,
                   const std::vector<ModuleElement>& gens) {
  const std::size_t s = gens.size();
  // Tagged generators (g_i, e_i) in R^(rank+s): the module order puts the
  // main block first, so it eliminates it, and the basis elements with zero
  // main block carry exactly the relations.
  std::vector<ModuleElement> tagged;
  tagged.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (gens[i].ring() != ring || gens[i].rank() != rank)
      throw Error("syzygy generator ambient mismatch");
    tagged.push_back(with_tag(gens[i], s, i));
  }
  std::vector<ModuleElement> gb = buchberger(std::move(tagged));
  std::vector<ModuleElement> relations;
  for (const auto& v : gb)
    if (main_block(v, rank).is_zero()) relations.push_back(tag_block(v, rank));
  return Submodule(ring, s, std::move(relations));
}

Submodule syzygies(const Submodule& m) {
  return syzygies(m.ring(), m.rank(), m.generators());
}

std::optional<std::vector<Polynomial>> lift(const Submodule& m,
                                            const ModuleElement& h) {
  if (h.ring() != m.ring() || h.rank() != m.rank())
    throw Error("lift ambient mismatch");
  const std::size_t s = m.generators().size();
  std::vector<ModuleElement> tagged;
  tagged.reserve(s);
  for (std::size_t i = 0; i < s; ++i)
    tagged.push_back(
        ModuleElement(m.ring(), m.generators()[i].components())
            .concat(ModuleElement::unit(m.ring(), s, i)));
  std::vector<ModuleElement> gb = buchberger(std::move(tagged));
  ModuleElement padded = h.concat(ModuleElement::zero(m.ring(), s));
  ModuleElement r = normal_form(padded, gb);
  // h = sum a_i g_i exactly when the main block reduces away; then the tag
  // block carries -a.
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (!r.component(i).is_zero()) return std::nullopt;
  std::vector<Polynomial> coeffs;
  coeffs.reserve(s);
  for (std::size_t i = 0; i < s; ++i)
    coeffs.push_back(-r.component(m.rank() + i));
  return coeffs;
}

Submodule quotient_relations(const Submodule& n, const Submodule& m) {
  if (n.ring() != m.ring() || n.rank() != m.rank())
    throw Error("quotient ambient mismatch");
  const std::size_t t = n.generators().size();
  std::vector<ModuleElement> tagged;
  for (std::size_t i = 0; i < t; ++i)
    tagged.push_back(with_tag(n.generators()[i], t, i));
  for (const auto& g : m.generators())
    tagged.push_back(g.concat(ModuleElement::zero(m.ring(), t)));
  std::vector<ModuleElement> gb = buchberger(std::move(tagged));
  std::vector<ModuleElement> relations;
  for (const auto& v : gb)
    if (main_block(v, n.rank()).is_zero())
      relations.push_back(tag_block(v, n.rank()));
  return Submodule(n.ring(), t, std::move(relations));
}

// ----------------------------------------------------------------- colength

Colength colength(const Submodule& m, const Submodule& n) {
  if (!n.contains(m)) throw Error("colength requires containment");
  const std::size_t t = n.generators().size();
  if (t == 0) return {true, 0};
  Submodule k = quotient_relations(n, m);

  // Leading monomials of the relations, bucketed per presentation component.
  std::vector<std::vector<Monomial>> lead_ideal(t);
  for (const auto& v : k.basis()) {
    ModulePosition lp = lead_position(v);
    lead_ideal[lp.comp].push_back(lp.mono);
  }

  const std::size_t nvars = n.ring().arity();
  unsigned long total = 0;
  for (std::size_t c = 0; c < t; ++c) {
    auto& leads = lead_ideal[c];
    // A unit leading term collapses the whole component.
    if (std::any_of(leads.begin(), leads.end(), mono_is_one)) continue;
    // Finiteness criterion: every variable needs a pure-power leading term;
    // otherwise that direction is unbounded and the dimension diverges.
    std::vector<unsigned> bound(nvars, 0);
    std::vector<bool> covered(nvars, false);
    for (const auto& mono : leads) {
      if (auto v = mono_pure_power(mono)) {
        covered[*v] = true;
        bound[*v] = std::max(bound[*v], mono.exps[*v]);
      }
    }
    if (nvars == 0) {
      // Constants only: no leads here (units handled above) means the
      // component contributes one dimension.
      total += 1;
      continue;
    }
    for (std::size_t v = 0; v < nvars; ++v)
      if (!covered[v]) return {false, 0};

    // Count standard monomials in the finite box below the pure powers.
    std::vector<unsigned> exp(nvars, 0);
    while (true) {
      Monomial candidate{exp, 0};
      for (unsigned e : exp) candidate.degree += e;
      bool divisible = std::any_of(
          leads.begin(), leads.end(),
          [&](const Monomial& l) { return mono_divides(l, candidate); });
      if (!divisible) ++total;
      // Odometer increment over the box.
      std::size_t v = 0;
      while (v < nvars) {
        if (++exp[v] < bound[v]) break;
        exp[v] = 0;
        ++v;
      }
      if (v == nvars) break;
    }
  }
  return {true, total};
}

// --------------------------------------------------------------- rank / sums

std::size_t generic_rank(const Submodule& m) {
  const std::size_t rows = m.rank();
  const std::size_t cols = m.generators().size();
  if (rows == 0 || cols == 0) return 0;
  // Matrix of generators as columns; Bareiss keeps entries polynomial.
  std::vector<std::vector<Polynomial>> a(
      rows, std::vector<Polynomial>(cols, Polynomial::zero(m.ring())));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      a[i][j] = m.generators()[j].component(i);

  Polynomial prev = Polynomial::constant(m.ring(), Rational(1));
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // Pivot search anywhere in the remaining block.
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < rows && !found; ++i)
      for (std::size_t j = k; j < cols && !found; ++j)
        if (!a[i][j].is_zero()) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(a[k], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][k], a[i][pj]);
    ++rank;
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = num.divide_exact(prev);
      }
      a[i][k] = Polynomial::zero(m.ring());
    }
    prev = a[k][k];
  }
  return rank;
}

Submodule direct_sum(const Submodule& m, const Submodule& n) {
  if (m.ring() != n.ring()) throw Error("direct sum ring mismatch");
  std::vector<ModuleElement> gens;
  for (const auto& g : m.generators())
    gens.push_back(g.concat(ModuleElement::zero(n.ring(), n.rank())));
  for (const auto& h : n.generators())
    gens.push_back(ModuleElement::zero(m.ring(), m.rank()).concat(h));
  return Submodule(m.ring(), m.rank() + n.rank(), std::move(gens));
}

Submodule intersect(const Submodule& m, const Submodule& n) {
  if (m.ring() != n.ring() || m.rank() != n.rank())
    throw Error("intersection ambient mismatch");
  // Relations among the combined generators: a block for m, a block for n.
  std::vector<ModuleElement> combined = m.generators();
  combined.insert(combined.end(), n.generators().begin(), n.generators().end());
  Submodule rel = syzygies(m.ring(), m.rank(), combined);
  std::vector<ModuleElement> gens;
  for (const auto& r : rel.generators()) {
    ModuleElement v = ModuleElement::zero(m.ring(), m.rank());
    for (std::size_t i = 0; i < m.generators().size(); ++i)
      v = v + m.generators()[i].scaled(r.component(i));
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return Submodule(m.ring(), m.rank(), std::move(gens));
}

}  // namespace doublekit
