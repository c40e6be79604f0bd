#include "doublekit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "doublekit/session.hpp"

namespace doublekit {

// ------------------------------------------------------------------- rng

uint64_t SplitMix64::next() {
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t bound) {
  if (bound == 0) throw Error("empty range");
  return next() % bound;
}

long SplitMix64::range(long lo, long hi) {
  if (hi < lo) throw Error("empty range");
  return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo) + 1));
}

bool SplitMix64::chance(unsigned percent) { return below(100) < percent; }

std::string PropertyReport::summary_line() const {
  return "PROP " + id + " trials=" + std::to_string(trials) +
         " failures=" + std::to_string(failures.size());
}

unsigned verifier_thread_cap() {
  if (const char* env = std::getenv("DOUBLEKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// --------------------------------------------------------------- builders

namespace {

struct TrialOutcome {
  bool pass = true;
  std::string note;
  std::string replay;
};

using CheckFn = std::function<TrialOutcome(SplitMix64&, const InstanceSpec&)>;

InstanceSpec shrink(const InstanceSpec& spec, unsigned vars, unsigned rank,
                    unsigned gens, unsigned degree) {
  InstanceSpec s = spec;
  s.max_vars = std::min(s.max_vars, vars);
  s.max_rank = std::min(s.max_rank, rank);
  s.max_generators = std::min(s.max_generators, gens);
  s.max_degree = std::min(s.max_degree, degree);
  return s;
}

PolyRing rand_ring(SplitMix64& rng, const InstanceSpec& spec) {
  unsigned n = 1 + static_cast<unsigned>(
                       rng.below(std::max(1u, spec.max_vars)));
  std::vector<std::string> vars;
  vars.reserve(n);
  for (unsigned i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
  return PolyRing(std::move(vars));
}

Rational rand_coeff(SplitMix64& rng, const InstanceSpec& spec) {
  long c = rng.range(-spec.coeff_bound, spec.coeff_bound);
  if (c == 0) c = 1;
  return Rational(c);
}

Monomial rand_mono(SplitMix64& rng, std::size_t arity, unsigned maxdeg) {
  Monomial m = mono_one(arity);
  unsigned d = static_cast<unsigned>(rng.below(maxdeg + 1));
  for (unsigned k = 0; k < d && arity > 0; ++k) {
    ++m.exps[rng.below(arity)];
    ++m.degree;
  }
  return m;
}

Polynomial rand_poly(SplitMix64& rng, const PolyRing& ring,
                     const InstanceSpec& spec, unsigned maxdeg,
                     bool allow_zero = true) {
  unsigned count = static_cast<unsigned>(rng.below(3)) + (allow_zero ? 0 : 1);
  std::vector<Term> terms;
  for (unsigned k = 0; k < count; ++k) {
    Monomial m = rand_mono(rng, ring.arity(), maxdeg);
    bool duplicate = false;
    for (const auto& t : terms)
      if (t.mono == m) duplicate = true;
    if (duplicate) continue;  // keep declared coefficients within bounds
    terms.push_back({std::move(m), rand_coeff(rng, spec)});
  }
  Polynomial p = Polynomial::from_terms(ring, std::move(terms));
  if (!allow_zero && p.is_zero())
    return Polynomial::constant(ring, Rational(1));
  return p;
}

ModuleElement rand_element(SplitMix64& rng, const PolyRing& ring,
                           std::size_t rank, const InstanceSpec& spec,
                           unsigned maxdeg) {
  std::vector<Polynomial> comps;
  comps.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i)
    comps.push_back(rand_poly(rng, ring, spec, maxdeg));
  return ModuleElement(ring, std::move(comps));
}

Submodule rand_module(SplitMix64& rng, const PolyRing& ring, std::size_t rank,
                      const InstanceSpec& spec) {
  std::size_t count = rng.below(spec.max_generators + 1);
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < count; ++i) {
    ModuleElement g = rand_element(rng, ring, rank, spec, spec.max_degree);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return Submodule(ring, rank, std::move(gens));
}

ModuleElement rand_member(SplitMix64& rng, const Submodule& m,
                          const InstanceSpec& spec) {
  ModuleElement acc = ModuleElement::zero(m.ring(), m.rank());
  for (const auto& g : m.generators())
    acc = acc + g.scaled(rand_poly(rng, m.ring(), spec, 2));
  return acc;
}

std::vector<std::vector<Polynomial>> rand_matrix(SplitMix64& rng,
                                                 const PolyRing& ring,
                                                 std::size_t rows,
                                                 std::size_t cols,
                                                 const InstanceSpec& spec,
                                                 unsigned maxdeg) {
  std::vector<std::vector<Polynomial>> a(
      rows, std::vector<Polynomial>(cols, Polynomial::zero(ring)));
  for (auto& row : a)
    for (auto& entry : row) entry = rand_poly(rng, ring, spec, maxdeg);
  return a;
}

ModuleElement apply_matrix(const std::vector<std::vector<Polynomial>>& a,
                           const ModuleElement& h) {
  std::vector<Polynomial> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    Polynomial acc = Polynomial::zero(h.ring());
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero() && !h.component(j).is_zero())
        acc += row[j] * h.component(j);
    out.push_back(std::move(acc));
  }
  return ModuleElement(h.ring(), std::move(out));
}

// Hom onto a codomain that is its image plus optional extra generators.
MatrixHom rand_hom(SplitMix64& rng, const Submodule& domain,
                   const InstanceSpec& spec, bool allow_extras) {
  std::size_t q = 1 + rng.below(std::max(1u, spec.max_rank));
  auto a = rand_matrix(rng, domain.ring(), q, domain.rank(), spec, 2);
  std::vector<ModuleElement> cod_gens;
  for (const auto& g : domain.generators()) {
    ModuleElement img = apply_matrix(a, g);
    if (!img.is_zero()) cod_gens.push_back(std::move(img));
  }
  if (allow_extras && rng.chance(50)) {
    std::size_t extras = 1 + rng.below(2);
    for (std::size_t k = 0; k < extras; ++k) {
      ModuleElement e = rand_element(rng, domain.ring(), q, spec, 2);
      if (!e.is_zero()) cod_gens.push_back(std::move(e));
    }
  }
  Submodule codomain(domain.ring(), q, std::move(cod_gens));
  return MatrixHom(domain, codomain, std::move(a));
}

// A matrix that kills every generator of the domain: its rows are random
// combinations of the relations among the transposed generator coordinates.
std::vector<std::vector<Polynomial>> annihilating_matrix(
    SplitMix64& rng, const Submodule& domain, std::size_t rows,
    const InstanceSpec& spec) {
  const PolyRing& ring = domain.ring();
  const std::size_t p = domain.rank();
  const std::size_t s = domain.generators().size();
  std::vector<std::vector<Polynomial>> delta(
      rows, std::vector<Polynomial>(p, Polynomial::zero(ring)));
  if (s == 0) return delta;  // zero domain: anything annihilates
  // Row r kills all generators iff sum_j r_j * (coordinate column j) = 0.
  std::vector<ModuleElement> transposed;
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<Polynomial> col;
    col.reserve(s);
    for (std::size_t i = 0; i < s; ++i)
      col.push_back(domain.generators()[i].component(j));
    transposed.push_back(ModuleElement(ring, std::move(col)));
  }
  Submodule rel = syzygies(ring, s, transposed);
  if (rel.generators().empty()) return delta;
  for (auto& row : delta) {
    const ModuleElement& pick =
        rel.generators()[rng.below(rel.generators().size())];
    Polynomial scale = rand_poly(rng, ring, spec, 1);
    for (std::size_t j = 0; j < p; ++j)
      row[j] = pick.component(j) * scale;
  }
  return delta;
}

std::vector<std::vector<Polynomial>> add_matrices(
    std::vector<std::vector<Polynomial>> a,
    const std::vector<std::vector<Polynomial>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

std::vector<std::vector<Polynomial>> identity_matrix(const PolyRing& ring,
                                                     std::size_t k) {
  std::vector<std::vector<Polynomial>> a(
      k, std::vector<Polynomial>(k, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < k; ++i)
    a[i][i] = Polynomial::constant(ring, Rational(1));
  return a;
}

// Unimodular matrix with its exact inverse, built from elementary row
// operations so both stay polynomial.
std::pair<std::vector<std::vector<Polynomial>>,
          std::vector<std::vector<Polynomial>>>
make_unimodular(SplitMix64& rng, const PolyRing& ring, std::size_t k,
                const InstanceSpec& spec) {
  auto u = identity_matrix(ring, k);
  auto v = identity_matrix(ring, k);  // the running inverse
  if (k >= 2) {
    unsigned ops = 1 + static_cast<unsigned>(rng.below(3));
    for (unsigned t = 0; t < ops; ++t) {
      std::size_t i = rng.below(k);
      std::size_t j = rng.below(k);
      if (i == j) j = (j + 1) % k;
      Polynomial p = rand_poly(rng, ring, spec, 1);
      // u <- E u with E = I + p e_ij  (row i += p * row j)
      for (std::size_t c = 0; c < k; ++c) u[i][c] += p * u[j][c];
      // v <- v E^{-1}  (column j -= p * column i)
      for (std::size_t r = 0; r < k; ++r) v[r][j] -= p * v[r][i];
    }
  }
  return {std::move(u), std::move(v)};
}

// ------------------------------------------------------------ replay glue

std::string element_list(const std::vector<ModuleElement>& elems) {
  std::string out = "[";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ", ";
    out += elems[i].to_string();
  }
  out += "]";
  return out;
}

std::string replay_module(const std::string& comment, const Submodule& m) {
  std::string text = "# " + comment + "\n";
  text += print_ring_decl("R", m.ring());
  text += print_module_decl("M", "R", m);
  return text;
}

std::string replay_hom(const std::string& comment, const MatrixHom& f) {
  std::string text = "# " + comment + "\n";
  text += print_ring_decl("R", f.domain().ring());
  text += print_module_decl("M", "R", f.domain());
  text += print_module_decl("N", "R", f.codomain());
  text += print_hom_decl("f", "M", "N", f);
  return text;
}

std::string replay_complex(const std::string& comment,
                           const ChainComplex& c) {
  std::string text = "# " + comment + "\n";
  text += print_ring_decl("R", c.ring());
  std::vector<std::string> module_names, diff_names;
  for (std::size_t k = 0; k < c.length(); ++k) {
    int degree = c.top_degree() - static_cast<int>(k);
    std::string name = "M" + std::to_string(degree);
    module_names.push_back(name);
    text += print_module_decl(name, "R", c.modules()[k]);
  }
  for (std::size_t k = 0; k < c.diffs().size(); ++k) {
    std::string name = "d" + std::to_string(c.top_degree() - static_cast<int>(k));
    diff_names.push_back(name);
    text += print_hom_decl(name, module_names[k], module_names[k + 1],
                           c.diffs()[k]);
  }
  text += "complex C modules [";
  for (std::size_t k = 0; k < module_names.size(); ++k) {
    if (k > 0) text += ", ";
    text += module_names[k];
  }
  text += "] diffs [";
  for (std::size_t k = 0; k < diff_names.size(); ++k) {
    if (k > 0) text += ", ";
    text += diff_names[k];
  }
  text += "];\n";
  return text;
}

std::string replay_germ(const std::string& comment, const RelativeMap& rel) {
  std::string text = "# " + comment + "\n";
  text += print_ring_decl("RX", rel.context_x().base());
  text += print_ring_decl("RY", rel.context_y().base());
  text += print_germ_decl("phi", "RX", "RY", rel.pullback(),
                          rel.context_y());
  return text;
}

// -------------------------------------------------------------- complexes

// Bounded complex built bottom-up: each new differential's columns span a
// submodule of the previous kernel, so the composition law holds by
// construction.  When `full_modules` every module is a full free module,
// which keeps arbitrary matrices valid homs (needed for degree-one maps).
ChainComplex rand_complex(SplitMix64& rng, const InstanceSpec& spec0,
                          bool full_modules, bool exact_bias,
                          const PolyRing* ring_override = nullptr) {
  InstanceSpec spec = shrink(spec0, 2, 2, 3, 2);
  PolyRing ring = ring_override ? *ring_override : rand_ring(rng, spec);
  std::size_t p0 = 1 + rng.below(spec.max_rank);
  Submodule bottom = full_modules ? Submodule::full(ring, p0)
                                  : rand_module(rng, ring, p0, spec);
  std::vector<Submodule> modules_rev{bottom};
  std::vector<MatrixHom> diffs_rev;
  std::size_t length = 2 + rng.below(3);  // 2..4 modules
  for (std::size_t step = 1; step < length; ++step) {
    const Submodule& cur = modules_rev.back();
    std::vector<ModuleElement> columns;
    if (step == 1) {
      std::size_t k = 1 + rng.below(2);
      for (std::size_t c = 0; c < k; ++c) {
        ModuleElement h = rand_member(rng, cur, spec);
        columns.push_back(std::move(h));
      }
    } else {
      Submodule ker = kernel(diffs_rev.back());
      if (exact_bias && rng.chance(60) && ker.generators().size() <= 4) {
        columns = ker.generators();
        if (columns.empty())
          columns.push_back(ModuleElement::zero(ring, cur.rank()));
      } else {
        std::size_t k = 1 + rng.below(2);
        for (std::size_t c = 0; c < k; ++c)
          columns.push_back(rand_member(rng, ker, spec));
      }
    }
    std::size_t k = columns.size();
    std::vector<std::vector<Polynomial>> a(
        cur.rank(), std::vector<Polynomial>(k, Polynomial::zero(ring)));
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < cur.rank(); ++r)
        a[r][c] = columns[c].component(r);
    Submodule upper = Submodule::full(ring, k);
    diffs_rev.push_back(MatrixHom(upper, cur, std::move(a)));
    modules_rev.push_back(std::move(upper));
  }
  std::vector<Submodule> modules(modules_rev.rbegin(), modules_rev.rend());
  std::vector<MatrixHom> diffs(diffs_rev.rbegin(), diffs_rev.rend());
  return ChainComplex(static_cast<int>(length) - 1, std::move(modules),
                      std::move(diffs));
}

// Degree-one map with arbitrary small matrices; requires full modules in
// the target complex so the components are valid homs.
DegreeOneMap rand_degree_one(SplitMix64& rng, const ChainComplex& source,
                             const ChainComplex& target,
                             const InstanceSpec& spec) {
  std::vector<MatrixHom> comps;
  for (std::size_t k = 0; k + 1 < source.length(); ++k) {
    int degree = source.top_degree() - static_cast<int>(k) - 1;
    const Submodule& dom = source.module_at(degree);
    const Submodule& cod = target.module_at(degree + 1);
    comps.push_back(MatrixHom(
        dom, cod, rand_matrix(rng, source.ring(), cod.rank(), dom.rank(),
                              spec, 1)));
  }
  return DegreeOneMap(source, target, std::move(comps));
}

ChainMap chain_sum(const ChainMap& a, const ChainMap& b) {
  std::vector<MatrixHom> comps;
  for (std::size_t k = 0; k < a.components().size(); ++k)
    comps.push_back(a.components()[k] + b.components()[k]);
  return ChainMap(a.source(), a.target(), std::move(comps));
}

ChainMap scalar_chain_map(const ChainComplex& c, const Polynomial& a) {
  std::vector<MatrixHom> comps;
  for (const Submodule& m : c.modules()) {
    std::vector<std::vector<Polynomial>> mat(
        m.rank(), std::vector<Polynomial>(m.rank(), Polynomial::zero(c.ring())));
    for (std::size_t i = 0; i < m.rank(); ++i) mat[i][i] = a;
    comps.push_back(MatrixHom(m, m, std::move(mat)));
  }
  return ChainMap(c, c, std::move(comps));
}

std::vector<std::vector<Polynomial>> block_diag(
    const PolyRing& ring, const std::vector<std::vector<Polynomial>>& a,
    std::size_t a_rows, std::size_t a_cols,
    const std::vector<std::vector<Polynomial>>& b, std::size_t b_rows,
    std::size_t b_cols) {
  std::vector<std::vector<Polynomial>> out(
      a_rows + b_rows,
      std::vector<Polynomial>(a_cols + b_cols, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < a_rows; ++i)
    for (std::size_t j = 0; j < a_cols; ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < b_rows; ++i)
    for (std::size_t j = 0; j < b_cols; ++j)
      out[a_rows + i][a_cols + j] = b[i][j];
  return out;
}

// ---------------------------------------------------------------- relative

DoubleContext rand_context(SplitMix64& rng, const InstanceSpec& spec,
                           const std::string& stem) {
  unsigned n = 1 + static_cast<unsigned>(rng.below(spec.max_vars));
  std::vector<std::string> vars;
  for (unsigned i = 0; i < n; ++i)
    vars.push_back(stem + std::to_string(i + 1));
  return DoubleContext(PolyRing(std::move(vars)));
}

RingMorphism rand_pullback(SplitMix64& rng, const PolyRing& source,
                           const PolyRing& target,
                           const InstanceSpec& spec) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < source.arity(); ++i) {
    Monomial m = rand_mono(rng, target.arity(), spec.max_degree);
    if (mono_is_one(m)) m = mono_var(target.arity(), rng.below(target.arity()));
    long c = rng.chance(25) ? rng.range(1, 2) : 1;
    if (rng.chance(25)) c = -c;
    images.push_back(Polynomial::term(target, m, Rational(c)));
  }
  return RingMorphism(source, target, std::move(images));
}

RelativeMap cusp_germ() {
  PolyRing rx({"x1", "x2"});
  PolyRing ry({"t"});
  DoubleContext cx(rx);
  DoubleContext cy(ry, {"s"}, {"t"});
  std::vector<Polynomial> images{Polynomial::parse(ry, "t^2"),
                                 Polynomial::parse(ry, "t^3")};
  return RelativeMap(cx, cy, RingMorphism(rx, ry, std::move(images)));
}

RelativeMap rand_germ(SplitMix64& rng, const InstanceSpec& spec) {
  InstanceSpec small = shrink(spec, 2, 2, 3, 3);
  DoubleContext cx = rand_context(rng, small, "x");
  DoubleContext cy = rand_context(rng, small, "t");
  return RelativeMap(cx, cy,
                     rand_pullback(rng, cx.base(), cy.base(), small));
}

// A hom over the germ that is well defined by construction: each image is
// a fixed target matrix applied to the pulled-back generator, so relations
// are preserved automatically.
GeneratorImageHom rand_relhom(SplitMix64& rng, const RelativeMap& rel,
                              const Submodule& domain,
                              const InstanceSpec& spec) {
  const PolyRing& ry = rel.context_y().base();
  std::size_t q = 1 + rng.below(std::max(1u, std::min(spec.max_rank, 2u)));
  auto b = rand_matrix(rng, ry, q, domain.rank(), spec, 1);
  std::vector<ModuleElement> images;
  std::vector<ModuleElement> cod_gens;
  for (const auto& g : domain.generators()) {
    ModuleElement pulled = g.mapped(rel.pullback());
    ModuleElement img = apply_matrix(b, pulled);
    images.push_back(img);
    if (!img.is_zero()) cod_gens.push_back(img);
  }
  if (rng.chance(30)) {
    ModuleElement extra = rand_element(rng, ry, q, spec, 2);
    if (!extra.is_zero()) cod_gens.push_back(std::move(extra));
  }
  Submodule codomain(ry, q, std::move(cod_gens));
  return GeneratorImageHom(rel, domain, codomain, std::move(images));
}

// ------------------------------------------------------ individual checks

TrialOutcome fail_with(std::string replay, std::string note = "") {
  TrialOutcome out;
  out.pass = false;
  out.note = std::move(note);
  out.replay = std::move(replay);
  return out;
}

TrialOutcome check_element_injective(SplitMix64& rng,
                                     const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  ModuleElement h = rand_element(rng, ring, rank, spec, spec.max_degree);
  ModuleElement g = rng.chance(50)
                        ? h
                        : rand_element(rng, ring, rank, spec, spec.max_degree);
  DoubleContext ctx(ring);
  bool base = (h == g);
  bool up = (double_element(ctx, h) == double_element(ctx, g));
  if (base == up) return {};
  return fail_with("# element doubling injectivity failure\n" +
                   print_ring_decl("R", ring) + "# h = " + h.to_string() +
                   "\n# g = " + g.to_string() + "\n");
}

TrialOutcome check_membership(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  ModuleElement h = rng.chance(50)
                        ? rand_member(rng, m, spec)
                        : rand_element(rng, ring, rank, spec, spec.max_degree);
  DoubleContext ctx(ring);
  bool base = m.contains(h);
  bool up = double_module(ctx, m).value().contains(double_element(ctx, h));
  if (base == up) return {};
  std::string replay = replay_module("membership transfer failure", m);
  replay += "member M " + h.to_string() + ";\n";
  replay += "double M;\n";
  replay += "member M_D " +
            double_element(ctx, h).to_string() + ";\n";
  return fail_with(std::move(replay));
}

TrialOutcome check_containment(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule n = rand_module(rng, ring, rank, spec);
  Submodule m = [&] {
    if (rng.chance(60)) {
      std::size_t count = rng.below(spec.max_generators + 1);
      std::vector<ModuleElement> gens;
      for (std::size_t i = 0; i < count; ++i) {
        ModuleElement g = rand_member(rng, n, spec);
        if (!g.is_zero()) gens.push_back(std::move(g));
      }
      return Submodule(ring, rank, std::move(gens));
    }
    return rand_module(rng, ring, rank, spec);
  }();
  DoubleContext ctx(ring);
  bool base = n.contains(m);
  bool up = double_module(ctx, n).value().contains(
      double_module(ctx, m).value());
  if (base == up) return {};
  std::string replay = replay_module("containment transfer failure", n);
  replay += print_module_decl("M2", "R", m);
  return fail_with(std::move(replay));
}

TrialOutcome check_equality(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  Submodule n = [&] {
    if (rng.chance(50)) {
      // Same span presented differently: reversed generators plus a
      // redundant combination.
      std::vector<ModuleElement> gens(m.generators().rbegin(),
                                      m.generators().rend());
      if (!m.generators().empty())
        gens.push_back(rand_member(rng, m, spec));
      return Submodule(ring, rank, std::move(gens));
    }
    return rand_module(rng, ring, rank, spec);
  }();
  DoubleContext ctx(ring);
  bool base = (m == n);
  bool up = (double_module(ctx, m).value() == double_module(ctx, n).value());
  if (base == up) return {};
  std::string replay = replay_module("equality transfer failure", m);
  replay += print_module_decl("M2", "R", n);
  replay += "eq M M2;\n";
  return fail_with(std::move(replay));
}

TrialOutcome check_additive(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  ModuleElement h = rand_element(rng, ring, rank, spec, spec.max_degree);
  ModuleElement g = rand_element(rng, ring, rank, spec, spec.max_degree);
  DoubleContext ctx(ring);
  bool additive = double_element(ctx, h + g) ==
                  double_element(ctx, h) + double_element(ctx, g);
  bool injective = !(h != g && double_element(ctx, h) == double_element(ctx, g));
  if (additive && injective) return {};
  return fail_with("# additivity failure\n" + print_ring_decl("R", ring) +
                   "# h = " + h.to_string() + "\n# g = " + g.to_string() +
                   "\n");
}

TrialOutcome check_defining_identity(SplitMix64& rng,
                                     const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, true);
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  ModuleElement h = rand_member(rng, m, spec);
  bool ok = fd.value().apply(double_element(ctx, h)) ==
            double_element(ctx, f.apply(h));
  for (const auto& g : m.generators())
    if (fd.value().apply(double_element(ctx, g)) !=
        double_element(ctx, f.apply(g)))
      ok = false;
  if (ok) return {};
  return fail_with(replay_hom("defining identity failure", f) +
                   "double f;\n");
}

TrialOutcome check_image_identity(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, true);
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  bool ok = image(fd.value()) == double_module(ctx, image(f)).value();
  if (ok) return {};
  return fail_with(replay_hom("image transfer failure", f) + "image f;\n");
}

TrialOutcome check_kernel_inclusion(SplitMix64& rng,
                                    const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, true);
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  Submodule base_kernel_doubled = double_module(ctx, kernel(f)).value();
  Submodule doubled_kernel = kernel(fd.value());
  if (!doubled_kernel.contains(base_kernel_doubled))
    return fail_with(replay_hom("kernel inclusion failure", f) +
                     "kernel f;\n");
  TrialOutcome out;
  if (!base_kernel_doubled.contains(doubled_kernel))
    out.note = "kernel-strict-inclusion";
  return out;
}

TrialOutcome check_surjective_transfer(SplitMix64& rng,
                                       const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, true);
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  if (is_surjective(f) == is_surjective(fd.value())) return {};
  return fail_with(replay_hom("surjectivity transfer failure", f));
}

TrialOutcome check_injective_down(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = [&] {
    if (rng.chance(40)) {
      // Scaling by a nonzero polynomial: injective on torsion-free modules.
      auto a = identity_matrix(ring, rank);
      Polynomial c = rand_poly(rng, ring, spec, 1, false);
      for (std::size_t i = 0; i < rank; ++i) a[i][i] = c;
      std::vector<ModuleElement> cod;
      for (const auto& g : m.generators()) {
        ModuleElement img = apply_matrix(a, g);
        if (!img.is_zero()) cod.push_back(std::move(img));
      }
      return MatrixHom(m, Submodule(ring, rank, std::move(cod)),
                       std::move(a));
    }
    return rand_hom(rng, m, spec, true);
  }();
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  bool doubled_injective = is_injective(fd.value());
  if (!doubled_injective || is_injective(f)) return {};
  return fail_with(replay_hom("injectivity descent failure", f));
}

TrialOutcome check_iso_transfer(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  MatrixHom f = [&]() -> MatrixHom {
    if (rng.chance(40)) {
      std::size_t k = 1 + rng.below(2);
      auto [u, v] = make_unimodular(rng, ring, k, spec);
      (void)v;
      Submodule full = Submodule::full(ring, k);
      return MatrixHom(full, full, std::move(u));
    }
    std::size_t rank = 1 + rng.below(spec.max_rank);
    Submodule m = rand_module(rng, ring, rank, spec);
    return rand_hom(rng, m, spec, true);
  }();
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  bool base = is_injective(f) && is_surjective(f);
  bool up = is_injective(fd.value()) && is_surjective(fd.value());
  if (base == up) return {};
  return fail_with(replay_hom("isomorphism transfer failure", f));
}

TrialOutcome check_zero_transfer(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = [&]() -> MatrixHom {
    if (rng.chance(40)) {
      std::size_t q = 1 + rng.below(spec.max_rank);
      auto a = annihilating_matrix(rng, m, q, spec);
      return MatrixHom(m, rand_module(rng, ring, q, spec), std::move(a));
    }
    return rand_hom(rng, m, spec, true);
  }();
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  if (is_zero_map(f) == is_zero_map(fd.value())) return {};
  return fail_with(replay_hom("zero-map transfer failure", f));
}

// Pair of homs equal or unequal as maps; used for faithfulness checks.
TrialOutcome check_hom_faithful(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring(std::vector<std::string>{"x1", "x2"});
  Submodule m = [&]() -> Submodule {
    if (rng.chance(30)) {
      // The classic instance where different matrices give equal maps.
      return Submodule(ring, 2,
                       {ModuleElement::parse(ring, "(x1, x2)")});
    }
    PolyRing r2 = rand_ring(rng, spec);
    ring = r2;
    std::size_t rank = 1 + rng.below(spec.max_rank);
    return rand_module(rng, ring, rank, spec);
  }();
  std::size_t q = 1 + rng.below(std::max(1u, spec.max_rank));
  auto a = rand_matrix(rng, ring, q, m.rank(), spec, 2);
  auto b = rng.chance(50)
               ? add_matrices(a, annihilating_matrix(rng, m, q, spec))
               : rand_matrix(rng, ring, q, m.rank(), spec, 2);
  std::vector<ModuleElement> cod_gens;
  for (const auto& g : m.generators()) {
    ModuleElement ia = apply_matrix(a, g);
    if (!ia.is_zero()) cod_gens.push_back(std::move(ia));
    ModuleElement ib = apply_matrix(b, g);
    if (!ib.is_zero()) cod_gens.push_back(std::move(ib));
  }
  Submodule n(ring, q, std::move(cod_gens));
  MatrixHom f(m, n, std::move(a));
  MatrixHom g(m, n, std::move(b));
  DoubleContext ctx(ring);
  bool base = hom_eq_on_domain(f, g);
  bool up = hom_eq_on_domain(double_matrix_hom(ctx, f).value(),
                             double_matrix_hom(ctx, g).value());
  if (base == up) return {};
  std::string replay = replay_hom("hom faithfulness failure", f);
  replay += print_hom_decl("g", "M", "N", g);
  return fail_with(std::move(replay));
}

TrialOutcome check_compose(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, false);
  MatrixHom g = rand_hom(rng, f.codomain(), spec, false);
  MatrixHom gf = hom_compose(g, f);
  DoubleContext ctx(ring);
  bool ok = hom_eq_on_domain(
      double_matrix_hom(ctx, gf).value(),
      hom_compose(double_matrix_hom(ctx, g).value(),
                  double_matrix_hom(ctx, f).value()));
  if (ok) return {};
  std::string replay = replay_hom("composition transfer failure", f);
  replay += print_module_decl("P", "R", g.codomain());
  replay += print_hom_decl("g", "N", "P", g);
  return fail_with(std::move(replay));
}

TrialOutcome check_hom_additive(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  std::size_t q = 1 + rng.below(std::max(1u, spec.max_rank));
  auto a = rand_matrix(rng, ring, q, rank, spec, 2);
  auto b = rand_matrix(rng, ring, q, rank, spec, 2);
  std::vector<ModuleElement> cod_gens;
  for (const auto& g : m.generators()) {
    for (const auto* mat : {&a, &b}) {
      ModuleElement img = apply_matrix(*mat, g);
      if (!img.is_zero()) cod_gens.push_back(std::move(img));
    }
  }
  Submodule n(ring, q, std::move(cod_gens));
  MatrixHom f(m, n, a);
  MatrixHom g(m, n, b);
  DoubleContext ctx(ring);
  bool ok = hom_eq_on_domain(
      double_matrix_hom(ctx, f + g).value(),
      double_matrix_hom(ctx, f).value() + double_matrix_hom(ctx, g).value());
  if (ok) return {};
  std::string replay = replay_hom("hom additivity failure", f);
  replay += print_hom_decl("g", "M", "N", g);
  return fail_with(std::move(replay));
}

TrialOutcome check_identity_functor(SplitMix64& rng,
                                    const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  DoubleContext ctx(ring);
  DoubledModule md = double_module(ctx, m);
  bool ok = hom_eq_on_domain(
      double_matrix_hom(ctx, MatrixHom::identity(m)).value(),
      MatrixHom::identity(md.value()));
  if (ok) return {};
  return fail_with(replay_module("identity doubling failure", m));
}

TrialOutcome check_block_structure(SplitMix64& rng,
                                   const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, true);
  DoubleContext ctx(ring);
  if (has_double_block_structure(ctx, double_matrix_hom(ctx, f).value()))
    return {};
  return fail_with(replay_hom("block structure failure", f) + "double f;\n");
}

TrialOutcome check_direct_sum(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t p = 1 + rng.below(2);
  std::size_t q = 1 + rng.below(2);
  Submodule m = rand_module(rng, ring, p, spec);
  Submodule n = rand_module(rng, ring, q, spec);
  DoubleContext ctx(ring);
  DirectSumIso iso = direct_sum_iso(ctx, m, n);
  bool inverses =
      hom_eq_on_domain(hom_compose(iso.delta, iso.eta),
                       MatrixHom::identity(iso.eta.domain())) &&
      hom_eq_on_domain(hom_compose(iso.eta, iso.delta),
                       MatrixHom::identity(iso.delta.domain()));
  ModuleElement h = rand_member(rng, m, spec);
  ModuleElement g = rand_member(rng, n, spec);
  ModuleElement w = h.concat(g);
  bool claim = iso.eta.apply(double_element(ctx, w)) ==
               double_element(ctx, h).concat(double_element(ctx, g));
  if (inverses && claim) return {};
  std::string replay = replay_module("direct sum iso failure", m);
  replay += print_module_decl("M2", "R", n);
  return fail_with(std::move(replay));
}

TrialOutcome check_direct_sum_assoc(SplitMix64& rng,
                                    const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::vector<Submodule> parts;
  std::vector<std::size_t> ranks;
  for (int i = 0; i < 3; ++i) {
    std::size_t r = 1 + rng.below(2);
    ranks.push_back(r);
    parts.push_back(rand_module(rng, ring, r, spec));
  }
  DoubleContext ctx(ring);
  DirectSumIso many = direct_sum_iso_many(ctx, parts);
  DirectSumIso first_two = direct_sum_iso(ctx, parts[0], parts[1]);
  Submodule m12 = direct_sum(parts[0], parts[1]);
  DirectSumIso outer = direct_sum_iso(ctx, m12, parts[2]);
  ModuleElement w = rand_member(rng, parts[0], spec)
                        .concat(rand_member(rng, parts[1], spec))
                        .concat(rand_member(rng, parts[2], spec));
  ModuleElement wd = double_element(ctx, w);
  ModuleElement direct = many.eta.apply(wd);
  ModuleElement staged = outer.eta.apply(wd);
  std::size_t cut = 2 * (ranks[0] + ranks[1]);
  std::vector<Polynomial> head(staged.components().begin(),
                               staged.components().begin() + cut);
  std::vector<Polynomial> tail(staged.components().begin() + cut,
                               staged.components().end());
  ModuleElement u12(ctx.doubled(), std::move(head));
  ModuleElement u3(ctx.doubled(), std::move(tail));
  ModuleElement iterated = first_two.eta.apply(u12).concat(u3);
  if (direct == iterated) return {};
  std::string replay = replay_module("iterated direct sum failure", parts[0]);
  replay += print_module_decl("M2", "R", parts[1]);
  replay += print_module_decl("M3", "R", parts[2]);
  return fail_with(std::move(replay));
}

TrialOutcome check_quotient_presentation(SplitMix64& rng,
                                         const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  std::vector<ModuleElement> wgens;
  std::size_t count = rng.below(spec.max_generators + 1);
  for (std::size_t i = 0; i < count; ++i) {
    ModuleElement g = rand_member(rng, m, spec);
    if (!g.is_zero()) wgens.push_back(std::move(g));
  }
  Submodule w(ring, rank, std::move(wgens));
  PresentedQuotient q(m, w);
  DoubleContext ctx(ring);
  PresentedQuotient qd = double_quotient_module(ctx, q);
  bool ok = qd.numerator() == double_module(ctx, m).value() &&
            qd.denominator() == double_module(ctx, w).value() &&
            (q.is_zero() == qd.is_zero());
  if (ok) return {};
  std::string replay = replay_module("quotient double failure", m);
  replay += print_module_decl("W", "R", w);
  return fail_with(std::move(replay));
}

TrialOutcome check_coset_independence(SplitMix64& rng,
                                      const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule w = rand_module(rng, ring, rank, spec);
  ModuleElement h = rand_element(rng, ring, rank, spec, spec.max_degree);
  ModuleElement g = rng.chance(50)
                        ? h - rand_member(rng, w, spec)
                        : rand_element(rng, ring, rank, spec, spec.max_degree);
  DoubleContext ctx(ring);
  DoubledCoset ch = double_quotient_element(ctx, h, w);
  DoubledCoset cg = double_quotient_element(ctx, g, w);
  bool base = w.contains(h - g);
  bool up = ch.denominator.contains(ch.representative - cg.representative);
  if (base == up) return {};
  std::string replay = replay_module("coset independence failure", w);
  replay += "# h = " + h.to_string() + "\n# g = " + g.to_string() + "\n";
  return fail_with(std::move(replay));
}

TrialOutcome check_colength_transfer(SplitMix64& rng,
                                     const InstanceSpec& spec0) {
  InstanceSpec spec = shrink(spec0, 2, 2, 3, 2);
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  // Base colength is kept finite: the denominator contains a pure power of
  // every variable in every component.
  std::vector<ModuleElement> mgens;
  for (std::size_t v = 0; v < ring.arity(); ++v) {
    unsigned d = 1 + static_cast<unsigned>(rng.below(2));
    for (std::size_t c = 0; c < rank; ++c) {
      Polynomial power =
          Polynomial::term(ring, mono_var(ring.arity(), v, d), Rational(1));
      std::vector<Polynomial> comps(rank, Polynomial::zero(ring));
      comps[c] = power;
      mgens.push_back(ModuleElement(ring, std::move(comps)));
    }
  }
  if (rng.chance(40))
    mgens.push_back(rand_element(rng, ring, rank, spec, spec.max_degree));
  Submodule m(ring, rank, std::move(mgens));
  Submodule n = rng.chance(35) ? m : Submodule::full(ring, rank);

  Colength base = colength(m, n);
  if (!base.finite)
    return fail_with(replay_module("expected finite colength", m));
  DoubleContext ctx(ring);
  Colength up = colength(double_module(ctx, m).value(),
                         double_module(ctx, n).value());
  TrialOutcome out;
  if (up.finite) {
    out.note = "doubled-colength-finite";
    if (!(base.value <= up.value)) {
      std::string replay = replay_module("colength comparison failure", m);
      replay += print_module_decl("N", "R", n);
      replay += "colength M N;\n";
      return fail_with(std::move(replay));
    }
  } else {
    out.note = "doubled-colength-infinite";
  }
  return out;
}

TrialOutcome check_length_degenerate(SplitMix64& rng,
                                     const InstanceSpec& spec) {
  // In the torsion-free polynomial model a module of finite vector-space
  // dimension is zero, so only the degenerate instance exists; it is kept
  // as an executable record rather than a randomized property.
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule zero = Submodule::zero(ring, rank);
  DoubleContext ctx(ring);
  Submodule zd = double_module(ctx, zero).value();
  Colength base = colength(zero, zero);
  Colength up = colength(zd, zd);
  bool ok = zd.is_zero() && base.finite && up.finite &&
            base.value == 0 && up.value == 0;
  if (ok) return {};
  return fail_with("# degenerate length instance failure\n");
}

TrialOutcome check_rank_even(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  DoubleContext ctx(ring);
  std::size_t r = generic_rank(double_module(ctx, m).value());
  if (r % 2 == 0) return {};
  return fail_with(replay_module("even rank failure", m) + "double M;\n" +
                   "rank M_D;\n");
}

TrialOutcome check_generation_oracle(SplitMix64& rng,
                                     const InstanceSpec& spec0) {
  InstanceSpec spec = shrink(spec0, 2, 2, 2, 2);
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  DoubleContext ctx(ring);
  DoubledModule md = double_module(ctx, m);

  // Brute-force family: the doubles of all monomial multiples of the
  // generators up to multiplier degree 5.
  std::vector<Monomial> monos;
  std::vector<unsigned> exp(ring.arity(), 0);
  const unsigned bound = 5;
  while (true) {
    unsigned total = 0;
    for (unsigned e : exp) total += e;
    if (total <= bound) {
      Monomial mm{exp, total};
      monos.push_back(mm);
    }
    std::size_t v = 0;
    while (v < ring.arity()) {
      if (++exp[v] <= bound) break;
      exp[v] = 0;
      ++v;
    }
    if (v == ring.arity()) break;
  }
  std::vector<ModuleElement> brute;
  for (const auto& g : m.generators())
    for (const auto& mm : monos) {
      ModuleElement h = g.scaled(Polynomial::term(ring, mm, Rational(1)));
      brute.push_back(double_element(ctx, h));
    }
  Submodule brute_span(ctx.doubled(), 2 * rank, std::move(brute));
  bool ok = brute_span.contains(md.value()) &&
            md.value().contains(brute_span);
  if (ok) return {};
  return fail_with(replay_module("double generation oracle failure", m) +
                   "double M;\n");
}

TrialOutcome check_split_mono(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t p = 1 + rng.below(2);
  std::size_t q = 1 + rng.below(2);
  Submodule m = rand_module(rng, ring, p, spec);
  Submodule k = rand_module(rng, ring, q, spec);
  Submodule mk = direct_sum(m, k);
  std::vector<std::vector<Polynomial>> inc(
      p + q, std::vector<Polynomial>(p, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < p; ++i)
    inc[i][i] = Polynomial::constant(ring, Rational(1));
  std::vector<std::vector<Polynomial>> proj(
      p, std::vector<Polynomial>(p + q, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < p; ++i)
    proj[i][i] = Polynomial::constant(ring, Rational(1));
  if (rng.chance(40)) {
    // Break the retraction by scaling it.
    for (auto& row : proj)
      for (auto& e : row) e = e.scaled(Rational(2));
  }
  MatrixHom phi(m, mk, std::move(inc));
  MatrixHom psi(mk, m, std::move(proj));
  DoubleContext ctx(ring);
  bool base = hom_eq_on_domain(hom_compose(psi, phi), MatrixHom::identity(m));
  bool up = hom_eq_on_domain(
      hom_compose(double_matrix_hom(ctx, psi).value(),
                  double_matrix_hom(ctx, phi).value()),
      MatrixHom::identity(double_module(ctx, m).value()));
  if (base == up) return {};
  std::string replay = replay_module("split mono transfer failure", m);
  replay += print_module_decl("K", "R", k);
  return fail_with(std::move(replay));
}

TrialOutcome check_split_epi(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t p = 1 + rng.below(2);
  Submodule m = rand_module(rng, ring, p, spec);
  // With a zero complement the projection is an isomorphism and the section
  // equation holds on the nose; otherwise it fails.  Both truth values
  // must transfer.
  std::size_t q = 1 + rng.below(2);
  Submodule k = rng.chance(50) ? Submodule::zero(ring, q)
                               : rand_module(rng, ring, q, spec);
  Submodule mk = direct_sum(m, k);
  std::vector<std::vector<Polynomial>> inc(
      p + q, std::vector<Polynomial>(p, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < p; ++i)
    inc[i][i] = Polynomial::constant(ring, Rational(1));
  std::vector<std::vector<Polynomial>> proj(
      p, std::vector<Polynomial>(p + q, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < p; ++i)
    proj[i][i] = Polynomial::constant(ring, Rational(1));
  MatrixHom phi(m, mk, std::move(inc));
  MatrixHom psi(mk, m, std::move(proj));
  DoubleContext ctx(ring);
  bool base = hom_eq_on_domain(hom_compose(phi, psi),
                               MatrixHom::identity(mk));
  bool up = hom_eq_on_domain(
      hom_compose(double_matrix_hom(ctx, phi).value(),
                  double_matrix_hom(ctx, psi).value()),
      MatrixHom::identity(double_module(ctx, mk).value()));
  if (base == up) return {};
  std::string replay = replay_module("split epi transfer failure", m);
  replay += print_module_decl("K", "R", k);
  return fail_with(std::move(replay));
}

TrialOutcome check_split_iso(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t k = 1 + rng.below(2);
  Submodule full = Submodule::full(ring, k);
  auto [u, uinv] = make_unimodular(rng, ring, k, spec);
  bool broken = rng.chance(40);
  if (broken) {
    // Destroy invertibility with a variable scaling.
    Polynomial x0 = Polynomial::variable(ring, 0);
    for (std::size_t c = 0; c < k; ++c) u[0][c] = u[0][c] * x0;
  }
  MatrixHom f(full, full, u);
  DoubleContext ctx(ring);
  DoubledHom fd = double_matrix_hom(ctx, f);
  bool base = is_injective(f) && is_surjective(f);
  bool up = is_injective(fd.value()) && is_surjective(fd.value());
  if (base != up) return fail_with(replay_hom("iso witness failure", f));
  if (!broken) {
    MatrixHom g(full, full, uinv);
    bool witness =
        hom_eq_on_domain(hom_compose(g, f), MatrixHom::identity(full)) &&
        hom_eq_on_domain(
            hom_compose(double_matrix_hom(ctx, g).value(), fd.value()),
            MatrixHom::identity(double_module(ctx, full).value()));
    if (!witness) return fail_with(replay_hom("iso witness failure", f));
  }
  return {};
}

TrialOutcome check_subcategory(SplitMix64& rng, const InstanceSpec& spec) {
  // Doubled objects and morphisms are bona-fide objects and morphisms over
  // the doubled ring: the constructions themselves certify membership, and
  // the block shape pins the embedding.
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, false);
  DoubleContext ctx(ring);
  DoubledModule md = double_module(ctx, m);
  DoubledHom fd = double_matrix_hom(ctx, f);
  bool ok = md.value().ring() == ctx.doubled() &&
            md.value().rank() == 2 * m.rank() &&
            fd.value().domain().ring() == ctx.doubled() &&
            has_double_block_structure(ctx, fd.value());
  if (ok) return {};
  return fail_with(replay_hom("subcategory embedding failure", f));
}

TrialOutcome check_matrix_induced(SplitMix64& rng, const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(spec.max_rank);
  Submodule m = rand_module(rng, ring, rank, spec);
  MatrixHom f = rand_hom(rng, m, spec, true);
  ModuleElement h = rand_member(rng, m, spec);
  bool agrees = f.apply(h) == apply_matrix(f.matrix(), h);
  // The construction must reject matrices that do not map the domain into
  // the codomain.
  bool rejected = false;
  try {
    PolyRing r1(std::vector<std::string>{"x"});
    Submodule dom(r1, 1, {ModuleElement::parse(r1, "(x)")});
    Submodule cod(r1, 1, {ModuleElement::parse(r1, "(x^2)")});
    MatrixHom bad(dom, cod, identity_matrix(r1, 1));
    (void)bad;
  } catch (const Error&) {
    rejected = true;
  }
  if (agrees && rejected) return {};
  return fail_with(replay_hom("matrix-induced contract failure", f));
}

// ------------------------------------------------------- complex checks

TrialOutcome check_complex_transfer(SplitMix64& rng,
                                    const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, rng.chance(50), false);
  if (rng.chance(35) && c.length() >= 2) {
    // Perturb one differential inside its codomain: the result is still a
    // diagram of homs but usually not a complex.
    std::vector<MatrixHom> diffs = c.diffs();
    std::size_t k = rng.below(diffs.size());
    const Submodule& cod = diffs[k].codomain();
    std::vector<std::vector<Polynomial>> tweak(
        cod.rank(), std::vector<Polynomial>(diffs[k].domain().rank(),
                                            Polynomial::zero(c.ring())));
    ModuleElement column = rand_member(rng, cod, spec);
    for (std::size_t r = 0; r < cod.rank(); ++r)
      tweak[r][0] = column.component(r);
    diffs[k] = diffs[k] + MatrixHom(diffs[k].domain(), cod, std::move(tweak));
    c = ChainComplex(c.top_degree(), c.modules(), std::move(diffs));
  }
  DoubleContext ctx(c.ring());
  bool base = is_complex(c);
  bool up = is_complex(double_complex(ctx, c));
  if (base == up) return {};
  return fail_with(replay_complex("complex law transfer failure", c) +
                   "double C;\nexact C;\n");
}

TrialOutcome check_double_complex_shape(SplitMix64& rng,
                                        const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, rng.chance(50), false);
  DoubleContext ctx(c.ring());
  ChainComplex cd = double_complex(ctx, c);
  bool ok = is_complex(cd) && cd.length() == c.length() &&
            cd.top_degree() == c.top_degree();
  for (std::size_t k = 0; ok && k < c.length(); ++k)
    ok = cd.modules()[k] == double_module(ctx, c.modules()[k]).value();
  if (ok) return {};
  return fail_with(replay_complex("double complex shape failure", c));
}

TrialOutcome check_exactness_propagation(SplitMix64& rng,
                                         const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, rng.chance(40), true);
  DoubleContext ctx(c.ring());
  ExactnessReport report = exactness_propagation_check(ctx, c);
  if (report.implication_holds) return {};
  return fail_with(replay_complex("exactness propagation failure", c) +
                   "exact C;\n");
}

TrialOutcome check_chain_map_double(SplitMix64& rng,
                                    const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, true, false);
  DegreeOneMap mu = rand_degree_one(rng, c, c, spec);
  ChainMap alpha = tilde(mu);
  if (rng.chance(50))
    alpha = chain_sum(alpha,
                      scalar_chain_map(c, rand_poly(rng, c.ring(), spec, 1)));
  DoubleContext ctx(c.ring());
  bool ok = is_chain_map(alpha) &&
            is_chain_map(double_chain_map(ctx, alpha));
  if (ok) return {};
  return fail_with(replay_complex("chain map doubling failure", c));
}

TrialOutcome check_chain_compose(SplitMix64& rng, const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, true, false);
  ChainMap alpha = tilde(rand_degree_one(rng, c, c, spec));
  ChainMap beta = chain_sum(
      tilde(rand_degree_one(rng, c, c, spec)),
      scalar_chain_map(c, rand_poly(rng, c.ring(), spec, 1)));
  DoubleContext ctx(c.ring());
  bool ok = chain_map_eq(
      double_chain_map(ctx, compose_chain_maps(beta, alpha)),
      compose_chain_maps(double_chain_map(ctx, beta),
                         double_chain_map(ctx, alpha)));
  if (ok) return {};
  return fail_with(replay_complex("chain composition failure", c));
}

TrialOutcome check_tilde_double(SplitMix64& rng, const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, true, false);
  DegreeOneMap mu = rand_degree_one(rng, c, c, spec);
  DoubleContext ctx(c.ring());
  ChainMap left = double_chain_map(ctx, tilde(mu));
  ChainMap right = tilde(double_degree_one_map(ctx, mu));
  // The identity holds at matrix level, not merely as maps.
  bool ok = true;
  for (std::size_t k = 0; k < left.components().size(); ++k)
    if (left.components()[k].matrix() != right.components()[k].matrix())
      ok = false;
  if (ok) return {};
  return fail_with(replay_complex("tilde doubling failure", c));
}

TrialOutcome check_homotopy_transfer(SplitMix64& rng,
                                     const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, true, false);
  PolyRing ring = c.ring();
  ChainComplex d = rand_complex(rng, spec, true, false, &ring);
  while (d.length() != c.length())
    d = rand_complex(rng, spec, true, false, &ring);
  DegreeOneMap mu = rand_degree_one(rng, c, d, spec);
  ChainMap beta = tilde(rand_degree_one(rng, c, d, spec));
  ChainMap alpha = chain_sum(tilde(mu), beta);
  if (rng.chance(40))
    alpha = chain_sum(alpha, tilde(rand_degree_one(rng, c, d, spec)));
  DoubleContext ctx(c.ring());
  bool base = is_homotopy(alpha, beta, mu);
  bool up = is_homotopy(double_chain_map(ctx, alpha),
                        double_chain_map(ctx, beta),
                        double_degree_one_map(ctx, mu));
  if (base == up) return {};
  return fail_with(replay_complex("homotopy transfer failure", c));
}

TrialOutcome check_homotopy_equivalence(SplitMix64& rng,
                                        const InstanceSpec& spec) {
  ChainComplex c = rand_complex(rng, spec, true, false);
  while (c.length() % 2 != 0) c = rand_complex(rng, spec, true, false);
  const PolyRing& ring = c.ring();
  std::size_t mrank = 1 + rng.below(2);

  // Contractible padding: full modules with differentials alternating
  // identity / zero from the top, and the mirrored contraction.
  std::vector<Submodule> cprime_modules;
  std::vector<MatrixHom> cprime_diffs;
  Submodule pad = Submodule::full(ring, mrank);
  for (std::size_t k = 0; k < c.length(); ++k)
    cprime_modules.push_back(direct_sum(c.modules()[k], pad));
  for (std::size_t k = 0; k < c.diffs().size(); ++k) {
    const MatrixHom& dk = c.diffs()[k];
    bool id_block = (k % 2 == 0);
    auto pad_mat = id_block
                       ? identity_matrix(ring, mrank)
                       : std::vector<std::vector<Polynomial>>(
                             mrank, std::vector<Polynomial>(
                                        mrank, Polynomial::zero(ring)));
    auto mat = block_diag(ring, dk.matrix(), dk.codomain().rank(),
                          dk.domain().rank(), pad_mat, mrank, mrank);
    cprime_diffs.push_back(MatrixHom(cprime_modules[k], cprime_modules[k + 1],
                                     std::move(mat)));
  }
  ChainComplex cprime(c.top_degree(), cprime_modules, cprime_diffs);

  std::vector<MatrixHom> ucomps, vcomps;
  for (std::size_t k = 0; k < c.length(); ++k) {
    std::size_t ck = c.modules()[k].rank();
    std::vector<std::vector<Polynomial>> inc(
        ck + mrank, std::vector<Polynomial>(ck, Polynomial::zero(ring)));
    std::vector<std::vector<Polynomial>> proj(
        ck, std::vector<Polynomial>(ck + mrank, Polynomial::zero(ring)));
    for (std::size_t i = 0; i < ck; ++i) {
      inc[i][i] = Polynomial::constant(ring, Rational(1));
      proj[i][i] = Polynomial::constant(ring, Rational(1));
    }
    ucomps.push_back(MatrixHom(c.modules()[k], cprime_modules[k], inc));
    vcomps.push_back(MatrixHom(cprime_modules[k], c.modules()[k], proj));
  }
  ChainMap u(c, cprime, ucomps);
  ChainMap v(cprime, c, vcomps);

  std::vector<MatrixHom> nucomps;
  for (std::size_t k = 0; k + 1 < c.length(); ++k) {
    std::size_t dom_rank = cprime_modules[k + 1].rank();
    std::size_t cod_rank = cprime_modules[k].rank();
    std::size_t dom_base = c.modules()[k + 1].rank();
    std::size_t cod_base = c.modules()[k].rank();
    std::vector<std::vector<Polynomial>> mat(
        cod_rank, std::vector<Polynomial>(dom_rank, Polynomial::zero(ring)));
    if (k % 2 == 0)
      for (std::size_t i = 0; i < mrank; ++i)
        mat[cod_base + i][dom_base + i] =
            Polynomial::constant(ring, Rational(1));
    nucomps.push_back(
        MatrixHom(cprime_modules[k + 1], cprime_modules[k], std::move(mat)));
  }
  DegreeOneMap nu(cprime, cprime, nucomps);

  bool downstairs =
      is_chain_map(u) && is_chain_map(v) &&
      chain_map_eq(compose_chain_maps(v, u), identity_chain_map(c)) &&
      is_homotopy(identity_chain_map(cprime), compose_chain_maps(u, v), nu);
  DoubleContext ctx(ring);
  ChainMap ud = double_chain_map(ctx, u);
  ChainMap vd = double_chain_map(ctx, v);
  DegreeOneMap nud = double_degree_one_map(ctx, nu);
  bool upstairs =
      chain_map_eq(compose_chain_maps(vd, ud),
                   identity_chain_map(ud.source())) &&
      is_homotopy(identity_chain_map(ud.target()),
                  compose_chain_maps(ud, vd), nud);
  if (downstairs && upstairs) return {};
  return fail_with(replay_complex("homotopy equivalence transfer failure", c));
}

TrialOutcome check_contractibility(SplitMix64& rng,
                                   const InstanceSpec& spec) {
  PolyRing ring = rand_ring(rng, shrink(spec, 2, 2, 3, 2));
  std::size_t k = 1 + rng.below(2);
  auto [u, uinv] = make_unimodular(rng, ring, k, spec);
  Submodule full = Submodule::full(ring, k);
  MatrixHom d1(full, full, u);
  ChainComplex c(1, {full, full}, {d1});
  DegreeOneMap mu(c, c, {MatrixHom(full, full, uinv)});
  DoubleContext ctx(ring);
  ContractibilityReport report = contractibility_transfer(ctx, c, mu);
  if (report.witness_valid && report.doubled_valid) return {};
  return fail_with(replay_complex("contractibility transfer failure", c),
                   report.witness_valid ? "doubled-witness-failed"
                                        : "witness-invalid");
}

// ------------------------------------------------------- relative checks

TrialOutcome check_slot_identity(SplitMix64& rng, const InstanceSpec& spec) {
  RelativeMap rel = rng.chance(25) ? cusp_germ() : rand_germ(rng, spec);
  Polynomial alpha =
      rand_poly(rng, rel.context_x().doubled(), spec, spec.max_degree);
  if (two_route_slot_identity(rel, alpha)) return {};
  return fail_with(replay_germ("slot identity failure", rel) +
                   "# alpha = " + alpha.to_string() + "\n");
}

TrialOutcome check_relative_defining(SplitMix64& rng,
                                     const InstanceSpec& spec0) {
  InstanceSpec spec = shrink(spec0, 2, 2, 3, 2);
  RelativeMap rel = rng.chance(25) ? cusp_germ() : rand_germ(rng, spec);
  std::size_t rank = 1 + rng.below(2);
  Submodule m = rand_module(rng, rel.context_x().base(), rank, spec);
  GeneratorImageHom phi = rand_relhom(rng, rel, m, spec);
  RelativeDoubledHom phid = relative_double_hom(phi);
  ModuleElement h = rand_member(rng, m, spec);
  ModuleElement lhs =
      phid.apply(double_element(rel.context_x(), h));
  ModuleElement rhs = double_element(rel.context_y(), phi.apply(h));
  if (lhs == rhs) return {};
  std::string replay = replay_germ("relative defining identity failure", rel);
  replay += print_module_decl("M", "RX", m);
  replay += print_module_decl("N", "RY", phi.codomain());
  replay += "relhom F : M -> N germ phi images " +
            element_list(phi.images()) + ";\n";
  replay += "relative-double phi F;\n";
  return fail_with(std::move(replay));
}

TrialOutcome check_relative_compose(SplitMix64& rng,
                                    const InstanceSpec& spec0) {
  InstanceSpec spec = shrink(spec0, 2, 2, 2, 2);
  DoubleContext cx = rand_context(rng, spec, "x");
  DoubleContext cy = rand_context(rng, spec, "t");
  DoubleContext cz = rand_context(rng, spec, "u");
  RelativeMap relxy(cx, cy, rand_pullback(rng, cx.base(), cy.base(), spec));
  RelativeMap relyz(cy, cz, rand_pullback(rng, cy.base(), cz.base(), spec));
  std::size_t rank = 1 + rng.below(2);
  Submodule m = rand_module(rng, cx.base(), rank, spec);
  GeneratorImageHom phi = rand_relhom(rng, relxy, m, spec);
  GeneratorImageHom psi = rand_relhom(rng, relyz, phi.codomain(), spec);
  GeneratorImageHom comp = compose_generator_image(psi, phi);
  RelativeDoubledHom phid = relative_double_hom(phi);
  RelativeDoubledHom psid = relative_double_hom(psi);
  RelativeDoubledHom compd = relative_double_hom(comp);
  bool ok = true;
  for (std::size_t k = 0; k < compd.assignments().size(); ++k)
    if (compd.assignments()[k] != psid.apply(phid.assignments()[k]))
      ok = false;
  ModuleElement h = rand_member(rng, m, spec);
  ModuleElement hd = double_element(cx, h);
  if (compd.apply(hd) != psid.apply(phid.apply(hd))) ok = false;
  if (ok) return {};
  std::string replay = "# relative composition failure\n";
  replay += print_ring_decl("RX", cx.base());
  replay += print_ring_decl("RY", cy.base());
  replay += print_ring_decl("RZ", cz.base());
  replay += print_germ_decl("phi", "RX", "RY", relxy.pullback(), cy);
  replay += print_germ_decl("psi", "RY", "RZ", relyz.pullback(), cz);
  return fail_with(std::move(replay));
}

TrialOutcome check_selftest_pass(SplitMix64&, const InstanceSpec&) {
  return {};
}

TrialOutcome check_selftest_fail(SplitMix64& rng, const InstanceSpec&) {
  if (rng.below(2) == 0)
    return fail_with("# intentional self-test failure\n", "selftest");
  return {};
}

// ----------------------------------------------------------------- catalog

struct CheckEntry {
  PropertyEntry meta;
  CheckFn fn;
};

const std::vector<CheckEntry>& check_table() {
  static const std::vector<CheckEntry> table = {
      {{"P3.1-a", "property",
        "doubling elements is injective: h_D = g_D iff h = g"},
       check_element_injective},
      {{"P3.1-b", "property",
        "membership transfer: h in M iff h_D in M_D"},
       check_membership},
      {{"P3.1-c", "property",
        "containment transfer: M inside N iff M_D inside N_D"},
       check_containment},
      {{"P3.1-d", "property", "equality transfer: M = N iff M_D = N_D"},
       check_equality},
      {{"C3.2", "property",
        "doubling is an injective additive map on elements"},
       check_additive},
      {{"T3.3", "property",
        "the doubled hom satisfies phi_D(h_D) = (phi(h))_D"},
       check_defining_identity},
      {{"P3.4-a", "property", "image transfer: Im(phi_D) = (Im phi)_D"},
       check_image_identity},
      {{"P3.4-b", "property",
        "kernel inclusion: (Ker phi)_D inside Ker(phi_D); strict cases "
        "logged"},
       check_kernel_inclusion},
      {{"C3.5-a", "property",
        "phi surjective iff phi_D surjective"},
       check_surjective_transfer},
      {{"C3.5-b", "property", "phi_D injective implies phi injective"},
       check_injective_down},
      {{"C3.5-c", "property", "phi isomorphism iff phi_D isomorphism"},
       check_iso_transfer},
      {{"C3.5-d", "property", "phi zero iff phi_D zero"},
       check_zero_transfer},
      {{"P3.6", "property",
        "composition-zero law transfers to the doubled diagram"},
       check_complex_transfer},
      {{"D3.7", "formal",
        "the double of a chain complex is a chain complex of doubles"},
       check_double_complex_shape},
      {{"P3.8", "property",
        "doubled exactness everywhere implies base exactness"},
       check_exactness_propagation},
      {{"P3.9-a", "property",
        "phi = phi' as maps iff phi_D = phi'_D as maps"},
       check_hom_faithful},
      {{"P3.9-b", "property", "(gamma . phi)_D = gamma_D . phi_D"},
       check_compose},
      {{"P3.9-c", "property", "(phi + psi)_D = phi_D + psi_D"},
       check_hom_additive},
      {{"P3.10", "property", "doubling a chain map yields a chain map"},
       check_chain_map_double},
      {{"C3.11", "property",
        "doubling commutes with chain map composition"},
       check_chain_compose},
      {{"L3.12", "property",
        "tilde of the doubled degree-one map equals the doubled tilde, "
        "matrix-exactly"},
       check_tilde_double},
      {{"P3.13", "property",
        "mu is a homotopy between alpha, beta iff mu_D is one between "
        "their doubles"},
       check_homotopy_transfer},
      {{"C3.14", "property",
        "homotopy equivalences double to homotopy equivalences"},
       check_homotopy_equivalence},
      {{"C3.15", "property",
        "contraction witnesses double to contraction witnesses"},
       check_contractibility},
      {{"T3.16-id", "property", "the double of the identity is the identity"},
       check_identity_functor},
      {{"T3.16-obj", "property",
        "object map of the double functor is a bijection onto its image"},
       check_equality},
      {{"T3.16-faithful", "property",
        "morphism map of the double functor is faithful and full onto "
        "doubles"},
       check_hom_faithful},
      {{"C3.17", "formal",
        "doubles land inside the module category over the doubled ring"},
       check_subcategory},
      {{"C3.18-a", "property",
        "split monos transfer: a retraction doubles to a retraction"},
       check_split_mono},
      {{"C3.18-b", "property",
        "split epis transfer: a section doubles to a section"},
       check_split_epi},
      {{"C3.18-c", "property",
        "isomorphisms with explicit inverses transfer both ways"},
       check_split_iso},
      {{"L3.19", "formal",
        "homs are matrix-induced: evaluation is matrix action and "
        "ill-typed matrices are rejected"},
       check_matrix_induced},
      {{"P3.20", "property",
        "doubled matrices are block diagonal in the two variable copies"},
       check_block_structure},
      {{"T3.21", "property",
        "eta and delta are mutually inverse between (M + N)_D and M_D + N_D"},
       check_direct_sum},
      {{"C3.22", "property",
        "iterated pairwise direct-sum isos agree with the r-fold iso"},
       check_direct_sum_assoc},
      {{"P3.1.13-a", "out-of-scope",
        "length comparison: only the degenerate zero-module instance exists "
        "in the torsion-free polynomial model"},
       check_length_degenerate},
      {{"P3.1.13-b", "property",
        "finite doubled colength forces finite base colength, bounded by it"},
       check_colength_transfer},
      {{"Q4-pres", "property",
        "(M/W)_D is presented by M_D over W_D with containment preserved"},
       check_quotient_presentation},
      {{"Q4-rep", "property",
        "coset doubling is independent of the representative"},
       check_coset_independence},
      {{"L3.23", "property",
        "fixing the second slot commutes with the tensor pullback"},
       check_slot_identity},
      {{"T3.24", "property",
        "the relative double satisfies phi_D(h_D) = (phi(h))_D"},
       check_relative_defining},
      {{"P3.25", "property",
        "relative doubles compose: (psi . phi)_D = psi_D . phi_D"},
       check_relative_compose},
      {{"RANK-EVEN", "property",
        "the generic rank of every doubled module is even"},
       check_rank_even},
      {{"DGEN-ORACLE", "property",
        "closed-form generators of M_D span the brute-force family of "
        "doubled multiples up to degree 5"},
       check_generation_oracle},
      {{"SELFTEST-PASS", "selftest", "harness check: always passes"},
       check_selftest_pass},
      {{"SELFTEST-FAIL", "selftest",
        "harness check: fails on about half the trials, exercising replay"},
       check_selftest_fail},
  };
  return table;
}

uint64_t trial_seed(uint64_t seed, unsigned trial) {
  SplitMix64 rng(seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
  return rng.next();
}

}  // namespace

const std::vector<PropertyEntry>& property_catalog() {
  static const std::vector<PropertyEntry> catalog = [] {
    std::vector<PropertyEntry> entries;
    for (const auto& e : check_table()) entries.push_back(e.meta);
    return entries;
  }();
  return catalog;
}

bool property_known(const std::string& id) {
  for (const auto& e : check_table())
    if (e.meta.id == id) return true;
  return false;
}

Submodule gen_submodule(const InstanceSpec& spec, uint64_t seed) {
  SplitMix64 rng(seed);
  PolyRing ring = rand_ring(rng, spec);
  std::size_t rank = 1 + rng.below(std::max(1u, spec.max_rank));
  return rand_module(rng, ring, rank, spec);
}

PropertyReport run_property(const std::string& id, unsigned trials,
                            uint64_t seed, const InstanceSpec& spec) {
  const CheckEntry* entry = nullptr;
  for (const auto& e : check_table())
    if (e.meta.id == id) entry = &e;
  if (!entry) throw Error("unknown property id: " + id);

  auto started = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> results(trials);
  std::atomic<unsigned> cursor{0};
  auto work = [&] {
    while (true) {
      unsigned t = cursor.fetch_add(1);
      if (t >= trials) break;
      SplitMix64 rng(trial_seed(seed, t));
      try {
        results[t] = entry->fn(rng, spec);
      } catch (const std::exception& e) {
        results[t].pass = false;
        results[t].note = "exception";
        results[t].replay =
            std::string("# unexpected error: ") + e.what() + "\n";
      }
    }
  };
  unsigned workers = std::min<unsigned>(verifier_thread_cap(),
                                        std::max(1u, trials));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  PropertyReport report;
  report.id = id;
  report.trials = trials;
  std::map<std::string, unsigned> notes;
  for (unsigned t = 0; t < trials; ++t) {
    if (!results[t].pass)
      report.failures.push_back(
          {t, trial_seed(seed, t), std::move(results[t].replay)});
    if (!results[t].note.empty()) ++notes[results[t].note];
  }
  for (auto& [label, count] : notes) report.notes.emplace_back(label, count);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return report;
}

ExactnessExperiment exactness_experiment(unsigned trials, uint64_t seed,
                                         const InstanceSpec& spec) {
  ExactnessExperiment table;
  for (unsigned t = 0; t < trials; ++t) {
    SplitMix64 rng(trial_seed(seed, t));
    ChainComplex c = rand_complex(rng, spec, rng.chance(40), true);
    DoubleContext ctx(c.ring());
    ExactnessReport report = exactness_propagation_check(ctx, c);
    if (report.base_exact && report.doubled_exact)
      ++table.both;
    else if (report.base_exact)
      ++table.base_only;
    else if (report.doubled_exact)
      ++table.doubled_only;
    else
      ++table.neither;
  }
  return table;
}

std::vector<std::string> write_replay_files(const PropertyReport& report,
                                            const std::string& dir) {
  std::vector<std::string> written;
  for (const auto& failure : report.failures) {
    std::string name =
        "replay-" + report.id + "-trial" + std::to_string(failure.trial) +
        ".dk";
    std::string path = dir.empty() ? name : dir + "/" + name;
    std::ofstream out(path);
    if (!out) throw Error("cannot write replay file: " + path);
    out << "# property " << report.id << " trial " << failure.trial
        << " seed " << failure.seed << "\n"
        << failure.replay;
    written.push_back(path);
  }
  return written;
}

}  // namespace doublekit
