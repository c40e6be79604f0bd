#include "doublekit/double_functor.hpp"

#include <set>

namespace doublekit {

// ------------------------------------------------------------ DoubleContext

std::string doubled_var_name(const std::string& name, bool all_start_with_x) {
  if (all_start_with_x) return "y" + name.substr(1);
  return "y" + name;
}

DoubleContext::DoubleContext(PolyRing base) {
  bool all_x = true;
  for (const auto& v : base.vars())
    if (v.empty() || v[0] != 'x') all_x = false;
  std::vector<std::string> second;
  second.reserve(base.arity());
  for (const auto& v : base.vars())
    second.push_back(doubled_var_name(v, all_x));
  base_ = std::move(base);
  init(base_.vars(), std::move(second));
}

DoubleContext::DoubleContext(PolyRing base,
                             std::vector<std::string> first_copy,
                             std::vector<std::string> second_copy) {
  base_ = std::move(base);
  init(std::move(first_copy), std::move(second_copy));
}

void DoubleContext::init(std::vector<std::string> first_copy,
                         std::vector<std::string> second_copy) {
  if (first_copy.size() != base_.arity() ||
      second_copy.size() != base_.arity())
    throw Error("doubled ring needs one name per variable copy");
  std::vector<std::string> all = first_copy;
  all.insert(all.end(), second_copy.begin(), second_copy.end());
  std::set<std::string> distinct(all.begin(), all.end());
  if (distinct.size() != all.size())
    throw Error(
        "doubled variable names collide; pick explicit copy names");
  doubled_ = PolyRing(std::move(all));
  std::vector<Polynomial> first_images, second_images;
  for (std::size_t i = 0; i < base_.arity(); ++i) {
    first_images.push_back(Polynomial::variable(doubled_, i));
    second_images.push_back(
        Polynomial::variable(doubled_, base_.arity() + i));
  }
  pi1_ = RingMorphism(base_, doubled_, std::move(first_images));
  pi2_ = RingMorphism(base_, doubled_, std::move(second_images));
}

// ------------------------------------------------------------------ doubles

ModuleElement double_element(const DoubleContext& ctx,
                             const ModuleElement& h) {
  if (h.ring() != ctx.base())
    throw Error("element to double lives in the wrong ring");
  return h.mapped(ctx.pi1()).concat(h.mapped(ctx.pi2()));
}

namespace {

// (0_p, (y_j - x_j) * (g thru pi2)).
ModuleElement aux_generator(const DoubleContext& ctx, const ModuleElement& g,
                            std::size_t var) {
  const PolyRing& s = ctx.doubled();
  Polynomial factor = Polynomial::variable(s, ctx.second_index(var)) -
                      Polynomial::variable(s, ctx.first_index(var));
  ModuleElement second = g.mapped(ctx.pi2()).scaled(factor);
  return ModuleElement::zero(s, g.rank()).concat(second);
}

}  // namespace

DoubledModule::DoubledModule(DoubleContext ctx, Submodule source)
    : ctx_(std::move(ctx)), source_(std::move(source)) {
  if (source_.ring() != ctx_.base())
    throw Error("module to double lives in the wrong ring");
  // Finite generating family for the span of { h_D : h in source }: the
  // doubled generators give all (g_i)_D, and the auxiliary elements supply
  // the difference (x_j g)_D - x_j (g)_D so that coefficient multiplication
  // on either variable copy stays inside the span.
  std::vector<ModuleElement> gens;
  for (const auto& g : source_.generators())
    gens.push_back(double_element(ctx_, g));
  for (const auto& g : source_.generators())
    for (std::size_t j = 0; j < ctx_.base().arity(); ++j)
      gens.push_back(aux_generator(ctx_, g, j));
  value_ = Submodule(ctx_.doubled(), 2 * source_.rank(), std::move(gens));
}

const ModuleElement& DoubledModule::generator(std::size_t k) const {
  if (k >= value_.generators().size())
    throw Error("doubled generator index out of range");
  return value_.generators()[k];
}

std::size_t DoubledModule::aux_count() const {
  return source_.generators().size() * ctx_.base().arity();
}

namespace {

// Prints p as a product factor: bare when it is a single term with
// coefficient +-1 (sign hoisted by the caller being absent here), wrapped in
// parentheses otherwise.
std::string factor_string(const Polynomial& p) {
  if (p.terms().size() == 1 && p.lead_coeff() == 1)
    return p.to_string();
  return "(" + p.to_string() + ")";
}

}  // namespace

std::vector<std::string> DoubledModule::structural_generator_strings() const {
  std::vector<std::string> out;
  const std::size_t p = source_.rank();
  const std::size_t n = ctx_.base().arity();
  for (const auto& g : source_.generators())
    out.push_back(double_element(ctx_, g).to_string());
  for (std::size_t i = 0; i < source_.generators().size(); ++i) {
    ModuleElement second = source_.generators()[i].mapped(ctx_.pi2());
    for (std::size_t j = 0; j < n; ++j) {
      std::string diff = ctx_.doubled().var_name(ctx_.second_index(j)) +
                         " - " +
                         ctx_.doubled().var_name(ctx_.first_index(j));
      std::string row = "(";
      for (std::size_t c = 0; c < 2 * p; ++c) {
        if (c > 0) row += ", ";
        const Polynomial* comp = c < p ? nullptr : &second.component(c - p);
        if (comp == nullptr || comp->is_zero()) {
          row += "0";
        } else if (comp->is_constant() && comp->lead_coeff() == 1) {
          row += diff;  // (second - first) * 1 prints as the bare difference
        } else {
          row += "(" + diff + ")*" + factor_string(*comp);
        }
      }
      row += ")";
      out.push_back(std::move(row));
    }
  }
  return out;
}

DoubledModule double_module(const DoubleContext& ctx, const Submodule& m) {
  return DoubledModule(ctx, m);
}

DoubledHom::DoubledHom(DoubleContext ctx, MatrixHom source)
    : ctx_(std::move(ctx)), source_(std::move(source)) {
  const std::size_t q = source_.codomain().rank();
  const std::size_t p = source_.domain().rank();
  const PolyRing& s = ctx_.doubled();
  std::vector<std::vector<Polynomial>> block(
      2 * q, std::vector<Polynomial>(2 * p, Polynomial::zero(s)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      block[i][j] = ctx_.pi1()(source_.matrix()[i][j]);
      block[q + i][p + j] = ctx_.pi2()(source_.matrix()[i][j]);
    }
  value_ = MatrixHom(double_module(ctx_, source_.domain()).value(),
                     double_module(ctx_, source_.codomain()).value(),
                     std::move(block));
}

DoubledHom double_matrix_hom(const DoubleContext& ctx, const MatrixHom& phi) {
  return DoubledHom(ctx, phi);
}

bool has_double_block_structure(const DoubleContext& ctx,
                                const MatrixHom& hom) {
  const std::size_t rows = hom.codomain().rank();
  const std::size_t cols = hom.domain().rank();
  if (rows % 2 != 0 || cols % 2 != 0) return false;
  const std::size_t q = rows / 2, p = cols / 2;
  const std::size_t n = ctx.base().arity();
  auto uses_only = [&](const Polynomial& poly, bool first_copy) {
    for (const auto& t : poly.terms())
      for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
        if (t.mono.exps[v] == 0) continue;
        bool in_first = v < n;
        if (in_first != first_copy) return false;
      }
    return true;
  };
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      bool top = i < q, left = j < p;
      const Polynomial& entry = hom.matrix()[i][j];
      if (top != left && !entry.is_zero()) return false;  // off-diagonal
      if (top && left && !uses_only(entry, true)) return false;
      if (!top && !left && !uses_only(entry, false)) return false;
    }
  // The two blocks must be the same base matrix seen through pi1 and pi2:
  // swapping the variable copies must carry one block onto the other.
  std::vector<Polynomial> swap_images;
  for (std::size_t v = 0; v < 2 * n; ++v)
    swap_images.push_back(
        Polynomial::variable(ctx.doubled(), v < n ? n + v : v - n));
  RingMorphism swap_copies(ctx.doubled(), ctx.doubled(),
                           std::move(swap_images));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (swap_copies(hom.matrix()[i][j]) != hom.matrix()[q + i][p + j])
        return false;
  return true;
}

DoubledCoset double_quotient_element(const DoubleContext& ctx,
                                     const ModuleElement& h,
                                     const Submodule& w) {
  if (h.ring() != ctx.base() || w.ring() != ctx.base())
    throw Error("coset data lives in the wrong ring");
  if (h.rank() != w.rank()) throw Error("coset ambient mismatch");
  return DoubledCoset{double_element(ctx, h),
                      double_module(ctx, w).value()};
}

PresentedQuotient double_quotient_module(const DoubleContext& ctx,
                                         const PresentedQuotient& q) {
  Submodule numerator = double_module(ctx, q.numerator()).value();
  Submodule denominator = double_module(ctx, q.denominator()).value();
  return PresentedQuotient(std::move(numerator), std::move(denominator));
}

// -------------------------------------------------------------- direct sums

namespace {

MatrixHom permutation_hom(const Submodule& domain, const Submodule& codomain,
                          const std::vector<std::size_t>& target_of) {
  const PolyRing& ring = domain.ring();
  std::vector<std::vector<Polynomial>> a(
      codomain.rank(),
      std::vector<Polynomial>(domain.rank(), Polynomial::zero(ring)));
  for (std::size_t src = 0; src < target_of.size(); ++src)
    a[target_of[src]][src] = Polynomial::constant(ring, Rational(1));
  return MatrixHom(domain, codomain, std::move(a));
}

}  // namespace

DirectSumIso direct_sum_iso_many(const DoubleContext& ctx,
                                 const std::vector<Submodule>& parts) {
  if (parts.empty()) throw Error("direct sum of zero modules");
  for (const auto& m : parts)
    if (m.ring() != ctx.base())
      throw Error("direct sum part lives in the wrong ring");
  Submodule total = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    total = direct_sum(total, parts[i]);

  // Source ambient layout: first copies of all parts, then second copies:
  // (p1..pr | p1..pr).  Target: both copies per part: (p1 p1 | p2 p2 | ...).
  std::vector<std::size_t> offsets;  // start of part i in the base sum
  std::size_t total_rank = 0;
  for (const auto& m : parts) {
    offsets.push_back(total_rank);
    total_rank += m.rank();
  }
  std::vector<std::size_t> doubled_offsets;  // start of (part i)_D in target
  std::size_t acc = 0;
  for (const auto& m : parts) {
    doubled_offsets.push_back(acc);
    acc += 2 * m.rank();
  }
  std::vector<std::size_t> target_of(2 * total_rank);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t c = 0; c < parts[i].rank(); ++c) {
      target_of[offsets[i] + c] = doubled_offsets[i] + c;
      target_of[total_rank + offsets[i] + c] =
          doubled_offsets[i] + parts[i].rank() + c;
    }
  }

  Submodule source = double_module(ctx, total).value();
  Submodule target = double_module(ctx, parts[0]).value();
  for (std::size_t i = 1; i < parts.size(); ++i)
    target = direct_sum(target, double_module(ctx, parts[i]).value());

  MatrixHom eta = permutation_hom(source, target, target_of);
  std::vector<std::size_t> inverse(target_of.size());
  for (std::size_t src = 0; src < target_of.size(); ++src)
    inverse[target_of[src]] = src;
  MatrixHom delta = permutation_hom(target, source, inverse);
  return DirectSumIso{std::move(eta), std::move(delta)};
}

DirectSumIso direct_sum_iso(const DoubleContext& ctx, const Submodule& m,
                            const Submodule& n) {
  return direct_sum_iso_many(ctx, {m, n});
}

// ------------------------------------------------------------ functor audit

std::vector<FunctorCheckEntry> functor_check(
    const DoubleContext& ctx, const std::vector<Submodule>& modules,
    const std::vector<MatrixHom>& homs) {
  std::vector<FunctorCheckEntry> report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.push_back({std::move(name), pass, std::move(detail)});
  };

  for (std::size_t i = 0; i < modules.size(); ++i) {
    const Submodule& m = modules[i];
    DoubledModule md = double_module(ctx, m);
    std::string tag = "module#" + std::to_string(i);
    add(tag + ".identity-functor",
        hom_eq_on_domain(
            double_matrix_hom(ctx, MatrixHom::identity(m)).value(),
            MatrixHom::identity(md.value())));
    add(tag + ".rank-even", generic_rank(md.value()) % 2 == 0);
    for (std::size_t j = 0; j < modules.size(); ++j) {
      if (modules[j].ring() != m.ring() || modules[j].rank() != m.rank())
        continue;
      bool base_eq = m == modules[j];
      bool doubled_eq =
          md.value() == double_module(ctx, modules[j]).value();
      add(tag + ".objects-faithful#" + std::to_string(j),
          base_eq == doubled_eq);
    }
  }

  for (std::size_t i = 0; i < homs.size(); ++i) {
    const MatrixHom& f = homs[i];
    std::string tag = "hom#" + std::to_string(i);
    DoubledHom fd = double_matrix_hom(ctx, f);
    add(tag + ".block-structure",
        has_double_block_structure(ctx, fd.value()));
    // Defining identity on generators.
    bool defining = true;
    for (const auto& g : f.domain().generators())
      if (fd.value().apply(double_element(ctx, g)) !=
          double_element(ctx, f.apply(g)))
        defining = false;
    add(tag + ".defining-identity", defining);
    add(tag + ".image-transfer",
        image(fd.value()) ==
            double_module(ctx, image(f)).value());
    add(tag + ".kernel-inclusion",
        kernel(fd.value()).contains(
            double_module(ctx, kernel(f)).value()));
    add(tag + ".surjective-transfer",
        is_surjective(f) ==
            (image(fd.value()) == double_module(ctx, f.codomain()).value()));
    bool fd_injective = kernel(fd.value()).is_zero();
    add(tag + ".injective-down",
        !fd_injective || is_injective(f));
    add(tag + ".zero-transfer",
        is_zero_map(f) == is_zero_map(fd.value()));
    for (std::size_t j = 0; j < homs.size(); ++j) {
      if (homs[j].domain() != f.domain() ||
          homs[j].codomain() != f.codomain())
        continue;
      bool base_eq = hom_eq_on_domain(f, homs[j]);
      bool doubled_eq = hom_eq_on_domain(
          fd.value(), double_matrix_hom(ctx, homs[j]).value());
      add(tag + ".homs-faithful#" + std::to_string(j), base_eq == doubled_eq);
    }
  }
  return report;
}

}  // namespace doublekit
