#include "doublekit/complexes.hpp"

#include <utility>

namespace doublekit {

ChainComplex::ChainComplex(int top_degree, std::vector<Submodule> modules,
                           std::vector<MatrixHom> diffs)
    : top_(top_degree), modules_(std::move(modules)), diffs_(std::move(diffs)) {
  if (modules_.empty()) throw Error("chain complex needs at least one module");
  if (diffs_.size() + 1 != modules_.size()) {
    throw Error("chain complex needs one differential less than modules");
  }
  const PolyRing& r = modules_.front().ring();
  for (const Submodule& m : modules_) {
    if (m.ring() != r) throw Error("chain complex modules must share a ring");
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].domain() != modules_[k] ||
        diffs_[k].codomain() != modules_[k + 1]) {
      throw Error("chain complex differential endpoints do not match");
    }
  }
}

const PolyRing& ChainComplex::ring() const {
  if (modules_.empty()) throw Error("empty chain complex has no ring");
  return modules_.front().ring();
}

bool ChainComplex::in_range(int degree) const {
  return degree <= top_ && degree >= bottom_degree();
}

const Submodule& ChainComplex::module_at(int degree) const {
  if (in_range(degree)) return modules_[static_cast<std::size_t>(top_ - degree)];
  if (!zero_cache_) zero_cache_ = Submodule::zero(ring(), 0);
  return *zero_cache_;
}

std::optional<MatrixHom> ChainComplex::diff_at(int degree) const {
  if (!in_range(degree) || !in_range(degree - 1)) return std::nullopt;
  return diffs_[static_cast<std::size_t>(top_ - degree)];
}

bool is_complex(const ChainComplex& c) {
  for (int i = c.top_degree(); i > c.bottom_degree(); --i) {
    auto upper = c.diff_at(i);
    auto lower = c.diff_at(i - 1);
    if (!upper || !lower) continue;
    if (!is_zero_map(hom_compose(*lower, *upper))) return false;
  }
  return true;
}

bool is_exact_at(const ChainComplex& c, int degree) {
  if (!c.in_range(degree))
    throw Error("exactness degree out of range");
  auto out = c.diff_at(degree);
  auto in = c.diff_at(degree + 1);
  Submodule cycles = out ? kernel(*out) : c.module_at(degree);
  Submodule boundaries =
      in ? image(*in)
         : Submodule::zero(c.ring(), c.module_at(degree).rank());
  return cycles == boundaries;
}

bool is_exact_everywhere(const ChainComplex& c) {
  for (int i = c.top_degree(); i >= c.bottom_degree(); --i) {
    if (!is_exact_at(c, i)) return false;
  }
  return true;
}

ChainComplex double_complex(const DoubleContext& ctx, const ChainComplex& c) {
  std::vector<Submodule> modules;
  modules.reserve(c.length());
  for (const Submodule& m : c.modules()) {
    modules.push_back(double_module(ctx, m).value());
  }
  std::vector<MatrixHom> diffs;
  diffs.reserve(c.diffs().size());
  for (std::size_t k = 0; k < c.diffs().size(); ++k) {
    DoubledHom dh = double_matrix_hom(ctx, c.diffs()[k]);
    // Rewrap onto the shared doubled modules so basis caches are reused.
    diffs.emplace_back(modules[k], modules[k + 1], dh.value().matrix());
  }
  return ChainComplex(c.top_degree(), std::move(modules), std::move(diffs));
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target,
                   std::vector<MatrixHom> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      comps_(std::move(components)) {
  if (source_.top_degree() != target_.top_degree() ||
      source_.length() != target_.length()) {
    throw Error("chain map requires complexes over the same degree range");
  }
  if (comps_.size() != source_.length()) {
    throw Error("chain map needs one component per degree");
  }
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    int degree = source_.top_degree() - static_cast<int>(k);
    if (comps_[k].domain() != source_.module_at(degree) ||
        comps_[k].codomain() != target_.module_at(degree)) {
      throw Error("chain map component endpoints do not match");
    }
  }
}

std::optional<MatrixHom> ChainMap::at(int degree) const {
  if (!source_.in_range(degree)) return std::nullopt;
  return comps_[static_cast<std::size_t>(source_.top_degree() - degree)];
}

ChainMap ChainMap::operator-(const ChainMap& other) const {
  if (source_.top_degree() != other.source_.top_degree() ||
      source_.length() != other.source_.length()) {
    throw Error("chain map difference requires the same degree range");
  }
  std::vector<MatrixHom> comps;
  comps.reserve(comps_.size());
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    comps.push_back(comps_[k] + (-other.comps_[k]));
  }
  return ChainMap(source_, target_, std::move(comps));
}

bool is_chain_map(const ChainMap& alpha) {
  const ChainComplex& c = alpha.source();
  const ChainComplex& d = alpha.target();
  for (int i = c.top_degree(); i > c.bottom_degree(); --i) {
    auto dc = c.diff_at(i);
    auto dd = d.diff_at(i);
    if (!dc || !dd) continue;
    MatrixHom left = hom_compose(*dd, *alpha.at(i));
    MatrixHom right = hom_compose(*alpha.at(i - 1), *dc);
    if (!hom_eq_on_domain(left, right)) return false;
  }
  return true;
}

bool chain_map_eq(const ChainMap& alpha, const ChainMap& beta) {
  if (alpha.source().top_degree() != beta.source().top_degree() ||
      alpha.source().length() != beta.source().length()) {
    return false;
  }
  for (std::size_t k = 0; k < alpha.components().size(); ++k) {
    if (!hom_eq_on_domain(alpha.components()[k], beta.components()[k])) {
      return false;
    }
  }
  return true;
}

ChainMap identity_chain_map(const ChainComplex& c) {
  std::vector<MatrixHom> comps;
  comps.reserve(c.length());
  for (const Submodule& m : c.modules()) comps.push_back(MatrixHom::identity(m));
  return ChainMap(c, c, std::move(comps));
}

ChainMap zero_chain_map(const ChainComplex& source,
                        const ChainComplex& target) {
  if (source.top_degree() != target.top_degree() ||
      source.length() != target.length()) {
    throw Error("zero chain map requires the same degree range");
  }
  std::vector<MatrixHom> comps;
  comps.reserve(source.length());
  for (std::size_t k = 0; k < source.length(); ++k) {
    comps.push_back(MatrixHom::zero(source.modules()[k], target.modules()[k]));
  }
  return ChainMap(source, target, std::move(comps));
}

ChainMap compose_chain_maps(const ChainMap& beta, const ChainMap& alpha) {
  std::vector<MatrixHom> comps;
  comps.reserve(alpha.components().size());
  for (std::size_t k = 0; k < alpha.components().size(); ++k) {
    comps.push_back(hom_compose(beta.components()[k], alpha.components()[k]));
  }
  return ChainMap(alpha.source(), beta.target(), std::move(comps));
}

ChainMap double_chain_map(const DoubleContext& ctx, const ChainMap& alpha) {
  ChainComplex ds = double_complex(ctx, alpha.source());
  ChainComplex dt = double_complex(ctx, alpha.target());
  std::vector<MatrixHom> comps;
  comps.reserve(alpha.components().size());
  for (std::size_t k = 0; k < alpha.components().size(); ++k) {
    DoubledHom dh = double_matrix_hom(ctx, alpha.components()[k]);
    comps.emplace_back(ds.modules()[k], dt.modules()[k], dh.value().matrix());
  }
  return ChainMap(std::move(ds), std::move(dt), std::move(comps));
}

DegreeOneMap::DegreeOneMap(ChainComplex source, ChainComplex target,
                           std::vector<MatrixHom> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      comps_(std::move(components)) {
  if (source_.top_degree() != target_.top_degree() ||
      source_.length() != target_.length()) {
    throw Error("degree-one map requires complexes over the same degree range");
  }
  if (comps_.size() + 1 != source_.length()) {
    throw Error("degree-one map needs one component per degree below the top");
  }
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    int degree = source_.top_degree() - static_cast<int>(k) - 1;
    if (comps_[k].domain() != source_.module_at(degree) ||
        comps_[k].codomain() != target_.module_at(degree + 1)) {
      throw Error("degree-one map component endpoints do not match");
    }
  }
}

std::optional<MatrixHom> DegreeOneMap::at(int degree) const {
  if (!source_.in_range(degree) || !source_.in_range(degree + 1)) {
    return std::nullopt;
  }
  return comps_[static_cast<std::size_t>(source_.top_degree() - degree) - 1];
}

DegreeOneMap double_degree_one_map(const DoubleContext& ctx,
                                   const DegreeOneMap& mu) {
  ChainComplex ds = double_complex(ctx, mu.source());
  ChainComplex dt = double_complex(ctx, mu.target());
  std::vector<MatrixHom> comps;
  comps.reserve(mu.components().size());
  for (std::size_t k = 0; k < mu.components().size(); ++k) {
    DoubledHom dh = double_matrix_hom(ctx, mu.components()[k]);
    comps.emplace_back(ds.modules()[k + 1], dt.modules()[k], dh.value().matrix());
  }
  return DegreeOneMap(std::move(ds), std::move(dt), std::move(comps));
}

ChainMap tilde(const DegreeOneMap& mu) {
  const ChainComplex& c = mu.source();
  const ChainComplex& d = mu.target();
  std::vector<MatrixHom> comps;
  comps.reserve(c.length());
  for (int i = c.top_degree(); i >= c.bottom_degree(); --i) {
    std::optional<MatrixHom> total;
    if (auto up = mu.at(i)) {
      total = hom_compose(*d.diff_at(i + 1), *up);
    }
    if (auto down = mu.at(i - 1)) {
      MatrixHom term = hom_compose(*down, *c.diff_at(i));
      total = total ? (*total + term) : term;
    }
    if (!total) total = MatrixHom::zero(c.module_at(i), d.module_at(i));
    comps.push_back(std::move(*total));
  }
  return ChainMap(c, d, std::move(comps));
}

bool is_homotopy(const ChainMap& alpha, const ChainMap& beta,
                 const DegreeOneMap& mu) {
  return chain_map_eq(tilde(mu), alpha - beta);
}

ContractibilityReport contractibility_transfer(const DoubleContext& ctx,
                                               const ChainComplex& c,
                                               const DegreeOneMap& mu) {
  ContractibilityReport report;
  ChainMap id = identity_chain_map(c);
  ChainMap zero = zero_chain_map(c, c);
  report.witness_valid = is_homotopy(id, zero, mu);

  ChainComplex dc = double_complex(ctx, c);
  DegreeOneMap dmu = double_degree_one_map(ctx, mu);
  ChainMap did = identity_chain_map(dc);
  ChainMap dzero = zero_chain_map(dc, dc);
  report.doubled_valid = is_homotopy(did, dzero, dmu);
  return report;
}

ExactnessReport exactness_propagation_check(const DoubleContext& ctx,
                                            const ChainComplex& c) {
  ExactnessReport report;
  report.base_complex = is_complex(c);
  ChainComplex dc = double_complex(ctx, c);
  report.doubled_complex = is_complex(dc);
  report.base_exact = is_exact_everywhere(c);
  report.doubled_exact = is_exact_everywhere(dc);
  report.implication_holds = !report.doubled_exact || report.base_exact;
  return report;
}

}  // namespace doublekit
