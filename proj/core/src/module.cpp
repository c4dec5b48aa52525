#include "posetmod/module.hpp"

#include <algorithm>
#include <sstream>

namespace posetmod {

namespace {

std::string diamond_message(const DiamondCertificate& c) {
  std::ostringstream os;
  os << "structure maps do not commute between " << c.lower << " and " << c.upper << ": path";
  for (auto e : c.path_a) os << " " << e;
  os << " vs path";
  for (auto e : c.path_b) os << " " << e;
  return os.str();
}

using CompositeTable = std::vector<std::vector<std::pair<Element, Matrix>>>;

// Canonical predecessor of b on paths from a: the lowest-index lower cover
// of b lying above a.
Element canonical_predecessor(const FinitePoset& p, Element a, Element b) {
  for (auto r : p.lower_covers(b))
    if (p.leq(a, r)) return r;
  throw std::logic_error("no predecessor on path");
}

std::vector<Element> canonical_path(const FinitePoset& p, Element a, Element b) {
  std::vector<Element> path{b};
  while (b != a) {
    b = canonical_predecessor(p, a, b);
    path.push_back(b);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Fills composites; on the first disagreement returns a certificate.
std::optional<DiamondCertificate> compute_composites(const FinitePoset& p, const Field& field,
                                                     const std::vector<std::size_t>& dims,
                                                     const std::vector<Matrix>& edges, CompositeTable* table) {
  std::size_t n = p.size();
  if (table) table->assign(n, {});
  std::vector<std::optional<Matrix>> scratch(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(scratch.begin(), scratch.end(), std::nullopt);
    scratch[a] = Matrix::identity(field, dims[a]);
    const Bitset& above = p.principal_up(a);
    for (Element b : p.topological_order()) {
      if (b == a || !above[b]) continue;
      Element r0 = canonical_predecessor(p, a, b);
      Matrix comp = edges[*p.cover_index(r0, b)] * *scratch[r0];
      for (auto r : p.lower_covers(b)) {
        if (r == r0 || !p.leq(a, r)) continue;
        Matrix alt = edges[*p.cover_index(r, b)] * *scratch[r];
        if (!(alt == comp)) {
          DiamondCertificate c;
          c.lower = a;
          c.upper = b;
          c.path_a = canonical_path(p, a, r0);
          c.path_a.push_back(b);
          c.path_b = canonical_path(p, a, r);
          c.path_b.push_back(b);
          return c;
        }
      }
      scratch[b] = std::move(comp);
    }
    if (table)
      for (auto b = above.find_first(); b != Bitset::npos; b = above.find_next(b))
        (*table)[a].emplace_back(b, std::move(*scratch[b]));
  }
  return std::nullopt;
}

void check_shapes(const FinitePoset& p, const Field& field, const std::vector<std::size_t>& dims,
                  const std::vector<Matrix>& edges) {
  if (dims.size() != p.size()) throw std::invalid_argument("module has wrong number of dimensions");
  if (edges.size() != p.covers().size()) throw std::invalid_argument("module has wrong number of edge maps");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = p.covers()[k];
    Field::require_same(edges[k].field(), field);
    if (edges[k].rows() != dims[b] || edges[k].cols() != dims[a])
      throw std::invalid_argument("edge map " + p.label(a) + " -> " + p.label(b) + " has shape " +
                                  std::to_string(edges[k].rows()) + "x" + std::to_string(edges[k].cols()) +
                                  ", expected " + std::to_string(dims[b]) + "x" + std::to_string(dims[a]));
  }
}

}  // namespace

NonCommutingError::NonCommutingError(DiamondCertificate cert)
    : std::invalid_argument(diamond_message(cert)), cert_(std::move(cert)) {}

// ---------------------------------------------------------------- PosetModule

PosetModule PosetModule::build(PosetPtr poset, Field field, std::vector<std::size_t> dims,
                               std::vector<Matrix> edge_maps) {
  check_shapes(*poset, field, dims, edge_maps);
  auto table = std::make_shared<CompositeTable>();
  if (auto cert = compute_composites(*poset, field, dims, edge_maps, table.get())) throw NonCommutingError(*cert);
  PosetModule m;
  m.poset_ = std::move(poset);
  m.field_ = field;
  m.dims_ = std::move(dims);
  m.edges_ = std::move(edge_maps);
  m.composites_ = std::move(table);
  return m;
}

std::optional<DiamondCertificate> PosetModule::find_noncommuting_diamond(const PosetPtr& poset, const Field& field,
                                                                        const std::vector<std::size_t>& dims,
                                                                        const std::vector<Matrix>& edge_maps) {
  check_shapes(*poset, field, dims, edge_maps);
  return compute_composites(*poset, field, dims, edge_maps, nullptr);
}

PosetModule PosetModule::zero(PosetPtr poset, Field field) {
  std::vector<std::size_t> dims(poset->size(), 0);
  std::vector<Matrix> edges(poset->covers().size(), Matrix(field, 0, 0));
  return build(std::move(poset), field, std::move(dims), std::move(edges));
}

PosetModule PosetModule::indicator(PosetPtr poset, Field field, const Bitset& support) {
  std::vector<std::size_t> dims(poset->size());
  for (Element a = 0; a < poset->size(); ++a) dims[a] = support[a] ? 1 : 0;
  std::vector<Matrix> edges;
  for (auto [a, b] : poset->covers()) {
    Matrix e(field, dims[b], dims[a]);
    if (dims[a] && dims[b]) e.at(0, 0) = field.one();
    edges.push_back(std::move(e));
  }
  return build(std::move(poset), field, std::move(dims), std::move(edges));
}

std::size_t PosetModule::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

const Matrix& PosetModule::map(Element a, Element b) const {
  const auto& row = (*composites_)[a];
  auto it = std::lower_bound(row.begin(), row.end(), b, [](const auto& entry, Element x) { return entry.first < x; });
  if (it == row.end() || it->first != b)
    throw std::invalid_argument("no structure map: " + poset_->label(a) + " is not below " + poset_->label(b));
  return it->second;
}

// ---------------------------------------------------------------- ModuleHom

ModuleHom::ModuleHom(PosetModule source, PosetModule target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_poset(source_.poset(), target_.poset());
  Field::require_same(source_.field(), target_.field());
  const FinitePoset& p = *source_.poset();
  if (components_.size() != p.size()) throw std::invalid_argument("homomorphism has wrong number of components");
  for (Element a = 0; a < p.size(); ++a) {
    Field::require_same(components_[a].field(), source_.field());
    if (components_[a].rows() != target_.dim(a) || components_[a].cols() != source_.dim(a))
      throw std::invalid_argument("homomorphism component at " + p.label(a) + " has wrong shape");
  }
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    if (!(components_[b] * source_.edge_map(k) == target_.edge_map(k) * components_[a]))
      throw std::invalid_argument("homomorphism does not commute on cover " + p.label(a) + " < " + p.label(b));
  }
}

ModuleHom ModuleHom::zero(PosetModule source, PosetModule target) {
  std::vector<Matrix> comps;
  for (Element a = 0; a < source.poset()->size(); ++a) comps.emplace_back(source.field(), target.dim(a), source.dim(a));
  return ModuleHom(std::move(source), std::move(target), std::move(comps));
}

ModuleHom ModuleHom::identity(PosetModule m) {
  std::vector<Matrix> comps;
  for (Element a = 0; a < m.poset()->size(); ++a) comps.push_back(Matrix::identity(m.field(), m.dim(a)));
  return ModuleHom(m, m, std::move(comps));
}

ModuleHom ModuleHom::then(const ModuleHom& next) const {
  std::vector<Matrix> comps;
  for (Element a = 0; a < components_.size(); ++a) comps.push_back(next.components_[a] * components_[a]);
  return ModuleHom(source_, next.target_, std::move(comps));
}

bool ModuleHom::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool ModuleHom::is_injective() const {
  for (Element a = 0; a < components_.size(); ++a)
    if (rank(components_[a]) != source_.dim(a)) return false;
  return true;
}

bool ModuleHom::is_surjective() const {
  for (Element a = 0; a < components_.size(); ++a)
    if (rank(components_[a]) != target_.dim(a)) return false;
  return true;
}

bool ModuleHom::is_isomorphism() const { return is_injective() && is_surjective(); }

// ---------------------------------------------------------------- kernels etc.

KernelResult kernel(const ModuleHom& phi) {
  const PosetModule& src = phi.source();
  const FinitePoset& p = *src.poset();
  const Field& f = src.field();
  std::vector<Matrix> bases;
  std::vector<std::size_t> dims;
  for (Element a = 0; a < p.size(); ++a) {
    bases.push_back(kernel_basis(phi.at(a)));
    dims.push_back(bases.back().cols());
  }
  std::vector<Matrix> edges;
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    auto coords = solve(bases[b], src.edge_map(k) * bases[a]);
    if (!coords) throw std::logic_error("kernel not preserved by structure map");
    edges.push_back(std::move(*coords));
  }
  PosetModule k = PosetModule::build(src.poset(), f, std::move(dims), std::move(edges));
  ModuleHom inc(k, src, std::move(bases));
  return {std::move(k), std::move(inc)};
}

CokernelResult cokernel(const ModuleHom& phi) {
  const PosetModule& tgt = phi.target();
  const FinitePoset& p = *tgt.poset();
  std::vector<Cokernel> parts;
  std::vector<std::size_t> dims;
  for (Element a = 0; a < p.size(); ++a) {
    parts.push_back(posetmod::cokernel(phi.at(a)));
    dims.push_back(parts.back().projection.rows());
  }
  std::vector<Matrix> edges;
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    edges.push_back(parts[b].projection * tgt.edge_map(k) * parts[a].section);
  }
  PosetModule c = PosetModule::build(tgt.poset(), tgt.field(), std::move(dims), std::move(edges));
  std::vector<Matrix> proj;
  for (auto& part : parts) proj.push_back(std::move(part.projection));
  ModuleHom projection(tgt, c, std::move(proj));
  return {std::move(c), std::move(projection)};
}

ImageResult image(const ModuleHom& phi) {
  const PosetModule& src = phi.source();
  const PosetModule& tgt = phi.target();
  const FinitePoset& p = *src.poset();
  std::vector<Matrix> bases;
  std::vector<std::size_t> dims;
  for (Element a = 0; a < p.size(); ++a) {
    bases.push_back(image_basis(phi.at(a)));
    dims.push_back(bases.back().cols());
  }
  std::vector<Matrix> edges;
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    auto coords = solve(bases[b], tgt.edge_map(k) * bases[a]);
    if (!coords) throw std::logic_error("image not preserved by structure map");
    edges.push_back(std::move(*coords));
  }
  PosetModule im = PosetModule::build(src.poset(), src.field(), std::move(dims), std::move(edges));
  std::vector<Matrix> onto;
  for (Element a = 0; a < p.size(); ++a) onto.push_back(*solve(bases[a], phi.at(a)));
  ModuleHom surjection(src, im, std::move(onto));
  ModuleHom inclusion(im, tgt, std::move(bases));
  return {std::move(im), std::move(surjection), std::move(inclusion)};
}

PosetModule direct_sum(const PosetModule& a, const PosetModule& b) {
  require_same_poset(a.poset(), b.poset());
  Field::require_same(a.field(), b.field());
  const FinitePoset& p = *a.poset();
  std::vector<std::size_t> dims(p.size());
  for (Element x = 0; x < p.size(); ++x) dims[x] = a.dim(x) + b.dim(x);
  std::vector<Matrix> edges;
  for (std::size_t k = 0; k < p.covers().size(); ++k) edges.push_back(Matrix::direct_sum(a.edge_map(k), b.edge_map(k)));
  return PosetModule::build(a.poset(), a.field(), std::move(dims), std::move(edges));
}

PosetModule direct_sum(const std::vector<PosetModule>& parts, PosetPtr poset, Field field) {
  PosetModule acc = PosetModule::zero(std::move(poset), field);
  for (const auto& m : parts) acc = direct_sum(acc, m);
  return acc;
}

// ---------------------------------------------------------------- pullback

PosetModule pullback(const PosetMorphism& f, const PosetModule& h) {
  require_same_poset(f.target(), h.poset());
  const FinitePoset& q = *f.source();
  std::vector<std::size_t> dims(q.size());
  for (Element a = 0; a < q.size(); ++a) dims[a] = h.dim(f(a));
  std::vector<Matrix> edges;
  for (auto [a, b] : q.covers()) edges.push_back(h.map(f(a), f(b)));
  return PosetModule::build(f.source(), h.field(), std::move(dims), std::move(edges));
}

ModuleHom pullback(const PosetMorphism& f, const ModuleHom& phi) {
  PosetModule src = pullback(f, phi.source());
  PosetModule tgt = pullback(f, phi.target());
  std::vector<Matrix> comps;
  for (Element a = 0; a < f.source()->size(); ++a) comps.push_back(phi.at(f(a)));
  return ModuleHom(std::move(src), std::move(tgt), std::move(comps));
}

// ---------------------------------------------------------------- pushforward

Pushforward pushforward(const PosetMorphism& embedding, const PosetModule& h) {
  require_same_poset(embedding.source(), h.poset());
  if (!embedding.is_order_embedding()) throw std::invalid_argument("pushforward requires an order embedding");
  const FinitePoset& p = *h.poset();
  const FinitePoset& z = *embedding.target();
  const Field& f = h.field();

  // For each z: the diagram {p : i(p) <= z}, the offsets of its summands in
  // the direct sum, and the quotient by edge relations x - H(p->p')x.
  struct Colimit {
    std::vector<std::size_t> offset;  // per element of P, npos when absent
    std::size_t total = 0;
    Cokernel quotient;
  };
  std::vector<Colimit> colim(z.size());
  for (Element zz = 0; zz < z.size(); ++zz) {
    Colimit& c = colim[zz];
    c.offset.assign(p.size(), static_cast<std::size_t>(-1));
    for (Element a = 0; a < p.size(); ++a)
      if (z.leq(embedding(a), zz)) {
        c.offset[a] = c.total;
        c.total += h.dim(a);
      }
    std::size_t nrel = 0;
    for (auto [a, b] : p.covers())
      if (c.offset[b] != static_cast<std::size_t>(-1)) nrel += h.dim(a);
    Matrix rel(f, c.total, nrel);
    std::size_t col = 0;
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
      auto [a, b] = p.covers()[k];
      if (c.offset[b] == static_cast<std::size_t>(-1)) continue;
      const Matrix& e = h.edge_map(k);
      for (std::size_t j = 0; j < h.dim(a); ++j, ++col) {
        rel.at(c.offset[a] + j, col) = f.one();
        for (std::size_t i = 0; i < h.dim(b); ++i) rel.at(c.offset[b] + i, col) = f.neg(e.at(i, j));
      }
    }
    c.quotient = posetmod::cokernel(rel);
  }

  std::vector<std::size_t> dims(z.size());
  for (Element zz = 0; zz < z.size(); ++zz) dims[zz] = colim[zz].quotient.projection.rows();
  std::vector<Matrix> edges;
  for (auto [x, y] : z.covers()) {
    const Colimit& cx = colim[x];
    const Colimit& cy = colim[y];
    Matrix incl(f, cy.total, cx.total);
    for (Element a = 0; a < p.size(); ++a) {
      if (cx.offset[a] == static_cast<std::size_t>(-1)) continue;
      for (std::size_t j = 0; j < h.dim(a); ++j) incl.at(cy.offset[a] + j, cx.offset[a] + j) = f.one();
    }
    edges.push_back(cy.quotient.projection * incl * cx.quotient.section);
  }
  PosetModule out = PosetModule::build(embedding.target(), f, std::move(dims), std::move(edges));

  std::vector<Matrix> witness;
  for (Element a = 0; a < p.size(); ++a) {
    const Colimit& c = colim[embedding(a)];
    Matrix incl(f, c.total, h.dim(a));
    for (std::size_t j = 0; j < h.dim(a); ++j) incl.at(c.offset[a] + j, j) = f.one();
    witness.push_back(c.quotient.projection * incl);
  }
  return {std::move(out), std::move(witness)};
}

// ---------------------------------------------------------------- duality

PosetModule dual(const PosetModule& m, const PosetPtr& opposite) {
  std::vector<Matrix> edges;
  for (auto [b, a] : opposite->covers()) edges.push_back(m.map(a, b).transpose());
  return PosetModule::build(opposite, m.field(), m.dims(), std::move(edges));
}

ModuleHom dual(const ModuleHom& phi, const PosetModule& source_dual, const PosetModule& target_dual) {
  std::vector<Matrix> comps;
  for (const auto& c : phi.components()) comps.push_back(c.transpose());
  return ModuleHom(target_dual, source_dual, std::move(comps));
}

// ---------------------------------------------------------------- invariants

std::vector<RankEntry> rank_invariant(const PosetModule& m) {
  const FinitePoset& p = *m.poset();
  std::vector<RankEntry> out;
  for (Element a = 0; a < p.size(); ++a) {
    const Bitset& above = p.principal_up(a);
    for (auto b = above.find_first(); b != Bitset::npos; b = above.find_next(b))
      out.push_back({a, b, rank(m.map(a, b))});
  }
  return out;
}

bool is_isomorphism_witness(const PosetModule& a, const PosetModule& b, const std::vector<Matrix>& witness) {
  const FinitePoset& p = *a.poset();
  if (!p.same_as(*b.poset()) || witness.size() != p.size()) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (a.dim(x) != b.dim(x)) return false;
    if (witness[x].rows() != b.dim(x) || witness[x].cols() != a.dim(x)) return false;
    if (!is_invertible(witness[x])) return false;
  }
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [x, y] = p.covers()[k];
    if (!(witness[y] * a.edge_map(k) == b.edge_map(k) * witness[x])) return false;
  }
  return true;
}

}  // namespace posetmod
