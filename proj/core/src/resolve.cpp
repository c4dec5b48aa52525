#include "posetmod/resolve.hpp"

#include <stdexcept>

namespace posetmod {

namespace {

IndicatorLabel flipped(const IndicatorLabel& l) {
  return {l.kind == IndicatorKind::up ? IndicatorKind::down : IndicatorKind::up, l.members};
}

std::vector<IndicatorLabel> flipped(const std::vector<IndicatorLabel>& ls) {
  std::vector<IndicatorLabel> out;
  for (const auto& l : ls) out.push_back(flipped(l));
  return out;
}

std::vector<Matrix> transposed_components(const ModuleHom& phi) {
  std::vector<Matrix> out;
  for (const auto& c : phi.components()) out.push_back(c.transpose());
  return out;
}

}  // namespace

ProjectiveCover projective_cover(const PosetModule& h) {
  const PosetPtr& pp = h.poset();
  const FinitePoset& p = *pp;
  const Field& f = h.field();
  ProjectiveCover out;
  out.betti.assign(p.size(), 0);
  std::vector<Matrix> vectors;
  for (Element a = 0; a < p.size(); ++a) {
    Matrix radical(f, h.dim(a), 0);
    for (auto b : p.lower_covers(a)) radical = Matrix::hstack(radical, h.map(b, a));
    for (auto idx : complement_indices(image_basis(radical))) {
      Matrix v(f, h.dim(a), 1);
      v.at(idx, 0) = f.one();
      vectors.push_back(std::move(v));
      out.labels.push_back(IndicatorLabel::principal_up(p, a));
      out.generators.push_back(a);
      ++out.betti[a];
    }
  }
  out.module = indicator_sum(pp, f, out.labels);
  std::vector<Matrix> comps;
  for (Element x = 0; x < p.size(); ++x) {
    Matrix c(f, h.dim(x), out.module.dim(x));
    std::size_t col = 0;
    for (std::size_t s = 0; s < out.labels.size(); ++s) {
      if (!out.labels[s].members[x]) continue;
      Matrix image = h.map(out.generators[s], x) * vectors[s];
      for (std::size_t r = 0; r < h.dim(x); ++r) c.at(r, col) = image.at(r, 0);
      ++col;
    }
    comps.push_back(std::move(c));
  }
  out.map = ModuleHom(out.module, h, std::move(comps));
  return out;
}

InjectiveHull injective_hull(const PosetModule& h) {
  const PosetPtr& pp = h.poset();
  ProjectiveCover pc = projective_cover(dual(h, pp->opposite()));
  InjectiveHull out;
  out.labels = flipped(pc.labels);
  out.cogenerators = pc.generators;
  out.betti = pc.betti;
  out.module = indicator_sum(pp, h.field(), out.labels);
  out.map = ModuleHom(h, out.module, transposed_components(pc.map));
  return out;
}

Resolution upset_resolution(const PosetModule& h) {
  const FinitePoset& p = *h.poset();
  Resolution r;
  IndicatorComplex& c = r.complex;
  c.poset = h.poset();
  c.field = h.field();
  c.direction = Direction::homological;
  ProjectiveCover pc = projective_cover(h);
  c.terms.push_back(pc.labels);
  r.augmentation = pc.map;
  ModuleHom current = pc.map;
  for (std::size_t step = 0;; ++step) {
    KernelResult k = kernel(current);
    if (k.module.is_zero()) break;
    // Incidence algebras of finite posets have global dimension below |P|.
    if (step > p.size()) throw std::logic_error("upset resolution failed to terminate");
    ProjectiveCover next = projective_cover(k.module);
    ModuleHom d = next.map.then(k.inclusion);
    c.differentials.push_back(extract_monomial_matrix(d, Flow::cols_to_rows, next.labels, c.terms.back()));
    c.terms.push_back(next.labels);
    current = std::move(d);
  }
  return r;
}

Resolution downset_resolution(const PosetModule& h) {
  const PosetPtr& pp = h.poset();
  Resolution ur = upset_resolution(dual(h, pp->opposite()));
  Resolution r;
  IndicatorComplex& c = r.complex;
  c.poset = pp;
  c.field = h.field();
  c.direction = Direction::cohomological;
  for (const auto& t : ur.complex.terms) c.terms.push_back(flipped(t));
  // Transposing F_{i+1} -> F_i gives E^i -> E^{i+1} with the same scalar
  // block once the flow is reversed.
  for (const auto& d : ur.complex.differentials) {
    MonomialMatrix mm;
    mm.poset = pp;
    mm.flow = Flow::rows_to_cols;
    mm.rows = flipped(d.rows);
    mm.cols = flipped(d.cols);
    mm.entries = d.entries;
    c.differentials.push_back(std::move(mm));
  }
  PosetModule e0 = indicator_sum(pp, h.field(), c.terms.front());
  r.augmentation = ModuleHom(h, e0, transposed_components(ur.augmentation));
  return r;
}

Presentations presentations(const PosetModule& h) {
  auto first_differential = [&](const Resolution& r, Flow flow) {
    if (!r.complex.differentials.empty()) return r.complex.differentials.front();
    MonomialMatrix mm;
    mm.poset = h.poset();
    mm.flow = flow;
    mm.rows = r.complex.terms.front();
    mm.entries = Matrix(h.field(), mm.rows.size(), 0);
    return mm;
  };
  Resolution up = upset_resolution(h);
  Resolution down = downset_resolution(h);
  return {first_differential(up, Flow::cols_to_rows), up.augmentation, first_differential(down, Flow::rows_to_cols),
          down.augmentation};
}

std::vector<ModuleHom> evaluate_complex(const IndicatorComplex& c) {
  std::vector<ModuleHom> out;
  for (const auto& d : c.differentials) out.push_back(evaluate_monomial_matrix(d));
  return out;
}

std::vector<std::vector<std::size_t>> homology_dims(const IndicatorComplex& c) {
  const FinitePoset& p = *c.poset;
  auto homs = evaluate_complex(c);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    std::vector<std::size_t> dims(p.size());
    for (Element x = 0; x < p.size(); ++x) {
      std::size_t d = 0;
      for (const auto& l : c.terms[i]) d += l.members[x] ? 1 : 0;
      if (i > 0) d -= rank(homs[i - 1].at(x));
      if (i < homs.size()) d -= rank(homs[i].at(x));
      dims[x] = d;
    }
    out.push_back(std::move(dims));
  }
  return out;
}

std::optional<std::string> verify_resolution(const Resolution& r, const PosetModule& m) {
  const IndicatorComplex& c = r.complex;
  const FinitePoset& p = *c.poset;
  if (c.terms.empty()) return "complex has no terms";
  if (c.differentials.size() + 1 != c.terms.size()) return "differential count does not match term count";
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& d = c.differentials[i];
    if (!(d.rows == c.terms[i]) || !(d.cols == c.terms[i + 1]))
      return "differential " + std::to_string(i) + " is labeled inconsistently with the terms";
    if (!validate_monomial_matrix(d).empty())
      return "differential " + std::to_string(i) + " has a component that is not connected";
  }
  auto homs = evaluate_complex(c);
  bool homological = c.direction == Direction::homological;
  for (std::size_t i = 0; i + 1 < homs.size(); ++i) {
    ModuleHom dd = homological ? homs[i + 1].then(homs[i]) : homs[i].then(homs[i + 1]);
    if (!dd.is_zero()) return "d∘d is nonzero at position " + std::to_string(i);
  }
  auto hom = homology_dims(c);
  for (std::size_t i = 1; i < hom.size(); ++i)
    for (Element x = 0; x < p.size(); ++x)
      if (hom[i][x] != 0) return "nonzero homology at position " + std::to_string(i) + ", degree " + p.label(x);

  PosetModule t0 = indicator_sum(c.poset, c.field, c.terms.front());
  const ModuleHom& aug = r.augmentation;
  const PosetModule& side = homological ? aug.source() : aug.target();
  const PosetModule& base = homological ? aug.target() : aug.source();
  if (side.dims() != t0.dims() || !(side.edge_maps() == t0.edge_maps())) return "augmentation is not defined on the first term";
  if (base.dims() != m.dims() || !(base.edge_maps() == m.edge_maps())) return "augmentation does not reach the module";
  if (homological ? !aug.is_surjective() : !aug.is_injective()) return "augmentation is not onto the module";
  for (Element x = 0; x < p.size(); ++x) {
    if (hom[0][x] != m.dim(x)) return "position-0 homology differs from the module at " + p.label(x);
    if (!homs.empty()) {
      Matrix composite = homological ? aug.at(x) * homs[0].at(x) : homs[0].at(x) * aug.at(x);
      if (!composite.is_zero()) return "augmentation does not vanish on boundaries at " + p.label(x);
    }
  }
  return std::nullopt;
}

std::optional<EntryViolation> find_split_component(const MonomialMatrix& mm) {
  for (std::size_t r = 0; r < mm.rows.size(); ++r)
    for (std::size_t c = 0; c < mm.cols.size(); ++c)
      if (!Field::is_zero(mm.entries.at(r, c)) && mm.rows[r] == mm.cols[c]) return EntryViolation{r, c};
  return std::nullopt;
}

MonomialMatrix pullback_matrix(const PosetMorphism& pi, const MonomialMatrix& mm) {
  MonomialMatrix out;
  out.poset = pi.source();
  out.flow = mm.flow;
  for (const auto& l : mm.rows) out.rows.push_back(l.pullback(pi));
  for (const auto& l : mm.cols) out.cols.push_back(l.pullback(pi));
  out.entries = mm.entries;
  return out;
}

IndicatorComplex pullback_complex(const Encoding& e, const IndicatorComplex& c) {
  require_same_poset(e.pi.target(), c.poset);
  IndicatorComplex out;
  out.poset = e.pi.source();
  out.field = c.field;
  out.direction = c.direction;
  for (const auto& t : c.terms) {
    std::vector<IndicatorLabel> pulled;
    for (const auto& l : t) pulled.push_back(l.pullback(e.pi));
    out.terms.push_back(std::move(pulled));
  }
  for (const auto& d : c.differentials) out.differentials.push_back(pullback_matrix(e.pi, d));
  return out;
}

FringePresentation fringe_presentation(const Encoding& e) {
  const PosetModule& h = e.h;
  const PosetPtr& q = e.module.poset();
  const Field& f = h.field();
  ProjectiveCover pc = projective_cover(h);
  InjectiveHull ih = injective_hull(h);
  MonomialMatrix over_p = extract_monomial_matrix(pc.map.then(ih.map), Flow::rows_to_cols, pc.labels, ih.labels);

  FringePresentation fp;
  fp.mm = pullback_matrix(e.pi, over_p);
  PosetModule fq = indicator_sum(q, f, fp.mm.rows);
  PosetModule eq = indicator_sum(q, f, fp.mm.cols);
  std::vector<Matrix> cover, hull;
  for (Element x = 0; x < q->size(); ++x) {
    auto inv = inverse(e.witness[x]);
    if (!inv) throw std::invalid_argument("encoding witness is not invertible");
    cover.push_back(e.witness[x] * pc.map.at(e.pi(x)));
    hull.push_back(ih.map.at(e.pi(x)) * *inv);
  }
  fp.cover = ModuleHom(fq, e.module, std::move(cover));
  fp.hull = ModuleHom(e.module, eq, std::move(hull));
  return fp;
}

std::optional<std::string> verify_fringe(const FringePresentation& fp) {
  ModuleHom phi;
  try {
    phi = evaluate_monomial_matrix(fp.mm);
  } catch (const InvalidMonomialMatrix& err) {
    return std::string(err.what());
  }
  const FinitePoset& q = *fp.mm.poset;
  if (phi.source().dims() != fp.cover.source().dims()) return "cover is not defined on the row summands";
  if (phi.target().dims() != fp.hull.target().dims()) return "hull does not land in the column summands";
  if (fp.cover.target().dims() != fp.hull.source().dims()) return "cover and hull do not meet in one module";
  if (!fp.cover.is_surjective()) return "cover is not surjective";
  if (!fp.hull.is_injective()) return "hull is not injective";
  for (Element x = 0; x < q.size(); ++x)
    if (!(fp.hull.at(x) * fp.cover.at(x) == phi.at(x))) return "factorization differs from the matrix at " + q.label(x);
  return std::nullopt;
}

}  // namespace posetmod
