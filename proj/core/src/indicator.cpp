#include "posetmod/indicator.hpp"

#include <sstream>

namespace posetmod {

std::vector<Element> IndicatorLabel::boundary(const FinitePoset& p) const {
  return kind == IndicatorKind::up ? minimal_elements(p, members) : maximal_elements(p, members);
}

IndicatorModule indicator_module(const Upset& u, Field field) {
  return {IndicatorKind::up, u.members(), PosetModule::indicator(u.poset(), field, u.members())};
}

IndicatorModule indicator_module(const Downset& d, Field field) {
  return {IndicatorKind::down, d.members(), PosetModule::indicator(d.poset(), field, d.members())};
}

namespace {

std::vector<std::vector<Element>> components_inside(const FinitePoset& p, const Bitset& s, const Bitset& within) {
  std::vector<std::vector<Element>> out;
  for (auto& comp : connected_components(p, s)) {
    bool inside = true;
    for (auto a : comp) inside = inside && within[a];
    if (inside) out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

HomSpace hom_indicator(const IndicatorModule& source, const IndicatorModule& target) {
  require_same_poset(source.module.poset(), target.module.poset());
  const FinitePoset& p = *source.module.poset();
  HomSpace h;
  using K = IndicatorKind;
  if (source.kind == K::up && target.kind == K::down) {
    h.components = connected_components(p, source.region & target.region);
  } else if (source.kind == K::up && target.kind == K::up) {
    h.components = components_inside(p, source.region, target.region);
  } else if (source.kind == K::down && target.kind == K::down) {
    h.components = components_inside(p, target.region, source.region);
  } else {
    // down -> up: a component S of D ∩ U carries a free scalar iff nothing
    // above S leaves D and nothing in D below S leaves U.
    for (auto& comp : connected_components(p, source.region & target.region)) {
      bool ok = true;
      for (auto a : comp) {
        ok = ok && p.principal_up(a).is_subset_of(source.region);
        ok = ok && (p.principal_down(a) & source.region).is_subset_of(target.region);
      }
      if (ok) h.components.push_back(std::move(comp));
    }
  }
  h.dimension = h.components.size();
  return h;
}

ModuleHom realize_hom(const IndicatorModule& source, const IndicatorModule& target, const HomSpace& space,
                      const std::vector<Scalar>& coefficients) {
  if (coefficients.size() != space.dimension) throw std::invalid_argument("coefficient count does not match Hom dimension");
  const PosetModule& s = source.module;
  const PosetModule& t = target.module;
  std::vector<Matrix> comps;
  for (Element a = 0; a < s.poset()->size(); ++a) comps.emplace_back(s.field(), t.dim(a), s.dim(a));
  for (std::size_t k = 0; k < space.components.size(); ++k)
    for (auto a : space.components[k]) comps[a].at(0, 0) = coefficients[k];
  return ModuleHom(s, t, std::move(comps));
}

ConnectedScalar connected_scalar(const ModuleHom& phi) {
  const FinitePoset& p = *phi.source().poset();
  ConnectedScalar out;
  out.scalar = phi.source().field().zero();
  std::optional<Element> first;
  for (Element a = 0; a < p.size(); ++a) {
    if (phi.source().dim(a) > 1 || phi.target().dim(a) > 1)
      throw std::invalid_argument("connected_scalar needs indicator subquotients");
    if (phi.source().dim(a) == 0 || phi.target().dim(a) == 0) continue;
    const Scalar& s = phi.at(a).at(0, 0);
    if (!first) {
      first = a;
      out.scalar = s;
    } else if (!(s == out.scalar)) {
      out.connected = false;
      out.witness = std::make_pair(*first, a);
      return out;
    }
  }
  return out;
}

MonomialMatrix MonomialMatrix::fringe(PosetPtr poset, const std::vector<Upset>& rows, const std::vector<Downset>& cols,
                                      Matrix entries) {
  MonomialMatrix mm;
  mm.flow = Flow::rows_to_cols;
  for (const auto& u : rows) {
    require_same_poset(poset, u.poset());
    mm.rows.push_back(IndicatorLabel::of(u));
  }
  for (const auto& d : cols) {
    require_same_poset(poset, d.poset());
    mm.cols.push_back(IndicatorLabel::of(d));
  }
  mm.poset = std::move(poset);
  mm.entries = std::move(entries);
  return mm;
}

bool admits_connected_hom(const FinitePoset& p, const IndicatorLabel& source, const IndicatorLabel& target) {
  const Bitset& s = source.members;
  const Bitset& t = target.members;
  if (!s.intersects(t)) return false;
  for (auto [a, b] : p.covers()) {
    bool lhs = s[a] && s[b] && t[b];
    bool rhs = s[a] && t[a] && t[b];
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<EntryViolation> validate_monomial_matrix(const MonomialMatrix& mm) {
  if (mm.entries.rows() != mm.rows.size() || mm.entries.cols() != mm.cols.size())
    throw std::invalid_argument("monomial matrix entries do not match label counts");
  std::vector<EntryViolation> out;
  for (std::size_t r = 0; r < mm.rows.size(); ++r)
    for (std::size_t c = 0; c < mm.cols.size(); ++c) {
      if (Field::is_zero(mm.entries.at(r, c))) continue;
      const auto& src = mm.flow == Flow::rows_to_cols ? mm.rows[r] : mm.cols[c];
      const auto& tgt = mm.flow == Flow::rows_to_cols ? mm.cols[c] : mm.rows[r];
      if (!admits_connected_hom(*mm.poset, src, tgt)) out.push_back({r, c});
    }
  return out;
}

PosetModule indicator_sum(const PosetPtr& poset, const Field& field, const std::vector<IndicatorLabel>& labels) {
  const FinitePoset& p = *poset;
  std::vector<std::size_t> dims(p.size(), 0);
  for (const auto& l : labels)
    for (Element a = 0; a < p.size(); ++a) dims[a] += l.members[a] ? 1 : 0;
  std::vector<Matrix> edges;
  for (auto [a, b] : p.covers()) {
    Matrix e(field, dims[b], dims[a]);
    std::size_t ia = 0, ib = 0;
    for (const auto& l : labels) {
      bool in_a = l.members[a], in_b = l.members[b];
      if (in_a && in_b) e.at(ib, ia) = field.one();
      ia += in_a;
      ib += in_b;
    }
    edges.push_back(std::move(e));
  }
  return PosetModule::build(poset, field, std::move(dims), std::move(edges));
}

std::size_t summand_position(const std::vector<IndicatorLabel>& labels, std::size_t k, Element a) {
  if (!labels[k].members[a]) return static_cast<std::size_t>(-1);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < k; ++j) pos += labels[j].members[a] ? 1 : 0;
  return pos;
}

namespace {

std::string violation_message(const std::vector<EntryViolation>& v) {
  std::ostringstream os;
  os << "monomial matrix has nonzero entries on labels admitting no connected map:";
  for (auto& e : v) os << " (" << e.row << "," << e.col << ")";
  return os.str();
}

}  // namespace

InvalidMonomialMatrix::InvalidMonomialMatrix(std::vector<EntryViolation> v)
    : std::invalid_argument(violation_message(v)), violations_(std::move(v)) {}

ModuleHom evaluate_monomial_matrix(const MonomialMatrix& mm) {
  if (auto v = validate_monomial_matrix(mm); !v.empty()) throw InvalidMonomialMatrix(std::move(v));
  const Field& f = mm.entries.field();
  const auto& src = mm.source_labels();
  const auto& tgt = mm.target_labels();
  PosetModule source = indicator_sum(mm.poset, f, src);
  PosetModule target = indicator_sum(mm.poset, f, tgt);
  std::vector<Matrix> comps;
  for (Element a = 0; a < mm.poset->size(); ++a) {
    Matrix m(f, target.dim(a), source.dim(a));
    for (std::size_t s = 0; s < src.size(); ++s) {
      std::size_t ps = summand_position(src, s, a);
      if (ps == static_cast<std::size_t>(-1)) continue;
      for (std::size_t t = 0; t < tgt.size(); ++t) {
        std::size_t pt = summand_position(tgt, t, a);
        if (pt == static_cast<std::size_t>(-1)) continue;
        m.at(pt, ps) = mm.component(s, t);
      }
    }
    comps.push_back(std::move(m));
  }
  return ModuleHom(std::move(source), std::move(target), std::move(comps));
}

ImageResult image_module(const MonomialMatrix& mm) { return image(evaluate_monomial_matrix(mm)); }

MonomialMatrix extract_monomial_matrix(const ModuleHom& phi, Flow flow, const std::vector<IndicatorLabel>& source,
                                       const std::vector<IndicatorLabel>& target) {
  const Field& f = phi.source().field();
  MonomialMatrix mm;
  mm.poset = phi.source().poset();
  mm.flow = flow;
  mm.rows = flow == Flow::rows_to_cols ? source : target;
  mm.cols = flow == Flow::rows_to_cols ? target : source;
  mm.entries = Matrix(f, mm.rows.size(), mm.cols.size());
  for (std::size_t s = 0; s < source.size(); ++s)
    for (std::size_t t = 0; t < target.size(); ++t) {
      Bitset overlap = source[s].members & target[t].members;
      auto a = overlap.find_first();
      if (a == Bitset::npos) continue;
      Scalar v = phi.at(a).at(summand_position(target, t, a), summand_position(source, s, a));
      if (flow == Flow::rows_to_cols)
        mm.entries.at(s, t) = v;
      else
        mm.entries.at(t, s) = v;
    }
  return mm;
}

}  // namespace posetmod
