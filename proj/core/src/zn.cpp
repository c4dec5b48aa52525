#include "posetmod/zn.hpp"

#include <algorithm>
#include <sstream>

namespace posetmod {

std::vector<int> BoxModule::clamp(const std::vector<int>& x) const {
  if (x.size() != box.dim()) throw std::invalid_argument("point has wrong dimension");
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::clamp(x[i], box.lower[i], box.upper[i]);
  return out;
}

std::size_t BoxModule::dim_at(const std::vector<int>& x) const { return module.dim(box.index_of(clamp(x))); }

namespace {

std::string edges_message(const std::vector<GridEdge>& edges) {
  std::ostringstream os;
  os << "module is not determined by the box; non-isomorphisms at";
  for (const auto& e : edges) os << " " << format_point(e.point) << "+e" << (e.axis + 1);
  return os.str();
}

const Box& window_of(const PosetModule& m) {
  const auto& box = m.poset()->grid_box();
  if (!box) throw std::invalid_argument("module is not over a grid poset");
  return *box;
}

bool is_iso_step(const PosetModule& m, Element a, Element b) {
  return m.dim(a) == m.dim(b) && is_invertible(m.map(a, b));
}

FaceLabel face_label_of(const FinitePoset& grid, const Box& box, const IndicatorLabel& l) {
  auto boundary = l.boundary(grid);
  if (boundary.size() != 1) throw std::logic_error("label is not principal");
  FaceKind kind = l.kind == IndicatorKind::up ? FaceKind::flat : FaceKind::injective;
  return FaceLabel::canonical(kind, box, grid.coordinates(boundary.front()));
}

IndicatorLabel indicator_label_of(const FinitePoset& grid, const FaceLabel& f) {
  Element a = grid.at(f.base);
  return f.kind == FaceKind::flat ? IndicatorLabel::principal_up(grid, a) : IndicatorLabel::principal_down(grid, a);
}

FaceComplex face_complex_of(const IndicatorComplex& c, const Box& box) {
  FaceComplex out;
  out.box = box;
  out.field = c.field;
  out.direction = c.direction;
  for (const auto& t : c.terms) {
    std::vector<FaceLabel> labels;
    for (const auto& l : t) labels.push_back(face_label_of(*c.poset, box, l));
    out.terms.push_back(std::move(labels));
  }
  for (const auto& d : c.differentials) out.differentials.push_back(d.entries);
  return out;
}

}  // namespace

NotDetermined::NotDetermined(std::vector<GridEdge> edges)
    : std::invalid_argument(edges_message(edges)), edges_(std::move(edges)) {}

std::vector<GridEdge> determination_violations(const PosetModule& m, const Box& box) {
  const Box& window = window_of(m);
  if (!box.valid() || box.dim() != window.dim() || !window.contains(box))
    throw std::invalid_argument("box does not lie inside the module's grid");
  std::vector<GridEdge> out;
  for (Element a = 0; a < window.size(); ++a) {
    auto x = window.point_of(a);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] >= window.upper[i]) continue;
      if (x[i] >= box.lower[i] && x[i] < box.upper[i]) continue;
      auto y = x;
      ++y[i];
      if (!is_iso_step(m, a, window.index_of(y))) out.push_back({x, i});
    }
  }
  return out;
}

BoxModule convex_projection(const PosetModule& m, const Box& box) {
  auto bad = determination_violations(m, box);
  if (!bad.empty()) throw NotDetermined(std::move(bad));
  const Box& window = window_of(m);
  PosetPtr grid = FinitePoset::grid(box);
  std::vector<std::size_t> dims;
  for (Element a = 0; a < grid->size(); ++a) dims.push_back(m.dim(window.index_of(box.point_of(a))));
  std::vector<Matrix> edges;
  for (auto [a, b] : grid->covers())
    edges.push_back(m.map(window.index_of(box.point_of(a)), window.index_of(box.point_of(b))));
  return {box, PosetModule::build(grid, m.field(), std::move(dims), std::move(edges))};
}

Box canonical_box(const PosetModule& m) {
  const Box& window = window_of(m);
  std::size_t n = window.dim();
  std::vector<int> lo(n, 0), hi(n, 0);
  std::vector<bool> any(n, false);
  for (Element a = 0; a < window.size(); ++a) {
    auto x = window.point_of(a);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] >= window.upper[i]) continue;
      auto y = x;
      ++y[i];
      if (is_iso_step(m, a, window.index_of(y))) continue;
      if (!any[i]) {
        lo[i] = x[i];
        hi[i] = x[i] + 1;
        any[i] = true;
      } else {
        lo[i] = std::min(lo[i], x[i]);
        hi[i] = std::max(hi[i], x[i] + 1);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!any[i]) lo[i] = hi[i] = window.lower[i];
  return {lo, hi};
}

BoxModule normalize(const BoxModule& m) { return convex_projection(m.module, canonical_box(m.module)); }

BoxModule matlis_dual(const BoxModule& m) {
  Box box;
  for (std::size_t i = 0; i < m.n(); ++i) {
    box.lower.push_back(-m.box.upper[i]);
    box.upper.push_back(-m.box.lower[i]);
  }
  auto mirror = [&](const std::vector<int>& y) {
    std::vector<int> x(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = -y[i];
    return m.box.index_of(x);
  };
  PosetPtr grid = FinitePoset::grid(box);
  std::vector<std::size_t> dims;
  for (Element a = 0; a < grid->size(); ++a) dims.push_back(m.module.dim(mirror(box.point_of(a))));
  std::vector<Matrix> edges;
  for (auto [a, b] : grid->covers())
    edges.push_back(m.module.map(mirror(box.point_of(b)), mirror(box.point_of(a))).transpose());
  return {box, PosetModule::build(grid, m.module.field(), std::move(dims), std::move(edges))};
}

bool FaceLabel::contains(const std::vector<int>& x) const {
  if (x.size() != base.size()) throw std::invalid_argument("point has wrong dimension");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (in_face(i)) continue;
    if (kind == FaceKind::flat ? x[i] < base[i] : x[i] > base[i]) return false;
  }
  return true;
}

FaceLabel FaceLabel::canonical(FaceKind kind, const Box& box, std::vector<int> base) {
  if (!box.contains(base)) throw std::invalid_argument("face label base lies outside the box");
  FaceLabel l;
  l.kind = kind;
  for (std::size_t i = 0; i < base.size(); ++i) {
    int edge = kind == FaceKind::flat ? box.lower[i] : box.upper[i];
    if (base[i] == edge) l.faces |= 1u << i;
  }
  l.base = std::move(base);
  return l;
}

FaceLabel FaceLabel::dual() const {
  FaceLabel l = *this;
  l.kind = kind == FaceKind::flat ? FaceKind::injective : FaceKind::flat;
  for (auto& c : l.base) c = -c;
  return l;
}

std::string to_string(const FaceLabel& l) {
  std::string out = l.kind == FaceKind::flat ? "flat" : "injective";
  out += " " + format_point(l.base) + " tau={";
  bool first = true;
  for (std::size_t i = 0; i < l.base.size(); ++i)
    if (l.in_face(i)) {
      out += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

bool f_preceq_e(const FaceLabel& f, const FaceLabel& e) {
  if (f.kind != FaceKind::flat || e.kind != FaceKind::injective) throw std::invalid_argument("expected a flat and an injective label");
  if (f.base.size() != e.base.size()) throw std::invalid_argument("face labels live in different dimensions");
  for (std::size_t i = 0; i < f.base.size(); ++i)
    if (!f.in_face(i) && !e.in_face(i) && f.base[i] > e.base[i]) return false;
  return true;
}

FlangePresentation flange_presentation(const BoxModule& m) {
  const FinitePoset& grid = *m.module.poset();
  FlangePresentation out;
  out.box = m.box;
  out.fringe = fringe_presentation(identity_encoding(m.module));
  for (const auto& l : out.fringe.mm.rows) out.flats.push_back(face_label_of(grid, m.box, l));
  for (const auto& l : out.fringe.mm.cols) out.injectives.push_back(face_label_of(grid, m.box, l));
  out.entries = out.fringe.mm.entries;
  for (std::size_t r = 0; r < out.flats.size(); ++r)
    for (std::size_t c = 0; c < out.injectives.size(); ++c)
      if (!Field::is_zero(out.entries.at(r, c)) && !f_preceq_e(out.flats[r], out.injectives[c]))
        throw std::logic_error("flange entry joins labels with disjoint degree sets");
  return out;
}

std::vector<std::size_t> FaceComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.size());
  return out;
}

FaceComplex minimal_injective_resolution(const BoxModule& m) {
  return face_complex_of(downset_resolution(m.module).complex, m.box);
}

FaceComplex minimal_flat_resolution(const BoxModule& m) { return matlis_dual(minimal_injective_resolution(matlis_dual(m))); }

FaceComplex matlis_dual(const FaceComplex& c) {
  FaceComplex out;
  for (std::size_t i = 0; i < c.box.dim(); ++i) {
    out.box.lower.push_back(-c.box.upper[i]);
    out.box.upper.push_back(-c.box.lower[i]);
  }
  out.field = c.field;
  out.direction = c.direction == Direction::homological ? Direction::cohomological : Direction::homological;
  for (const auto& t : c.terms) {
    std::vector<FaceLabel> labels;
    for (const auto& l : t) labels.push_back(l.dual());
    out.terms.push_back(std::move(labels));
  }
  out.differentials = c.differentials;
  return out;
}

IndicatorComplex to_indicator_complex(const FaceComplex& c) {
  PosetPtr grid = FinitePoset::grid(c.box);
  IndicatorComplex out;
  out.poset = grid;
  out.field = c.field;
  out.direction = c.direction;
  for (const auto& t : c.terms) {
    std::vector<IndicatorLabel> labels;
    for (const auto& l : t) labels.push_back(indicator_label_of(*grid, l));
    out.terms.push_back(std::move(labels));
  }
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    MonomialMatrix mm;
    mm.poset = grid;
    mm.flow = c.direction == Direction::homological ? Flow::cols_to_rows : Flow::rows_to_cols;
    mm.rows = out.terms[i];
    mm.cols = out.terms[i + 1];
    mm.entries = c.differentials[i];
    out.differentials.push_back(std::move(mm));
  }
  return out;
}

}  // namespace posetmod
