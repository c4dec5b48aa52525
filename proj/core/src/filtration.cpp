#include "posetmod/filtration.hpp"

#include <map>
#include <sstream>

namespace posetmod {

std::string FiltrationViolation::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::malformed_simplex:
      os << "simplex " << simplex << " needs distinct increasing vertices";
      break;
    case Kind::duplicate_simplex:
      os << "simplex " << simplex << " repeats an earlier simplex";
      break;
    case Kind::grade_outside_grid:
      os << "simplex " << simplex << " has entry grade " << format_point(grade) << " outside the grid";
      break;
    case Kind::missing_face:
      os << "simplex " << simplex << " has a face missing from the complex";
      break;
    case Kind::face_enters_late:
      os << "simplex " << simplex << " enters at " << format_point(grade) << " before its face " << face;
      break;
  }
  return os.str();
}

namespace {

using FaceIndex = std::map<std::vector<std::size_t>, std::size_t>;

FaceIndex index_faces(const MultiFiltration& f) {
  FaceIndex idx;
  for (std::size_t s = 0; s < f.simplices.size(); ++s) idx.emplace(f.simplices[s].vertices, s);
  return idx;
}

std::vector<std::size_t> drop(const std::vector<std::size_t>& v, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != j) out.push_back(v[k]);
  return out;
}

bool below_some(const std::vector<std::vector<int>>& grades, const std::vector<int>& g) {
  for (const auto& h : grades) {
    bool le = h.size() == g.size();
    for (std::size_t i = 0; le && i < g.size(); ++i) le = h[i] <= g[i];
    if (le) return true;
  }
  return false;
}

struct Homology {
  std::vector<std::size_t> chains;
  Matrix cycles;
  Matrix projection;
  Matrix representatives;
  std::size_t dim() const { return representatives.cols(); }
};

std::vector<std::size_t> present_of_dim(const MultiFiltration& f, const Bitset& present, std::size_t d) {
  std::vector<std::size_t> out;
  for (auto s = present.find_first(); s != Bitset::npos; s = present.find_next(s))
    if (f.simplices[s].vertices.size() == d + 1) out.push_back(s);
  return out;
}

Matrix boundary(const MultiFiltration& f, const FaceIndex& faces, const std::vector<std::size_t>& lower,
                const std::vector<std::size_t>& upper, const Field& field) {
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t r = 0; r < lower.size(); ++r) row_of[lower[r]] = r;
  Matrix d(field, lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto& v = f.simplices[upper[c]].vertices;
    if (v.size() < 2) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      std::size_t face = faces.at(drop(v, j));
      d.at(row_of.at(face), c) = field.from_int(j % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

Homology homology_of(const MultiFiltration& f, const FaceIndex& faces, const Bitset& present, std::size_t degree,
                     const Field& field) {
  Homology h;
  h.chains = present_of_dim(f, present, degree);
  std::size_t n = h.chains.size();
  if (degree == 0) {
    h.cycles = Matrix::identity(field, n);
  } else {
    auto lower = present_of_dim(f, present, degree - 1);
    h.cycles = kernel_basis(boundary(f, faces, lower, h.chains, field));
  }
  Matrix b = boundary(f, faces, h.chains, present_of_dim(f, present, degree + 1), field);
  auto in_cycles = solve(h.cycles, b);
  if (!in_cycles) throw std::logic_error("boundaries are not cycles");
  Cokernel q = cokernel(*in_cycles);
  h.projection = q.projection;
  h.representatives = h.cycles * q.section;
  return h;
}

/// Homology classes in `to` of the representatives of `from`.
Matrix induced(const Homology& from, const Homology& to, const Field& field) {
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t r = 0; r < to.chains.size(); ++r) row_of[to.chains[r]] = r;
  Matrix moved(field, to.chains.size(), from.dim());
  for (std::size_t r = 0; r < from.chains.size(); ++r) {
    std::size_t target = row_of.at(from.chains[r]);
    for (std::size_t c = 0; c < from.dim(); ++c) moved.at(target, c) = from.representatives.at(r, c);
  }
  auto coords = solve(to.cycles, moved);
  if (!coords) throw std::logic_error("inclusion does not preserve cycles");
  return to.projection * *coords;
}

struct Classes {
  PosetPtr grid;
  std::vector<Bitset> members;       // simplices present, per class
  std::vector<std::size_t> class_of;  // per grid point
};

Classes subcomplex_classes(const MultiFiltration& f) {
  auto bad = validate_filtration(f);
  if (!bad.empty()) throw std::invalid_argument("invalid filtration: " + bad.front().message());
  Classes out;
  out.grid = FinitePoset::grid(f.grid);
  auto ups = entry_upsets(f, out.grid);
  std::map<Bitset, std::size_t> seen;
  for (Element q = 0; q < out.grid->size(); ++q) {
    Bitset present(f.simplices.size());
    for (std::size_t s = 0; s < ups.size(); ++s) present[s] = ups[s].contains(q);
    auto [it, inserted] = seen.emplace(present, out.members.size());
    if (inserted) out.members.push_back(present);
    out.class_of.push_back(it->second);
  }
  return out;
}

}  // namespace

std::vector<FiltrationViolation> validate_filtration(const MultiFiltration& f) {
  using K = FiltrationViolation::Kind;
  std::vector<FiltrationViolation> out;
  if (!f.grid.valid()) throw std::invalid_argument("filtration grid is not a valid box");
  FaceIndex seen;
  for (std::size_t s = 0; s < f.simplices.size(); ++s) {
    const auto& sigma = f.simplices[s];
    bool ok = !sigma.vertices.empty();
    for (std::size_t k = 1; ok && k < sigma.vertices.size(); ++k) ok = sigma.vertices[k - 1] < sigma.vertices[k];
    if (!ok) {
      out.push_back({K::malformed_simplex, s, 0, {}});
      continue;
    }
    if (!seen.emplace(sigma.vertices, s).second) out.push_back({K::duplicate_simplex, s, 0, {}});
    for (const auto& g : sigma.entry)
      if (!f.grid.contains(g)) out.push_back({K::grade_outside_grid, s, 0, g});
  }
  for (std::size_t s = 0; s < f.simplices.size(); ++s) {
    const auto& v = f.simplices[s].vertices;
    if (v.size() < 2) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      auto it = seen.find(drop(v, j));
      if (it == seen.end()) {
        out.push_back({K::missing_face, s, 0, {}});
        continue;
      }
      for (const auto& g : f.simplices[s].entry)
        if (!below_some(f.simplices[it->second].entry, g)) out.push_back({K::face_enters_late, s, it->second, g});
    }
  }
  return out;
}

std::vector<Upset> entry_upsets(const MultiFiltration& f, const PosetPtr& grid) {
  std::vector<Upset> out;
  for (const auto& s : f.simplices) {
    std::vector<Element> gens;
    for (const auto& g : s.entry) gens.push_back(grid->at(g));
    out.push_back(Upset::closure(grid, gens));
  }
  return out;
}

PHModule persistent_homology(const MultiFiltration& f, std::size_t degree, const Field& field) {
  Classes cls = subcomplex_classes(f);
  FaceIndex faces = index_faces(f);
  std::vector<Homology> hom;
  for (const auto& m : cls.members) hom.push_back(homology_of(f, faces, m, degree, field));

  const FinitePoset& g = *cls.grid;
  PHModule out;
  out.degree = degree;
  std::vector<std::size_t> dims;
  for (Element q = 0; q < g.size(); ++q) {
    const Homology& h = hom[cls.class_of[q]];
    dims.push_back(h.dim());
    out.chains.push_back(h.chains);
    out.representatives.push_back(h.representatives);
  }
  std::vector<Matrix> edges;
  for (auto [a, b] : g.covers()) {
    std::size_t ca = cls.class_of[a], cb = cls.class_of[b];
    edges.push_back(ca == cb ? Matrix::identity(field, hom[ca].dim()) : induced(hom[ca], hom[cb], field));
  }
  out.module = PosetModule::build(cls.grid, field, std::move(dims), std::move(edges));
  return out;
}

Encoding natural_encoding(const MultiFiltration& f, std::size_t degree, const Field& field) {
  Classes cls = subcomplex_classes(f);
  FaceIndex faces = index_faces(f);
  std::vector<Homology> hom;
  for (const auto& m : cls.members) hom.push_back(homology_of(f, faces, m, degree, field));

  std::size_t k = cls.members.size();
  std::vector<std::pair<Element, Element>> rel;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < k; ++x) {
    labels.push_back(region_name(x));
    for (std::size_t y = 0; y < k; ++y)
      if (x != y && cls.members[x].is_subset_of(cls.members[y])) rel.emplace_back(x, y);
  }
  PosetPtr p = FinitePoset::build(k, rel, labels);
  std::vector<std::size_t> dims;
  for (const auto& h : hom) dims.push_back(h.dim());
  std::vector<Matrix> edges;
  for (auto [a, b] : p->covers()) edges.push_back(induced(hom[a], hom[b], field));

  Encoding e;
  e.pi = PosetMorphism(cls.grid, p, cls.class_of);
  e.h = PosetModule::build(p, field, std::move(dims), std::move(edges));
  e.module = persistent_homology(f, degree, field).module;
  for (Element q = 0; q < cls.grid->size(); ++q) e.witness.push_back(Matrix::identity(field, e.module.dim(q)));
  if (auto err = verify_encoding(e)) throw std::logic_error("natural encoding failed verification: " + *err);
  return e;
}

std::optional<std::vector<int>> euler_characteristic_mismatch(const MultiFiltration& f, const Field& field) {
  Classes cls = subcomplex_classes(f);
  FaceIndex faces = index_faces(f);
  std::size_t top = 0;
  for (const auto& s : f.simplices) top = std::max(top, s.dimension());
  for (std::size_t c = 0; c < cls.members.size(); ++c) {
    long long by_cells = 0, by_betti = 0;
    for (std::size_t d = 0; d <= top; ++d) {
      long long sign = d % 2 == 0 ? 1 : -1;
      by_cells += sign * static_cast<long long>(present_of_dim(f, cls.members[c], d).size());
      by_betti += sign * static_cast<long long>(homology_of(f, faces, cls.members[c], d, field).dim());
    }
    if (by_cells != by_betti) {
      for (Element q = 0; q < cls.class_of.size(); ++q)
        if (cls.class_of[q] == c) return cls.grid->coordinates(q);
    }
  }
  return std::nullopt;
}

}  // namespace posetmod
