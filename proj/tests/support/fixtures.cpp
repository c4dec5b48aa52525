#include "fixtures.hpp"

namespace fixtures {

using namespace posetmod;

PosetPtr grid(std::vector<int> lower, std::vector<int> upper) {
  return FinitePoset::grid(Box{std::move(lower), std::move(upper)});
}

PosetModule module_from(const PosetPtr& p, const Field& f, std::vector<std::size_t> dims,
                        const std::function<Matrix(Element, Element)>& edge) {
  std::vector<Matrix> edges;
  for (auto [a, b] : p->covers()) edges.push_back(edge(a, b));
  return PosetModule::build(p, f, std::move(dims), std::move(edges));
}

PosetModule bowtie_module() {
  enum { L, R, T, B };
  PosetPtr p = FinitePoset::build(4, {{L, T}, {L, B}, {R, T}, {R, B}}, {"L", "R", "T", "B"});
  Field q = Field::rationals();
  return module_from(p, q, {1, 1, 1, 1}, [&](Element a, Element b) {
    return Matrix::from_rows(q, {{a == R && b == T ? 2 : 1}});
  });
}

PosetModule noncommuting_square(const Field& f) {
  PosetPtr p = grid({0, 0}, {1, 1});
  Element top = p->at({1, 1}), right = p->at({1, 0});
  return module_from(p, f, {1, 1, 1, 1}, [&](Element a, Element b) {
    return Matrix::from_rows(f, {{a == right && b == top ? 0 : 1}});
  });
}

PosetModule skyscraper_plus_constant(const Field& f) {
  PosetPtr p = grid({-2, -2}, {2, 2});
  Element origin = p->at({0, 0});
  std::vector<std::size_t> dims(p->size(), 1);
  dims[origin] = 2;
  // At the origin the first basis vector spans the skyscraper.
  return module_from(p, f, dims, [&](Element a, Element b) {
    if (b == origin) return Matrix::from_rows(f, {{0}, {1}});
    if (a == origin) return Matrix::from_rows(f, {{0, 1}});
    return Matrix::identity(f, 1);
  });
}

BoxModule skyscraper_box(const Field& f, std::size_t n) {
  Box box{std::vector<int>(n, -1), std::vector<int>(n, 1)};
  PosetPtr p = FinitePoset::grid(box);
  std::vector<std::size_t> dims(p->size(), 0);
  dims[p->at(std::vector<int>(n, 0))] = 1;
  return BoxModule{box, module_from(p, f, dims, [&](Element a, Element b) { return Matrix(f, dims[b], dims[a]); })};
}

UpsetFamily nontransitive_family() {
  PosetPtr p = grid({0, 0}, {4, 4});
  auto ideal = [&](std::vector<std::vector<int>> gens) {
    std::vector<Element> g;
    for (const auto& x : gens) g.push_back(p->at(x));
    return Upset::closure(p, g);
  };
  return UpsetFamily{p, {ideal({{2, 0}, {0, 1}}), ideal({{3, 0}, {0, 1}}), ideal({{1, 1}}), ideal({{2, 1}})}};
}

MultiFiltration desk_filtration() {
  MultiFiltration f;
  f.grid = Box{{0, 0}, {2, 2}};
  f.simplices = {{{0}, {{0, 0}}}, {{1}, {{0, 0}}}, {{2}, {{0, 0}}}, {{0, 1}, {{1, 0}}}, {{1, 2}, {{0, 1}}}};
  return f;
}

}  // namespace fixtures
