// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "posetmod/io.hpp"
#include "random.hpp"

using namespace posetmod;
namespace io = posetmod::io;

namespace {

/// Outcome of one criterion: failure reason (empty on success) and a summary.
struct Check {
  std::string failure;
  std::string detail;
};

class Failed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

std::vector<std::vector<Element>> region_partition_without(const FinitePoset& p, Element x) {
  std::vector<Element> rest;
  for (Element a = 0; a < p.size(); ++a)
    if (a != x) rest.push_back(a);
  return {rest, {x}};
}

// 1 -----------------------------------------------------------------------
Check hom_formula() {
  gen::Rng rng(1001);
  std::size_t instances = 0, nonzero = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Field f = trial % 2 ? Field::prime(2) : Field::prime(3);
    auto p = gen::random_poset(rng, 1 + rng.index(8), 0.2 + 0.4 * rng.coin());
    Upset u = gen::random_upset(rng, p);
    Downset d = gen::random_downset(rng, p);
    HomSpace h = hom_indicator(indicator_module(u, f), indicator_module(d, f));
    std::size_t brute = oracle::hom_dimension(*p, u.members(), d.members(), f.characteristic());
    std::size_t full = oracle::hom_dimension(indicator_module(u, f).module, indicator_module(d, f).module);
    expect(h.dimension == brute && brute == full,
           "trial " + std::to_string(trial) + ": formula " + std::to_string(h.dimension) + ", brute force " +
               std::to_string(brute));
    ++instances;
    nonzero += h.dimension > 0;
  }
  return {"", std::to_string(instances) + " instances, " + std::to_string(nonzero) + " with nonzero Hom"};
}

// 2 -----------------------------------------------------------------------
Check hom_dimension_two() {
  auto g = fixtures::grid({0, 0}, {2, 2});
  Bitset u = g->full_subset();
  u[g->at({0, 0})] = false;
  Downset d = Downset::from_members(g, subset_of(g->size(), {g->at({0, 0}), g->at({1, 0}), g->at({0, 1})}));
  Field f2;
  HomSpace h = hom_indicator(indicator_module(Upset::from_members(g, u), f2), indicator_module(d, f2));
  expect(h.dimension == 2, "dimension " + std::to_string(h.dimension));
  expect(oracle::hom_dimension(*g, u, d.members(), 2) == 2, "oracle disagrees");
  return {"", "dim Hom = 2"};
}

// 3 -----------------------------------------------------------------------
Check nontransitive_uptight() {
  UpsetFamily fam = fixtures::nontransitive_family();
  const auto& g = *fam.poset;
  UptightPoset up = uptight_poset(fam);
  auto region = [&](std::vector<int> x) { return up.region_of[g.at(x)]; };
  std::size_t A = region({2, 0}), B = region({3, 0}), C = region({1, 1});
  expect(up.regions[A] == std::vector<Element>{g.at({2, 0})}, "A is not the single point x^2");
  expect(region({4, 0}) == B && region({0, 1}) == B, "B does not contain x^4 and y");
  std::vector<Element> column;
  for (int y = 1; y <= 4; ++y) column.push_back(g.at({1, y}));
  expect(up.regions[C] == column, "C is not the vertical ray from xy");
  auto raw = [&](std::size_t a, std::size_t b) {
    return std::find(up.raw_relation.begin(), up.raw_relation.end(), std::make_pair(a, b)) != up.raw_relation.end();
  };
  expect(raw(A, B) && raw(B, C), "missing A->B or B->C");
  expect(!raw(A, C), "raw relation contains A->C");
  expect(!up.raw_transitive, "raw relation flagged transitive");
  expect(up.poset->less(A, C), "closure lacks A<C");
  // The closure is a partial order: antisymmetric and transitive by construction; recheck.
  const auto& P = *up.poset;
  for (Element a = 0; a < P.size(); ++a)
    for (Element b = 0; b < P.size(); ++b)
      for (Element c = 0; c < P.size(); ++c)
        expect(!(P.leq(a, b) && P.leq(b, c)) || P.leq(a, c), "closure not transitive");
  return {"", std::to_string(up.regions.size()) + " regions, A=" + up.poset->label(A) + " B=" +
                  up.poset->label(B) + " C=" + up.poset->label(C)};
}

// 4 -----------------------------------------------------------------------
Check uptight_roundtrip() {
  gen::Rng rng(1004);
  std::size_t verified = 0, attempts = 0, largest = 0;
  while (verified < 120) {
    ++attempts;
    expect(attempts < 5000, "could not generate enough constant subdivisions");
    Field f = gen::random_prime_field(rng);
    auto q = gen::random_poset(rng, 1 + rng.index(7));
    std::vector<std::vector<Element>> parts;
    PosetModule m;
    if (rng.coin()) {
      // Fibers of a pullback, with the bases scrambled.
      UptightPoset up = uptight_poset(gen::random_family(rng, q, rng.index(4)));
      m = gen::change_basis(rng, pullback(up.quotient, gen::random_module(rng, up.poset, f, 3)));
      parts = up.regions;
    } else {
      // A random coarsening of the singletons; kept only if it verifies.
      m = gen::random_module(rng, q, f, 3);
      std::vector<std::size_t> label(q->size());
      std::size_t k = 1 + rng.index(q->size());
      for (auto& l : label) l = rng.index(k);
      std::map<std::size_t, std::vector<Element>> by;
      for (Element a = 0; a < q->size(); ++a) by[label[a]].push_back(a);
      for (auto& [l, v] : by) parts.push_back(v);
    }
    auto r = construct_witnesses(m, parts);
    if (!std::holds_alternative<ConstantSubdivision>(r)) continue;
    const ConstantSubdivision& cs = std::get<ConstantSubdivision>(r);
    expect(!verify_constant_subdivision(cs), "constructed subdivision fails verification");
    UptightEncoding ue = uptight_encoding(cs);
    const Encoding& e = ue.encoding;
    if (auto err = verify_encoding(e)) throw Failed(*err);
    PosetModule pulled = pullback(e.pi, e.h);
    expect(pulled.dims() == m.dims(), "pullback dims differ");
    expect(is_isomorphism_witness(pulled, m, e.witness), "witness squares do not commute");
    std::size_t r_in = cs.regions.size(), r_out = ue.uptight.regions.size();
    expect(2 * r_in >= 63 || r_out <= (std::size_t{1} << (2 * r_in)), "region count exceeds 2^(2r)");
    largest = std::max(largest, r_out);
    ++verified;
  }
  return {"", std::to_string(verified) + " subdivisions (" + std::to_string(attempts) + " drawn), up to " +
                  std::to_string(largest) + " uptight regions"};
}

// 5 -----------------------------------------------------------------------
Check four_regions() {
  PosetModule m = fixtures::skyscraper_plus_constant(Field::prime(2));
  const auto& g = *m.poset();
  Element origin = g.at({0, 0});
  auto r = construct_witnesses(m, region_partition_without(g, origin));
  expect(std::holds_alternative<ConstantSubdivision>(r), "isotypic subdivision rejected");
  UptightEncoding ue = uptight_encoding(std::get<ConstantSubdivision>(r));
  const auto& regions = ue.uptight.regions;
  expect(regions.size() == 4, std::to_string(regions.size()) + " regions");
  Bitset up = Upset::closure(m.poset(), {origin}).members(), down = Downset::closure(m.poset(), {origin}).members();
  std::vector<Bitset> want{subset_of(g.size(), {origin}), up, down, ~(up | down)};
  want[1][origin] = false;
  want[2][origin] = false;
  for (const auto& w : want) {
    bool found = false;
    for (const auto& reg : regions) found = found || subset_of(g.size(), reg) == w;
    expect(found, "expected region missing");
  }
  if (auto err = verify_encoding(ue.encoding)) throw Failed(*err);
  return {"", "regions: origin, punctured upset, punctured downset, remainder"};
}

// 6 -----------------------------------------------------------------------
Check monodromy() {
  PosetModule m = fixtures::bowtie_module();
  enum { L, R, T, B };
  auto iso = construct_witnesses(m, {{L, R, T, B}});
  expect(std::holds_alternative<SubdivisionObstruction>(iso), "single isotypic region accepted");
  const auto& o = std::get<SubdivisionObstruction>(iso);
  expect(o.kind == SubdivisionObstruction::Kind::monodromy, "obstruction is not monodromy");
  io::Json cert = io::certificate(*m.poset(), o);
  expect(cert["obstruction"] == "monodromy", "certificate lacks the obstruction");

  auto split = construct_witnesses(m, {{L, R}, {T, B}});
  expect(std::holds_alternative<SubdivisionObstruction>(split), "minima/maxima split accepted");

  auto paired = construct_witnesses(m, {{L, T}, {R, B}});
  expect(std::holds_alternative<ConstantSubdivision>(paired), "min/max pairing rejected");
  expect(!verify_constant_subdivision(std::get<ConstantSubdivision>(paired)), "pairing fails verification");
  if (auto err = verify_encoding(uptight_encoding(std::get<ConstantSubdivision>(paired)).encoding)) throw Failed(*err);
  return {"", "isotypic partition rejected (" + o.message() + "); {L,T},{R,B} accepted"};
}

// 7 -----------------------------------------------------------------------
void check_complex_exact(const Resolution& r, const PosetModule& m, bool upset) {
  if (auto err = verify_resolution(r, m)) throw Failed(*err);
  const IndicatorComplex& c = r.complex;
  auto maps = evaluate_complex(c);
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    ModuleHom first = upset ? maps[i + 1] : maps[i];
    ModuleHom second = upset ? maps[i] : maps[i + 1];
    expect(first.then(second).is_zero(), "d∘d != 0");
  }
  for (const auto& d : c.differentials) {
    expect(validate_monomial_matrix(d).empty(), "disconnected differential component");
    expect(!find_split_component(d), "split component, not minimal");
  }
  // Homology by independent ranks of the evaluated differentials.
  const auto& P = *m.poset();
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    PosetModule term = indicator_sum(c.poset, c.field, c.terms[i]);
    for (Element x = 0; x < P.size(); ++x) {
      std::size_t in = 0, out = 0;
      // Upset complexes run terms[i+1] -> terms[i]; downset ones terms[i] -> terms[i+1].
      if (i + 1 < c.terms.size()) (upset ? in : out) = oracle::rank_of(maps[i].at(x));
      if (i > 0) (upset ? out : in) = oracle::rank_of(maps[i - 1].at(x));
      std::size_t h = term.dim(x) - in - out;
      expect(h == (i == 0 ? m.dim(x) : 0), "homology at position " + std::to_string(i));
    }
  }
  PosetModule h0 = upset ? (c.differentials.empty() ? indicator_sum(c.poset, c.field, c.terms[0])
                                                   : cokernel(maps[0]).module)
                         : (c.differentials.empty() ? indicator_sum(c.poset, c.field, c.terms[0])
                                                    : kernel(maps[0]).module);
  expect(h0.dims() == m.dims(), "position-0 homology dims");
  expect(rank_invariant(h0) == rank_invariant(m), "position-0 homology rank invariant");
}

Check resolutions() {
  gen::Rng rng(1007);
  std::size_t count = 0, longest = 0, long_ones = 0;
  // The simple at the bottom of a diamond has a length-two upset resolution.
  auto diamond = FinitePoset::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  PosetModule bottom = PosetModule::indicator(diamond, Field::prime(3), subset_of(4, {0}));
  Resolution bottom_up = upset_resolution(bottom);
  const auto& bt = bottom_up.complex.terms;
  expect(bt.size() == 3 && bt[0].size() == 1 && bt[1].size() == 2 && bt[2].size() == 1,
         "diamond bottom resolution counts");
  check_complex_exact(bottom_up, bottom, true);
  check_complex_exact(downset_resolution(bottom), bottom, false);
  for (int trial = 0; trial < 120; ++trial) {
    Field f = gen::random_prime_field(rng);
    // Every third poset is a small grid, whose squares force longer resolutions.
    auto p = trial % 3 == 0 ? fixtures::grid({0, 0}, {1, rng.uniform(1, 2)})
                            : gen::random_poset(rng, 1 + rng.index(6), 0.3 + 0.4 * rng.uniform(0, 100) / 100.0);
    PosetModule m = gen::random_module(rng, p, f, 3);
    Resolution up = upset_resolution(m);
    Resolution down = downset_resolution(m);
    check_complex_exact(up, m, true);
    check_complex_exact(down, m, false);
    std::vector<std::size_t> beta0(p->size(), 0);
    for (const auto& l : up.complex.terms.empty() ? std::vector<IndicatorLabel>{} : up.complex.terms[0])
      ++beta0[minimal_elements(*p, l.members).front()];
    expect(beta0 == oracle::radical_quotient_dims(m), "beta_0 differs from the radical quotient");
    longest = std::max({longest, up.complex.length(), down.complex.length()});
    long_ones += std::max(up.complex.length(), down.complex.length()) >= 2;
    ++count;
  }
  return {"", std::to_string(count) + " modules, both directions, longest complex " + std::to_string(longest) +
                  ", " + std::to_string(long_ones) + " of length >= 2"};
}

// 8 -----------------------------------------------------------------------
std::size_t block_rank(const FlangePresentation& fp, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < fp.flats.size(); ++r)
    if (fp.flats[r].contains(x)) rows.push_back(r);
  for (std::size_t c = 0; c < fp.injectives.size(); ++c)
    if (fp.injectives[c].contains(y)) cols.push_back(c);
  if (rows.empty() || cols.empty()) return 0;
  return oracle::rank_of(fp.entries.select_rows(rows).select_columns(cols));
}

Check zn_theorems() {
  // (a)
  BoxModule k0 = fixtures::skyscraper_box(Field::prime(2));
  FaceComplex inj = minimal_injective_resolution(k0);
  expect(inj.counts() == std::vector<std::size_t>{1, 2, 1}, "k0 injective counts");
  expect(inj.length() == 2 && inj.length() <= k0.n(), "k0 resolution length");
  auto h = homology_dims(to_indicator_complex(inj));
  expect(h[0] == k0.module.dims(), "k0 resolution does not resolve k0");

  // (b), (c)
  gen::Rng rng(1008);
  std::size_t modules = 0, pairs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Field f = gen::random_prime_field(rng);
    BoxModule m = gen::random_box_module(rng, 1 + rng.index(2), 3, f);
    BoxModule d = matlis_dual(m);
    BoxModule dd = matlis_dual(d);
    expect(dd.box == m.box, "double dual box");
    expect(dd.module.dims() == m.module.dims(), "double dual dims");
    expect(rank_invariant(dd.module) == rank_invariant(m.module), "double dual ranks");

    FlangePresentation fp = flange_presentation(m), fd = flange_presentation(d);
    std::vector<FaceLabel> want_flats, want_injectives;
    for (const auto& l : fp.injectives) want_flats.push_back(l.dual());
    for (const auto& l : fp.flats) want_injectives.push_back(l.dual());
    auto sorted = [](std::vector<FaceLabel> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    expect(sorted(want_flats) == sorted(fd.flats), "dual flat labels");
    expect(sorted(want_injectives) == sorted(fd.injectives), "dual injective labels");
    expect(rank(fp.entries) == rank(fd.entries), "dual scalar rank");
    const auto& g = *m.module.poset();
    for (Element a = 0; a < g.size(); ++a)
      for (Element b = 0; b < g.size(); ++b) {
        if (!g.leq(a, b)) continue;
        auto x = g.coordinates(a), y = g.coordinates(b), nx = x, ny = y;
        for (auto& v : nx) v = -v;
        for (auto& v : ny) v = -v;
        std::size_t r = block_rank(fp, x, y);
        expect(r == rank(m.module.map(a, b)), "flange rank profile differs from the module");
        expect(r == block_rank(fd, ny, nx), "dual flange rank profile");
        ++pairs;
      }
    ++modules;
  }
  return {"", "k0 counts (1,2,1); " + std::to_string(modules) + " box modules, " + std::to_string(pairs) +
                  " rank-profile pairs"};
}

// 9 -----------------------------------------------------------------------
/// Reduces a one-parameter fringe matrix to a partial permutation using only
/// automorphisms of the upset and downset sums; returns (birth, death) pairs.
std::vector<std::pair<std::size_t, std::size_t>> normalize_bars(const MonomialMatrix& mm) {
  const auto& p = *mm.poset;
  Matrix e = mm.entries;
  const Field& f = e.field();
  std::vector<std::size_t> birth, death;
  for (const auto& l : mm.rows) birth.push_back(l.boundary(p).front());
  for (const auto& l : mm.cols) death.push_back(l.boundary(p).front());
  std::vector<std::size_t> order(mm.cols.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return death[a] > death[b]; });
  std::vector<bool> used(mm.rows.size(), false), done(mm.cols.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> bars;
  for (std::size_t c : order) {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t r = 0; r < e.rows(); ++r)
      if (!used[r] && !Field::is_zero(e.at(r, c)) && (pivot == SIZE_MAX || birth[r] < birth[pivot])) pivot = r;
    expect(pivot != SIZE_MAX, "zero column in a minimal fringe presentation");
    Scalar s = e.at(pivot, c);
    // Row operations: add multiples of the earlier-born pivot row.
    for (std::size_t r = 0; r < e.rows(); ++r) {
      if (r == pivot || Field::is_zero(e.at(r, c))) continue;
      expect(birth[pivot] <= birth[r], "row operation not allowed");
      Scalar k = f.div(e.at(r, c), s);
      for (std::size_t j = 0; j < e.cols(); ++j) e.at(r, j) = f.sub(e.at(r, j), f.mul(k, e.at(pivot, j)));
    }
    // Column operations: clear the pivot row using the later-dying column c.
    for (std::size_t j = 0; j < e.cols(); ++j) {
      if (j == c || done[j] || Field::is_zero(e.at(pivot, j))) continue;
      expect(death[c] >= death[j], "column operation not allowed");
      Scalar k = f.div(e.at(pivot, j), s);
      for (std::size_t r = 0; r < e.rows(); ++r) e.at(r, j) = f.sub(e.at(r, j), f.mul(k, e.at(r, c)));
    }
    for (std::size_t r = 0; r < e.rows(); ++r) e.at(r, c) = r == pivot ? f.one() : f.zero();
    used[pivot] = true;
    done[c] = true;
    bars.emplace_back(birth[pivot], death[c]);
  }
  // What remains must be a permutation: one 1 per row and column.
  for (std::size_t r = 0; r < e.rows(); ++r) {
    std::size_t ones = 0;
    for (std::size_t c = 0; c < e.cols(); ++c) {
      if (Field::is_zero(e.at(r, c))) continue;
      expect(e.at(r, c) == f.one(), "normalized entry is not 1");
      ++ones;
    }
    expect(ones == 1, "normalized block is not a permutation");
  }
  std::sort(bars.begin(), bars.end());
  return bars;
}

Check chain_barcodes() {
  gen::Rng rng(1009);
  std::size_t modules = 0, total_bars = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Field f = gen::random_prime_field(rng);
    std::size_t n = 1 + rng.index(10);
    PosetModule m = gen::random_chain_module(rng, n, f, 3);
    auto oracle_bars = oracle::chain_bars(m);
    std::vector<std::pair<std::size_t, std::size_t>> want;
    for (auto [bar, mult] : oracle_bars)
      for (std::size_t k = 0; k < mult; ++k) want.push_back(bar);
    FringePresentation fp = fringe_presentation(identity_encoding(m));
    if (auto err = verify_fringe(fp)) throw Failed(*err);
    expect(fp.mm.rows.size() == want.size() && fp.mm.cols.size() == want.size(),
           "rows/cols " + std::to_string(fp.mm.rows.size()) + "/" + std::to_string(fp.mm.cols.size()) + " vs " +
               std::to_string(want.size()) + " bars");
    for (const auto& l : fp.mm.rows) expect(l.boundary(*m.poset()).size() == 1, "birth label is not a ray");
    for (const auto& l : fp.mm.cols) expect(l.boundary(*m.poset()).size() == 1, "death label is not a ray");
    expect(normalize_bars(fp.mm) == want, "normalized pairs differ from the oracle bars");
    total_bars += want.size();
    ++modules;
  }
  return {"", std::to_string(modules) + " chain modules, " + std::to_string(total_bars) + " bars"};
}

// 10 ----------------------------------------------------------------------
Check desk_pipeline() {
  MultiFiltration f = fixtures::desk_filtration();
  Field q = Field::rationals();
  PHModule ph = persistent_homology(f, 0, q);
  const auto& g = *ph.module.poset();
  std::vector<std::size_t> want_steps{ph.module.dim(g.at({0, 0})), ph.module.dim(g.at({1, 0})),
                                      ph.module.dim(g.at({0, 1})), ph.module.dim(g.at({1, 1}))};
  expect(want_steps == std::vector<std::size_t>{3, 2, 2, 1}, "H0 does not step 3 -> 2 -> 1");
  for (Element a = 0; a < g.size(); ++a) {
    std::vector<std::vector<std::size_t>> present;
    for (const auto& s : f.simplices)
      for (const auto& e : s.entry)
        if (g.leq(g.at(e), a)) {
          present.push_back(s.vertices);
          break;
        }
    expect(ph.module.dim(a) == oracle::betti(present, 0, 2), "H0 differs from brute force");
  }

  Encoding e = natural_encoding(f, 0, q);
  if (auto err = verify_encoding(e)) throw Failed(*err);
  auto hd = e.h.dims();
  std::sort(hd.begin(), hd.end());
  hd.erase(std::unique(hd.begin(), hd.end()), hd.end());
  expect(hd == std::vector<std::size_t>{1, 2, 3}, "encoding spaces are not 3, 2, 1");

  FringePresentation fp = fringe_presentation(e);
  if (auto err = verify_fringe(fp)) throw Failed(*err);
  expect(validate_monomial_matrix(fp.mm).empty(), "fringe matrix violates the entry rule");
  expect(fp.mm.rows.size() == 3 && fp.mm.cols.size() == 3, "fringe matrix is not 3x3");
  expect(image_module(fp.mm).module.dims() == ph.module.dims(), "image dims differ from H0");
  bool full = false;
  for (const auto& c : fp.mm.cols) full = full || c.members == g.full_subset();
  expect(full, "no column label is the whole grid");
  return {"", "H0 3->2->1, encoding poset of " + std::to_string(e.h.poset()->size()) + " classes, 3x3 fringe"};
}

// 11 ----------------------------------------------------------------------
Check negative_paths() {
  auto c3 = FinitePoset::build(3, {{0, 1}, {1, 2}});
  Field f2;
  auto mm = MonomialMatrix::fringe(c3, {Upset::closure(c3, {2})}, {Downset::closure(c3, {0})},
                                   Matrix::identity(f2, 1));
  expect(validate_monomial_matrix(mm) == std::vector<EntryViolation>{{0, 0}}, "disjoint entry not reported");
  bool threw = false;
  try {
    evaluate_monomial_matrix(mm);
  } catch (const InvalidMonomialMatrix&) {
    threw = true;
  }
  expect(threw, "disjoint entry evaluated");

  threw = false;
  try {
    fixtures::noncommuting_square(f2);
  } catch (const NonCommutingError& e) {
    threw = e.certificate().path_a != e.certificate().path_b;
  }
  expect(threw, "noncommuting module accepted");

  // Both through the command line, with certificates on stdout.
  auto cli = [](const io::Json& doc) {
    std::istringstream in(io::dump(doc));
    std::ostringstream out, err;
    int code = cli::run({"validate"}, in, out, err);
    return std::make_pair(code, io::parse(out.str()));
  };
  auto [code_mm, cert_mm] = cli(io::to_document(mm));
  expect(code_mm == cli::kValidationFailure && cert_mm["check"] == "monomial-matrix", "cli accepted the matrix");

  auto g = fixtures::grid({0, 0}, {1, 1});
  io::Json doc = io::header("module");
  doc["field"] = "2";
  doc["poset"] = io::poset_body(*g);
  doc["dims"] = {1, 1, 1, 1};
  doc["maps"] = io::Json::array();
  for (auto [a, b] : g->covers())
    doc["maps"].push_back(
        {{"from", g->label(a)}, {"to", g->label(b)}, {"matrix", {{g->label(a) == "(1,0)" ? 0 : 1}}}});
  auto [code_mod, cert_mod] = cli(doc);
  expect(code_mod == cli::kValidationFailure && cert_mod["check"] == "commutativity", "cli accepted the module");
  return {"", "entry rule and diamond certificates reported, cli exit 1"};
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<Check()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Hom formula matches brute force", 30, hom_formula},
      {2, "two-component Hom on [0,2]^2", 10, hom_dimension_two},
      {3, "uptight raw relation is not transitive", 10, nontransitive_uptight},
      {4, "uptight encoding round trip", 60, uptight_roundtrip},
      {5, "four uptight regions around the origin", 10, four_regions},
      {6, "monodromy detection", 10, monodromy},
      {7, "resolution exactness and minimality", 60, resolutions},
      {8, "Z^n duality and resolutions", 60, zn_theorems},
      {9, "one-parameter bar codes", 60, chain_barcodes},
      {10, "desk-scale pipeline", 10, desk_pipeline},
      {11, "negative paths", 10, negative_paths},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = c.run();
    } catch (const Failed& e) {
      result.failure = e.what();
    } catch (const std::exception& e) {
      result.failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.failure.empty() && secs > c.budget_seconds)
      result.failure = "took " + std::to_string(secs) + "s, budget " + std::to_string(c.budget_seconds) + "s";
    bool ok = result.failure.empty();
    failures += !ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " ["
         << (ok ? result.detail : result.failure) << "] (" << secs << "s)";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
