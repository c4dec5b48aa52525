#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "posetmod/resolve.hpp"
#include "random.hpp"

using namespace posetmod;

namespace {

std::vector<std::size_t> term_sizes(const IndicatorComplex& c) {
  std::vector<std::size_t> out;
  for (const auto& t : c.terms) out.push_back(t.size());
  return out;
}

}  // namespace

TEST_SUITE("resolve") {
  TEST_CASE("covers of constant and skyscraper modules") {
    Field f2;
    auto p = FinitePoset::build(3, {{0, 1}, {0, 2}});
    PosetModule k = PosetModule::indicator(p, f2, p->full_subset());
    ProjectiveCover pc = projective_cover(k);
    CHECK(pc.generators == std::vector<Element>{0});
    CHECK(pc.betti == std::vector<std::size_t>{1, 0, 0});
    CHECK(pc.map.is_surjective());

    auto anti = FinitePoset::build(2, {});
    PosetModule two = PosetModule::indicator(anti, f2, anti->full_subset());
    CHECK(projective_cover(two).labels.size() == 2);
    CHECK(injective_hull(two).labels.size() == 2);

    auto top = FinitePoset::build(3, {{0, 2}, {1, 2}});
    InjectiveHull ih = injective_hull(PosetModule::indicator(top, f2, top->full_subset()));
    CHECK(ih.cogenerators == std::vector<Element>{2});
    CHECK(ih.map.is_injective());
  }

  TEST_CASE("a bar on a chain") {
    auto c3 = gen::chain(3);
    Field f2;
    PosetModule bar = PosetModule::indicator(c3, f2, subset_of(3, {1}));
    ProjectiveCover pc = projective_cover(bar);
    REQUIRE(pc.labels.size() == 1);
    CHECK(pc.labels[0] == IndicatorLabel::principal_up(*c3, 1));
    InjectiveHull ih = injective_hull(bar);
    REQUIRE(ih.labels.size() == 1);
    CHECK(ih.labels[0] == IndicatorLabel::principal_down(*c3, 1));

    Presentations pr = presentations(bar);
    CHECK(pr.upset.rows.size() == 1);
    CHECK(pr.upset.cols.size() == 1);
    CHECK(pr.upset.cols[0] == IndicatorLabel::principal_up(*c3, 2));
  }

  TEST_CASE("projective modules resolve in length zero") {
    auto g = fixtures::grid({0, 0}, {1, 2});
    Field f3 = Field::prime(3);
    std::vector<IndicatorLabel> labels{IndicatorLabel::principal_up(*g, 0), IndicatorLabel::principal_up(*g, 3)};
    PosetModule free = indicator_sum(g, f3, labels);
    Resolution r = upset_resolution(free);
    CHECK(r.complex.length() == 0);
    CHECK(presentations(free).upset.cols.empty());
  }

  TEST_CASE("skyscraper at the minimum of the square") {
    auto g = fixtures::grid({0, 0}, {1, 1});
    Field f2;
    PosetModule k0 = PosetModule::indicator(g, f2, subset_of(4, {g->at({0, 0})}));
    Resolution up = upset_resolution(k0);
    CHECK(term_sizes(up.complex) == std::vector<std::size_t>{1, 2, 1});
    CHECK_FALSE(verify_resolution(up, k0));
    Resolution down = downset_resolution(k0);
    CHECK_FALSE(verify_resolution(down, k0));
  }

  TEST_CASE("presentation of the monodromy example") {
    PosetModule m = fixtures::bowtie_module();
    auto p = m.poset();
    enum { L, R, T, B };
    Presentations pr = presentations(m);
    CHECK(pr.upset.rows == std::vector<IndicatorLabel>{IndicatorLabel::principal_up(*p, L),
                                                        IndicatorLabel::principal_up(*p, R)});
    CHECK(pr.upset.cols == std::vector<IndicatorLabel>{IndicatorLabel::principal_up(*p, T),
                                                        IndicatorLabel::principal_up(*p, B)});
    CHECK(rank(pr.upset.entries) == 2);
    // Up to rescaling rows and columns the block has the shape [[2,1],[-1,-1]]: the ratios
    // of the two columns differ by the factor two sitting on R -> T.
    Field q = Field::rationals();
    const Matrix& e = pr.upset.entries;
    Scalar ratio_t = q.div(e.at(0, 0), e.at(1, 0)), ratio_b = q.div(e.at(0, 1), e.at(1, 1));
    CHECK(q.div(ratio_t, ratio_b) == q.from_int(2));
    CHECK(rank_invariant(cokernel(evaluate_monomial_matrix(pr.upset)).module) == rank_invariant(m));
  }

  TEST_CASE("random resolutions are exact and minimal") {
    gen::Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      Field f = gen::random_prime_field(rng);
      auto p = gen::random_poset(rng, 1 + rng.index(6));
      PosetModule m = gen::random_module(rng, p, f, 3);
      Resolution up = upset_resolution(m);
      Resolution down = downset_resolution(m);
      CHECK_FALSE(verify_resolution(up, m));
      CHECK_FALSE(verify_resolution(down, m));
      CHECK(up.complex.direction == Direction::homological);
      CHECK(down.complex.direction == Direction::cohomological);
      for (const auto& d : up.complex.differentials) CHECK_FALSE(find_split_component(d));
      for (const auto& d : down.complex.differentials) CHECK_FALSE(find_split_component(d));
      CHECK(projective_cover(m).betti == oracle::radical_quotient_dims(m));
      CHECK(injective_hull(m).betti == oracle::socle_dims(m));
      auto h = homology_dims(up.complex);
      CHECK(h[0] == m.dims());
      for (std::size_t i = 1; i < h.size(); ++i)
        for (auto v : h[i]) CHECK(v == 0);
    }
  }

  TEST_CASE("fringe presentations") {
    auto point = FinitePoset::build(1, {});
    Field f2;
    PosetModule k = PosetModule::indicator(point, f2, point->full_subset());
    FringePresentation one = fringe_presentation(identity_encoding(k));
    CHECK(one.mm.entries == Matrix::identity(f2, 1));
    CHECK_FALSE(verify_fringe(one));

    auto c3 = gen::chain(3);
    PosetModule bar = PosetModule::indicator(c3, f2, subset_of(3, {1, 2}));
    FringePresentation fb = fringe_presentation(identity_encoding(bar));
    REQUIRE(fb.mm.rows.size() == 1);
    CHECK(fb.mm.rows[0] == IndicatorLabel::principal_up(*c3, 1));
    CHECK(fb.mm.cols[0].members == c3->full_subset());
    CHECK(fb.mm.entries == Matrix::identity(f2, 1));

    gen::Rng rng(62);
    for (int trial = 0; trial < 30; ++trial) {
      Field f = gen::random_prime_field(rng);
      auto q = gen::random_poset(rng, 2 + rng.index(5));
      UptightPoset up = uptight_poset(gen::random_family(rng, q, 1 + rng.index(3)));
      PosetModule h = gen::random_module(rng, up.poset, f, 3);
      Encoding e;
      e.pi = up.quotient;
      e.h = h;
      e.module = pullback(up.quotient, h);
      for (Element a = 0; a < q->size(); ++a) e.witness.push_back(Matrix::identity(f, e.module.dim(a)));
      FringePresentation fp = fringe_presentation(e);
      CHECK_FALSE(verify_fringe(fp));
      CHECK(validate_monomial_matrix(fp.mm).empty());
      CHECK(image_module(fp.mm).module.dims() == e.module.dims());

      IndicatorComplex pulled = pullback_complex(e, upset_resolution(h).complex);
      auto hd = homology_dims(pulled);
      CHECK(hd[0] == e.module.dims());
      for (std::size_t i = 1; i < hd.size(); ++i)
        for (auto v : hd[i]) CHECK(v == 0);
    }
  }

  TEST_CASE("pullback along identity leaves complexes unchanged") {
    gen::Rng rng(63);
    auto p = gen::random_poset(rng, 5);
    PosetModule m = gen::random_module(rng, p, Field::prime(2), 2);
    IndicatorComplex c = upset_resolution(m).complex;
    IndicatorComplex same = pullback_complex(identity_encoding(m), c);
    CHECK(same.terms == c.terms);
    for (std::size_t i = 0; i < c.differentials.size(); ++i)
      CHECK(same.differentials[i].entries == c.differentials[i].entries);
  }
}
