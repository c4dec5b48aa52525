#include <doctest.h>

#include <functional>
#include <variant>

#include "fixtures.hpp"
#include "posetmod/io.hpp"
#include "random.hpp"

using namespace posetmod;
namespace io = posetmod::io;

namespace {

/// Serializes, parses, rebuilds and serializes again; both texts must agree.
template <class T, class Load>
void round_trip(const T& value, Load load) {
  std::string text = io::dump(io::to_document(value));
  auto back = load(io::parse(text));
  CHECK(io::dump(io::to_document(back)) == text);
}

template <class Load>
void round_trip(const std::shared_ptr<const FinitePoset>& p, Load load) {
  std::string text = io::dump(io::to_document(*p));
  CHECK(io::dump(io::to_document(*load(io::parse(text)))) == text);
}

std::string schema_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("posets") {
    round_trip(FinitePoset::build(0, {}), io::poset_from_document);
    round_trip(FinitePoset::build(3, {{0, 1}, {1, 2}}, {"a", "b", "c"}), io::poset_from_document);
    round_trip(fixtures::grid({-1, 0}, {1, 2}), io::poset_from_document);
    gen::Rng rng(91);
    for (int i = 0; i < 10; ++i) round_trip(gen::random_poset(rng, 1 + rng.index(8)), io::poset_from_document);

    auto c3 = io::poset_from_document(io::parse(R"({"format":"posetmod","version":1,"kind":"poset",
        "poset":{"elements":["x","y","z"],"relations":[["x","y"],["y","z"],["x","z"]]}})"));
    CHECK(c3->covers().size() == 2);
    CHECK(c3->leq(0, 2));
  }

  TEST_CASE("modules and morphisms") {
    auto c3 = gen::chain(3);
    Field q = Field::rationals();
    PosetModule m = fixtures::module_from(c3, q, {1, 2, 1}, [&](Element a, Element) {
      return a == 0 ? Matrix::from_rows(q, {{1}, {-2}}) : Matrix::from_rows(q, {{2, 1}});
    });
    std::string text = io::dump(io::to_document(m));
    CHECK(io::dump(io::to_document(io::module_from_document(io::parse(text)))) == text);

    gen::Rng rng(92);
    for (int i = 0; i < 10; ++i) {
      auto p = gen::random_poset(rng, 1 + rng.index(6));
      round_trip(gen::random_module(rng, p, gen::random_prime_field(rng), 3),
                 [](const io::Json& d) { return io::module_from_document(d); });
    }
    round_trip(PosetMorphism(c3, gen::chain(2), {0, 0, 1}), io::morphism_from_document);
  }

  TEST_CASE("fractions and field overrides") {
    io::Json doc = io::parse(R"({"format":"posetmod","version":1,"kind":"module","field":"Q",
        "poset":{"elements":2,"covers":[[0,1]]},"dims":[1,1],"maps":[{"from":0,"to":1,"matrix":[["1/2"]]}]})");
    PosetModule m = io::module_from_document(doc);
    CHECK(m.edge_map(0).at(0, 0) == Field::rationals().from_ratio(1, 2));
    CHECK(io::to_document(m)["maps"][0]["matrix"][0][0] == "1/2");
    PosetModule m5 = io::module_from_document(doc, Field::prime(5));
    CHECK(m5.edge_map(0).at(0, 0) == Field::prime(5).from_int(3));
  }

  TEST_CASE("families, subdivisions and encodings") {
    round_trip(fixtures::nontransitive_family(), io::upset_family_from_document);

    PosetModule m = fixtures::bowtie_module();
    std::vector<std::vector<Element>> parts{{0, 2}, {1, 3}};
    io::Json sub = io::subdivision_document(*m.poset(), parts);
    CHECK(io::subdivision_from_document(*m.poset(), io::parse(io::dump(sub))) == parts);

    auto r = construct_witnesses(m, parts);
    REQUIRE(std::holds_alternative<ConstantSubdivision>(r));
    Encoding e = uptight_encoding(std::get<ConstantSubdivision>(r)).encoding;
    round_trip(e, [](const io::Json& d) { return io::encoding_from_document(d); });
  }

  TEST_CASE("filtrations") {
    round_trip(fixtures::desk_filtration(), io::filtration_from_document);
    gen::Rng rng(93);
    for (int i = 0; i < 5; ++i)
      round_trip(gen::random_filtration(rng, Box{{0, 0}, {2, 3}}, 4), io::filtration_from_document);
  }

  TEST_CASE("monomial matrices and complexes") {
    Encoding e = natural_encoding(fixtures::desk_filtration(), 0, Field::rationals());
    FringePresentation fp = fringe_presentation(e);
    round_trip(fp.mm, [](const io::Json& d) { return io::monomial_matrix_from_document(d); });
    io::Json doc = io::to_document(fp.mm);
    CHECK(doc["rows"][0].contains("upset"));
    CHECK(doc["cols"][0].contains("downset"));

    gen::Rng rng(94);
    for (int i = 0; i < 6; ++i) {
      auto p = gen::random_poset(rng, 2 + rng.index(4));
      PosetModule m = gen::random_module(rng, p, Field::prime(3), 2);
      round_trip(upset_resolution(m).complex, [](const io::Json& d) { return io::complex_from_document(d); });
      round_trip(downset_resolution(m).complex, [](const io::Json& d) { return io::complex_from_document(d); });
    }
  }

  TEST_CASE("box modules, flanges and face complexes") {
    BoxModule k0 = fixtures::skyscraper_box(Field::prime(2));
    round_trip(k0, [](const io::Json& d) { return io::box_module_from_document(d); });
    gen::Rng rng(95);
    for (int i = 0; i < 6; ++i) {
      BoxModule m = gen::random_box_module(rng, 2, 3, Field::prime(3));
      round_trip(m, [](const io::Json& d) { return io::box_module_from_document(d); });
      round_trip(minimal_injective_resolution(m), [](const io::Json& d) { return io::face_complex_from_document(d); });
      FlangePresentation fp = flange_presentation(m);
      std::string text = io::dump(io::to_document(fp));
      FlangePresentation back = io::flange_from_document(io::parse(text));
      CHECK(back.flats == fp.flats);
      CHECK(back.injectives == fp.injectives);
      CHECK(back.entries == fp.entries);
    }
  }

  TEST_CASE("indicator pairs") {
    auto g = fixtures::grid({0, 0}, {2, 2});
    io::IndicatorPair pair{g, IndicatorLabel::principal_up(*g, 1), IndicatorLabel::principal_down(*g, 4)};
    round_trip(pair, io::indicator_pair_from_document);
  }

  TEST_CASE("schema errors carry a path") {
    CHECK(schema_path([] { io::parse("{"); }) == "");
    CHECK(schema_path([] { io::document_kind(io::parse(R"({"format":"other","version":1})")); }) == "/format");
    CHECK(schema_path([] {
      io::document_kind(io::parse(R"({"format":"posetmod","version":7,"kind":"poset"})"));
    }) == "/version");
    CHECK(schema_path([] {
      io::module_from_document(io::parse(R"({"format":"posetmod","version":1,"kind":"poset","elements":1})"));
    }) == "/kind");
    CHECK(schema_path([] {
      io::module_from_document(io::parse(R"({"format":"posetmod","version":1,"kind":"module",
          "poset":{"elements":2,"covers":[[0,1]]},"dims":[1,1],"maps":[{"from":0,"to":1,"matrix":[[1,2]]}]})"));
    }).rfind("/maps/0", 0) == 0);
    CHECK(schema_path([] {
      io::module_from_document(io::parse(R"({"format":"posetmod","version":1,"kind":"module","field":"4",
          "poset":{"elements":1},"dims":[0],"maps":[]})"));
    }) == "/field");
  }

  TEST_CASE("serialization is deterministic") {
    gen::Rng a(96), b(96);
    auto p1 = gen::random_poset(a, 6), p2 = gen::random_poset(b, 6);
    CHECK(io::dump(io::to_document(gen::random_module(a, p1, Field::prime(5), 3))) ==
          io::dump(io::to_document(gen::random_module(b, p2, Field::prime(5), 3))));
  }
}
