#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dessinator/triangle.hpp"

using namespace dessinator;

namespace {

Dessin torus() { return Dessin(parse_perm("(0 1 2)", 3), parse_perm("(0 1 2)", 3)); }

}  // namespace

TEST_CASE("triangle type of a dessin") {
  TriangleType t = triangle_type_of(torus());
  CHECK(t.a == 3);
  CHECK(t.b == 3);
  CHECK(t.c == 3);
  CHECK(t.geometry == Geometry::Euclidean);

  CHECK_THROWS_AS(make_triangle_type(0, 2, 3), std::invalid_argument);
}

TEST_CASE("triangle presentations") {
  Presentation p = triangle_presentation(make_triangle_type(2, 3, 7));
  CHECK(p.generator_names == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == power(Word{{1}}, 2));
  CHECK(p.relators[1] == power(Word{{2}}, 3));
  CHECK(p.relators[2] == power(Word{{2, 1}}, 7));

  Presentation e = extended_presentation(make_triangle_type(2, 3, 7));
  CHECK(e.generator_count() == 3);
  REQUIRE(e.relators.size() == 6);
}

TEST_CASE("spherical triangle quotients have the classical orders") {
  CHECK(coset_enumeration(triangle_presentation(make_triangle_type(2, 3, 3)), {}).index == 12);
  CHECK(coset_enumeration(triangle_presentation(make_triangle_type(2, 3, 4)), {}).index == 24);
  CHECK(coset_enumeration(triangle_presentation(make_triangle_type(2, 3, 5)), {}).index == 60);
}

TEST_CASE("rotation subgroup sits at index 2 in the extension") {
  auto [xw, yw] = rotation_embedding();
  for (auto type : {make_triangle_type(2, 3, 3), make_triangle_type(2, 3, 4)}) {
    Presentation ext = extended_presentation(type);
    CosetTable t = coset_enumeration(ext, {xw, yw});
    CHECK(t.index == 2);

    // The embedded x, y satisfy the rotation relators inside the extension.
    CosetTable full = coset_enumeration(ext, {});
    Perm x = full.word_action(xw), y = full.word_action(yw);
    CHECK(full.word_action(power(xw, type.a)).is_identity());
    CHECK(full.word_action(power(yw, type.b)).is_identity());
    CHECK(full.word_action(power(concat(yw, xw), type.c)).is_identity());
    // And generate a subgroup of exactly half the order.
    CHECK(group_order({x, y}) * 2 == group_order(full.action));
  }
}

TEST_CASE("dessin to coset table round trip") {
  Dessin d = torus();
  CosetTable t = dessin_to_table(d);
  CHECK(t.index == 3);
  CHECK(t.action[0] == d.sigma());
  CHECK(t.action[1] == d.tau());
  Dessin back = table_to_dessin(t);
  CHECK(isomorphic(d, back).has_value());

  CosetTable bad;
  bad.index = 2;
  bad.action = {parse_perm("(0 1)", 2)};
  CHECK_THROWS_AS(table_to_dessin(bad), std::invalid_argument);
}

TEST_CASE("round trip across the m <= 5 census") {
  for (int m = 1; m <= 5; ++m) {
    for (const Dessin& d : enumerate_dessins(m)) {
      Dessin back = table_to_dessin(dessin_to_table(d));
      CHECK(isomorphic(d, back).has_value());
    }
  }
}

TEST_CASE("torsion-free and normal subgroup tests") {
  Dessin d = torus();
  CHECK(is_torsion_free_uniform(d));  // all cycles exactly (3,3,3)
  CHECK(is_normal_regular(d));

  // A star: sigma = (0 1 2), tau trivial. Type (3,1,3); sigma cycles have
  // length 3 = a but tau cycle length 1 = b, so uniform; still fine.
  Dessin star(parse_perm("(0 1 2)", 3), Perm::identity(3));
  CHECK(is_torsion_free_uniform(star));

  // Mixed sigma cycle lengths break uniformity.
  Dessin mixed(parse_perm("(0 1)", 3), parse_perm("(1 2)", 3));
  CHECK_FALSE(is_torsion_free_uniform(mixed));
  CHECK_FALSE(is_normal_regular(mixed));
}

TEST_CASE("normalizer crosscheck equals aut+ across the census") {
  for (int m = 1; m <= 5; ++m) {
    for (const Dessin& d : enumerate_dessins(m)) {
      NormalizerCrosscheck cc = aut_normalizer_crosscheck(d);
      CHECK(cc.aut_plus_size == cc.normalizer_quotient_size);
    }
  }
  CHECK_THROWS_AS(aut_normalizer_crosscheck(torus(), 2), std::invalid_argument);
}
