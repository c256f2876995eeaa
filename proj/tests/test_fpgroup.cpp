#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "dessinator/fpgroup.hpp"

using namespace dessinator;

namespace {

bool table_satisfies(const CosetTable& t, const Presentation& p) {
  for (const Word& r : p.relators)
    if (!t.word_action(r).is_identity()) return false;
  return true;
}

}  // namespace

TEST_CASE("word reduction and powers") {
  Word x{{1}}, y{{2}};
  CHECK(concat(x, x.inverted()).empty());
  CHECK(power(x, 3).letters == std::vector<int>{1, 1, 1});
  CHECK(power(x, -2).letters == std::vector<int>{-1, -1});
  CHECK(power(x, 0).empty());
  Word w = concat(concat(x, y), concat(y.inverted(), x.inverted()));
  CHECK(w.empty());
}

TEST_CASE("presentation parsing") {
  Presentation p = parse_presentation("< x y | x^2 y^3 (y*x)^3 >");
  CHECK(p.generator_names == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0].letters == std::vector<int>{1, 1});
  CHECK(p.relators[1].letters == std::vector<int>{2, 2, 2});
  CHECK(p.relators[2].letters == std::vector<int>{2, 1, 2, 1, 2, 1});

  Presentation q = parse_presentation("< a b | a*b*a^-1*b^-1, b^2 >");
  REQUIRE(q.relators.size() == 2);
  CHECK(q.relators[0].letters == std::vector<int>{1, 2, -1, -2});

  CHECK(parse_presentation("< x | >").relators.empty());
  CHECK(parse_presentation("<x|x^5>").relators.size() == 1);
}

TEST_CASE("presentation parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("< x | x^0 >"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("< x | z^2 >"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("< x | (x^2 >"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("x | x^2 >"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("< x x | >"), std::invalid_argument);
}

TEST_CASE("coset enumeration of finite quotients") {
  // Spherical triangle groups: orders 12, 24, 60.
  CHECK(coset_enumeration(parse_presentation("< x y | x^2 y^3 (y*x)^3 >"), {}).index == 12);
  CHECK(coset_enumeration(parse_presentation("< x y | x^2 y^3 (y*x)^4 >"), {}).index == 24);
  CHECK(coset_enumeration(parse_presentation("< x y | x^2 y^3 (y*x)^5 >"), {}).index == 60);
  CHECK(coset_enumeration(parse_presentation("< x | x^6 >"), {}).index == 6);

  // Quaternion group.
  Presentation q8 = parse_presentation("< i j | i^4 i^2*j^-2 j*i*j^-1*i >");
  CHECK(coset_enumeration(q8, {}).index == 8);
}

TEST_CASE("coset tables satisfy the relators and are standardized") {
  Presentation p = parse_presentation("< x y | x^2 y^3 (y*x)^5 >");
  CosetTable t = coset_enumeration(p, {});
  CHECK(table_satisfies(t, p));
  // Standardized: re-standardizing from coset 0 is the identity.
  CosetTable again = standardize_from(t, 0);
  CHECK(again.index == t.index);
  for (size_t g = 0; g < t.action.size(); ++g) CHECK(again.action[g] == t.action[g]);
}

TEST_CASE("proper subgroup enumeration") {
  Presentation z6 = parse_presentation("< x | x^6 >");
  CHECK(coset_enumeration(z6, {parse_word("x^2", z6)}).index == 2);
  CHECK(coset_enumeration(z6, {parse_word("x^3", z6)}).index == 3);

  Presentation s4 = parse_presentation("< x y | x^2 y^3 (y*x)^4 >");
  // Point stabilizer has index 4 in S4: generated by a 3-cycle and a transposition.
  CosetTable t = coset_enumeration(s4, {parse_word("y", s4), parse_word("x*y*x*y^-1*x", s4)});
  CHECK(t.index <= 4);
  CHECK(t.index > 1);
}

TEST_CASE("non-closing enumeration reports the cap") {
  Presentation f2 = parse_presentation("< x y | >");
  CHECK_THROWS_WITH_AS(coset_enumeration(f2, {}, 200),
                       "enumeration did not close within max_cosets", std::runtime_error);
}

TEST_CASE("reidemeister-schreier generator count") {
  // A subgroup of index i in a group with n generators has i*n - (i-1)
  // Schreier generators before elimination (Nielsen-Schreier count).
  Presentation z = parse_presentation("< x | x^30 >");
  CosetTable t = coset_enumeration(z, {parse_word("x^5", z)});
  REQUIRE(t.index == 5);
  SchreierData data = reidemeister_schreier_data(z, t);
  int nontree = 0;
  for (const auto& row : data.generator_index)
    for (int g : row)
      if (g >= 0) ++nontree;
  CHECK(nontree == 5 * 1 - 4);
  // Z/30 over x^5: the subgroup is Z/6.
  Abelianization ab = abelianization(data.subgroup);
  CHECK(ab.free_rank == 0);
  REQUIRE(ab.torsion.size() == 1);
  CHECK(ab.torsion[0] == 6);
}

TEST_CASE("reidemeister-schreier on a surface-like subgroup") {
  // Klein bottle group <a b | a*b*a*b^-1>: conjugation by b inverts a, so
  // the orientation (torus) subgroup is <a, b^2> of index 2 with
  // abelianization Z^2, while <a^2, b> is again a Klein bottle group with
  // abelianization Z x Z/2.
  Presentation kb = parse_presentation("< a b | a*b*a*b^-1 >");

  CosetTable torus = coset_enumeration(kb, {parse_word("a", kb), parse_word("b^2", kb)});
  REQUIRE(torus.index == 2);
  Abelianization ab = abelianization(reidemeister_schreier(kb, torus));
  CHECK(ab.free_rank == 2);
  CHECK(ab.torsion.empty());

  CosetTable kb2 = coset_enumeration(kb, {parse_word("a^2", kb), parse_word("b", kb)});
  REQUIRE(kb2.index == 2);
  Abelianization ab2 = abelianization(reidemeister_schreier(kb, kb2));
  CHECK(ab2.free_rank == 1);
  REQUIRE(ab2.torsion.size() == 1);
  CHECK(ab2.torsion[0] == 2);
}

TEST_CASE("abelianization basics") {
  auto ab = [](const char* text) { return abelianization(parse_presentation(text)); };

  Abelianization free2 = ab("< x y | >");
  CHECK(free2.free_rank == 2);
  CHECK(free2.torsion.empty());

  Abelianization trefoil = ab("< x y | x^2*y^-3 >");
  CHECK(trefoil.free_rank == 1);
  CHECK(trefoil.torsion.empty());

  Abelianization z2z = ab("< x y | x*y*x^-1*y^-1 >");
  CHECK(z2z.free_rank == 2);

  Abelianization q8 = ab("< i j | i^4 i^2*j^-2 j*i*j^-1*i >");
  CHECK(q8.free_rank == 0);
  REQUIRE(q8.torsion.size() == 2);
  CHECK(q8.torsion[0] == 2);
  CHECK(q8.torsion[1] == 2);

  Abelianization big = ab("< x | x^1000000 >");
  CHECK(big.free_rank == 0);
  REQUIRE(big.torsion.size() == 1);
  CHECK(big.torsion[0] == 1000000);
}

TEST_CASE("abelianization is invariant under Tietze moves") {
  // Conjugating a relator, inverting it, or multiplying by another relator
  // does not change the group.
  Presentation base = parse_presentation("< x y | x^4 y^6 (x*y)^2 >");
  Abelianization want = abelianization(base);

  Presentation conj = parse_presentation("< x y | y*x^4*y^-1 y^6 (x*y)^2 >");
  Presentation inv = parse_presentation("< x y | x^-4 y^6 (x*y)^2 >");
  Presentation mult = parse_presentation("< x y | x^4 y^6*x^4 (x*y)^2 >");
  for (const Presentation& p : {conj, inv, mult}) {
    Abelianization got = abelianization(p);
    CHECK(got.free_rank == want.free_rank);
    CHECK(got.torsion == want.torsion);
  }
}

TEST_CASE("smith normal form invariants") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-9, 9);
  auto matmul = [](const std::vector<std::vector<mpz_class>>& a,
                   const std::vector<std::vector<mpz_class>>& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    std::vector<std::vector<mpz_class>> c(n, std::vector<mpz_class>(m, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < k; ++l)
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
  };

  for (int trial = 0; trial < 40; ++trial) {
    size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (auto& row : m)
      for (auto& e : row) e = entry(rng);

    SmithResult s = smith_normal_form(m);
    // U * M * V == D.
    CHECK(matmul(matmul(s.u, m), s.v) == s.d);
    // Diagonal, non-negative, divisibility chain.
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(s.d[i][j] == 0);
    for (int i = 0; i + 1 < s.rank; ++i) {
      CHECK(s.d[i][i] > 0);
      CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
    }
  }

  // Exactness far beyond machine words.
  mpz_class huge("123456789012345678901234567890");
  std::vector<std::vector<mpz_class>> m{{huge, huge * 2}, {huge * 3, huge * 4}};
  SmithResult s = smith_normal_form(m);
  CHECK(s.d[0][0] == huge);
  CHECK(s.d[1][1] == huge * 2);
}

TEST_CASE("word action on cosets") {
  Presentation p = parse_presentation("< x y | x^2 y^3 (y*x)^3 >");
  CosetTable t = coset_enumeration(p, {});
  Word w = parse_word("x*y*x^-1", p);
  Perm a = t.word_action(w);
  for (int c = 0; c < t.index; ++c) CHECK(a[c] == t.apply(c, w));
}
