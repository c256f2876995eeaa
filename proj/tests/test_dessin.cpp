#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "dessinator/dessin.hpp"

using namespace dessinator;

namespace {

Dessin torus() { return Dessin(parse_perm("(0 1 2)", 3), parse_perm("(0 1 2)", 3)); }

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

Dessin relabel(const Dessin& d, const Perm& h) {
  return Dessin(compose(h, compose(d.sigma(), inverse(h))),
                compose(h, compose(d.tau(), inverse(h))));
}

}  // namespace

TEST_CASE("construction validates connectivity") {
  CHECK_THROWS_WITH_AS(Dessin(parse_perm("(0 1)", 4), parse_perm("(2 3)", 4)),
                       "disconnected dessin", std::invalid_argument);
  CHECK_THROWS_AS(Dessin(parse_perm("(0 1)", 2), parse_perm("(0 1 2)", 3)),
                  std::invalid_argument);
}

TEST_CASE("torus example") {
  Dessin d = torus();
  Passport p = passport(d);
  CHECK(p.black_degrees == std::vector<int>{3});
  CHECK(p.white_degrees == std::vector<int>{3});
  CHECK(p.face_degrees == std::vector<int>{3});
  CHECK(genus(d) == 1);

  DessinType t = dessin_type(d);
  CHECK(t.a == 3);
  CHECK(t.b == 3);
  CHECK(t.c == 3);
  CHECK(t.geometry == Geometry::Euclidean);

  CHECK(is_uniform(d));
  CHECK_FALSE(is_clean(d));
  CHECK(bounded_by(d) == 3);
  CHECK(monodromy_order(d) == 3);

  AutSizes a = aut_full_size(d);
  CHECK(a.plus_size == 3);
  CHECK(a.full_size == 6);

  Classification c = classify(d);
  CHECK(c.regular);
  CHECK(c.reflexive);
  CHECK_FALSE(c.chiral);
}

TEST_CASE("genus of small examples") {
  // Star with one black center: sigma an m-cycle, tau trivial -> sphere.
  CHECK(genus(Dessin(parse_perm("(0 1 2 3)", 4), Perm::identity(4))) == 0);
  // One edge: sphere.
  CHECK(genus(Dessin(Perm::identity(1), Perm::identity(1))) == 0);
  // sigma = (0 1 2 3), tau = (0 2)(1 3): V=2, F=1, chi = 2 - 4 + ... genus 1.
  CHECK(genus(Dessin(parse_perm("(0 1 2 3)", 4), parse_perm("(0 2)(1 3)", 4))) == 1);
}

TEST_CASE("geometry trichotomy is exact") {
  // (2,3,6) euclidean, (2,3,5) spherical, (2,3,7) hyperbolic.
  auto geom = [](int a, int b, int c) {
    long lhs = static_cast<long>(b) * c + static_cast<long>(a) * c + static_cast<long>(a) * b;
    long rhs = static_cast<long>(a) * b * c;
    return lhs > rhs ? Geometry::Spherical : lhs == rhs ? Geometry::Euclidean
                                                        : Geometry::Hyperbolic;
  };
  CHECK(geom(2, 3, 5) == Geometry::Spherical);
  CHECK(geom(2, 3, 6) == Geometry::Euclidean);
  CHECK(geom(2, 3, 7) == Geometry::Hyperbolic);
}

TEST_CASE("mirror is an involution preserving the passport") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Perm s = random_perm(6, rng), t = random_perm(6, rng);
    if (!is_transitive({s, t})) continue;
    Dessin d(s, t);
    Dessin mm = mirror(mirror(d));
    CHECK(mm.sigma() == d.sigma());
    CHECK(mm.tau() == d.tau());
    CHECK(passport(mirror(d)) == passport(d));
    CHECK(genus(mirror(d)) == genus(d));
  }
}

TEST_CASE("isomorphism and canonical form agree") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    Perm s = random_perm(5, rng), t = random_perm(5, rng);
    if (!is_transitive({s, t})) continue;
    Dessin d(s, t);
    Dessin e = relabel(d, random_perm(5, rng));
    CHECK(isomorphic(d, e).has_value());

    Dessin cd = canonical_form(d), ce = canonical_form(e);
    CHECK(cd.sigma() == ce.sigma());
    CHECK(cd.tau() == ce.tau());
    // Idempotent and in the same class.
    Dessin cc = canonical_form(cd);
    CHECK(cc.sigma() == cd.sigma());
    CHECK(isomorphic(d, cd).has_value());
    // Lex-minimality: no worse than a handful of random relabelings.
    for (int k = 0; k < 5; ++k) {
      Dessin r = relabel(d, random_perm(5, rng));
      std::vector<int> key = cd.sigma().images(), rkey = r.sigma().images();
      key.insert(key.end(), cd.tau().images().begin(), cd.tau().images().end());
      rkey.insert(rkey.end(), r.tau().images().begin(), r.tau().images().end());
      CHECK(key <= rkey);
    }
  }
}

TEST_CASE("enumeration counts") {
  // Isomorphism classes of dessins with m edges = conjugacy classes of
  // index-m subgroups of the free group of rank 2.
  const int expected[] = {1, 3, 7, 26, 97, 624};
  for (int m = 1; m <= 6; ++m) {
    std::vector<Dessin> all = enumerate_dessins(m);
    CHECK(static_cast<int>(all.size()) == expected[m - 1]);
    // Pairwise non-isomorphic spot check at small m.
    if (m <= 3) {
      for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
          CHECK_FALSE(isomorphic(all[i], all[j]).has_value());
    }
    // Each entry is its own canonical form and the list is sorted.
    for (const Dessin& d : all) {
      Dessin c = canonical_form(d);
      CHECK(c.sigma() == d.sigma());
      CHECK(c.tau() == d.tau());
    }
  }
  CHECK_THROWS_AS(enumerate_dessins(9), std::invalid_argument);
}

TEST_CASE("dessin core battery over the m <= 5 census") {
  for (int m = 1; m <= 5; ++m) {
    for (const Dessin& d : enumerate_dessins(m)) {
      Passport p = passport(d);
      auto sum = [](const std::vector<int>& v) {
        return std::accumulate(v.begin(), v.end(), 0);
      };
      CHECK(sum(p.black_degrees) == m);
      CHECK(sum(p.white_degrees) == m);
      CHECK(sum(p.face_degrees) == m);
      CHECK(genus(d) >= 0);

      AutSizes a = aut_full_size(d);
      CHECK(m % a.plus_size == 0);
      std::uint64_t order = monodromy_order(d);
      Classification c = classify(d);
      CHECK(c.regular == (order == static_cast<std::uint64_t>(m)));
      CHECK(c.regular == (a.plus_size == static_cast<std::uint64_t>(m)));
      CHECK(c.chiral == !c.reflexive);
    }
  }
}

TEST_CASE("chirality battery invariants") {
  // Mirroring preserves regularity, genus and passport.
  for (int m = 1; m <= 5; ++m) {
    for (const Dessin& d : enumerate_dessins(m)) {
      Dessin md = mirror(d);
      CHECK(classify(md).regular == classify(d).regular);
      CHECK(genus(md) == genus(d));
      CHECK(passport(md) == passport(d));
      // Reflexive <=> isomorphic to the mirror.
      CHECK(classify(d).reflexive == isomorphic(d, md).has_value());
    }
  }
}

TEST_CASE("clean dessins") {
  CHECK(is_clean(Dessin(parse_perm("(0 1)", 4), parse_perm("(0 2)(1 3)", 4))));
  CHECK_FALSE(is_clean(torus()));
}
