#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dessinator/perm.hpp"

using namespace dessinator;

namespace {

// Independent order oracle: breadth-first closure of the generated set.
// Only usable for small degrees; group_order must agree with it exactly.
std::set<std::vector<int>> closure_oracle(const std::vector<Perm>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<Perm> queue{Perm::identity(gens.front().degree())};
  seen.insert(queue.front().images());
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm q = compose(g, p);
      if (seen.insert(q.images()).second) queue.push_back(q);
    }
  }
  return seen;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("composition is right to left") {
  Perm p = parse_perm("(0 1 2)", 4);
  Perm q = parse_perm("(2 3)", 4);
  Perm pq = compose(p, q);
  for (int i = 0; i < 4; ++i) CHECK(pq[i] == p[q[i]]);
  CHECK(to_cycle_string(pq) == "(0 1 2 3)");
  CHECK(compose(p, inverse(p)).is_identity());
}

TEST_CASE("cycle string round trip") {
  for (const char* text : {"()", "(0 1)", "(0 1 2)(3 4)", "(0 2 4)(1 3)"}) {
    Perm p = parse_perm(text, 5);
    CHECK(to_cycle_string(p) == text);
    CHECK(parse_perm(to_cycle_string(p), 5) == p);
  }
  CHECK(parse_perm("[1,2,0]", 3) == parse_perm("(0 1 2)", 3));
  CHECK_THROWS_AS(parse_perm("(0 0)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("(0 5)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cycle decomposition canonical form") {
  CycleDecomposition cd = cycle_decomposition(parse_perm("(1 3)(0 2 4)", 6));
  REQUIRE(cd.cycles.size() == 3);
  CHECK(cd.cycles[0] == std::vector<int>{0, 2, 4});
  CHECK(cd.cycles[1] == std::vector<int>{1, 3});
  CHECK(cd.cycles[2] == std::vector<int>{5});
  CHECK(cd.lengths == std::vector<int>{1, 2, 3});
}

TEST_CASE("group order matches the closure oracle") {
  auto check = [](const std::vector<Perm>& gens) {
    CHECK(group_order(gens) == closure_oracle(gens).size());
  };
  check({parse_perm("(0 1 2 3)", 4)});
  check({parse_perm("(0 1)", 4), parse_perm("(0 1 2 3)", 4)});          // S4
  check({parse_perm("(0 1 2)", 5), parse_perm("(2 3 4)", 5)});          // A5
  check({parse_perm("(0 1 2 3 4)", 5), parse_perm("(1 4)(2 3)", 5)});   // D5
  check({parse_perm("(0 1 2 3 4 5 6)", 7), parse_perm("(1 2 4)(3 6 5)", 7)});  // F21

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Perm> gens{random_perm(6, rng), random_perm(6, rng)};
    check(gens);
  }
}

TEST_CASE("group order edge cases") {
  CHECK(group_order({Perm::identity(5)}) == 1);
  CHECK_THROWS_AS(group_order({}), std::invalid_argument);
  CHECK_THROWS_AS(group_order({Perm::identity(2), Perm::identity(3)}), std::invalid_argument);

  // |S21| = 21! > 2^64: must refuse rather than wrap.
  std::vector<int> cyc(21);
  for (int i = 0; i < 21; ++i) cyc[i] = (i + 1) % 21;
  CHECK_THROWS_AS(group_order({Perm(cyc), parse_perm("(0 1)", 21)}), std::overflow_error);
}

TEST_CASE("centralizer matches brute force") {
  auto oracle = [](const std::vector<Perm>& gens) {
    std::vector<Perm> out;
    for (const Perm& h : all_perms(gens.front().degree())) {
      bool commutes = true;
      for (const Perm& g : gens)
        if (compose(h, g) != compose(g, h)) commutes = false;
      if (commutes) out.push_back(h);
    }
    return out;
  };

  std::vector<Perm> cyclic{parse_perm("(0 1 2 3)", 4)};
  std::vector<Perm> got = centralizer(cyclic);
  std::vector<Perm> want = oracle(cyclic);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(got.size() == 4);  // the four powers of the 4-cycle

  std::mt19937 rng(777);
  int done = 0;
  while (done < 20) {
    std::vector<Perm> gens{random_perm(5, rng), random_perm(5, rng)};
    if (!is_transitive(gens)) continue;
    ++done;
    std::vector<Perm> a = centralizer(gens), b = oracle(gens);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("centralizer requires transitivity") {
  CHECK_THROWS_WITH_AS(centralizer({parse_perm("(0 1)", 4)}),
                       "centralizer search requires transitivity", std::invalid_argument);
}

TEST_CASE("simultaneous conjugacy") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    Perm a1 = random_perm(6, rng), a2 = random_perm(6, rng);
    if (!is_transitive({a1, a2})) continue;
    Perm h = random_perm(6, rng);
    Perm b1 = compose(h, compose(a1, inverse(h)));
    Perm b2 = compose(h, compose(a2, inverse(h)));
    auto found = simultaneous_conjugacy({a1, a2}, {b1, b2});
    REQUIRE(found.has_value());
    CHECK(compose(*found, compose(a1, inverse(*found))) == b1);
    CHECK(compose(*found, compose(a2, inverse(*found))) == b2);
  }

  // Different cycle types can never be conjugate.
  auto none = simultaneous_conjugacy(
      {parse_perm("(0 1 2)", 3), parse_perm("(0 1)", 3)},
      {parse_perm("(0 1 2)", 3), parse_perm("(0 1 2)", 3)});
  CHECK_FALSE(none.has_value());
}

TEST_CASE("transitivity") {
  CHECK(is_transitive({parse_perm("(0 1 2 3)", 4)}));
  CHECK_FALSE(is_transitive({parse_perm("(0 1)(2 3)", 4)}));
  CHECK(is_transitive({parse_perm("(0 1)", 4), parse_perm("(1 2 3)", 4)}));
}
