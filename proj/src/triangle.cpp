#include "dessinator/triangle.hpp"

#include <stdexcept>

namespace dessinator {

TriangleType make_triangle_type(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("triangle type entries must be positive");
  TriangleType t;
  t.a = a;
  t.b = b;
  t.c = c;
  long lhs = static_cast<long>(b) * c + static_cast<long>(a) * c + static_cast<long>(a) * b;
  long rhs = static_cast<long>(a) * b * c;
  t.geometry = lhs > rhs   ? Geometry::Spherical
               : lhs == rhs ? Geometry::Euclidean
                            : Geometry::Hyperbolic;
  return t;
}

TriangleType triangle_type_of(const Dessin& d) {
  DessinType dt = dessin_type(d);
  return make_triangle_type(dt.a, dt.b, dt.c);
}

Presentation triangle_presentation(const TriangleType& t) {
  Presentation p;
  p.generator_names = {"x", "y"};
  Word x{{1}}, y{{2}};
  p.relators.push_back(power(x, t.a));
  p.relators.push_back(power(y, t.b));
  p.relators.push_back(power(concat(y, x), t.c));
  // Degenerate entries (a = 1 etc.) leave empty relators after reduction;
  // keep them out of the list.
  std::vector<Word> kept;
  for (auto& r : p.relators)
    if (!r.empty()) kept.push_back(std::move(r));
  p.relators = std::move(kept);
  return p;
}

Presentation extended_presentation(const TriangleType& t) {
  Presentation p;
  p.generator_names = {"t1", "t2", "t3"};
  Word t1{{1}}, t2{{2}}, t3{{3}};
  for (const Word& w : {t1, t2, t3}) p.relators.push_back(power(w, 2));
  p.relators.push_back(power(concat(t2, t1), t.a));
  p.relators.push_back(power(concat(t1, t3), t.b));
  p.relators.push_back(power(concat(t3, t2), t.c));
  std::vector<Word> kept;
  for (auto& r : p.relators)
    if (!r.empty()) kept.push_back(std::move(r));
  p.relators = std::move(kept);
  return p;
}

std::pair<Word, Word> rotation_embedding() {
  return {Word{{2, 1}}, Word{{1, 3}}};  // x = t2*t1, y = t1*t3
}

CosetTable dessin_to_table(const Dessin& d) {
  CosetTable t;
  t.index = d.edge_count();
  t.action = {d.sigma(), d.tau()};
  return t;
}

Dessin table_to_dessin(const CosetTable& t) {
  if (t.action.size() != 2)
    throw std::invalid_argument("table must have exactly two generator columns");
  return Dessin(t.action[0], t.action[1]);
}

bool is_torsion_free_uniform(const Dessin& d) {
  DessinType t = dessin_type(d);
  for (int l : cycle_decomposition(d.sigma()).lengths)
    if (l != t.a) return false;
  for (int l : cycle_decomposition(d.tau()).lengths)
    if (l != t.b) return false;
  for (int l : cycle_decomposition(d.face_permutation()).lengths)
    if (l != t.c) return false;
  return true;
}

bool is_normal_regular(const Dessin& d) {
  return monodromy_order(d) == static_cast<std::uint64_t>(d.edge_count());
}

NormalizerCrosscheck aut_normalizer_crosscheck(const Dessin& d, int cap) {
  if (d.edge_count() > cap)
    throw std::invalid_argument("edge count " + std::to_string(d.edge_count()) +
                                " exceeds the crosscheck cap " + std::to_string(cap));
  NormalizerCrosscheck out;
  out.aut_plus_size = aut_plus(d).size();

  // |N(K)/K| equals the number of cosets j whose stabilizer is exactly K,
  // i.e. whose re-based standardized table reproduces the original's.
  CosetTable t = dessin_to_table(d);
  CosetTable base = standardize_from(t, 0);
  std::uint64_t count = 0;
  for (int j = 0; j < t.index; ++j) {
    CosetTable rebased = standardize_from(t, j);
    if (rebased.action[0] == base.action[0] && rebased.action[1] == base.action[1]) ++count;
  }
  out.normalizer_quotient_size = count;
  return out;
}

}  // namespace dessinator
