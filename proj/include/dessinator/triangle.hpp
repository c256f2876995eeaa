#pragma once

#include <utility>

#include "dessinator/dessin.hpp"
#include "dessinator/fpgroup.hpp"

namespace dessinator {

struct TriangleType {
  int a = 1, b = 1, c = 1;
  Geometry geometry = Geometry::Spherical;
};

TriangleType make_triangle_type(int a, int b, int c);
TriangleType triangle_type_of(const Dessin& d);

/// <x y | x^a y^b (y*x)^c>
Presentation triangle_presentation(const TriangleType& t);

/// Index-2 reflection extension: <t1 t2 t3 | t1^2 t2^2 t3^2 (t2*t1)^a (t1*t3)^b (t3*t2)^c>
Presentation extended_presentation(const TriangleType& t);

/// The embedding of the rotation subgroup into the extension: words for
/// x = t2*t1 and y = t1*t3 over the extended generators.
std::pair<Word, Word> rotation_embedding();

/// Views (sigma, tau) as the actions of x, y on cosets of the edge
/// stabilizer in the minimal triangle group of the dessin.
CosetTable dessin_to_table(const Dessin& d);

/// Reads sigma from the x column and tau from the y column.  The table must
/// have exactly two generator columns.
Dessin table_to_dessin(const CosetTable& t);

/// Torsion-free subgroup test: every sigma cycle has length exactly a, every
/// tau cycle exactly b, every face cycle exactly c.
bool is_torsion_free_uniform(const Dessin& d);

/// Normal subgroup test: the monodromy group acts regularly, i.e. has order
/// equal to the edge count.
bool is_normal_regular(const Dessin& d);

struct NormalizerCrosscheck {
  std::uint64_t aut_plus_size = 0;
  std::uint64_t normalizer_quotient_size = 0;
};

/// Computes |Aut+| combinatorially and |N(K)/K| table-theoretically (cosets
/// whose re-based standardized table equals the original's); the two must
/// agree.  Throws when edge_count exceeds `cap`.
NormalizerCrosscheck aut_normalizer_crosscheck(const Dessin& d, int cap = 12);

}  // namespace dessinator
