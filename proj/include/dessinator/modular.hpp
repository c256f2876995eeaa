#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessinator/fpgroup.hpp"

namespace dessinator {

/// 2x2 integer matrix of determinant 1, stored up to global sign with the
/// first nonzero of (a, b, c, d) positive.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 from_entries(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  friend Mat2 operator*(const Mat2& m, const Mat2& n);
  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
};

/// A point of Q union {infinity}, in lowest terms with positive denominator;
/// infinity is 1/0.
struct ProjectiveRational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static ProjectiveRational make(std::int64_t num, std::int64_t den);
  static ProjectiveRational infinity() { return ProjectiveRational{1, 0}; }
  bool is_infinity() const { return den == 0; }
  friend bool operator==(const ProjectiveRational& x, const ProjectiveRational& y) {
    return x.num == y.num && x.den == y.den;
  }
};

/// A word over {A, A^-1, E} with its matrix maintained alongside, where
/// A(z) = z + 2 and E(z) = -1/z.
struct MobiusWord {
  std::vector<int> letters;  // +1 = A, -1 = A^-1, +2 = E
  Mat2 matrix;

  static MobiusWord identity();
  static MobiusWord a_power(int k);
  static MobiusWord e();
  friend MobiusWord operator*(const MobiusWord& u, const MobiusWord& v);
  MobiusWord inverted() const;
  std::string text() const;
};

/// Parses words like "A^2*E" or "A*E*A^-3".
MobiusWord parse_mobius_word(const std::string& text);

ProjectiveRational mobius_eval(const MobiusWord& w, const ProjectiveRational& z);
ProjectiveRational mobius_eval(const Mat2& m, const ProjectiveRational& z);

/// Generators of K_n inside K_0 = <A, E>:
///   n = 0 -> {A, E}
///   n >= 1 -> {A^{4(2n-1)}} plus the conjugates A^{4l} A^2 E A^{-4l} and
///             A^{4l} A E A^{-3} A^{-4l} for 1-n <= l <= n-1 (4n-1 words).
std::vector<MobiusWord> k_subgroup_words(int n);

/// PSL(2,Z) = < S T | S^2 (S*T)^3 > with S = E, T = F; A = T^2.
Presentation psl2z_presentation();

/// Translates an {A, E} word to the S, T alphabet.
Word to_st_word(const MobiusWord& w);

struct OrbifoldInvariants {
  int index = 0;
  int genus = 0;
  int cusps = 0;
  int e2 = 0;  // elliptic points of order 2 (fixed cosets of S)
  int e3 = 0;  // elliptic points of order 3 (fixed cosets of ST)
  std::optional<int> free_rank;  // 2g + cusps - 1 when torsion-free
};

OrbifoldInvariants modular_orbifold_invariants(const std::vector<MobiusWord>& subgroup,
                                               int max_cosets = 1000000);

/// True when `conjugator` normalizes the subgroup generated by `words`
/// (checked on the coset table, both conjugation directions).
bool normalizes_subgroup(const std::vector<MobiusWord>& words, const MobiusWord& conjugator,
                         int max_cosets = 1000000);

/// A^4 normalization of K_n; for n = 1 conjugation by A itself is also
/// required, matching the stronger statement that holds there.
bool a4_normalization_check(int n, int max_cosets = 1000000);

}  // namespace dessinator
