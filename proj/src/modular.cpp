#include "dessinator/modular.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dessinator {

Mat2 Mat2::from_entries(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (a * d - b * c != 1) throw std::invalid_argument("matrix determinant must be 1");
  // Canonical sign: first nonzero of (a, b, c, d) positive.
  std::int64_t lead = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  return Mat2{a, b, c, d};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return Mat2::from_entries(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

ProjectiveRational ProjectiveRational::make(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) throw std::invalid_argument("0/0 is not a projective point");
  if (den == 0) return ProjectiveRational{1, 0};
  std::int64_t g = std::gcd(std::abs(num), std::abs(den));
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return ProjectiveRational{num, den};
}

MobiusWord MobiusWord::identity() { return MobiusWord{{}, Mat2{}}; }

MobiusWord MobiusWord::a_power(int k) {
  MobiusWord w;
  for (int i = 0; i < std::abs(k); ++i) w.letters.push_back(k > 0 ? 1 : -1);
  w.matrix = Mat2::from_entries(1, 2 * static_cast<std::int64_t>(k), 0, 1);
  return w;
}

MobiusWord MobiusWord::e() {
  return MobiusWord{{2}, Mat2::from_entries(0, -1, 1, 0)};
}

MobiusWord operator*(const MobiusWord& u, const MobiusWord& v) {
  MobiusWord w;
  w.letters = u.letters;
  for (int l : v.letters) {
    // Free cancellation of A A^-1 pairs and E E (E has order 2 in PSL).
    if (!w.letters.empty() &&
        ((l == 1 && w.letters.back() == -1) || (l == -1 && w.letters.back() == 1) ||
         (l == 2 && w.letters.back() == 2)))
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  w.matrix = u.matrix * v.matrix;
  return w;
}

MobiusWord MobiusWord::inverted() const {
  MobiusWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(*it == 2 ? 2 : -*it);
  w.matrix = Mat2::from_entries(matrix.d, -matrix.b, -matrix.c, matrix.a);
  return w;
}

std::string MobiusWord::text() const {
  if (letters.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    int run = static_cast<int>(j - i);
    if (!out.empty()) out += "*";
    if (letters[i] == 2) {
      out += "E";
      if (run != 1) out += "^" + std::to_string(run);
    } else {
      out += "A";
      int exp = letters[i] == 1 ? run : -run;
      if (exp != 1) out += "^" + std::to_string(exp);
    }
    i = j;
  }
  return out;
}

MobiusWord parse_mobius_word(const std::string& text) {
  MobiusWord w = MobiusWord::identity();
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1' && i + 1 == text.size()) return w;
  while (i < text.size()) {
    char c = text[i];
    if (c != 'A' && c != 'E')
      throw std::invalid_argument("expected 'A' or 'E' at position " + std::to_string(i));
    ++i;
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start)
        throw std::invalid_argument("expected an exponent at position " + std::to_string(start));
      exp = std::stoi(text.substr(start, i - start));
      if (neg) exp = -exp;
      if (exp == 0) throw std::invalid_argument("zero power at position " + std::to_string(start));
    }
    if (c == 'A') {
      w = w * MobiusWord::a_power(exp);
    } else {
      int reduced = ((exp % 2) + 2) % 2;  // E^2 = 1 in PSL(2,Z)
      if (reduced == 1) w = w * MobiusWord::e();
    }
    skip();
  }
  return w;
}

ProjectiveRational mobius_eval(const Mat2& m, const ProjectiveRational& z) {
  return ProjectiveRational::make(m.a * z.num + m.b * z.den, m.c * z.num + m.d * z.den);
}

ProjectiveRational mobius_eval(const MobiusWord& w, const ProjectiveRational& z) {
  return mobius_eval(w.matrix, z);
}

std::vector<MobiusWord> k_subgroup_words(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n == 0) return {MobiusWord::a_power(1), MobiusWord::e()};
  std::vector<MobiusWord> out;
  // The translation pairing the sides of the width-(16n-8) fundamental
  // domain: A^{4(2n-1)}, consistent with index 12(2n-1) and free rank 4n-1.
  out.push_back(MobiusWord::a_power(4 * (2 * n - 1)));
  MobiusWord a2e = MobiusWord::a_power(2) * MobiusWord::e();
  MobiusWord aea3 = MobiusWord::a_power(1) * MobiusWord::e() * MobiusWord::a_power(-3);
  for (int l = 1 - n; l <= n - 1; ++l) {
    MobiusWord conj = MobiusWord::a_power(4 * l);
    MobiusWord conj_inv = MobiusWord::a_power(-4 * l);
    out.push_back(conj * a2e * conj_inv);
    out.push_back(conj * aea3 * conj_inv);
  }
  return out;
}

Presentation psl2z_presentation() { return parse_presentation("< S T | S^2 (S*T)^3 >"); }

Word to_st_word(const MobiusWord& w) {
  // S = 1, T = 2 in the presentation; A = T^2, E = S.
  Word out;
  for (int l : w.letters) {
    if (l == 1) {
      out.letters.push_back(2);
      out.letters.push_back(2);
    } else if (l == -1) {
      out.letters.push_back(-2);
      out.letters.push_back(-2);
    } else {
      out.letters.push_back(1);
    }
  }
  return free_reduce(std::move(out));
}

OrbifoldInvariants modular_orbifold_invariants(const std::vector<MobiusWord>& subgroup,
                                               int max_cosets) {
  Presentation psl = psl2z_presentation();
  std::vector<Word> gens;
  gens.reserve(subgroup.size());
  for (const MobiusWord& w : subgroup) gens.push_back(to_st_word(w));
  CosetTable t = coset_enumeration(psl, gens, max_cosets);

  OrbifoldInvariants inv;
  inv.index = t.index;
  const Perm& s_act = t.action[0];
  const Perm& t_act = t.action[1];
  Perm st = compose(t_act, s_act);  // coset . (S*T): S first, then T
  for (int c = 0; c < t.index; ++c) {
    if (s_act[c] == c) ++inv.e2;
    if (st[c] == c) ++inv.e3;
  }
  inv.cusps = static_cast<int>(cycle_decomposition(t_act).cycles.size());
  // Standard genus formula for subgroups of PSL(2,Z), in exact arithmetic:
  // g = 1 + index/12 - e2/4 - e3/3 - cusps/2.
  int numerator = 12 + inv.index - 3 * inv.e2 - 4 * inv.e3 - 6 * inv.cusps;
  if (numerator % 12 != 0) throw std::logic_error("non-integral orbifold genus");
  inv.genus = numerator / 12;
  if (inv.genus < 0) throw std::logic_error("negative orbifold genus");
  if (inv.e2 == 0 && inv.e3 == 0) inv.free_rank = 2 * inv.genus + inv.cusps - 1;
  return inv;
}

bool normalizes_subgroup(const std::vector<MobiusWord>& words, const MobiusWord& conjugator,
                         int max_cosets) {
  Presentation psl = psl2z_presentation();
  std::vector<Word> gens;
  for (const MobiusWord& w : words) gens.push_back(to_st_word(w));
  CosetTable t = coset_enumeration(psl, gens, max_cosets);
  for (const MobiusWord& dir : {conjugator, conjugator.inverted()}) {
    for (const MobiusWord& w : words) {
      MobiusWord conj = dir * w * dir.inverted();
      if (t.apply(0, to_st_word(conj)) != 0) return false;
    }
  }
  return true;
}

bool a4_normalization_check(int n, int max_cosets) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<MobiusWord> words = k_subgroup_words(n);
  bool ok = normalizes_subgroup(words, MobiusWord::a_power(4), max_cosets);
  if (n == 1) ok = ok && normalizes_subgroup(words, MobiusWord::a_power(1), max_cosets);
  return ok;
}

}  // namespace dessinator
