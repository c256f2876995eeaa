#include "dessinator/homology.hpp"

#include <stdexcept>

#include "dessinator/fpgroup.hpp"
#include "dessinator/triangle.hpp"

namespace dessinator {

namespace {

long long pow_checked(long long base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

long long HomologyCover::deck_order() const {
  long long r = 1;
  for (int i = 0; i < homology_rank; ++i) r *= modulus;
  return r;
}

std::vector<Perm> HomologyCover::deck_generators() const {
  long long deck = deck_order();
  long long n = base_edges * deck;
  std::vector<Perm> out;
  for (int t = 0; t < homology_rank; ++t) {
    long long unit = 1;
    for (int i = 0; i < t; ++i) unit *= modulus;
    std::vector<int> img(n);
    for (long long e = 0; e < base_edges; ++e) {
      for (long long code = 0; code < deck; ++code) {
        long long digit = (code / unit) % modulus;
        long long moved = digit + 1 == modulus ? code - digit * unit : code + unit;
        img[e * deck + code] = static_cast<int>(e * deck + moved);
      }
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

HomologyCover homology_cover_full(const Dessin& base, int modulus, long long edge_cap) {
  if (!is_torsion_free_uniform(base))
    throw std::invalid_argument("homology cover requires a torsion-free (uniform) dessin");
  int g = genus(base);
  if (g < 1) throw std::invalid_argument("homology cover requires base genus >= 1");
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");

  int base_m = base.edge_count();
  int rank = 2 * g;
  long long deck = pow_checked(modulus, rank, edge_cap);
  if (deck > edge_cap || base_m > edge_cap / deck)
    throw std::invalid_argument("cover edge count exceeds the cap");
  long long n = base_m * deck;

  // The base as a subgroup of its minimal triangle group; Schreier
  // generators of the subgroup map onto H_1 coordinates via the Smith basis.
  TriangleType type = triangle_type_of(base);
  Presentation tri = triangle_presentation(type);
  CosetTable table = dessin_to_table(base);
  SchreierData rs = reidemeister_schreier_data(tri, table);

  int s = rs.subgroup.generator_count();
  std::vector<std::vector<mpz_class>> m(s,
                                        std::vector<mpz_class>(rs.subgroup.relators.size(), 0));
  for (size_t j = 0; j < rs.subgroup.relators.size(); ++j)
    for (int l : rs.subgroup.relators[j].letters) {
      if (l > 0)
        m[l - 1][j] += 1;
      else
        m[-l - 1][j] -= 1;
    }
  SmithResult snf = smith_normal_form(std::move(m));
  if (s - snf.rank != rank)
    throw std::logic_error("abelianization rank does not match 2g");
  for (int i = 0; i < snf.rank; ++i)
    if (snf.d[i][i] != 1) throw std::logic_error("unexpected torsion in surface group homology");

  // Coordinate of Schreier generator j in (Z_m)^{2g}: rows rank..s-1 of U e_j.
  auto coords = [&](int j) {
    std::vector<int> v(rank);
    for (int i = 0; i < rank; ++i) {
      mpz_class r = snf.u[snf.rank + i][j] % modulus;
      if (r < 0) r += modulus;
      v[i] = static_cast<int>(r.get_si());
    }
    return v;
  };

  std::vector<std::vector<int>> sigma_coc(base_m), tau_coc(base_m);
  for (int c = 0; c < base_m; ++c) {
    int ix = rs.generator_index[c][0];
    int iy = rs.generator_index[c][1];
    sigma_coc[c] = ix >= 0 ? coords(ix) : std::vector<int>(rank, 0);
    tau_coc[c] = iy >= 0 ? coords(iy) : std::vector<int>(rank, 0);
  }

  auto lift = [&](const Perm& base_perm, const std::vector<std::vector<int>>& coc) {
    std::vector<int> img(n);
    std::vector<int> v(rank);
    for (int e = 0; e < base_m; ++e) {
      for (long long code = 0; code < deck; ++code) {
        long long rem = code;
        long long moved = 0, unit = 1;
        for (int t = 0; t < rank; ++t) {
          int digit = static_cast<int>(rem % modulus);
          rem /= modulus;
          moved += static_cast<long long>((digit + coc[e][t]) % modulus) * unit;
          unit *= modulus;
        }
        img[e * deck + code] = static_cast<int>(base_perm[e] * deck + moved);
      }
    }
    return Perm(std::move(img));
  };

  HomologyCover cover{Dessin(lift(base.sigma(), sigma_coc), lift(base.tau(), tau_coc)),
                      base_m,
                      modulus,
                      rank,
                      std::move(sigma_coc),
                      std::move(tau_coc)};
  return cover;
}

Dessin homology_cover(const Dessin& base, int modulus, long long edge_cap) {
  return homology_cover_full(base, modulus, edge_cap).dessin;
}

TowerResult cover_tower_genus(const Dessin& base, int modulus, int levels, long long edge_cap) {
  TowerResult out;
  Dessin current = base;
  for (int i = 0; i < levels; ++i) {
    int g = genus(current);
    long long deck = pow_checked(modulus, 2 * g, edge_cap);
    if (deck > edge_cap || current.edge_count() > edge_cap / deck) {
      out.truncated = true;
      break;
    }
    current = homology_cover(current, modulus, edge_cap);
    out.genera.push_back(genus(current));
  }
  return out;
}

}  // namespace dessinator
