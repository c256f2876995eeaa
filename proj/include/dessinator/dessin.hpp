#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessinator/perm.hpp"

namespace dessinator {

/// Sorted degree lists of black vertices, white vertices and faces.
struct Passport {
  std::vector<int> black_degrees;
  std::vector<int> white_degrees;
  std::vector<int> face_degrees;

  friend bool operator==(const Passport& a, const Passport& b) {
    return a.black_degrees == b.black_degrees && a.white_degrees == b.white_degrees &&
           a.face_degrees == b.face_degrees;
  }
};

enum class Geometry { Spherical, Euclidean, Hyperbolic };

std::string geometry_name(Geometry g);

struct DessinType {
  int a = 1, b = 1, c = 1;  // lcm of sigma, tau, tau*sigma cycle lengths
  Geometry geometry = Geometry::Spherical;
};

struct Classification {
  bool regular = false;
  bool reflexive = false;
  bool chiral = false;
};

/// A dessin d'enfant on edge labels 0..m-1: sigma rotates edges around black
/// vertices, tau around white vertices, faces are the cycles of tau*sigma.
/// The pair must generate a transitive group (connected graph).
class Dessin {
 public:
  Dessin(Perm sigma, Perm tau);

  int edge_count() const { return sigma_.degree(); }
  const Perm& sigma() const { return sigma_; }
  const Perm& tau() const { return tau_; }
  Perm face_permutation() const { return compose(tau_, sigma_); }

 private:
  Perm sigma_, tau_;
};

Passport passport(const Dessin& d);

/// Genus of the underlying closed surface, from V - E + F = 2 - 2g.
int genus(const Dessin& d);

DessinType dessin_type(const Dessin& d);

bool is_uniform(const Dessin& d);
bool is_clean(const Dessin& d);
/// Finite dessins are always bounded; returns the witness bound M.
int bounded_by(const Dessin& d);

std::uint64_t monodromy_order(const Dessin& d);

/// Orientation-preserving automorphisms: the centralizer of <sigma, tau>.
std::vector<Perm> aut_plus(const Dessin& d);

struct AutSizes {
  std::uint64_t plus_size = 0;
  std::uint64_t full_size = 0;
};

/// |Aut+| and |Aut|; the full group is twice as large exactly when the
/// mirror pair (sigma^-1, tau^-1) is simultaneously conjugate to the
/// original.
AutSizes aut_full_size(const Dessin& d);

Classification classify(const Dessin& d);

Dessin mirror(const Dessin& d);

std::optional<Perm> isomorphic(const Dessin& d1, const Dessin& d2);

/// Lex-minimal representative of the conjugacy class of (sigma, tau):
/// minimizes the concatenated image arrays over all relabelings.
Dessin canonical_form(const Dessin& d);

/// One lex-minimal representative per isomorphism class of dessins with m
/// edges, in lexicographic order.  Throws when m exceeds `cap`.
std::vector<Dessin> enumerate_dessins(int m, int cap = 8);

}  // namespace dessinator
