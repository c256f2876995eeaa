#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "dessinator/perm.hpp"

namespace dessinator {

using Complex = std::complex<double>;

/// Branch data of a truncated superelliptic curve w^n = f(z): simple zeros
/// of f, with n dividing their count so infinity stays unramified.
struct BranchData {
  int n = 2;
  std::vector<Complex> branch_points;
};

/// g = (n/2)(d(n-1) - 2) + 1 for the curve over d*n simple branch points.
/// Throws when the parameters give a negative or non-integral genus.
int genus_formula(int n, int d);

/// Independent genus computation via Riemann-Hurwitz: each simple branch
/// point contributes deficit n-1, infinity is unramified.
int riemann_hurwitz(const BranchData& b);

struct MonodromyData {
  bool connected = false;
  std::uint64_t monodromy_order = 0;
  bool product_is_identity = false;
};

MonodromyData monodromy_data(const BranchData& b);

/// Truncated Weierstrass product f(z) = g * z^{m0} prod (1 - z/z_k)^{m_k} E_k(z)
/// with E_k(z) = exp(sum_{s=1..d(k)} (z/z_k)^s / s).
struct TruncatedProduct {
  struct Zero {
    Complex location;
    int multiplicity = 1;
  };
  std::vector<Zero> zeros;      // ascending |z_k|, ties by argument
  Complex prefactor = 1.0;      // the zero-free factor, constant
  int origin_multiplicity = 0;  // m0
  /// Convergence degrees: d(k) = degree_offset + k * degree_slope.  The
  /// classical canonical-product choice is slope 1, offset 0; absolutely
  /// convergent fixtures (paired zeros) use slope 0, offset 0.
  int degree_slope = 1;
  int degree_offset = 0;

  int degree_of(int k) const { return degree_offset + degree_slope * (k + 1); }
};

Complex evaluate_truncated(const TruncatedProduct& p, Complex z);

/// The sine fixture: pi * z * prod over zeros {±1..±N} with no exponential
/// factors (the paired zeros converge absolutely).
TruncatedProduct sine_fixture(int n_zeros);

/// Orders zeros by the |z_k| rule with ties broken by argument.
void sort_zeros(std::vector<TruncatedProduct::Zero>& zeros);

/// An affine map z -> a*z + b with a != 0 carrying zeros_a onto zeros_b as
/// multisets within tol, or nullopt.  Throws on fewer than 2 points; returns
/// nullopt on cardinality mismatch.
std::optional<std::pair<Complex, Complex>> affine_equivalent(
    const std::vector<Complex>& zeros_a, const std::vector<Complex>& zeros_b, double tol);

}  // namespace dessinator
