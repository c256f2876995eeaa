#include "dessinator/superelliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dessinator {

int genus_formula(int n, int d) {
  if (n < 2) throw std::invalid_argument("cover degree must be at least 2");
  if (d < 1) throw std::invalid_argument("block count must be at least 1");
  long long twice = static_cast<long long>(n) * (static_cast<long long>(d) * (n - 1) - 2) + 2;
  if (twice % 2 != 0 || twice < 0)
    throw std::invalid_argument("parameters give an invalid genus");
  return static_cast<int>(twice / 2);
}

int riemann_hurwitz(const BranchData& b) {
  int n = b.n;
  int count = static_cast<int>(b.branch_points.size());
  if (n < 2) throw std::invalid_argument("cover degree must be at least 2");
  if (count % n != 0)
    throw std::invalid_argument("branch point count must be divisible by the degree "
                                "(infinity would ramify)");
  for (size_t i = 0; i < b.branch_points.size(); ++i)
    for (size_t j = i + 1; j < b.branch_points.size(); ++j)
      if (b.branch_points[i] == b.branch_points[j])
        throw std::invalid_argument("branch points must be pairwise distinct");
  // 2 - 2g = 2n - count*(n-1), each simple branch point a full n-cycle.
  long long twice_g = static_cast<long long>(count) * (n - 1) - 2LL * n + 2;
  if (twice_g % 2 != 0 || twice_g < 0) throw std::invalid_argument("invalid branch data");
  return static_cast<int>(twice_g / 2);
}

MonodromyData monodromy_data(const BranchData& b) {
  int n = b.n;
  int count = static_cast<int>(b.branch_points.size());
  if (count % n != 0)
    throw std::invalid_argument("branch point count must be divisible by the degree");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  Perm local(std::move(img));

  MonodromyData out;
  Perm product = Perm::identity(n);
  for (int k = 0; k < count; ++k) product = compose(local, product);
  out.product_is_identity = product.is_identity();
  out.connected = is_transitive({local});
  out.monodromy_order = group_order({local});
  return out;
}

Complex evaluate_truncated(const TruncatedProduct& p, Complex z) {
  Complex value = p.prefactor;
  for (int i = 0; i < p.origin_multiplicity; ++i) value *= z;
  for (size_t k = 0; k < p.zeros.size(); ++k) {
    const auto& zero = p.zeros[k];
    if (zero.location == Complex(0.0, 0.0)) continue;  // folded into z^{m0}
    Complex ratio = z / zero.location;
    Complex factor = std::pow(Complex(1.0, 0.0) - ratio, zero.multiplicity);
    int d = p.degree_of(static_cast<int>(k));
    if (d > 0) {
      Complex sum = 0.0;
      Complex term = 1.0;
      for (int s = 1; s <= d; ++s) {
        term *= ratio;
        sum += term / static_cast<double>(s);
      }
      factor *= std::exp(sum * static_cast<double>(zero.multiplicity));
    }
    value *= factor;
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      throw std::overflow_error("truncated product overflow at zero index " + std::to_string(k));
  }
  return value;
}

void sort_zeros(std::vector<TruncatedProduct::Zero>& zeros) {
  std::stable_sort(zeros.begin(), zeros.end(), [](const auto& a, const auto& b) {
    double ma = std::abs(a.location), mb = std::abs(b.location);
    if (ma != mb) return ma < mb;
    return std::arg(a.location) < std::arg(b.location);
  });
}

TruncatedProduct sine_fixture(int n_zeros) {
  if (n_zeros < 1) throw std::invalid_argument("need at least one zero pair");
  TruncatedProduct p;
  p.prefactor = std::numbers::pi;
  p.origin_multiplicity = 1;
  p.degree_slope = 0;  // paired zeros: the plain product already converges
  p.degree_offset = 0;
  for (int n = 1; n <= n_zeros; ++n) {
    p.zeros.push_back({Complex(n, 0.0), 1});
    p.zeros.push_back({Complex(-n, 0.0), 1});
  }
  sort_zeros(p.zeros);
  return p;
}

namespace {

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Multiset match of a*src+b against dst within tol (both canonically sorted).
bool affine_image_matches(const std::vector<Complex>& src, const std::vector<Complex>& dst_sorted,
                          Complex a, Complex b, double tol) {
  std::vector<Complex> mapped;
  mapped.reserve(src.size());
  for (Complex z : src) mapped.push_back(a * z + b);
  std::sort(mapped.begin(), mapped.end(), complex_less);
  for (size_t i = 0; i < mapped.size(); ++i)
    if (std::abs(mapped[i] - dst_sorted[i]) > tol) return false;
  return true;
}

}  // namespace

std::optional<std::pair<Complex, Complex>> affine_equivalent(
    const std::vector<Complex>& zeros_a, const std::vector<Complex>& zeros_b, double tol) {
  if (zeros_a.size() < 2 || zeros_b.size() < 2)
    throw std::invalid_argument("affine matching needs at least 2 points per set");
  if (tol < 0) throw std::invalid_argument("tolerance must be non-negative");
  if (zeros_a.size() != zeros_b.size()) return std::nullopt;

  std::vector<Complex> a_sorted = zeros_a, b_sorted = zeros_b;
  std::sort(a_sorted.begin(), a_sorted.end(), complex_less);
  std::sort(b_sorted.begin(), b_sorted.end(), complex_less);

  // Anchor the two first (canonically sorted) points of A on every ordered
  // pair of distinct points of B.
  Complex p1 = a_sorted[0], p2 = a_sorted[1];
  if (p1 == p2) throw std::invalid_argument("anchor points coincide");
  for (const Complex& q1 : b_sorted) {
    for (const Complex& q2 : b_sorted) {
      if (q1 == q2) continue;
      Complex a = (q2 - q1) / (p2 - p1);
      if (a == Complex(0.0, 0.0)) continue;
      Complex b = q1 - a * p1;
      if (affine_image_matches(a_sorted, b_sorted, a, b, tol)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace dessinator
