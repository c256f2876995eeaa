#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dessinator {

/// A permutation of {0,...,m-1}, stored as its image array: i maps to
/// images()[i].  Immutable after construction.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[point]; }
  int operator[](int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

/// Disjoint cycles of a permutation in canonical form: each cycle starts at
/// its minimum, cycles sorted by first entry, fixed points kept.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> lengths;  // sorted ascending
};

/// Right-to-left composition: compose(p, q) applies q first, then p.
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

CycleDecomposition cycle_decomposition(const Perm& p);

/// True when <gens> acts transitively on all points of its degree.
bool is_transitive(const std::vector<Perm>& gens);

/// Exact order of <gens> via a Schreier-Sims stabilizer chain.
/// Throws std::invalid_argument on empty input or mixed degrees, and
/// std::overflow_error if the order does not fit in 64 bits.
std::uint64_t group_order(const std::vector<Perm>& gens);

/// All permutations commuting with every generator.  Requires a transitive
/// generated group (the centralizer is then semiregular and the search can
/// fix the image of point 0 and propagate).
std::vector<Perm> centralizer(const std::vector<Perm>& gens);

/// A permutation h with h*a_i*h^-1 = b_i for i = 1,2, or nullopt.  Both
/// pairs must be transitive and of equal degree.
std::optional<Perm> simultaneous_conjugacy(const std::pair<Perm, Perm>& pair_a,
                                           const std::pair<Perm, Perm>& pair_b);

/// Cycle notation, fixed points omitted, "()" for the identity.
std::string to_cycle_string(const Perm& p);

/// Parses "(0 1 2)(3 4)", "()" or an explicit image array "[1,2,0]".
/// The degree is required because fixed points are invisible in cycle form.
Perm parse_perm(const std::string& text, int degree);

}  // namespace dessinator
