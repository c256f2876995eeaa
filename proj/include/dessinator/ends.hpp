#pragma once

#include <memory>
#include <string>
#include <vector>

namespace dessinator {

/// A finitely generated group given by normal forms: elements are canonical
/// strings, generators are closed under inversion, multiplication appends a
/// generator on the right.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual std::string name() const = 0;
  virtual int generator_count() const = 0;
  virtual std::string generator_label(int g) const = 0;
  virtual std::string identity() const = 0;
  virtual std::string multiply(const std::string& element, int g) const = 0;
};

using OraclePtr = std::shared_ptr<GroupOracle>;

/// Z^k with the standard generators +-e_i.
OraclePtr make_zk_oracle(int k);
/// Z with arbitrary generating steps (each step and its negative).
OraclePtr make_z_steps_oracle(const std::vector<int>& steps);
/// Free group of rank k on reduced words.
OraclePtr make_free_oracle(int k);
/// Finite cyclic Z_n.
OraclePtr make_cyclic_oracle(int n);
/// Free product Z_m * Z_n on alternating normal forms.
OraclePtr make_free_product_cyclic_oracle(int m, int n);

std::vector<OraclePtr> builtin_oracles();

/// Parses "Z", "Z^2", "Z6", "F2", "Z2*Z3", ...
OraclePtr parse_group_spec(const std::string& spec);

struct CayleyBall {
  std::vector<std::string> elements;  // breadth-first order
  std::vector<int> distance;
  std::vector<std::vector<int>> adjacency;
  bool exhausted = false;  // the whole group fit inside the radius
};

CayleyBall cayley_ball(const GroupOracle& oracle, int radius, int vertex_cap = 1000000);

enum class EndsClass { Zero, One, Two, InfinitelyMany, Inconclusive };

std::string ends_class_name(EndsClass c);

struct EndsProfile {
  EndsClass classification = EndsClass::Inconclusive;
  std::vector<long long> ball_sizes;       // |Ball(r)| for r = 0..r_max
  std::vector<int> component_counts;       // annulus components for r = 1..r_max-1
};

/// Empirical Scott-Wall classification: components of the annulus
/// {r <= d <= R} that reach distance exactly R, over a ladder of inner radii
/// with R = r_max.
EndsProfile ends_estimate(const GroupOracle& oracle, int r_max, int vertex_cap = 1000000);

}  // namespace dessinator
