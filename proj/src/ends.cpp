#include "dessinator/ends.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dessinator {

namespace {

class ZkOracle : public GroupOracle {
 public:
  // steps: one vector per generator (already closed under inversion).
  ZkOracle(std::string name, int k, std::vector<std::vector<int>> steps)
      : name_(std::move(name)), k_(k), steps_(std::move(steps)) {}

  std::string name() const override { return name_; }
  int generator_count() const override { return static_cast<int>(steps_.size()); }
  std::string generator_label(int g) const override {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < k_; ++i) os << (i ? "," : "") << steps_[g][i];
    os << ")";
    return os.str();
  }
  std::string identity() const override { return encode(std::vector<int>(k_, 0)); }
  std::string multiply(const std::string& element, int g) const override {
    std::vector<int> v = decode(element);
    for (int i = 0; i < k_; ++i) v[i] += steps_[g][i];
    return encode(v);
  }

 private:
  std::string encode(const std::vector<int>& v) const {
    std::ostringstream os;
    for (int i = 0; i < k_; ++i) os << (i ? "," : "") << v[i];
    return os.str();
  }
  std::vector<int> decode(const std::string& s) const {
    std::vector<int> v;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) v.push_back(std::stoi(part));
    return v;
  }

  std::string name_;
  int k_;
  std::vector<std::vector<int>> steps_;
};

class FreeOracle : public GroupOracle {
 public:
  explicit FreeOracle(int k) : k_(k) {}
  std::string name() const override { return "F" + std::to_string(k_); }
  int generator_count() const override { return 2 * k_; }
  std::string generator_label(int g) const override {
    std::string l(1, static_cast<char>('a' + g / 2));
    return g % 2 ? l + "^-1" : l;
  }
  std::string identity() const override { return ""; }
  std::string multiply(const std::string& element, int g) const override {
    // letters: 'a'+i for generator i, 'A'+i for its inverse
    char c = g % 2 ? static_cast<char>('A' + g / 2) : static_cast<char>('a' + g / 2);
    char inv = g % 2 ? static_cast<char>('a' + g / 2) : static_cast<char>('A' + g / 2);
    if (!element.empty() && element.back() == inv) return element.substr(0, element.size() - 1);
    return element + c;
  }

 private:
  int k_;
};

class CyclicOracle : public GroupOracle {
 public:
  explicit CyclicOracle(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("cyclic order must be positive");
  }
  std::string name() const override { return "Z" + std::to_string(n_); }
  int generator_count() const override { return 2; }
  std::string generator_label(int g) const override { return g == 0 ? "t" : "t^-1"; }
  std::string identity() const override { return "0"; }
  std::string multiply(const std::string& element, int g) const override {
    int v = std::stoi(element);
    v = (v + (g == 0 ? 1 : n_ - 1)) % n_;
    return std::to_string(v);
  }

 private:
  int n_;
};

// Z_m * Z_n: normal form is an alternating sequence of syllables a^i (i in
// 1..m-1) and b^j (j in 1..n-1), serialized like "a2.b1.a1".
class FreeProductCyclicOracle : public GroupOracle {
 public:
  FreeProductCyclicOracle(int m, int n) : m_(m), n_(n) {
    if (m < 2 || n < 2) throw std::invalid_argument("free product factors need order >= 2");
  }
  std::string name() const override { return "Z" + std::to_string(m_) + "*Z" + std::to_string(n_); }
  int generator_count() const override { return 4; }
  std::string generator_label(int g) const override {
    switch (g) {
      case 0: return "a";
      case 1: return "a^-1";
      case 2: return "b";
      default: return "b^-1";
    }
  }
  std::string identity() const override { return ""; }
  std::string multiply(const std::string& element, int g) const override {
    std::vector<std::pair<char, int>> syll = decode(element);
    char letter = g < 2 ? 'a' : 'b';
    int order = g < 2 ? m_ : n_;
    int delta = g % 2 ? order - 1 : 1;
    if (!syll.empty() && syll.back().first == letter) {
      syll.back().second = (syll.back().second + delta) % order;
      if (syll.back().second == 0) syll.pop_back();
    } else {
      syll.emplace_back(letter, delta);
    }
    return encode(syll);
  }

 private:
  static std::vector<std::pair<char, int>> decode(const std::string& s) {
    std::vector<std::pair<char, int>> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, '.'))
      if (!part.empty()) out.emplace_back(part[0], std::stoi(part.substr(1)));
    return out;
  }
  static std::string encode(const std::vector<std::pair<char, int>>& syll) {
    std::string out;
    for (const auto& [c, e] : syll) {
      if (!out.empty()) out += '.';
      out += c;
      out += std::to_string(e);
    }
    return out;
  }

  int m_, n_;
};

std::vector<std::vector<int>> standard_zk_steps(int k) {
  std::vector<std::vector<int>> steps;
  for (int i = 0; i < k; ++i) {
    std::vector<int> plus(k, 0), minus(k, 0);
    plus[i] = 1;
    minus[i] = -1;
    steps.push_back(plus);
    steps.push_back(minus);
  }
  return steps;
}

}  // namespace

OraclePtr make_zk_oracle(int k) {
  if (k < 1) throw std::invalid_argument("rank must be positive");
  std::string name = k == 1 ? "Z" : "Z^" + std::to_string(k);
  return std::make_shared<ZkOracle>(name, k, standard_zk_steps(k));
}

OraclePtr make_z_steps_oracle(const std::vector<int>& steps) {
  std::vector<std::vector<int>> full;
  std::string name = "Z{";
  for (size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == 0) throw std::invalid_argument("zero step");
    full.push_back({steps[i]});
    full.push_back({-steps[i]});
    name += (i ? "," : "") + std::to_string(steps[i]);
  }
  name += "}";
  return std::make_shared<ZkOracle>(name, 1, std::move(full));
}

OraclePtr make_free_oracle(int k) {
  if (k < 1) throw std::invalid_argument("rank must be positive");
  return std::make_shared<FreeOracle>(k);
}

OraclePtr make_cyclic_oracle(int n) { return std::make_shared<CyclicOracle>(n); }

OraclePtr make_free_product_cyclic_oracle(int m, int n) {
  return std::make_shared<FreeProductCyclicOracle>(m, n);
}

std::vector<OraclePtr> builtin_oracles() {
  return {make_zk_oracle(1),
          make_zk_oracle(2),
          make_free_oracle(2),
          make_cyclic_oracle(6),
          make_free_product_cyclic_oracle(2, 2),
          make_free_product_cyclic_oracle(2, 3)};
}

OraclePtr parse_group_spec(const std::string& spec) {
  auto star = spec.find('*');
  if (star != std::string::npos) {
    std::string lhs = spec.substr(0, star), rhs = spec.substr(star + 1);
    if (lhs.size() < 2 || rhs.size() < 2 || lhs[0] != 'Z' || rhs[0] != 'Z')
      throw std::invalid_argument("unknown group spec '" + spec + "'");
    return make_free_product_cyclic_oracle(std::stoi(lhs.substr(1)), std::stoi(rhs.substr(1)));
  }
  if (spec == "Z") return make_zk_oracle(1);
  if (spec.rfind("Z^", 0) == 0) return make_zk_oracle(std::stoi(spec.substr(2)));
  if (spec.size() > 1 && spec[0] == 'F') return make_free_oracle(std::stoi(spec.substr(1)));
  if (spec.size() > 1 && spec[0] == 'Z') return make_cyclic_oracle(std::stoi(spec.substr(1)));
  throw std::invalid_argument("unknown group spec '" + spec + "'");
}

CayleyBall cayley_ball(const GroupOracle& oracle, int radius, int vertex_cap) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  CayleyBall ball;
  std::unordered_map<std::string, int> ids;
  std::vector<std::vector<int>> pending_edges;

  std::string id = oracle.identity();
  ids[id] = 0;
  ball.elements.push_back(id);
  ball.distance.push_back(0);
  ball.adjacency.emplace_back();
  ball.exhausted = true;

  size_t qi = 0;
  while (qi < ball.elements.size()) {
    int v = static_cast<int>(qi);
    ++qi;
    if (ball.distance[v] == radius) {
      ball.exhausted = false;  // frontier reached the radius; group may go on
      continue;
    }
    for (int g = 0; g < oracle.generator_count(); ++g) {
      std::string w = oracle.multiply(ball.elements[v], g);
      auto [it, inserted] = ids.emplace(w, static_cast<int>(ball.elements.size()));
      if (inserted) {
        if (static_cast<int>(ball.elements.size()) >= vertex_cap)
          throw std::runtime_error("cayley ball exceeds the vertex cap");
        ball.elements.push_back(w);
        ball.distance.push_back(ball.distance[v] + 1);
        ball.adjacency.emplace_back();
      }
      int u = it->second;
      if (u != v) {
        ball.adjacency[v].push_back(u);
        ball.adjacency[u].push_back(v);
      }
    }
  }
  for (auto& adj : ball.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return ball;
}

std::string ends_class_name(EndsClass c) {
  switch (c) {
    case EndsClass::Zero: return "0";
    case EndsClass::One: return "1";
    case EndsClass::Two: return "2";
    case EndsClass::InfinitelyMany: return "infinitely_many";
    case EndsClass::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Connected components of {v : dist >= r} that contain a vertex at distance
// exactly R.
int annulus_components(const CayleyBall& ball, int r, int big_r) {
  int n = static_cast<int>(ball.elements.size());
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (ball.distance[v] < r || comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = count;
    bool reaches = ball.distance[v] == big_r;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : ball.adjacency[x]) {
        if (ball.distance[y] < r || comp[y] != -1) continue;
        comp[y] = count;
        if (ball.distance[y] == big_r) reaches = true;
        stack.push_back(y);
      }
    }
    if (reaches) ++count;  // bounded pockets are not counted
  }
  return count;
}

}  // namespace

EndsProfile ends_estimate(const GroupOracle& oracle, int r_max, int vertex_cap) {
  if (r_max < 4) throw std::invalid_argument("r_max must be at least 4");
  EndsProfile profile;
  CayleyBall ball = cayley_ball(oracle, r_max, vertex_cap);

  std::vector<long long> sphere(r_max + 1, 0);
  for (int d : ball.distance) ++sphere[d];
  long long total = 0;
  for (int r = 0; r <= r_max; ++r) {
    total += sphere[r];
    profile.ball_sizes.push_back(total);
  }

  if (ball.exhausted) {
    profile.classification = EndsClass::Zero;
    return profile;
  }

  for (int r = 1; r < r_max; ++r)
    profile.component_counts.push_back(annulus_components(ball, r, r_max));

  const auto& c = profile.component_counts;
  size_t k = c.size();
  auto last_equal = [&](int value) {
    return k >= 3 && c[k - 1] == value && c[k - 2] == value && c[k - 3] == value;
  };
  if (last_equal(1))
    profile.classification = EndsClass::One;
  else if (last_equal(2))
    profile.classification = EndsClass::Two;
  else if (k >= 3 && c[k - 1] > c[k - 2] && c[k - 2] > c[k - 3])
    profile.classification = EndsClass::InfinitelyMany;
  else
    profile.classification = EndsClass::Inconclusive;
  return profile;
}

}  // namespace dessinator
