#include "dessinator/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dessinator {

namespace {

void check_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch: " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
}

}  // namespace

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  check_same_degree(p, q);
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p[q[i]];
  return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p[i]] = i;
  return Perm(std::move(img));
}

CycleDecomposition cycle_decomposition(const Perm& p) {
  CycleDecomposition out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    int j = i;
    do {
      seen[j] = 1;
      cycle.push_back(j);
      j = p[j];
    } while (j != i);
    out.lengths.push_back(static_cast<int>(cycle.size()));
    out.cycles.push_back(std::move(cycle));
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

bool is_transitive(const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  int n = gens[0].degree();
  for (const Perm& g : gens) check_same_degree(gens[0], g);
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const Perm& g : gens) {
      for (int q : {g[p], inverse(g)[p]}) {
        if (!seen[q]) {
          seen[q] = 1;
          ++count;
          stack.push_back(q);
        }
      }
    }
  }
  return count == n;
}

namespace {

// One level of a stabilizer chain: base point, strong generators, and the
// orbit transversal (transversal[p] maps base to p).
struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens;
  std::vector<std::optional<Perm>> transversal;
};

struct StabChain {
  int degree;
  std::vector<ChainLevel> levels;

  explicit StabChain(int n) : degree(n) {}

  void recompute_orbit(ChainLevel& lv) const {
    lv.transversal.assign(degree, std::nullopt);
    lv.transversal[lv.base] = Perm::identity(degree);
    std::vector<int> queue{lv.base};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int p = queue[qi];
      for (const Perm& g : lv.gens) {
        int q = g[p];
        if (!lv.transversal[q]) {
          lv.transversal[q] = compose(g, *lv.transversal[p]);
          queue.push_back(q);
        }
      }
    }
  }

  // Strips g through the chain starting at `level`; returns the residue.
  Perm sift(Perm g, size_t level) const {
    for (size_t i = level; i < levels.size(); ++i) {
      int image = g[levels[i].base];
      if (!levels[i].transversal[image]) return g;
      g = compose(inverse(*levels[i].transversal[image]), g);
    }
    return g;
  }

  void insert(const Perm& g, size_t level) {
    if (g.is_identity()) return;
    if (level == levels.size()) {
      ChainLevel lv;
      for (int i = 0; i < degree; ++i)
        if (g[i] != i) {
          lv.base = i;
          break;
        }
      levels.push_back(std::move(lv));
    }
    levels[level].gens.push_back(g);
    recompute_orbit(levels[level]);
    // Close under Schreier generators.  The recursive insert below can grow
    // `levels` (invalidating references into it), so re-index every access
    // and copy what the recursion must not disturb.
    for (int p = 0; p < degree; ++p) {
      if (!levels[level].transversal[p]) continue;
      const size_t gen_count = levels[level].gens.size();
      for (size_t si = 0; si < gen_count; ++si) {
        const Perm s = levels[level].gens[si];
        const Perm tp = *levels[level].transversal[p];
        Perm schreier = compose(inverse(*levels[level].transversal[s[p]]), compose(s, tp));
        Perm residue = sift(schreier, level + 1);
        if (!residue.is_identity()) insert(residue, level + 1);
      }
    }
  }
};

}  // namespace

std::uint64_t group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("group_order: empty generator list");
  for (const Perm& g : gens) check_same_degree(gens[0], g);
  StabChain chain(gens[0].degree());
  for (const Perm& g : gens) {
    Perm residue = chain.sift(g, 0);
    if (!residue.is_identity()) chain.insert(residue, 0);
  }
  std::uint64_t order = 1;
  for (const ChainLevel& lv : chain.levels) {
    std::uint64_t orbit = 0;
    for (const auto& t : lv.transversal)
      if (t) ++orbit;
    if (order > UINT64_MAX / orbit)
      throw std::overflow_error("group order exceeds 64 bits");
    order *= orbit;
  }
  return order;
}

namespace {

// Schreier words from point 0, as permutations w_p with w_p(0) = p.
std::vector<Perm> schreier_words(const std::vector<Perm>& gens) {
  int n = gens[0].degree();
  std::vector<std::optional<Perm>> word(n);
  word[0] = Perm::identity(n);
  std::vector<int> queue{0};
  std::vector<Perm> all = gens;
  for (const Perm& g : gens) all.push_back(inverse(g));
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int p = queue[qi];
    for (const Perm& g : all) {
      int q = g[p];
      if (!word[q]) {
        word[q] = compose(g, *word[p]);
        queue.push_back(q);
      }
    }
  }
  std::vector<Perm> out;
  out.reserve(n);
  for (auto& w : word) {
    if (!w) throw std::invalid_argument("generators are not transitive");
    out.push_back(std::move(*w));
  }
  return out;
}

bool commutes_with_all(const Perm& h, const std::vector<Perm>& gens) {
  for (const Perm& g : gens)
    if (compose(h, g) != compose(g, h)) return false;
  return true;
}

}  // namespace

std::vector<Perm> centralizer(const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  if (!is_transitive(gens))
    throw std::invalid_argument("centralizer search requires transitivity");
  int n = gens[0].degree();
  std::vector<Perm> words = schreier_words(gens);
  std::vector<Perm> result;
  // A centralizing element is determined by the image of 0: h = w_t h w_0
  // forces h(p) = w_p(t) for every p.
  for (int t = 0; t < n; ++t) {
    std::vector<int> img(n);
    for (int p = 0; p < n; ++p) img[p] = words[p][t];
    std::vector<char> seen(n, 0);
    bool bijective = true;
    for (int v : img) {
      if (seen[v]) {
        bijective = false;
        break;
      }
      seen[v] = 1;
    }
    if (!bijective) continue;
    Perm h(std::move(img));
    if (commutes_with_all(h, gens)) result.push_back(std::move(h));
  }
  return result;
}

std::optional<Perm> simultaneous_conjugacy(const std::pair<Perm, Perm>& pair_a,
                                           const std::pair<Perm, Perm>& pair_b) {
  const Perm& a1 = pair_a.first;
  const Perm& a2 = pair_a.second;
  const Perm& b1 = pair_b.first;
  const Perm& b2 = pair_b.second;
  check_same_degree(a1, a2);
  check_same_degree(b1, b2);
  check_same_degree(a1, b1);
  int n = a1.degree();
  if (!is_transitive({a1, a2}) || !is_transitive({b1, b2}))
    throw std::invalid_argument("simultaneous conjugacy requires transitive pairs");
  std::vector<Perm> a_gens{a1, a2, inverse(a1), inverse(a2)};
  std::vector<Perm> b_gens{b1, b2, inverse(b1), inverse(b2)};
  // Fix h(0) = t and propagate h(a_i(p)) = b_i(h(p)) over the orbit.
  for (int t = 0; t < n; ++t) {
    std::vector<int> img(n, -1);
    img[0] = t;
    std::vector<int> queue{0};
    bool ok = true;
    for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
      int p = queue[qi];
      for (size_t k = 0; k < a_gens.size(); ++k) {
        int q = a_gens[k][p];
        int v = b_gens[k][img[p]];
        if (img[q] == -1) {
          img[q] = v;
          queue.push_back(q);
        } else if (img[q] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> seen(n, 0);
    for (int v : img) {
      if (v < 0 || seen[v]) {
        ok = false;
        break;
      }
      seen[v] = 1;
    }
    if (!ok) continue;
    Perm h(std::move(img));
    if (compose(h, a1) == compose(b1, h) && compose(h, a2) == compose(b2, h))
      return h;
  }
  return std::nullopt;
}

std::string to_cycle_string(const Perm& p) {
  CycleDecomposition dec = cycle_decomposition(p);
  std::string out;
  for (const auto& cycle : dec.cycles) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm parse_perm(const std::string& text, int degree) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start)
      throw std::invalid_argument("expected a point index at position " +
                                  std::to_string(start) + " in '" + text + "'");
    int v = std::stoi(text.substr(start, i - start));
    if (v < 0 || v >= degree)
      throw std::invalid_argument("point " + std::to_string(v) +
                                  " out of range for degree " + std::to_string(degree));
    return v;
  };
  skip_ws();
  if (i < text.size() && text[i] == '[') {
    ++i;
    std::vector<int> img;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        img.push_back(parse_int());
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        throw std::invalid_argument("expected ',' or ']' at position " +
                                    std::to_string(i) + " in '" + text + "'");
      }
    }
    if (static_cast<int>(img.size()) != degree)
      throw std::invalid_argument("image array length " + std::to_string(img.size()) +
                                  " does not match degree " + std::to_string(degree));
    return Perm(std::move(img));
  }
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' at position " + std::to_string(i) +
                                  " in '" + text + "'");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      int v = parse_int();
      if (used[v])
        throw std::invalid_argument("point " + std::to_string(v) +
                                    " appears twice in '" + text + "'");
      used[v] = 1;
      cycle.push_back(v);
      skip_ws();
    }
    if (i == text.size())
      throw std::invalid_argument("unclosed cycle in '" + text + "'");
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Perm(std::move(img));
}

}  // namespace dessinator
