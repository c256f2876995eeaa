#include "dessinator/dessin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dessinator {

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Dessin::Dessin(Perm sigma, Perm tau) : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (sigma_.degree() != tau_.degree())
    throw std::invalid_argument("sigma and tau must have the same degree");
  if (sigma_.degree() == 0) throw std::invalid_argument("dessin needs at least one edge");
  if (!is_transitive({sigma_, tau_})) throw std::invalid_argument("disconnected dessin");
}

Passport passport(const Dessin& d) {
  Passport p;
  p.black_degrees = cycle_decomposition(d.sigma()).lengths;
  p.white_degrees = cycle_decomposition(d.tau()).lengths;
  p.face_degrees = cycle_decomposition(d.face_permutation()).lengths;
  return p;
}

int genus(const Dessin& d) {
  int m = d.edge_count();
  int v = static_cast<int>(cycle_decomposition(d.sigma()).cycles.size()) +
          static_cast<int>(cycle_decomposition(d.tau()).cycles.size());
  int f = static_cast<int>(cycle_decomposition(d.face_permutation()).cycles.size());
  int chi = v - m + f;
  if ((2 - chi) % 2 != 0 || chi > 2)
    throw std::logic_error("Euler characteristic invariant violated");
  return (2 - chi) / 2;
}

namespace {

int lcm_of(const std::vector<int>& xs) {
  int l = 1;
  for (int x : xs) l = std::lcm(l, x);
  return l;
}

}  // namespace

DessinType dessin_type(const Dessin& d) {
  DessinType t;
  t.a = lcm_of(cycle_decomposition(d.sigma()).lengths);
  t.b = lcm_of(cycle_decomposition(d.tau()).lengths);
  t.c = lcm_of(cycle_decomposition(d.face_permutation()).lengths);
  // Sign of 1/a + 1/b + 1/c - 1, exactly: bc + ac + ab vs abc.
  long lhs = static_cast<long>(t.b) * t.c + static_cast<long>(t.a) * t.c +
             static_cast<long>(t.a) * t.b;
  long rhs = static_cast<long>(t.a) * t.b * t.c;
  t.geometry = lhs > rhs   ? Geometry::Spherical
               : lhs == rhs ? Geometry::Euclidean
                            : Geometry::Hyperbolic;
  return t;
}

namespace {

bool all_equal(const std::vector<int>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

}  // namespace

bool is_uniform(const Dessin& d) {
  Passport p = passport(d);
  return all_equal(p.black_degrees) && all_equal(p.white_degrees) &&
         all_equal(p.face_degrees);
}

bool is_clean(const Dessin& d) {
  for (int l : cycle_decomposition(d.tau()).lengths)
    if (l != 2) return false;
  return true;
}

int bounded_by(const Dessin& d) {
  Passport p = passport(d);
  int m = 1;
  for (const auto* list : {&p.black_degrees, &p.white_degrees, &p.face_degrees})
    for (int x : *list) m = std::max(m, x);
  return m;
}

std::uint64_t monodromy_order(const Dessin& d) { return group_order({d.sigma(), d.tau()}); }

std::vector<Perm> aut_plus(const Dessin& d) { return centralizer({d.sigma(), d.tau()}); }

AutSizes aut_full_size(const Dessin& d) {
  AutSizes s;
  s.plus_size = aut_plus(d).size();
  auto reversing = simultaneous_conjugacy({d.sigma(), d.tau()},
                                          {inverse(d.sigma()), inverse(d.tau())});
  s.full_size = reversing ? 2 * s.plus_size : s.plus_size;
  return s;
}

Classification classify(const Dessin& d) {
  AutSizes s = aut_full_size(d);
  Classification c;
  c.regular = s.plus_size == static_cast<std::uint64_t>(d.edge_count());
  c.reflexive = s.full_size == 2 * s.plus_size;
  c.chiral = !c.reflexive;
  return c;
}

Dessin mirror(const Dessin& d) { return Dessin(inverse(d.sigma()), inverse(d.tau())); }

std::optional<Perm> isomorphic(const Dessin& d1, const Dessin& d2) {
  if (d1.edge_count() != d2.edge_count()) return std::nullopt;
  return simultaneous_conjugacy({d1.sigma(), d1.tau()}, {d2.sigma(), d2.tau()});
}

// ---------------------------------------------------------------------------
// Canonical form: lexicographically minimal conjugate
// ---------------------------------------------------------------------------

namespace {

// Depth-first search over relabelings eta, generating the concatenated image
// arrays of (eta sigma eta^-1, eta tau eta^-1) position by position and
// pruning against the best key found so far.
class Canonicalizer {
 public:
  Canonicalizer(const Perm& sigma, const Perm& tau)
      : m_(sigma.degree()), perms_{&sigma, &tau} {}

  std::pair<Perm, Perm> run() {
    eta_.assign(m_, -1);
    inv_.assign(m_, -1);
    key_.assign(2 * m_, 0);
    best_.clear();
    dfs(0, true);
    std::vector<int> s(best_.begin(), best_.begin() + m_);
    std::vector<int> t(best_.begin() + m_, best_.end());
    return {Perm(std::move(s)), Perm(std::move(t))};
  }

 private:
  void dfs(int pos, bool tight) {
    if (pos == 2 * m_) {
      if (best_.empty() || key_ < best_) best_ = key_;
      return;
    }
    const Perm& perm = *perms_[pos / m_];
    int i = pos % m_;
    if (inv_[i] != -1) {
      step(pos, tight, perm, inv_[i]);
      return;
    }
    // Branch over the preimage of label i; order by the resulting key value
    // so the first completed branch is a strong bound.
    std::vector<std::pair<int, int>> cands;
    for (int p = 0; p < m_; ++p) {
      if (eta_[p] != -1) continue;
      int q = perm[p];
      int val = eta_[q] != -1 ? eta_[q] : next_free_label(p, i);
      cands.emplace_back(val, p);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [val, p] : cands) {
      eta_[p] = i;
      inv_[i] = p;
      step(pos, tight, perm, p);
      eta_[p] = -1;
      inv_[i] = -1;
    }
  }

  // Smallest label still unused once p takes label i (ordering estimate).
  int next_free_label(int /*p*/, int i) const {
    for (int l = 0; l < m_; ++l)
      if (l != i && inv_[l] == -1) return l;
    return i;  // only label i itself is still free (perm[p] == p case)
  }

  void step(int pos, bool tight, const Perm& perm, int p) {
    int q = perm[p];
    bool assigned_here = false;
    if (eta_[q] == -1) {
      // Forced: the smallest unused label minimizes this key position.
      int label = 0;
      while (inv_[label] != -1) ++label;
      eta_[q] = label;
      inv_[label] = q;
      assigned_here = true;
    }
    int val = eta_[q];
    bool next_tight = tight;
    if (tight && !best_.empty()) {
      if (val > best_[pos]) {
        if (assigned_here) {
          inv_[eta_[q]] = -1;
          eta_[q] = -1;
        }
        return;  // prune
      }
      if (val < best_[pos]) next_tight = false;
    } else if (!tight) {
      next_tight = false;
    }
    key_[pos] = val;
    dfs(pos + 1, best_.empty() ? true : next_tight);
    if (assigned_here) {
      inv_[eta_[q]] = -1;
      eta_[q] = -1;
    }
  }

  int m_;
  const Perm* perms_[2];
  std::vector<int> eta_, inv_, key_, best_;
};

}  // namespace

Dessin canonical_form(const Dessin& d) {
  auto [s, t] = Canonicalizer(d.sigma(), d.tau()).run();
  return Dessin(std::move(s), std::move(t));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

void partitions_of(int n, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_of(n - p, p, current, out);
    current.pop_back();
  }
}

// Canonical permutation with the given cycle type on consecutive blocks.
Perm perm_from_cycle_type(const std::vector<int>& parts, int m) {
  std::vector<int> img(m);
  int start = 0;
  for (int len : parts) {
    for (int k = 0; k < len; ++k) img[start + k] = start + (k + 1) % len;
    start += len;
  }
  return Perm(std::move(img));
}

// Breadth-first canonical key: relabel points by discovery order from every
// start point and keep the minimum.  A complete, conjugation-invariant key
// that is much cheaper than the lex-minimal form; used to deduplicate before
// canonicalizing each class once.
std::vector<int> bfs_min_key(const Perm& sigma, const Perm& tau) {
  int m = sigma.degree();
  const Perm inv_s = inverse(sigma), inv_t = inverse(tau);
  const Perm* moves[4] = {&sigma, &tau, &inv_s, &inv_t};
  std::vector<int> best;
  std::vector<int> eta(m), order(m);
  for (int s = 0; s < m; ++s) {
    std::fill(eta.begin(), eta.end(), -1);
    eta[s] = 0;
    order[0] = s;
    int count = 1;
    for (int qi = 0; qi < count; ++qi) {
      int p = order[qi];
      for (const Perm* g : moves) {
        int q = (*g)[p];
        if (eta[q] == -1) {
          eta[q] = count;
          order[count++] = q;
        }
      }
    }
    std::vector<int> key(2 * m);
    for (int p = 0; p < m; ++p) {
      key[eta[p]] = eta[sigma[p]];
      key[m + eta[p]] = eta[tau[p]];
    }
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace

std::vector<Dessin> enumerate_dessins(int m, int cap) {
  if (m < 1) throw std::invalid_argument("edge count must be positive");
  if (m > cap)
    throw std::invalid_argument("edge count " + std::to_string(m) +
                                " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<std::vector<int>> types;
  std::vector<int> scratch;
  partitions_of(m, m, scratch, types);

  std::set<std::vector<int>> seen;
  // Every pair is conjugate to one whose sigma has canonical cycle form, so
  // sigma ranges over cycle types only; tau ranges over all permutations.
  for (const auto& type : types) {
    Perm sigma = perm_from_cycle_type(type, m);
    std::vector<int> tau_img(m);
    std::iota(tau_img.begin(), tau_img.end(), 0);
    do {
      Perm tau(tau_img);
      if (!is_transitive({sigma, tau})) continue;
      seen.insert(bfs_min_key(sigma, tau));
    } while (std::next_permutation(tau_img.begin(), tau_img.end()));
  }

  std::set<std::pair<std::vector<int>, std::vector<int>>> canon;
  for (const auto& key : seen) {
    Perm s(std::vector<int>(key.begin(), key.begin() + m));
    Perm t(std::vector<int>(key.begin() + m, key.end()));
    auto [cs, ct] = Canonicalizer(s, t).run();
    canon.emplace(cs.images(), ct.images());
  }
  std::vector<Dessin> out;
  out.reserve(canon.size());
  for (const auto& [s, t] : canon) out.emplace_back(Perm(s), Perm(t));
  return out;
}

}  // namespace dessinator
