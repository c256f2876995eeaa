#include "dessinator/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dessinator {

Word free_reduce(Word w) {
  std::vector<int> out;
  for (int l : w.letters) {
    if (l == 0) throw std::invalid_argument("zero letter in word");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

Word Word::from_letters(std::vector<int> letters) {
  return free_reduce(Word{std::move(letters)});
}

Word Word::inverted() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(std::move(w));
}

Word power(const Word& w, int exponent) {
  Word base = exponent < 0 ? w.inverted() : w;
  int count = std::abs(exponent);
  Word out;
  out.letters.reserve(base.letters.size() * count);
  for (int i = 0; i < count; ++i)
    out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
  return free_reduce(std::move(out));
}

// ---------------------------------------------------------------------------
// Presentation parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Ident, Int, Star, Caret, Minus, LParen, RParen, Comma, Pipe, Lt, Gt } kind;
  std::string text;
  size_t pos;
  bool gap_before;  // whitespace between this token and the previous one
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  bool gap = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      gap = true;
      ++i;
      continue;
    }
    Token t{Token::Ident, std::string(1, c), i, gap};
    gap = false;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
              text[i] == '\''))
        ++i;
      t.text = text.substr(start, i - start);
      t.kind = Token::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      t.text = text.substr(start, i - start);
      t.kind = Token::Int;
    } else {
      switch (c) {
        case '*': t.kind = Token::Star; break;
        case '^': t.kind = Token::Caret; break;
        case '-': t.kind = Token::Minus; break;
        case '(': t.kind = Token::LParen; break;
        case ')': t.kind = Token::RParen; break;
        case ',': t.kind = Token::Comma; break;
        case '|': t.kind = Token::Pipe; break;
        case '<': t.kind = Token::Lt; break;
        case '>': t.kind = Token::Gt; break;
        default:
          throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                      "' at position " + std::to_string(i));
      }
      ++i;
    }
    out.push_back(std::move(t));
  }
  return out;
}

class WordParser {
 public:
  WordParser(const std::vector<Token>& tokens, size_t begin, size_t end,
             const std::map<std::string, int>& gens)
      : toks_(tokens), i_(begin), end_(end), gens_(gens) {}

  Word parse() {
    Word w = parse_sequence();
    if (i_ != end_) fail("unexpected token");
    return free_reduce(std::move(w));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    size_t pos = i_ < toks_.size() ? toks_[i_].pos : (toks_.empty() ? 0 : toks_.back().pos + 1);
    throw std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " + msg);
  }

  bool at_factor_start() const {
    if (i_ >= end_) return false;
    auto k = toks_[i_].kind;
    return k == Token::Ident || k == Token::LParen || k == Token::Minus;
  }

  Word parse_sequence() {
    Word w;
    if (!at_factor_start()) fail("expected a word");
    while (true) {
      Word f = parse_factor();
      w.letters.insert(w.letters.end(), f.letters.begin(), f.letters.end());
      if (i_ < end_ && toks_[i_].kind == Token::Star) {
        ++i_;
        if (!at_factor_start()) fail("expected a factor after '*'");
        continue;
      }
      if (at_factor_start()) continue;  // implicit concatenation
      break;
    }
    return w;
  }

  Word parse_factor() {
    if (toks_[i_].kind == Token::Minus) {
      ++i_;
      if (!at_factor_start()) fail("expected a factor after '-'");
      return parse_factor().inverted();
    }
    Word atom;
    if (toks_[i_].kind == Token::Ident) {
      auto it = gens_.find(toks_[i_].text);
      if (it == gens_.end())
        throw std::invalid_argument("unknown generator '" + toks_[i_].text +
                                    "' at position " + std::to_string(toks_[i_].pos));
      atom.letters.push_back(it->second + 1);
      ++i_;
    } else if (toks_[i_].kind == Token::LParen) {
      size_t open_pos = toks_[i_].pos;
      ++i_;
      atom = parse_sequence();
      if (i_ >= end_ || toks_[i_].kind != Token::RParen)
        throw std::invalid_argument("unclosed parenthesis opened at position " +
                                    std::to_string(open_pos));
      ++i_;
    } else {
      fail("expected a generator or '('");
    }
    if (i_ < end_ && toks_[i_].kind == Token::Caret) {
      ++i_;
      int sign = 1;
      if (i_ < end_ && toks_[i_].kind == Token::Minus) {
        sign = -1;
        ++i_;
      }
      if (i_ >= end_ || toks_[i_].kind != Token::Int) fail("expected an integer exponent");
      long e = std::stol(toks_[i_].text);
      if (e == 0)
        throw std::invalid_argument("zero power at position " +
                                    std::to_string(toks_[i_].pos));
      ++i_;
      return power(atom, static_cast<int>(sign * e));
    }
    return atom;
  }

  const std::vector<Token>& toks_;
  size_t i_, end_;
  const std::map<std::string, int>& gens_;
};

bool is_operator(Token::Kind k) {
  return k == Token::Star || k == Token::Caret || k == Token::Minus;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  if (toks.empty() || toks.front().kind != Token::Lt)
    throw std::invalid_argument("presentation must start with '<'");
  if (toks.back().kind != Token::Gt)
    throw std::invalid_argument("presentation must end with '>'");
  size_t pipe = 0;
  for (size_t i = 0; i < toks.size(); ++i)
    if (toks[i].kind == Token::Pipe) {
      pipe = i;
      break;
    }
  if (pipe == 0) throw std::invalid_argument("missing '|' separator");

  Presentation p;
  std::map<std::string, int> gens;
  for (size_t i = 1; i < pipe; ++i) {
    if (toks[i].kind == Token::Comma) continue;
    if (toks[i].kind != Token::Ident)
      throw std::invalid_argument("expected a generator name at position " +
                                  std::to_string(toks[i].pos));
    if (gens.count(toks[i].text))
      throw std::invalid_argument("duplicate generator name '" + toks[i].text + "'");
    gens[toks[i].text] = static_cast<int>(p.generator_names.size());
    p.generator_names.push_back(toks[i].text);
  }

  // Split the relator section at top-level whitespace gaps and commas.
  size_t begin = pipe + 1;
  size_t end = toks.size() - 1;  // exclude '>'
  std::vector<std::pair<size_t, size_t>> spans;
  int depth = 0;
  size_t start = begin;
  for (size_t i = begin; i < end; ++i) {
    if (toks[i].kind == Token::RParen) --depth;
    if (toks[i].kind == Token::Comma && depth == 0) {
      if (i > start) spans.emplace_back(start, i);
      start = i + 1;
    } else if (i > start && depth == 0 && toks[i].gap_before && !is_operator(toks[i].kind) &&
               !is_operator(toks[i - 1].kind) && toks[i].kind != Token::RParen) {
      spans.emplace_back(start, i);
      start = i;
    }
    if (toks[i].kind == Token::LParen) ++depth;
  }
  if (end > start) spans.emplace_back(start, end);
  for (auto [s, e] : spans) {
    if (toks[s].kind == Token::Comma) continue;
    Word w = WordParser(toks, s, e, gens).parse();
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

Word parse_word(const std::string& text, const Presentation& p) {
  std::vector<Token> toks = tokenize(text);
  std::map<std::string, int> gens;
  for (int i = 0; i < p.generator_count(); ++i) gens[p.generator_names[i]] = i;
  return WordParser(toks, 0, toks.size(), gens).parse();
}

std::string format_word(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    int l = w.letters[i];
    int run = static_cast<int>(j - i);
    int exp = l > 0 ? run : -run;
    if (!out.empty()) out += "*";
    out += p.generator_names[std::abs(l) - 1];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (const auto& n : p.generator_names) out += " " + n;
  out += " |";
  for (const auto& r : p.relators) out += " " + format_word(r, p);
  out += " >";
  return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration
// ---------------------------------------------------------------------------

namespace {

// Column layout: generator g forward = 2g, inverse = 2g+1.
int letter_col(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}
int inv_col(int col) { return col ^ 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens, int max_cosets)
      : pres_(p), sub_(subgroup_gens), max_cosets_(max_cosets), ncols_(2 * p.generator_count()) {
    new_coset();
  }

  CosetTable run() {
    for (const Word& w : sub_) relator_cols_.push_back(to_cols(w));
    size_t nsub = relator_cols_.size();
    for (const Word& r : pres_.relators) relator_cols_.push_back(to_cols(r));

    bool changed = true;
    while (changed) {
      changed_ = false;
      // Subgroup generators are scanned at coset 0 only.
      for (size_t k = 0; k < nsub; ++k) scan_and_fill(0, relator_cols_[k]);
      for (size_t c = 0; c < tab_.size(); ++c) {
        if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
        for (size_t k = nsub; k < relator_cols_.size(); ++k) {
          scan_and_fill(static_cast<int>(c), relator_cols_[k]);
          if (rep(static_cast<int>(c)) != static_cast<int>(c)) break;
        }
        if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
        for (int col = 0; col < ncols_; ++col)
          if (tab_[c][col] == -1) {
            int n = new_coset();
            tab_[c][col] = n;
            tab_[n][inv_col(col)] = static_cast<int>(c);
            changed_ = true;
          }
      }
      changed = changed_;
    }
    return standardized();
  }

 private:
  std::vector<int> to_cols(const Word& w) const {
    std::vector<int> cols;
    cols.reserve(w.letters.size());
    for (int l : w.letters) cols.push_back(letter_col(l));
    return cols;
  }

  int new_coset() {
    if (static_cast<int>(tab_.size()) >= max_cosets_)
      throw std::runtime_error("enumeration did not close within max_cosets");
    tab_.emplace_back(ncols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(tab_.size()) - 1;
  }

  int rep(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    q.push_back(b);
    changed_ = true;
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int y = q.front();
      q.pop_front();
      for (int col = 0; col < ncols_; ++col) {
        int d = tab_[y][col];
        if (d == -1) continue;
        tab_[d][inv_col(col)] = -1;
        tab_[y][col] = -1;
        int mu = rep(y), nu = rep(d);
        if (tab_[mu][col] != -1)
          merge(nu, tab_[mu][col], q);
        else if (tab_[nu][inv_col(col)] != -1)
          merge(mu, tab_[nu][inv_col(col)], q);
        else {
          tab_[mu][col] = nu;
          tab_[nu][inv_col(col)] = mu;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& cols) {
    if (cols.empty()) return;
    int i = 0, j = static_cast<int>(cols.size()) - 1;
    int f = c, b = c;
    while (true) {
      while (i <= j && tab_[f][cols[i]] != -1) f = tab_[f][cols[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab_[b][inv_col(cols[j])] != -1) b = tab_[b][inv_col(cols[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {  // deduction closes the gap
        tab_[f][cols[i]] = b;
        tab_[b][inv_col(cols[i])] = f;
        changed_ = true;
        return;
      }
      int n = new_coset();
      tab_[f][cols[i]] = n;
      tab_[n][inv_col(cols[i])] = f;
      changed_ = true;
    }
  }

  CosetTable standardized() {
    // Breadth-first renumbering from coset 0 over columns in order.
    std::vector<int> number(tab_.size(), -1);
    std::vector<int> order;
    number[rep(0)] = 0;
    order.push_back(rep(0));
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int c = order[qi];
      for (int col = 0; col < ncols_; ++col) {
        int d = rep(tab_[c][col]);
        if (number[d] == -1) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    int index = static_cast<int>(order.size());
    CosetTable t;
    t.index = index;
    for (int g = 0; g < pres_.generator_count(); ++g) {
      std::vector<int> img(index);
      for (int c = 0; c < index; ++c) img[c] = number[rep(tab_[order[c]][2 * g])];
      t.action.emplace_back(std::move(img));
    }
    return t;
  }

  const Presentation& pres_;
  const std::vector<Word>& sub_;
  int max_cosets_;
  int ncols_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> relator_cols_;
  bool changed_ = false;
};

}  // namespace

int CosetTable::apply(int coset, const Word& w) const {
  for (int l : w.letters) {
    if (l > 0)
      coset = action[l - 1][coset];
    else
      coset = inverse(action[-l - 1])[coset];
  }
  return coset;
}

Perm CosetTable::word_action(const Word& w) const {
  std::vector<Perm> inv;
  inv.reserve(action.size());
  for (const Perm& a : action) inv.push_back(inverse(a));
  std::vector<int> img(index);
  for (int c = 0; c < index; ++c) {
    int cur = c;
    for (int l : w.letters) cur = l > 0 ? action[l - 1][cur] : inv[-l - 1][cur];
    img[c] = cur;
  }
  return Perm(std::move(img));
}

CosetTable coset_enumeration(const Presentation& p, const std::vector<Word>& subgroup_gens,
                             int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be positive");
  Enumerator e(p, subgroup_gens, max_cosets);
  return e.run();
}

CosetTable standardize_from(const CosetTable& t, int start) {
  if (start < 0 || start >= t.index) throw std::invalid_argument("start coset out of range");
  int n = t.index;
  int ngens = static_cast<int>(t.action.size());
  std::vector<Perm> inv;
  inv.reserve(ngens);
  for (const Perm& a : t.action) inv.push_back(inverse(a));
  std::vector<int> number(n, -1);
  std::vector<int> order{start};
  number[start] = 0;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int c = order[qi];
    for (int g = 0; g < ngens; ++g) {
      for (int d : {t.action[g][c], inv[g][c]}) {
        if (number[d] == -1) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
  }
  CosetTable out;
  out.index = n;
  for (int g = 0; g < ngens; ++g) {
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = number[t.action[g][order[c]]];
    out.action.emplace_back(std::move(img));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reidemeister-Schreier
// ---------------------------------------------------------------------------

SchreierData reidemeister_schreier_data(const Presentation& p, const CosetTable& t) {
  int n = p.generator_count();
  if (static_cast<int>(t.action.size()) != n)
    throw std::invalid_argument("table does not match presentation");
  int index = t.index;
  for (const Perm& a : t.action)
    if (a.degree() != index) throw std::invalid_argument("incomplete coset table");

  std::vector<Perm> inv;
  for (const Perm& a : t.action) inv.push_back(inverse(a));

  // Breadth-first spanning tree over (coset, generator) in order; tree edges
  // carry the trivial Schreier generator.
  std::vector<std::vector<char>> tree(index, std::vector<char>(n, 0));
  std::vector<char> visited(index, 0);
  std::vector<int> order{0};
  visited[0] = 1;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int c = order[qi];
    for (int g = 0; g < n; ++g) {
      int d = t.action[g][c];
      if (!visited[d]) {
        visited[d] = 1;
        tree[c][g] = 1;
        order.push_back(d);
      }
      int e = inv[g][c];
      if (!visited[e]) {
        visited[e] = 1;
        tree[e][g] = 1;  // edge e --g--> c discovered backwards
        order.push_back(e);
      }
    }
  }

  SchreierData data;
  data.generator_index.assign(index, std::vector<int>(n, -1));
  int count = 0;
  for (int c = 0; c < index; ++c)
    for (int g = 0; g < n; ++g)
      if (!tree[c][g]) data.generator_index[c][g] = count++;

  for (int k = 0; k < count; ++k) data.subgroup.generator_names.push_back("s" + std::to_string(k + 1));

  auto rewrite = [&](int c, const Word& r) {
    Word out;
    int cur = c;
    for (int l : r.letters) {
      if (l > 0) {
        int g = l - 1;
        int idx = data.generator_index[cur][g];
        if (idx >= 0) out.letters.push_back(idx + 1);
        cur = t.action[g][cur];
      } else {
        int g = -l - 1;
        int prev = inv[g][cur];
        int idx = data.generator_index[prev][g];
        if (idx >= 0) out.letters.push_back(-(idx + 1));
        cur = prev;
      }
    }
    if (cur != c) throw std::invalid_argument("table does not satisfy the relators");
    return free_reduce(std::move(out));
  };

  std::set<std::vector<int>> seen;
  for (int c = 0; c < index; ++c) {
    for (const Word& r : p.relators) {
      Word w = rewrite(c, r);
      if (w.empty()) continue;
      if (seen.insert(w.letters).second) data.subgroup.relators.push_back(std::move(w));
    }
  }
  return data;
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  return reidemeister_schreier_data(p, t).subgroup;
}

// ---------------------------------------------------------------------------
// Smith normal form and abelianization
// ---------------------------------------------------------------------------

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

Mat identity_mat(size_t n) {
  Mat m(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithResult smith_normal_form(Mat m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  SmithResult res;
  res.u = identity_mat(rows);
  res.v = identity_mat(cols);

  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    std::swap(res.u[a], res.u[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    for (size_t i = 0; i < cols; ++i) std::swap(res.v[i][a], res.v[i][b]);
  };
  auto add_row = [&](size_t dst, size_t src, const mpz_class& factor) {
    for (size_t j = 0; j < cols; ++j) m[dst][j] += factor * m[src][j];
    for (size_t j = 0; j < rows; ++j) res.u[dst][j] += factor * res.u[src][j];
  };
  auto add_col = [&](size_t dst, size_t src, const mpz_class& factor) {
    for (size_t i = 0; i < rows; ++i) m[i][dst] += factor * m[i][src];
    for (size_t i = 0; i < cols; ++i) res.v[i][dst] += factor * res.v[i][src];
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (!found || mpz_cmpabs(m[i][j].get_mpz_t(), m[pi][pj].get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      mpz_class q = m[i][t] / m[t][t];  // truncated division
      if (q != 0) add_row(i, t, -q);
      if (m[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      mpz_class q = m[t][j] / m[t][t];
      if (q != 0) add_col(j, t, -q);
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // nonzero remainders become the next pivot

    // Pivot must divide every remaining entry for the divisibility chain.
    bool divides_all = true;
    for (size_t i = t + 1; i < rows && divides_all; ++i)
      for (size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          add_row(t, i, 1);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    if (m[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) m[t][j] = -m[t][j];
      for (size_t j = 0; j < rows; ++j) res.u[t][j] = -res.u[t][j];
    }
    ++t;
  }
  res.rank = static_cast<int>(t);
  res.d = std::move(m);
  return res;
}

Abelianization abelianization(const Presentation& p) {
  size_t n = static_cast<size_t>(p.generator_count());
  Mat m(p.relators.size(), std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < p.relators.size(); ++i)
    for (int l : p.relators[i].letters) {
      if (l > 0)
        m[i][l - 1] += 1;
      else
        m[i][-l - 1] -= 1;
    }
  SmithResult s = smith_normal_form(std::move(m));
  Abelianization out;
  out.free_rank = static_cast<int>(n) - s.rank;
  for (int i = 0; i < s.rank; ++i)
    if (s.d[i][i] > 1) out.torsion.push_back(s.d[i][i]);
  return out;
}

}  // namespace dessinator
