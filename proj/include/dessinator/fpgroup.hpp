#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dessinator/perm.hpp"

namespace dessinator {

/// A word over signed generator indices: +(k+1) is generator k, -(k+1) its
/// inverse.  Words are kept freely reduced.
struct Word {
  std::vector<int> letters;

  static Word from_letters(std::vector<int> letters);

  Word inverted() const;
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

Word free_reduce(Word w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int exponent);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
};

/// Parses `< names | relators >`.  Relators are separated by whitespace or
/// commas; within a relator `*` concatenates, `^` raises to a nonzero
/// integer power and a leading `-` inverts.  Throws std::invalid_argument
/// with a character position on malformed input.
Presentation parse_presentation(const std::string& text);

std::string format_word(const Word& w, const Presentation& p);
std::string format_presentation(const Presentation& p);

/// Parses a single word such as "x*y^-2" against the presentation's
/// generator names.
Word parse_word(const std::string& text, const Presentation& p);

/// Coset table of a finite-index subgroup: the right action of each
/// generator on cosets, with coset 0 the subgroup itself.  Tables are
/// standardized so cosets appear in breadth-first discovery order.
struct CosetTable {
  int index = 0;
  std::vector<Perm> action;  // one per generator

  /// Image of a coset under a word (letters applied left to right).
  int apply(int coset, const Word& w) const;
  /// The permutation a word induces on cosets.
  Perm word_action(const Word& w) const;
};

/// Todd-Coxeter enumeration (HLT) of the cosets of <subgroup_gens> in p.
/// Throws std::runtime_error("enumeration did not close within max_cosets")
/// when the table does not close, e.g. for infinite-index subgroups.
CosetTable coset_enumeration(const Presentation& p, const std::vector<Word>& subgroup_gens,
                             int max_cosets = 1000000);

/// Re-standardizes a table using `start` as the base coset.  With start = 0
/// this is the identity on already standardized tables.
CosetTable standardize_from(const CosetTable& t, int start);

/// Reidemeister-Schreier data: one subgroup generator per coset-table entry
/// outside the breadth-first spanning tree.
struct SchreierData {
  Presentation subgroup;
  /// generator_index[c][g] is the subgroup generator number of the table
  /// edge (coset c, generator g), or -1 for spanning-tree edges.
  std::vector<std::vector<int>> generator_index;
};

SchreierData reidemeister_schreier_data(const Presentation& p, const CosetTable& t);
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

struct Abelianization {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // elementary divisors > 1, each dividing the next
};

Abelianization abelianization(const Presentation& p);

/// Smith normal form over exact integers: returns diag d_1 | d_2 | ... with
/// transforms U, V such that U * M * V = D.  Pivoting by minimal absolute
/// value.
struct SmithResult {
  std::vector<std::vector<mpz_class>> d, u, v;
  int rank = 0;
};

SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> m);

}  // namespace dessinator
