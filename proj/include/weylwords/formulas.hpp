#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylwords/roots.hpp"
#include "weylwords/weyl.hpp"

namespace weylwords {

/// One row of a reflection table.
struct ReflectionEntry {
  Root root;
  Coroot coroot;
  Word word;
  int length = 0;
  EuclideanVector euclid;
  /// Row label in table notation ("e1+e3", "1/2(e1-e2-e3-e4)", or sign
  /// bits such as "0011110" for half-integral roots of type E).
  std::string label;
  /// For E8 rows built from s_theta: the conjugator w. Empty otherwise.
  Word conjugator;
};

/// Type A: s_{e_i - e_{j+1}} = s_i ... s_{j-1} s_j s_{j-1} ... s_i, 1 <= i <= j <= n.
Word word_A(int i, int j, int n);

/// Types B and C (identical words; B labels the diagonal root e_i instead of 2e_i).
Word word_BC_minus(int i, int j, int n);  // e_i - e_j, i < j <= n
Word word_BC_diag(int i, int n);          // 2e_i (C) or e_i (B)
Word word_BC_plus(int i, int j, int n);   // e_i + e_j, i < j <= n

/// Type D.
Word word_D_minus(int i, int j, int n);  // e_i - e_j, i < j <= n
Word word_D_mixed(int i, int n);         // e_i + e_n, i < n
Word word_D_plus(int i, int j, int n);   // e_i + e_j, i < j < n

enum class CosetFlavor { C, D };

/// Minimal coset representative read off a two-column Young diagram:
/// C: s_j ... s_{n-1} . s_i ... s_{n-2};  D: s_j ... s_{n-2} . s_i ... s_{n-3}.
Word young_coset_word(int i, int j, int n, CosetFlavor flavor);

/// The core reflection conjugated by young_coset_word: (n, n-1, n) for C,
/// (n-1, n-2, n, n-2, n-1) for D.
Word young_core_word(int n, CosetFlavor flavor);

/// s_theta = s_{16524342561}.
Word theta_word();

/// Rows of the exceptional reflection tables in their printed order. E7
/// includes the E6 rows; E8 includes the E6 and E7 rows. Throws
/// NotExceptional for classical labels.
std::vector<ReflectionEntry> exceptional_table(const RootSystem& sys);
std::vector<ReflectionEntry> exceptional_table(TypeLabel label);

/// The palindromic reduced word for s_a, a positive. Throws NotARoot.
Word reflection_word(const RootSystem& sys, const Root& a);

/// Table notation for a root of this system.
std::string root_label(const RootSystem& sys, const Root& a);

/// Every reflection of the system: table order for exceptional types,
/// canonical (height, lex) order otherwise.
std::vector<ReflectionEntry> reflection_table(const RootSystem& sys);

/// Palindromic reduced words found by breadth-first conjugation from the
/// simple reflections; each step conjugates by the smallest generator that
/// raises the length by two.
std::map<Root, Word> conjugation_generate(const RootSystem& sys);

/// A fix to item (II) of the Bourbaki plates.
struct Correction {
  std::string plate;
  std::string location;
  std::string erroneous;
  std::string corrected;
  std::string note;
};

std::vector<Correction> bourbaki_corrections();

}  // namespace weylwords
