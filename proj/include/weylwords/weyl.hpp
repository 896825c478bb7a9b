#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "weylwords/cartan.hpp"
#include "weylwords/roots.hpp"

namespace weylwords {

/// A word in the simple reflections. Letters are generator indices 1..n.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  Word reversed() const;
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  auto operator<=>(const Word&) const = default;
};

/// Throws InvalidGenerator unless every letter is in [1, rank].
void check_word(const Word& w, int rank);

bool is_palindrome(const Word& w);

/// Compact "s1345431" when every letter is a single digit, "s[1,10,3]"
/// otherwise; the empty word is "s[]".
std::string render_word(const Word& w);
/// Accepts both forms, with or without the leading 's'. Throws Parse.
Word parse_word(std::string_view text);

/// Integer matrix of a group element in simple-root coordinates; column j
/// holds the image of alpha_j.
class WeylMatrix {
public:
  WeylMatrix() = default;
  explicit WeylMatrix(IntMatrix m) : m_(std::move(m)) {}

  static WeylMatrix identity(int n) { return WeylMatrix(IntMatrix::identity(n)); }

  int size() const noexcept { return m_.size(); }
  const IntMatrix& entries() const noexcept { return m_; }
  int operator()(int r, int c) const { return m_(r, c); }

  Root apply(const Root& b) const;

  friend WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b) {
    return WeylMatrix(a.m_ * b.m_);
  }
  bool operator==(const WeylMatrix&) const = default;

private:
  IntMatrix m_;
};

/// s_i(b) = b - c_{ji} b_j alpha_i summed over j. Throws InvalidGenerator.
Root apply_simple(const RootSystem& sys, int i, const Root& b);

/// M(s_{i1}) ... M(s_{ik}); the word evaluates as written.
WeylMatrix matrix(const RootSystem& sys, const Word& w);

/// Matrix of the single generator s_i.
WeylMatrix simple_matrix(const RootSystem& sys, int i);

/// N(w) as a set of positive roots.
std::set<Root> inversion_set(const RootSystem& sys, const Word& w);
/// N(w) for a group element given by its matrix.
std::set<Root> inversion_set(const RootSystem& sys, const WeylMatrix& m);

/// |N(w)|.
int length(const RootSystem& sys, const Word& w);
int length(const RootSystem& sys, const WeylMatrix& m);

bool is_reduced(const RootSystem& sys, const Word& w);

/// s_a(b) = b - <b, a^vee> a. Accepts negative roots; throws NotARoot.
WeylMatrix reflection_matrix(const RootSystem& sys, const Root& a);

/// Number of positive roots sent negative by s_a. Throws NotARoot unless
/// a is a positive root.
int reflection_length(const RootSystem& sys, const Root& a);

/// A reduced word for the same element, obtained by repeatedly deleting the
/// pair of letters singled out by the exchange condition.
Word reduce(const RootSystem& sys, const Word& w);

}  // namespace weylwords
