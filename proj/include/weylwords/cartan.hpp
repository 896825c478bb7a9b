#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "weylwords/rational.hpp"

namespace weylwords {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A finite crystallographic Dynkin type such as A5 or E8.
struct TypeLabel {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidRank unless the rank is allowed for the family
  /// (A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F4, G2).
  static TypeLabel make(Family family, int rank);

  /// Parses "A5", "e8", "D4"; the family letter is case-insensitive.
  static TypeLabel parse(std::string_view text);

  bool simply_laced() const noexcept {
    return family == Family::A || family == Family::D || family == Family::E;
  }
  bool exceptional() const noexcept {
    return family == Family::E || family == Family::F || family == Family::G;
  }

  std::string str() const;

  auto operator<=>(const TypeLabel&) const = default;
};

bool valid_rank(Family family, int rank) noexcept;

/// Square integer matrix, row-major. Indices are zero-based.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }
  int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::vector<int>& entries() const noexcept { return a_; }

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  bool operator==(const IntMatrix&) const = default;

private:
  int n_ = 0;
  std::vector<int> a_;
};

/// Cartan and Coxeter data with Bourbaki node numbering.
///
/// Convention: s_i(alpha_j) = alpha_j - cartan(j, i) * alpha_i, so that
/// cartan(j, i) = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i). With d_i the
/// half squared length of alpha_i, (alpha_i, alpha_j) = cartan(i, j) * d_j.
struct CartanDatum {
  TypeLabel label;
  IntMatrix cartan;
  IntMatrix coxeter;
  std::vector<Rational> sym;

  int rank() const noexcept { return label.rank; }
};

/// Throws InvalidRank for labels outside the finite crystallographic list.
CartanDatum datum(TypeLabel label);

/// Order of the Weyl group, or 0 if it does not fit in 64 bits.
unsigned long long weyl_group_order(TypeLabel label);

/// Every label from the verified range: A1-A8, B2-B8, C2-C8, D4-D8, E6-E8, F4, G2.
std::vector<TypeLabel> standard_labels();

}  // namespace weylwords
