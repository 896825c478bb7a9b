#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylwords/cartan.hpp"
#include "weylwords/rational.hpp"

namespace weylwords {

/// Integer coefficient vector over a basis of simple roots (or coroots).
template <class Tag>
struct CoeffVector {
  std::vector<int> coeffs;

  CoeffVector() = default;
  explicit CoeffVector(std::vector<int> c) : coeffs(std::move(c)) {}

  static CoeffVector unit(int rank, int i) {
    CoeffVector v(std::vector<int>(static_cast<std::size_t>(rank), 0));
    v.coeffs[static_cast<std::size_t>(i)] = 1;
    return v;
  }

  int rank() const noexcept { return static_cast<int>(coeffs.size()); }
  int operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
  int sum() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

  bool nonnegative() const {
    for (int c : coeffs)
      if (c < 0) return false;
    return true;
  }
  bool nonpositive() const {
    for (int c : coeffs)
      if (c > 0) return false;
    return true;
  }

  CoeffVector operator-() const {
    CoeffVector out(*this);
    for (int& c : out.coeffs) c = -c;
    return out;
  }

  auto operator<=>(const CoeffVector&) const = default;
};

struct RootTag {};
struct CorootTag {};

/// Expansion in the simple roots.
using Root = CoeffVector<RootTag>;
/// Expansion in the simple coroots.
using Coroot = CoeffVector<CorootTag>;

/// Sum of simple-coroot coefficients.
int height(const Coroot& c);

/// A point of the ambient Euclidean space used for a type's root coordinates.
struct EuclideanVector {
  std::vector<Rational> coords;

  int dim() const noexcept { return static_cast<int>(coords.size()); }
  Rational dot(const EuclideanVector& other) const;

  EuclideanVector& operator+=(const EuclideanVector& other);
  friend EuclideanVector operator*(int k, const EuclideanVector& v);

  bool operator==(const EuclideanVector&) const = default;
};

/// The finite root system of a Cartan type, generated as the orbit of the
/// simple roots. Immutable after construction.
class RootSystem {
public:
  /// Throws InvalidRank for invalid labels.
  static RootSystem build(TypeLabel label);

  const CartanDatum& datum() const noexcept { return datum_; }
  TypeLabel label() const noexcept { return datum_.label; }
  int rank() const noexcept { return datum_.label.rank; }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Root>& positives() const noexcept { return positives_; }
  /// Coefficients of 2*rho in the simple roots.
  const Root& two_rho() const noexcept { return two_rho_; }

  Root simple(int i) const { return Root::unit(rank(), i - 1); }

  bool is_positive_root(const Root& a) const { return index_.contains(a); }
  bool is_root(const Root& a) const { return is_positive_root(a) || is_positive_root(-a); }
  /// Position in positives(), or nullopt.
  std::optional<std::size_t> index_of(const Root& a) const;

  /// The W-invariant form; 2 inner(a_j, a_i) / inner(a_i, a_i) = cartan(j, i).
  Rational inner(const Root& a, const Root& b) const;

  /// <c, b> for a coroot c and root b; integral.
  int pairing(const Coroot& c, const Root& b) const;

  /// Throws NotARoot unless a is in the root system.
  Coroot coroot(const Root& a) const;

  /// Linear extension of the per-type embedding of the simple roots.
  /// Throws NotARoot.
  EuclideanVector euclidean(const Root& a) const;
  /// The same map on arbitrary coefficient vectors.
  EuclideanVector euclidean_unchecked(const Root& a) const;

  /// The positive root whose euclidean image is v, if any.
  std::optional<Root> from_euclidean(const EuclideanVector& v) const;

  const Root& highest_root() const { return positives_.back(); }

private:
  CartanDatum datum_;
  std::vector<Root> positives_;
  std::map<Root, std::size_t> index_;
  Root two_rho_;
  std::vector<EuclideanVector> simple_euclid_;
};

/// "c1,...,cn".
std::string render_root(const Root& a);
/// Parses "c1,...,cn" of the given rank. Throws Parse.
Root parse_root(std::string_view text, int rank);

/// "(1/2,-1/2,...)".
std::string render_euclidean(const EuclideanVector& v);

/// Symbolic form in the style of the classical plates, e.g. "e1-e3",
/// "2e4", "1/2(e1-e2-e3-e4)". `letter` is the basis symbol.
std::string render_euclidean_symbolic(const EuclideanVector& v, std::string_view letter);

}  // namespace weylwords
