#include "weylwords/cartan.hpp"

#include <cctype>
#include <charconv>
#include <utility>

#include "weylwords/error.hpp"

namespace weylwords {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotExceptional: return "NotExceptional";
    case ErrorCode::NotSimplyLaced: return "NotSimplyLaced";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::Parse: return "ParseError";
  }
  return "UnknownError";
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

bool valid_rank(Family family, int rank) noexcept {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

TypeLabel TypeLabel::make(Family family, int rank) {
  if (!valid_rank(family, rank)) {
    throw Error(ErrorCode::InvalidRank,
                std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                    " is not a finite crystallographic type");
  }
  return TypeLabel{family, rank};
}

TypeLabel TypeLabel::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorCode::Parse, "type label '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') {
    throw Error(ErrorCode::Parse, "unknown family in '" + std::string(text) + "'");
  }
  int rank = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc{} || ptr != last) {
    throw Error(ErrorCode::Parse, "bad rank in '" + std::string(text) + "'");
  }
  return make(static_cast<Family>(f), rank);
}

std::string TypeLabel::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  const int n = lhs.size();
  IntMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int a = lhs(r, k);
      if (a == 0) continue;
      for (int c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

namespace {

// Simple edges of the Dynkin diagram, 1-based, Bourbaki numbering.
std::vector<std::pair<int, int>> dynkin_edges(TypeLabel label) {
  std::vector<std::pair<int, int>> edges;
  const int n = label.rank;
  switch (label.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

}  // namespace

CartanDatum datum(TypeLabel label) {
  label = TypeLabel::make(label.family, label.rank);
  const int n = label.rank;

  CartanDatum d{label, IntMatrix(n), IntMatrix(n), std::vector<Rational>(n, Rational(1))};
  for (int i = 0; i < n; ++i) d.cartan(i, i) = 2;
  for (auto [i, j] : dynkin_edges(label)) {
    d.cartan(i - 1, j - 1) = -1;
    d.cartan(j - 1, i - 1) = -1;
  }

  // Multiple bonds. cartan(long, short) carries the multiplicity.
  switch (label.family) {
    case Family::B:  // alpha_n short
      d.cartan(n - 2, n - 1) = -2;
      d.sym[n - 1] = Rational(1, 2);
      break;
    case Family::C:  // alpha_n long
      d.cartan(n - 1, n - 2) = -2;
      for (int i = 0; i < n - 1; ++i) d.sym[i] = Rational(1, 2);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      d.cartan(1, 2) = -2;
      d.sym[2] = d.sym[3] = Rational(1, 2);
      break;
    case Family::G:  // alpha_1 short
      d.cartan(1, 0) = -3;
      d.sym[0] = Rational(1, 3);
      break;
    default:
      break;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        d.coxeter(i, j) = 1;
        continue;
      }
      switch (d.cartan(i, j) * d.cartan(j, i)) {
        case 0: d.coxeter(i, j) = 2; break;
        case 1: d.coxeter(i, j) = 3; break;
        case 2: d.coxeter(i, j) = 4; break;
        case 3: d.coxeter(i, j) = 6; break;
      }
    }
  return d;
}

unsigned long long weyl_group_order(TypeLabel label) {
  auto factorial = [](int k) -> unsigned long long {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) {
      if (f > ~0ULL / static_cast<unsigned long long>(i)) return 0;
      f *= static_cast<unsigned long long>(i);
    }
    return f;
  };
  const int n = label.rank;
  switch (label.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: {
      const auto f = factorial(n);
      if (f == 0 || n >= 64 || f > (~0ULL >> n)) return 0;
      return f << n;
    }
    case Family::D: {
      const auto f = factorial(n);
      if (f == 0 || n >= 65 || f > (~0ULL >> (n - 1))) return 0;
      return f << (n - 1);
    }
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<TypeLabel> standard_labels() {
  std::vector<TypeLabel> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

}  // namespace weylwords
