#include "weylwords/roots.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "weylwords/error.hpp"

namespace weylwords {

int height(const Coroot& c) { return c.sum(); }

Rational EuclideanVector::dot(const EuclideanVector& other) const {
  Rational s(0);
  for (std::size_t k = 0; k < coords.size(); ++k) s += coords[k] * other.coords[k];
  return s;
}

EuclideanVector& EuclideanVector::operator+=(const EuclideanVector& other) {
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += other.coords[k];
  return *this;
}

EuclideanVector operator*(int k, const EuclideanVector& v) {
  EuclideanVector out(v);
  for (auto& x : out.coords) x *= k;
  return out;
}

namespace {

EuclideanVector basis_vector(int dim, std::initializer_list<std::pair<int, Rational>> terms) {
  EuclideanVector v{std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0))};
  for (auto [k, c] : terms) v.coords[static_cast<std::size_t>(k - 1)] += c;
  return v;
}

// Simple roots of the type in its ambient space, indexed 1..n.
std::vector<EuclideanVector> simple_embedding(TypeLabel label) {
  const int n = label.rank;
  std::vector<EuclideanVector> out;
  const Rational one(1), half(1, 2);
  switch (label.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) out.push_back(basis_vector(n + 1, {{i, one}, {i + 1, -one}}));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 1; i < n; ++i) out.push_back(basis_vector(n, {{i, one}, {i + 1, -one}}));
      if (label.family == Family::B) out.push_back(basis_vector(n, {{n, one}}));
      if (label.family == Family::C) out.push_back(basis_vector(n, {{n, Rational(2)}}));
      if (label.family == Family::D) out.push_back(basis_vector(n, {{n - 1, one}, {n, one}}));
      break;
    case Family::G:
      out.push_back(basis_vector(3, {{1, one}, {2, -one}}));
      out.push_back(basis_vector(3, {{1, Rational(-2)}, {2, one}, {3, one}}));
      break;
    case Family::F:
      out.push_back(basis_vector(4, {{2, one}, {3, -one}}));
      out.push_back(basis_vector(4, {{3, one}, {4, -one}}));
      out.push_back(basis_vector(4, {{4, one}}));
      out.push_back(basis_vector(4, {{1, half}, {2, -half}, {3, -half}, {4, -half}}));
      break;
    case Family::E: {
      // E6 and E7 live in the subspaces x6=x7=-x8 and x7=-x8 of R^8.
      EuclideanVector a1{std::vector<Rational>(8, -half)};
      a1.coords[0] = half;
      a1.coords[7] = half;
      out.push_back(a1);
      out.push_back(basis_vector(8, {{1, one}, {2, one}}));
      for (int i = 3; i <= n; ++i) out.push_back(basis_vector(8, {{i - 1, one}, {i - 2, -one}}));
      break;
    }
  }
  return out;
}

// s_i(b) = b - <b, a_i^vee> a_i, zero-based i.
void reflect_in_place(const CartanDatum& d, int i, std::vector<int>& b) {
  int p = 0;
  for (int j = 0; j < d.rank(); ++j) p += b[static_cast<std::size_t>(j)] * d.cartan(j, i);
  b[static_cast<std::size_t>(i)] -= p;
}

}  // namespace

RootSystem RootSystem::build(TypeLabel label) {
  RootSystem sys;
  sys.datum_ = weylwords::datum(label);
  const int n = sys.rank();

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    queue.push_back(Root::unit(n, i));
    seen.insert(queue.back());
  }
  while (!queue.empty()) {
    Root a = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root b = a;
      reflect_in_place(sys.datum_, i, b.coeffs);
      if (!b.nonnegative()) continue;  // only a_i itself goes negative
      if (seen.insert(b).second) queue.push_back(std::move(b));
    }
  }

  sys.positives_.assign(seen.begin(), seen.end());
  std::stable_sort(sys.positives_.begin(), sys.positives_.end(),
                   [](const Root& x, const Root& y) {
                     const int hx = x.sum(), hy = y.sum();
                     return hx != hy ? hx < hy : x.coeffs < y.coeffs;
                   });
  for (std::size_t k = 0; k < sys.positives_.size(); ++k) sys.index_.emplace(sys.positives_[k], k);

  sys.two_rho_ = Root(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& a : sys.positives_)
    for (int i = 0; i < n; ++i) sys.two_rho_.coeffs[static_cast<std::size_t>(i)] += a[i];

  sys.simple_euclid_ = simple_embedding(sys.datum_.label);
  return sys;
}

std::optional<std::size_t> RootSystem::index_of(const Root& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  const int n = rank();
  Rational s(0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      s += Rational(a[i] * b[j] * datum_.cartan(i, j)) * datum_.sym[static_cast<std::size_t>(j)];
    }
  }
  return s;
}

int RootSystem::pairing(const Coroot& c, const Root& b) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += c[i] * b[j] * datum_.cartan(j, i);
  return s;
}

Coroot RootSystem::coroot(const Root& a) const {
  if (!is_root(a)) throw Error(ErrorCode::NotARoot, render_root(a));
  const Rational norm = inner(a, a);
  Coroot c(std::vector<int>(static_cast<std::size_t>(rank()), 0));
  for (int i = 0; i < rank(); ++i) {
    // inner(a_i, a_i) = 2 d_i
    const Rational q = Rational(a[i]) * 2 * datum_.sym[static_cast<std::size_t>(i)] / norm;
    c.coeffs[static_cast<std::size_t>(i)] = static_cast<int>(q.numerator());
  }
  return c;
}

EuclideanVector RootSystem::euclidean_unchecked(const Root& a) const {
  EuclideanVector v{std::vector<Rational>(simple_euclid_.front().coords.size(), Rational(0))};
  for (int i = 0; i < rank(); ++i)
    if (a[i] != 0) v += a[i] * simple_euclid_[static_cast<std::size_t>(i)];
  return v;
}

EuclideanVector RootSystem::euclidean(const Root& a) const {
  if (!is_root(a)) throw Error(ErrorCode::NotARoot, render_root(a));
  return euclidean_unchecked(a);
}

std::optional<Root> RootSystem::from_euclidean(const EuclideanVector& v) const {
  for (const auto& a : positives_)
    if (euclidean_unchecked(a) == v) return a;
  return std::nullopt;
}

std::string render_root(const Root& a) {
  std::string out;
  for (int i = 0; i < a.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

Root parse_root(std::string_view text, int rank) {
  Root a;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::Parse, "bad root coefficient list '" + std::string(text) + "'");
    }
    a.coeffs.push_back(value);
    pos = comma + 1;
  }
  if (a.rank() != rank) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(rank) + " coefficients, got " +
                                      std::to_string(a.rank()));
  }
  return a;
}

std::string render_euclidean(const EuclideanVector& v) {
  std::string out = "(";
  for (int k = 0; k < v.dim(); ++k) {
    if (k) out += ',';
    out += to_string(v.coords[static_cast<std::size_t>(k)]);
  }
  return out + ")";
}

std::string render_euclidean_symbolic(const EuclideanVector& v, std::string_view letter) {
  const Rational half(1, 2);
  bool halves = false;
  for (const auto& x : v.coords)
    if (x.denominator() == 2) halves = true;

  std::string body;
  for (int k = 0; k < v.dim(); ++k) {
    Rational c = v.coords[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (halves) c /= half;
    if (c > 0 && !body.empty()) body += '+';
    if (c < 0) body += '-';
    const Rational mag = c < 0 ? -c : c;
    if (mag != 1) body += to_string(mag);
    body += letter;
    body += std::to_string(k + 1);
  }
  if (body.empty()) body = "0";
  return halves ? "1/2(" + body + ")" : body;
}

}  // namespace weylwords
