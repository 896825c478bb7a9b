#include "weylwords/formulas.hpp"

#include <algorithm>
#include <deque>

#include "exceptional_data.hpp"
#include "weylwords/error.hpp"

namespace weylwords {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::IndexOutOfRange, what);
}

// s_from s_{from+1} ... s_to; empty when from > to.
Word ascending(int from, int to) {
  Word w;
  for (int k = from; k <= to; ++k) w.letters.push_back(k);
  return w;
}

// u . core . u^{-1}
Word conjugate(const Word& u, const Word& core) { return u + core + u.reversed(); }

Word letters_of(std::string_view compact) {
  Word w;
  for (char ch : compact) w.letters.push_back(ch - '0');
  return w;
}

}  // namespace

Word word_A(int i, int j, int n) {
  require(1 <= i && i <= j && j <= n, "word_A needs 1 <= i <= j <= n");
  return conjugate(ascending(i, j - 1), Word{j});
}

Word word_BC_minus(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "word_BC_minus needs 1 <= i < j <= n");
  return conjugate(ascending(i, j - 2), Word{j - 1});
}

Word word_BC_diag(int i, int n) {
  require(1 <= i && i <= n, "word_BC_diag needs 1 <= i <= n");
  return conjugate(ascending(i, n - 1), Word{n});
}

Word word_BC_plus(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "word_BC_plus needs 1 <= i < j <= n");
  return conjugate(young_coset_word(i, j, n, CosetFlavor::C), young_core_word(n, CosetFlavor::C));
}

Word word_D_minus(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "word_D_minus needs 1 <= i < j <= n");
  return conjugate(ascending(i, j - 2), Word{j - 1});
}

Word word_D_mixed(int i, int n) {
  require(1 <= i && i < n, "word_D_mixed needs 1 <= i < n");
  return conjugate(ascending(i, n - 2), Word{n});
}

Word word_D_plus(int i, int j, int n) {
  require(1 <= i && i < j && j < n, "word_D_plus needs 1 <= i < j < n");
  return conjugate(young_coset_word(i, j, n, CosetFlavor::D), young_core_word(n, CosetFlavor::D));
}

Word young_coset_word(int i, int j, int n, CosetFlavor flavor) {
  if (flavor == CosetFlavor::C) {
    require(1 <= i && i < j && j <= n, "C coset word needs 1 <= i < j <= n");
    return ascending(j, n - 1) + ascending(i, n - 2);
  }
  require(1 <= i && i < j && j < n, "D coset word needs 1 <= i < j < n");
  return ascending(j, n - 2) + ascending(i, n - 3);
}

Word young_core_word(int n, CosetFlavor flavor) {
  if (flavor == CosetFlavor::C) return Word{n, n - 1, n};
  return Word{n - 1, n - 2, n, n - 2, n - 1};
}

Word theta_word() { return letters_of(detail::kThetaLetters); }

std::string root_label(const RootSystem& sys, const Root& a) {
  const EuclideanVector v = sys.euclidean(a);
  const TypeLabel t = sys.label();
  if (t.family == Family::G) return render_euclidean_symbolic(v, "ε");
  if (t.family != Family::E) return render_euclidean_symbolic(v, "e");

  if (v.coords[0].denominator() == 1) return render_euclidean_symbolic(v, "ε");
  // Half-integral: record the sign bits of the free coordinates.
  const int free = t.rank == 6 ? 5 : t.rank == 7 ? 6 : 7;
  std::string bits;
  for (int k = 0; k < free; ++k) bits += v.coords[static_cast<std::size_t>(k)] < 0 ? '1' : '0';
  return bits;
}

namespace {

ReflectionEntry make_entry(const RootSystem& sys, Root root, Word word, Word conjugator = {}) {
  ReflectionEntry e;
  e.coroot = sys.coroot(root);
  e.euclid = sys.euclidean(root);
  e.label = root_label(sys, root);
  e.length = static_cast<int>(word.size());
  e.root = std::move(root);
  e.word = std::move(word);
  e.conjugator = std::move(conjugator);
  return e;
}

template <std::size_t N>
void append_rows(const RootSystem& sys, const std::array<detail::TableRow, N>& rows,
                 std::vector<ReflectionEntry>& out) {
  const auto n = static_cast<std::size_t>(sys.rank());
  for (const auto& row : rows) {
    Root r(std::vector<int>(row.coeffs.begin(), row.coeffs.begin() + static_cast<long>(n)));
    out.push_back(make_entry(sys, std::move(r), letters_of(row.letters)));
  }
}

}  // namespace

std::vector<ReflectionEntry> exceptional_table(const RootSystem& sys) {
  const TypeLabel t = sys.label();
  std::vector<ReflectionEntry> out;
  switch (t.family) {
    case Family::G: append_rows(sys, detail::kG2, out); break;
    case Family::F: append_rows(sys, detail::kF4, out); break;
    case Family::E:
      append_rows(sys, detail::kE6, out);
      if (t.rank >= 7) append_rows(sys, detail::kE7, out);
      if (t.rank == 8) {
        append_rows(sys, detail::kE8TypeAD, out);
        const Word theta = theta_word();
        for (const auto& row : detail::kE8Conjugators) {
          Root r(std::vector<int>(row.coeffs.begin(), row.coeffs.end()));
          Word w = letters_of(row.letters);
          out.push_back(make_entry(sys, std::move(r), conjugate(w, theta), w));
        }
      }
      break;
    default:
      throw Error(ErrorCode::NotExceptional, t.str());
  }
  return out;
}

std::vector<ReflectionEntry> exceptional_table(TypeLabel label) {
  return exceptional_table(RootSystem::build(label));
}

namespace {

// Positions (1-based) and values of the nonzero coordinates of a classical root.
struct Support {
  int p = 0, q = 0;
  Rational vp, vq;
  int count = 0;
};

Support support_of(const EuclideanVector& v) {
  Support s;
  for (int k = 0; k < v.dim(); ++k) {
    const Rational x = v.coords[static_cast<std::size_t>(k)];
    if (x == 0) continue;
    if (s.count == 0) {
      s.p = k + 1;
      s.vp = x;
    } else {
      s.q = k + 1;
      s.vq = x;
    }
    ++s.count;
  }
  return s;
}

Word classical_word(const RootSystem& sys, const Root& a) {
  const int n = sys.rank();
  const Support s = support_of(sys.euclidean(a));
  const Family f = sys.label().family;

  if (f == Family::A) return word_A(s.p, s.q - 1, n);  // e_p - e_q = alpha_p + ... + alpha_{q-1}
  if (s.count == 1) return word_BC_diag(s.p, n);
  if (s.vq < 0) return f == Family::D ? word_D_minus(s.p, s.q, n) : word_BC_minus(s.p, s.q, n);
  if (f != Family::D) return word_BC_plus(s.p, s.q, n);
  return s.q == n ? word_D_mixed(s.p, n) : word_D_plus(s.p, s.q, n);
}

}  // namespace

Word reflection_word(const RootSystem& sys, const Root& a) {
  if (!sys.is_positive_root(a)) throw Error(ErrorCode::NotARoot, render_root(a));
  if (!sys.label().exceptional()) return classical_word(sys, a);
  for (auto& e : exceptional_table(sys))
    if (e.root == a) return std::move(e.word);
  throw Error(ErrorCode::NotARoot, render_root(a) + " missing from the " + sys.label().str() + " table");
}

std::vector<ReflectionEntry> reflection_table(const RootSystem& sys) {
  if (sys.label().exceptional()) return exceptional_table(sys);
  std::vector<ReflectionEntry> out;
  out.reserve(sys.positives().size());
  for (const auto& a : sys.positives()) out.push_back(make_entry(sys, a, classical_word(sys, a)));
  return out;
}

std::map<Root, Word> conjugation_generate(const RootSystem& sys) {
  std::map<Root, Word> found;
  std::deque<Root> queue;
  for (int i = 1; i <= sys.rank(); ++i) {
    found.emplace(sys.simple(i), Word{i});
    queue.push_back(sys.simple(i));
  }
  while (!queue.empty()) {
    const Root beta = queue.front();
    queue.pop_front();
    const Word u = found.at(beta);
    const int target = static_cast<int>(u.size()) + 2;
    for (int i = 1; i <= sys.rank(); ++i) {
      Root gamma = apply_simple(sys, i, beta);
      if (!gamma.nonnegative() || found.contains(gamma)) continue;
      Word candidate = Word{i} + u + Word{i};
      if (length(sys, candidate) != target) continue;
      found.emplace(gamma, std::move(candidate));
      queue.push_back(std::move(gamma));
    }
  }
  return found;
}

std::vector<Correction> bourbaki_corrections() {
  return {
      {"C_n", "item (II), expansion of 2e_i",
       "2e_i = α_i + ··· + α_{n-1} + α_n",
       "2e_i = 2α_i + ··· + 2α_{n-1} + α_n",
       "omits the 2s on the right-hand side"},
      {"D_n", "item (II), expansion of e_i - e_j",
       "e_i - e_j = α_{i+1} + ··· + α_{j-1}",
       "e_i - e_j = α_i + α_{i+1} + ··· + α_{j-1}",
       "omits α_i from this expansion"},
      {"G_2", "item (II), list of positive roots",
       "Φ+ = {α_1, α_1+α_2, 2α_1+α_2, 3α_1+α_2, 3α_1+2α_2}",
       "Φ+ = {α_1, α_2, α_1+α_2, 2α_1+α_2, 3α_1+α_2, 3α_1+2α_2}",
       "omits α_2 from Φ+"},
      {"E_8", "item (II), positive roots (c_1 ... c_8)",
       "(12232211) listed twice",
       "(12232111)",
       "duplicate root replaced"},
      {"E_8", "item (II), positive roots (c_1 ... c_8)",
       "(11233321)",
       "(11233221)",
       "erroneous root replaced"},
  };
}

}  // namespace weylwords
