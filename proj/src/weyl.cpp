#include "weylwords/weyl.hpp"

#include <algorithm>
#include <charconv>

#include "weylwords/error.hpp"

namespace weylwords {

Word Word::reversed() const { return Word(std::vector<int>(letters.rbegin(), letters.rend())); }

Word& Word::operator+=(const Word& other) {
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  return *this;
}

void check_word(const Word& w, int rank) {
  for (int l : w.letters)
    if (l < 1 || l > rank) {
      throw Error(ErrorCode::InvalidGenerator,
                  "s" + std::to_string(l) + " in rank " + std::to_string(rank));
    }
}

bool is_palindrome(const Word& w) {
  return std::equal(w.letters.begin(), w.letters.begin() + static_cast<long>(w.size() / 2),
                    w.letters.rbegin());
}

std::string render_word(const Word& w) {
  const bool compact =
      !w.empty() && std::all_of(w.letters.begin(), w.letters.end(),
                                [](int l) { return l >= 1 && l <= 9; });
  std::string out = "s";
  if (compact) {
    for (int l : w.letters) out += static_cast<char>('0' + l);
    return out;
  }
  out += '[';
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w.letters[k]);
  }
  return out + ']';
}

Word parse_word(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::Parse, "bad word '" + std::string(text) + "'"); };
  std::string_view t = text;
  if (!t.empty() && (t.front() == 's' || t.front() == 'S')) t.remove_prefix(1);
  if (!t.empty() && t.front() == '_') t.remove_prefix(1);
  Word w;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw fail();
    t = t.substr(1, t.size() - 2);
    if (t.empty()) return w;
    std::size_t pos = 0;
    while (pos <= t.size()) {
      auto comma = t.find(',', pos);
      if (comma == std::string_view::npos) comma = t.size();
      auto tok = t.substr(pos, comma - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) throw fail();
      w.letters.push_back(v);
      pos = comma + 1;
    }
    return w;
  }
  // Compact form: every digit is a letter; s, _, braces, spaces, '.' and the
  // middle dot are separators, so "s_2s_3·s_{434}" parses.
  for (std::size_t k = 0; k < t.size(); ++k) {
    const char ch = t[k];
    if (ch >= '1' && ch <= '9') {
      w.letters.push_back(ch - '0');
    } else if (t.substr(k, 2) == "\xC2\xB7") {
      ++k;
    } else if (std::string_view("sS_{}. ").find(ch) == std::string_view::npos) {
      throw fail();
    }
  }
  return w;
}

Root WeylMatrix::apply(const Root& b) const {
  const int n = size();
  Root out(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int c = 0; c < n; ++c) s += m_(r, c) * b[c];
    out.coeffs[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

Root apply_simple(const RootSystem& sys, int i, const Root& b) {
  if (i < 1 || i > sys.rank()) {
    throw Error(ErrorCode::InvalidGenerator, "s" + std::to_string(i));
  }
  const auto& c = sys.datum().cartan;
  int p = 0;
  for (int j = 0; j < sys.rank(); ++j) p += b[j] * c(j, i - 1);
  Root out = b;
  out.coeffs[static_cast<std::size_t>(i - 1)] -= p;
  return out;
}

WeylMatrix simple_matrix(const RootSystem& sys, int i) {
  if (i < 1 || i > sys.rank()) {
    throw Error(ErrorCode::InvalidGenerator, "s" + std::to_string(i));
  }
  IntMatrix m = IntMatrix::identity(sys.rank());
  for (int j = 0; j < sys.rank(); ++j) m(i - 1, j) -= sys.datum().cartan(j, i - 1);
  return WeylMatrix(std::move(m));
}

WeylMatrix matrix(const RootSystem& sys, const Word& w) {
  check_word(w, sys.rank());
  const int n = sys.rank();
  const auto& cartan = sys.datum().cartan;
  // Right multiplication by s_i: column j gains -c_{ji} times column i.
  IntMatrix m = IntMatrix::identity(n);
  std::vector<int> col(static_cast<std::size_t>(n));
  for (int letter : w.letters) {
    const int i = letter - 1;
    for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = m(r, i);
    for (int j = 0; j < n; ++j) {
      const int cji = cartan(j, i);
      if (cji == 0) continue;
      for (int r = 0; r < n; ++r) m(r, j) -= cji * col[static_cast<std::size_t>(r)];
    }
  }
  return WeylMatrix(std::move(m));
}

std::set<Root> inversion_set(const RootSystem& sys, const WeylMatrix& m) {
  std::set<Root> out;
  for (const auto& a : sys.positives())
    if (m.apply(a).nonpositive()) out.insert(a);
  return out;
}

std::set<Root> inversion_set(const RootSystem& sys, const Word& w) {
  return inversion_set(sys, matrix(sys, w));
}

int length(const RootSystem& sys, const WeylMatrix& m) {
  int count = 0;
  for (const auto& a : sys.positives())
    if (m.apply(a).nonpositive()) ++count;
  return count;
}

int length(const RootSystem& sys, const Word& w) { return length(sys, matrix(sys, w)); }

bool is_reduced(const RootSystem& sys, const Word& w) {
  return length(sys, w) == static_cast<int>(w.size());
}

WeylMatrix reflection_matrix(const RootSystem& sys, const Root& a) {
  const Coroot av = sys.coroot(a);  // throws NotARoot
  const int n = sys.rank();
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    const int p = sys.pairing(av, sys.simple(j + 1));
    for (int r = 0; r < n; ++r) m(r, j) -= p * a[r];
  }
  return WeylMatrix(std::move(m));
}

int reflection_length(const RootSystem& sys, const Root& a) {
  if (!sys.is_positive_root(a)) throw Error(ErrorCode::NotARoot, render_root(a) + " is not positive");
  return length(sys, reflection_matrix(sys, a));
}

Word reduce(const RootSystem& sys, const Word& w) {
  check_word(w, sys.rank());
  std::vector<int> letters = w.letters;
  for (;;) {
    // Find the first letter j where the prefix u = s_{l_0}...s_{l_{j-1}}
    // sends alpha_{l_j} negative; the prefix itself is reduced.
    WeylMatrix u = WeylMatrix::identity(sys.rank());
    std::size_t bad = letters.size();
    for (std::size_t j = 0; j < letters.size(); ++j) {
      if (u.apply(sys.simple(letters[j])).nonpositive()) {
        bad = j;
        break;
      }
      u = u * simple_matrix(sys, letters[j]);
    }
    if (bad == letters.size()) return Word(std::move(letters));

    // Walk back: v_p = s_{l_{p+1}} ... s_{l_{j-1}}(alpha_{l_j}) equals alpha_{l_p}
    // for some p < j; deleting letters p and j preserves the element.
    Root v = sys.simple(letters[bad]);
    std::size_t p = bad;
    bool found = false;
    while (p-- > 0) {
      if (v == sys.simple(letters[p])) {
        found = true;
        break;
      }
      v = apply_simple(sys, letters[p], v);
    }
    if (!found) throw std::logic_error("exchange condition failed in reduce()");
    letters.erase(letters.begin() + static_cast<long>(bad));
    letters.erase(letters.begin() + static_cast<long>(p));
  }
}

}  // namespace weylwords
