#include "weylwords/verify.hpp"

#include "weylwords/error.hpp"

namespace weylwords {

std::string_view to_string(ReasonCode code) noexcept {
  switch (code) {
    case ReasonCode::NotPalindrome: return "NOT_PALINDROME";
    case ReasonCode::NotReduced: return "NOT_REDUCED";
    case ReasonCode::WrongElement: return "WRONG_ELEMENT";
  }
  return "UNKNOWN";
}

std::optional<ReasonCode> parse_reason(std::string_view text) noexcept {
  for (auto c : {ReasonCode::NotPalindrome, ReasonCode::NotReduced, ReasonCode::WrongElement})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::vector<ReasonCode> check_entry(const RootSystem& sys, const Root& a, const Word& w) {
  if (!sys.is_positive_root(a)) throw Error(ErrorCode::NotARoot, render_root(a));
  std::vector<ReasonCode> out;
  if (!is_palindrome(w)) out.push_back(ReasonCode::NotPalindrome);
  try {
    const WeylMatrix target = reflection_matrix(sys, a);
    if (static_cast<int>(w.size()) != length(sys, target)) out.push_back(ReasonCode::NotReduced);
    if (matrix(sys, w) != target) out.push_back(ReasonCode::WrongElement);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidGenerator) throw;
    out.push_back(ReasonCode::WrongElement);
  }
  return out;
}

bool verify_entry(const RootSystem& sys, const Root& a, const Word& w) {
  return check_entry(sys, a, w).empty();
}

namespace {

std::vector<Failure> failures_for(const RootSystem& sys, const Root& a, const Word* word,
                                  const Word* conj) {
  std::vector<Failure> out;
  if (word == nullptr) {
    out.push_back({a, ReasonCode::WrongElement, "no word for this root"});
  } else {
    for (auto r : check_entry(sys, a, *word)) out.push_back({a, r, render_word(*word)});
  }
  if (conj == nullptr) {
    out.push_back({a, ReasonCode::WrongElement, "conjugation_generate: no word for this root"});
  } else {
    for (auto r : check_entry(sys, a, *conj))
      out.push_back({a, r, "conjugation_generate: " + render_word(*conj)});
  }
  return out;
}

VerificationReport run_checks(const RootSystem& sys, const std::map<Root, Word>& words,
                              Execution exec) {
  const std::map<Root, Word> generated = conjugation_generate(sys);
  const auto& pos = sys.positives();
  const long n = static_cast<long>(pos.size());

  std::vector<std::vector<Failure>> per_root(pos.size());
  auto kernel = [&](long k) {
    const Root& a = pos[static_cast<std::size_t>(k)];
    auto w = words.find(a);
    auto g = generated.find(a);
    per_root[static_cast<std::size_t>(k)] =
        failures_for(sys, a, w == words.end() ? nullptr : &w->second,
                     g == generated.end() ? nullptr : &g->second);
  };

  if (exec == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long k = 0; k < n; ++k) kernel(k);
  } else {
    for (long k = 0; k < n; ++k) kernel(k);
  }

  VerificationReport report;
  report.label = sys.label();
  report.total = static_cast<int>(pos.size());
  for (auto& f : per_root) {
    if (f.empty()) ++report.checked;
    for (auto& x : f) report.failures.push_back(std::move(x));
  }
  for (const auto& [root, word] : words)
    if (!sys.is_positive_root(root))
      report.failures.push_back({root, ReasonCode::WrongElement, "not a positive root"});
  return report;
}

}  // namespace

VerificationReport verify_table(const RootSystem& sys, const std::map<Root, Word>& words,
                                Execution exec) {
  return run_checks(sys, words, exec);
}

VerificationReport verify_all(const RootSystem& sys, Execution exec) {
  std::map<Root, Word> words;
  // A duplicated root leaves another one without a word; run_checks reports it.
  for (auto& e : reflection_table(sys)) words.emplace(std::move(e.root), std::move(e.word));
  return run_checks(sys, words, exec);
}

VerificationReport verify_all(TypeLabel label, Execution exec) {
  return verify_all(RootSystem::build(label), exec);
}

bool check_simply_laced_lengths(TypeLabel label) {
  if (!label.simply_laced()) throw Error(ErrorCode::NotSimplyLaced, label.str());
  const RootSystem sys = RootSystem::build(label);
  for (const auto& a : sys.positives()) {
    const int len = reflection_length(sys, a);
    const Coroot av = sys.coroot(a);
    if (len != 2 * height(av) - 1) return false;
    if (len != sys.pairing(av, sys.two_rho()) - 1) return false;
    // The same pairing through the invariant form.
    if (Rational(len) != 2 * sys.inner(a, sys.two_rho()) / sys.inner(a, a) - 1) return false;
  }
  return true;
}

namespace {

EuclideanVector unit_combo(int dim, std::initializer_list<std::pair<int, int>> terms) {
  EuclideanVector v{std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0))};
  for (auto [k, c] : terms) v.coords[static_cast<std::size_t>(k - 1)] += c;
  return v;
}

void insert_root(const RootSystem& sys, const EuclideanVector& v, std::set<Root>& out) {
  auto r = sys.from_euclidean(v);
  if (!r) throw Error(ErrorCode::NotARoot, render_euclidean(v));
  out.insert(*r);
}

void require_bc(const RootSystem& sys) {
  const Family f = sys.label().family;
  if (f != Family::B && f != Family::C) {
    throw Error(ErrorCode::IndexOutOfRange, "inversion characterisation needs type B or C");
  }
}

// 2e_k in type C, e_k in type B.
EuclideanVector diag_root(const RootSystem& sys, int k) {
  const int c = sys.label().family == Family::C ? 2 : 1;
  return unit_combo(sys.rank(), {{k, c}});
}

}  // namespace

std::set<Root> predicted_inversion_set_diag(const RootSystem& sys, int i) {
  require_bc(sys);
  const int n = sys.rank();
  if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "i out of range");
  std::set<Root> out;
  for (int j = i + 1; j <= n; ++j) {
    insert_root(sys, unit_combo(n, {{i, 1}, {j, -1}}), out);
    insert_root(sys, unit_combo(n, {{i, 1}, {j, 1}}), out);
  }
  insert_root(sys, diag_root(sys, i), out);
  return out;
}

std::set<Root> predicted_inversion_set_plus(const RootSystem& sys, int i, int j) {
  require_bc(sys);
  const int n = sys.rank();
  if (i < 1 || i >= j || j > n) throw Error(ErrorCode::IndexOutOfRange, "need 1 <= i < j <= n");
  std::set<Root> out;
  // e_k - e_l with i = k < l != j, or j = k < l
  for (int l = i + 1; l <= n; ++l)
    if (l != j) insert_root(sys, unit_combo(n, {{i, 1}, {l, -1}}), out);
  for (int l = j + 1; l <= n; ++l) insert_root(sys, unit_combo(n, {{j, 1}, {l, -1}}), out);
  // e_i + e_l with j <= l, and e_k + e_j with i < k != j
  for (int l = j; l <= n; ++l) insert_root(sys, unit_combo(n, {{i, 1}, {l, 1}}), out);
  for (int k = i + 1; k <= n; ++k)
    if (k != j) insert_root(sys, unit_combo(n, {{k, 1}, {j, 1}}), out);
  insert_root(sys, diag_root(sys, i), out);
  insert_root(sys, diag_root(sys, j), out);
  return out;
}

bool check_inversion_characterizations(TypeLabel label) {
  if (label.family != Family::B && label.family != Family::C) return false;
  const RootSystem sys = RootSystem::build(label);
  const int n = sys.rank();
  for (int i = 1; i <= n; ++i) {
    const auto predicted = predicted_inversion_set_diag(sys, i);
    if (static_cast<int>(predicted.size()) != 2 * (n - i) + 1) return false;
    if (inversion_set(sys, word_BC_diag(i, n)) != predicted) return false;
    for (int j = i + 1; j <= n; ++j) {
      const auto plus = predicted_inversion_set_plus(sys, i, j);
      if (static_cast<int>(plus.size()) != 4 * n - 2 * (i + j) + 1) return false;
      if (inversion_set(sys, word_BC_plus(i, j, n)) != plus) return false;
    }
  }
  return true;
}

}  // namespace weylwords
