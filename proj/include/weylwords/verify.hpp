#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "weylwords/formulas.hpp"
#include "weylwords/roots.hpp"
#include "weylwords/weyl.hpp"

namespace weylwords {

/// Which of the three claims about a reflection word failed.
enum class ReasonCode { NotPalindrome, NotReduced, WrongElement };

std::string_view to_string(ReasonCode code) noexcept;  // "NOT_PALINDROME", ...
std::optional<ReasonCode> parse_reason(std::string_view text) noexcept;

struct Failure {
  Root root;
  ReasonCode reason;
  std::string detail;
};

struct VerificationReport {
  TypeLabel label;
  int total = 0;
  /// Roots whose words passed every check.
  int checked = 0;
  std::vector<Failure> failures;

  bool ok() const noexcept { return failures.empty() && checked == total; }
};

enum class Execution { Serial, Parallel };

/// All failed checks for the pair (a, w), in the order palindrome,
/// length, element. Throws NotARoot unless a is a positive root.
std::vector<ReasonCode> check_entry(const RootSystem& sys, const Root& a, const Word& w);

/// True iff w is a palindrome with |w| = l(s_a) and w evaluates to s_a.
bool verify_entry(const RootSystem& sys, const Root& a, const Word& w);

/// Checks reflection_word on every positive root and cross-checks the
/// words produced by conjugation_generate. Failures are reported, not
/// thrown. Serial and Parallel produce identical reports.
VerificationReport verify_all(const RootSystem& sys, Execution exec = Execution::Parallel);
VerificationReport verify_all(TypeLabel label, Execution exec = Execution::Parallel);

/// Same checks, for an externally supplied table (e.g. a re-imported export).
VerificationReport verify_table(const RootSystem& sys, const std::map<Root, Word>& words,
                                Execution exec = Execution::Parallel);

inline constexpr unsigned long long kDefaultMaxGroupOrder = 50000;

/// True lengths of all reflections by breadth-first enumeration of W
/// (right multiplication from the identity). Throws GroupTooLarge when
/// |W| exceeds max_order.
std::map<Root, int> small_group_oracle(const RootSystem& sys,
                                       unsigned long long max_order = kDefaultMaxGroupOrder);

/// l(s_a) = 2 ht(a^vee) - 1 = <2rho, a^vee> - 1 for every positive root.
/// Throws NotSimplyLaced outside types A, D, E.
bool check_simply_laced_lengths(TypeLabel label);

/// The explicit description of N(s_a) for a = 2e_i (e_i in type B) and
/// a = e_i + e_j, as a set of positive roots. Throws IndexOutOfRange.
std::set<Root> predicted_inversion_set_diag(const RootSystem& sys, int i);
std::set<Root> predicted_inversion_set_plus(const RootSystem& sys, int i, int j);

/// Compares the predicted sets with inversion_set of the reflection words
/// for all i, j. Returns false for families other than B and C.
bool check_inversion_characterizations(TypeLabel label);

}  // namespace weylwords
