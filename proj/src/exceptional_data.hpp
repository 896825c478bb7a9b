#pragma once

#include <array>
#include <string_view>

namespace weylwords::detail {

// One row of an embedded exceptional table: the simple-root expansion and
// the word letters in compact form.
struct TableRow {
  std::array<int, 8> coeffs;
  std::string_view letters;
};

extern const std::array<TableRow, 6> kG2;
extern const std::array<TableRow, 24> kF4;
extern const std::array<TableRow, 36> kE6;
extern const std::array<TableRow, 27> kE7;
extern const std::array<TableRow, 13> kE8TypeAD;
extern const std::array<TableRow, 44> kE8Conjugators;

// s_theta for theta = alpha_1 + ... + alpha_6, the shortest reflection distinct to E6.
inline constexpr std::string_view kThetaLetters = "16524342561";

}  // namespace weylwords::detail
