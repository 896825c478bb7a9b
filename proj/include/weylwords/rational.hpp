#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Under C++20 the mixed rational/integer operator== in Boost < 1.75 selects its
// own reversed form and recurses. Exact overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(int b, const rational<std::int64_t>& a) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) {
  return a == rational<std::int64_t>(b);
}
}  // namespace boost

namespace weylwords {

using Rational = boost::rational<std::int64_t>;

/// "3", "-1/2".
std::string to_string(const Rational& q);

}  // namespace weylwords
