#pragma once

// Arbitrary-precision integers and rationals used throughout.  All arithmetic
// in this library is exact; there is no floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

namespace grasscoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Int num = 1;
  for (int i = 0; i < r; ++i) {
    num *= n - i;
    num /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return num;
}

// Exact division; a remainder is always a bug in the caller.
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

// Big integers serialize as JSON numbers while they fit, as strings beyond.
inline nlohmann::json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

inline std::string rat_to_string(const Rat& v) {
  return v.str();  // "p/q" in lowest terms, plain integer when q == 1
}

}  // namespace grasscoh
