// Exact arithmetic primitives and error types shared by the whole library.
// All computation is over arbitrary-precision integers and rationals;
// nothing here (or anywhere downstream) touches floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mghilb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Malformed or out-of-contract input (CLI exit code 2).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical assumption supplied by the caller failed mid-computation,
// e.g. a lifting that was asserted surjective is not (CLI exit code 3).
struct assumption_error : std::runtime_error {
  explicit assumption_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A bounded scan ran out of budget before finding its target; callers that
// perform verification treat this as a rejection rather than a crash.
struct scan_error : std::runtime_error {
  explicit scan_error(const std::string& msg) : std::runtime_error(msg) {}
};

// binom(top, k) with the convention that a negative top argument or k < 0
// gives 0.  This matches how binomial coefficients in shifted bases behave
// below their range.
inline Int binomial(const Int& top, const Int& k) {
  if (k < 0 || top < 0) return 0;
  if (k > top) return 0;
  Int kk = k;
  if (top - k < kk) kk = top - k;
  Int num = 1, den = 1;
  for (Int i = 0; i < kk; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

inline std::optional<Int> rat_to_int(const Rat& q) {
  if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
  return Int(boost::multiprecision::numerator(q));
}

inline int int_to_machine(const Int& v, const char* what) {
  if (v < -1000000000 || v > 1000000000)
    throw input_error(std::string(what) + " out of supported range");
  return static_cast<int>(v);
}

using DegreeVector = std::vector<Int>;

inline bool leq_componentwise(const DegreeVector& a, const DegreeVector& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace mghilb
