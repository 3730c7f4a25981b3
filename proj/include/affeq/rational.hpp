#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace affeq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in canonical form: positive
/// denominator, gcd(|num|, den) = 1, zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

/// Canonical string form, "p/q" with q omitted when 1.
inline std::string rat_str(const Rat& r) { return r.str(); }

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

inline bool is_zero(const Rat& r) { return r.is_zero(); }

}  // namespace affeq
