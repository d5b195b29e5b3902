#pragma once
// Exact arithmetic types shared across the library.
//
// Chain counts are arbitrary-precision integers: subspace lattices outgrow
// 64 bits quickly, and counts must never saturate or wrap.  Probabilities,
// expectations, and rank distributions are exact rationals so that every
// inequality check in the library is a decision, not an approximation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chainmin {

using Count = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "num" for integers, "num/den" otherwise; den kept positive by cpp_rational.
inline std::string rat_string(const Rat& r) {
  const Count num = boost::multiprecision::numerator(r);
  const Count den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::uint64_t to_u64(const Count& c, const char* what) {
  if (c < 0 || c > Count(UINT64_MAX))
    throw std::overflow_error(std::string(what) + ": value " + c.str() +
                              " does not fit in 64 bits");
  return static_cast<std::uint64_t>(c);
}

inline std::size_t to_index(const Count& c, const char* what) {
  std::uint64_t v = to_u64(c, what);
  if (v > SIZE_MAX) throw std::overflow_error(std::string(what) + ": too large");
  return static_cast<std::size_t>(v);
}

}  // namespace chainmin
