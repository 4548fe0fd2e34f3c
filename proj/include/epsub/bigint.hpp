#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace epsub {

// Bounds like 2^z*m*k overflow 64 bits quickly; all bound and score
// arithmetic is exact big-integer arithmetic.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace epsub
