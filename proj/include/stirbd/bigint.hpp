#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stirbd {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// C(a, b) with C(a, b) = 0 whenever b < 0 or b > a.
BigInt binomial(long a, long b);

BigInt power(const BigInt& base, unsigned exponent);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace stirbd
