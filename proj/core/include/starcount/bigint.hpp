#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace starcount {

using BigInt = boost::multiprecision::cpp_int;

// n (n-1) ... (n-k+1); 1 for k = 0 and 0 for k > n.
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// Natural log of a nonnegative integer, -inf for zero. Safe beyond the double range.
double log_big(const BigInt& x);

double to_double(const BigInt& x);

}  // namespace starcount
