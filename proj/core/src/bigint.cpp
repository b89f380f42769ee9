#include "starcount/bigint.hpp"

#include <cmath>
#include <limits>

namespace starcount {

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

double log_big(const BigInt& x) {
  if (x.sign() < 0) return std::numeric_limits<double>::quiet_NaN();
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 60;
  // GCC reports a spurious memcpy overflow inside the shift at -O2.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
  const BigInt top = x >> shift;
#pragma GCC diagnostic pop
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

}  // namespace starcount
