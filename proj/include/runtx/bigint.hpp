// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_BIGINT_HPP
#define RUNTX_BIGINT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace runtx {

// Exact arbitrary-precision integer. Everything in this library is integer
// arithmetic; no rationals are ever needed.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Parses an optionally signed decimal integer. Throws std::invalid_argument
// on malformed input.
BigInt parse_bigint(std::string_view text);

// binom(n, k) by the Pascal recurrence; 0 outside the triangle.
BigInt binomial(long n, long k);

// B_0..B_n via the Bell triangle.
std::vector<BigInt> bell_numbers(int n);

}  // namespace runtx

#endif
