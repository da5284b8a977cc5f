#pragma once

#include <cstdint>
#include <vector>

#include "hfib/rational.hpp"

namespace hfib {

/// Binomial coefficient C(n, k) by the multiplicative formula with exact
/// division. Zero when k < 0 or k > n. Throws DomainError for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(c, c), C(c+1, c), ..., C(c+count-1, c): one diagonal of Pascal's
/// triangle, built incrementally. Requires c >= 0.
std::vector<BigInt> binomial_diagonal(std::int64_t c, std::int64_t count);

/// Falling power x(x-1)...(x-m+1); 1 when m = 0. Throws DomainError for m < 0.
BigInt falling_power(const BigInt& x, std::int64_t m);
BigInt falling_power(std::int64_t x, std::int64_t m);

/// n!, memoized. Throws DomainError for n < 0.
BigInt factorial(std::int64_t n);

/// Unsigned Stirling number of the first kind [n k], i.e. the number of
/// permutations of n elements with exactly k cycles. Backed by a triangular
/// table that grows on demand and is safe to read from several threads.
/// Zero when k > n. Throws DomainError for negative arguments.
BigInt stirling1_unsigned(std::int64_t n, std::int64_t k);

}  // namespace hfib
