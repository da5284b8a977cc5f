#pragma once

#include <cstdint>
#include <vector>

#include "hfib/rational.hpp"

namespace hfib {

/// F_n for any signed n (F_{-n} by the backward recurrence F_{n-2} = F_n - F_{n-1}).
BigInt fibonacci(std::int64_t n);

/// Same value as fibonacci(n), as a reference into the process-wide cache.
/// The reference stays valid for the life of the program.
const BigInt& fibonacci_ref(std::int64_t n);

/// lcm(F_1, ..., F_n), 1 for n = 0. Every harmonic Fibonacci number of any
/// order at an index <= n has a denominator dividing this value.
const BigInt& fibonacci_lcm(std::int64_t n);

/// L_n for any signed n, with L_0 = 2 and L_1 = 1.
BigInt lucas(std::int64_t n);

/// F_0 .. F_n (n >= 0).
std::vector<BigInt> fibonacci_prefix(std::int64_t n);

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational harmonic(std::int64_t n);

/// Hyperharmonic number H_n^(r) by iterated prefix sums of H^(0)_n = 1/n.
/// H_0^(0) is taken as 0 (1/n is undefined there).
Rational hyperharmonic(std::int64_t n, std::int64_t r);

/// C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}), r >= 1. Independent of the
/// prefix-sum table so each path can check the other.
Rational hyperharmonic_closed(std::int64_t n, std::int64_t r);

/// Hyperfibonacci number F_n^(r): iterated prefix sums of F_n, F_n^(0) = F_n.
BigInt hyperfibonacci(std::int64_t n, std::int64_t r);

/// 1/F_1 + ... + 1/F_n, n >= 1. Partial sums of the Fibonacci zeta value.
Rational zeta_f1_partial(std::int64_t n);

}  // namespace hfib
