#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hfib/fib_harmonic.hpp"
#include "hfib/rational.hpp"

namespace hfib {

/// Forward difference of a sampled sequence: out[x] = f[x+1] - f[x].
std::vector<Rational> forward_difference(std::span<const Rational> f);

/// Definite anti-difference sum_{x=a}^{b-1} g(x). Empty (zero) when b <= a.
Rational definite_sum(const std::function<Rational(std::int64_t)>& g, std::int64_t a,
                      std::int64_t b);

/// Indefinite anti-difference of the falling power x^(m) evaluated at x:
/// x^(m+1)/(m+1) for m >= 0, and H_x for m = -1.
Rational falling_power_antidifference(std::int64_t x, std::int64_t m);

/// Both sides of summation by parts on samples u, v over 0..b+1:
///   lhs = sum_{x=a}^{b} u(x) dv(x)
///   rhs = u(b+1)v(b+1) - u(a)v(a) - sum_{x=a}^{b} v(x+1) du(x)
/// Requires 0 <= a <= b + 1, b >= 0, and both spans to hold at least b + 2 samples.
IdentitySides summation_by_parts(std::span<const Rational> u, std::span<const Rational> v,
                                 std::int64_t a, std::int64_t b);

}  // namespace hfib
