#include "hfib/finite_calculus.hpp"

#include "hfib/combinatorics.hpp"
#include "hfib/sequences.hpp"

namespace hfib {

std::vector<Rational> forward_difference(std::span<const Rational> f) {
  std::vector<Rational> out;
  if (f.size() < 2) return out;
  out.reserve(f.size() - 1);
  for (std::size_t x = 0; x + 1 < f.size(); ++x) out.push_back(f[x + 1] - f[x]);
  return out;
}

Rational definite_sum(const std::function<Rational(std::int64_t)>& g, std::int64_t a,
                      std::int64_t b) {
  Rational sum;
  for (std::int64_t x = a; x < b; ++x) sum += g(x);
  return sum;
}

Rational falling_power_antidifference(std::int64_t x, std::int64_t m) {
  if (m == -1) return harmonic(x);
  if (m < -1) throw DomainError("negative falling powers below -1 are not supported");
  return Rational(falling_power(x, m + 1), BigInt(static_cast<long>(m + 1)));
}

IdentitySides summation_by_parts(std::span<const Rational> u, std::span<const Rational> v,
                                 std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b + 1 < a) {
    throw DomainError("summation by parts requires 0 <= a <= b + 1 and b >= 0");
  }
  const auto need = static_cast<std::size_t>(b + 2);
  if (u.size() < need || v.size() < need) {
    throw DomainError("summation by parts needs samples through b + 1");
  }
  const auto ua = static_cast<std::size_t>(a);
  const auto ub = static_cast<std::size_t>(b);
  IdentitySides sides;
  for (std::size_t x = ua; x <= ub; ++x) {
    sides.lhs += u[x] * (v[x + 1] - v[x]);
  }
  sides.rhs = u[ub + 1] * v[ub + 1] - u[ua] * v[ua];
  for (std::size_t x = ua; x <= ub; ++x) {
    sides.rhs -= v[x + 1] * (u[x + 1] - u[x]);
  }
  return sides;
}

}  // namespace hfib
