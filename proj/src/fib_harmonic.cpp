#include "hfib/fib_harmonic.hpp"

#include <string>

#include "hfib/combinatorics.hpp"
#include "hfib/prefix_sum_table.hpp"
#include "hfib/sequences.hpp"

namespace hfib {

namespace {

PrefixSumTable<Rational>& table() {
  static PrefixSumTable<Rational> instance(
      [](std::int64_t n) { return Rational(BigInt(1), fibonacci(n)); });
  return instance;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace

Rational fib_harmonic(std::int64_t n) {
  require(n >= 0, "harmonic Fibonacci index must be non-negative");
  return table().at(n, 1);
}

Rational hyper_fib_harmonic(std::int64_t n, std::int64_t r) {
  require(n >= 0, "hyperharmonic Fibonacci index must be non-negative");
  require(r >= 0, "hyperharmonic Fibonacci order must be non-negative");
  return table().at(n, r);
}

std::vector<Rational> hyper_fib_harmonic_row(std::int64_t n, std::int64_t r) {
  std::vector<Rational> out;
  for (const Rational* entry : hyper_fib_harmonic_view(n, r)) out.push_back(*entry);
  return out;
}

std::vector<const Rational*> hyper_fib_harmonic_view(std::int64_t n, std::int64_t r) {
  require(n >= 0, "hyperharmonic Fibonacci index must be non-negative");
  require(r >= 0, "hyperharmonic Fibonacci order must be non-negative");
  return table().row(n, r);
}

Rational hyper_fib_harmonic_closed(std::int64_t n, std::int64_t r) {
  require(n >= 0, "hyperharmonic Fibonacci index must be non-negative");
  require(r >= 1, "closed form requires order r >= 1");
  // weight of 1/F_k is C(n-k+r-1, r-1), entry n-k of the diagonal
  const std::vector<BigInt> weights = binomial_diagonal(r - 1, n);
  RationalSum sum(fibonacci_lcm(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    sum += Rational(weights[static_cast<std::size_t>(n - k)], fibonacci_ref(k));
  }
  return sum.value();
}

IdentitySides shifted_hyper_identity(std::int64_t n, std::int64_t i, std::int64_t j) {
  require(i >= 1 && i <= n, "shifted identity requires 1 <= i <= n");
  require(j >= 1, "shifted identity requires j >= 1");
  RationalSum rhs(fibonacci_lcm(n - i + 1));
  for (std::int64_t k = i; k <= n; ++k) {
    rhs += Rational(binomial(n - k + j - 1, j - 1), fibonacci_ref(k - i + 1));
  }
  return {hyper_fib_harmonic(n - i + 1, j), rhs.value()};
}

IdentitySides order_composition(std::int64_t n, std::int64_t r, std::int64_t s) {
  require(n >= 1, "order composition requires n >= 1");
  require(r >= 1, "order composition requires r >= 1");
  require(s >= 0, "order composition requires s >= 0");
  const std::vector<const Rational*> lower = hyper_fib_harmonic_view(n, s);
  RationalSum rhs(fibonacci_lcm(n));
  for (std::int64_t t = 1; t <= n; ++t) {
    rhs.add_scaled(binomial(n - t + r - 1, r - 1), *lower[static_cast<std::size_t>(t)]);
  }
  return {hyper_fib_harmonic(n, r + s), rhs.value()};
}

UpperShiftMatrix build_upper_shift(std::int64_t n, std::int64_t r) {
  require(n >= 1, "matrix size must be >= 1");
  require(r >= 1, "matrix power must be >= 1");
  UpperShiftMatrix m{r, SquareMatrix<BigInt>(n)};
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = i; j <= n; ++j) {
      m.entries.at(i, j) = binomial(j - i + r - 1, r - 1);
    }
  }
  return m;
}

HyperFibMatrix build_hyperfib_matrix(std::int64_t n, std::int64_t r) {
  require(n >= 1, "matrix size must be >= 1");
  require(r >= 0, "matrix order must be >= 0");
  HyperFibMatrix m{r, SquareMatrix<Rational>(n)};
  for (std::int64_t j = 1; j <= n; ++j) {
    const std::vector<const Rational*> column = hyper_fib_harmonic_view(n, r + j - 1);
    for (std::int64_t i = 1; i <= n; ++i) {
      m.entries.at(i, j) = *column[static_cast<std::size_t>(n - i + 1)];
    }
  }
  return m;
}

SquareMatrix<BigInt> multiply(const SquareMatrix<BigInt>& a, const SquareMatrix<BigInt>& b) {
  const std::int64_t n = a.size();
  SquareMatrix<BigInt> out(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      BigInt acc = 0;
      for (std::int64_t k = 1; k <= n; ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  }
  return out;
}

SquareMatrix<Rational> multiply(const SquareMatrix<BigInt>& a, const SquareMatrix<Rational>& b) {
  const std::int64_t n = a.size();
  SquareMatrix<Rational> out(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      RationalSum acc;
      for (std::int64_t k = 1; k <= n; ++k) acc.add_scaled(a.at(i, k), b.at(k, j));
      out.at(i, j) = acc.value();
    }
  }
  return out;
}

}  // namespace hfib
