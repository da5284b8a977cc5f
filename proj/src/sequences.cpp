#include "hfib/sequences.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "hfib/combinatorics.hpp"
#include "hfib/prefix_sum_table.hpp"

namespace hfib {

namespace {

void require_nonnegative(std::int64_t value, const char* what) {
  if (value < 0) {
    throw DomainError(std::string(what) + " must be non-negative, got " + std::to_string(value));
  }
}

// Two-term recurrence cached in both directions. forward_[i] holds term i,
// backward_[i] holds term -i, so backward_[0] duplicates forward_[0].
// Deque storage keeps references to existing terms valid while others grow it.
class SignedRecurrenceCache {
 public:
  SignedRecurrenceCache(long first, long second)
      : forward_{BigInt(first), BigInt(second)}, backward_{BigInt(first)} {}

  const BigInt& at(std::int64_t n) {
    const auto idx = static_cast<std::size_t>(n < 0 ? -n : n);
    std::deque<BigInt>& side = n < 0 ? backward_ : forward_;
    {
      std::shared_lock lock(mutex_);
      if (idx < side.size()) return side[idx];
    }
    std::unique_lock lock(mutex_);
    if (n < 0) {
      // term(-k) = term(-k+2) - term(-k+1)
      while (backward_.size() <= idx) {
        const std::size_t k = backward_.size();
        const BigInt& two_up = k == 1 ? forward_[1] : backward_[k - 2];
        const BigInt& one_up = backward_[k - 1];
        backward_.push_back(two_up - one_up);
      }
      return backward_[idx];
    }
    while (forward_.size() <= idx) {
      const std::size_t k = forward_.size();
      forward_.push_back(forward_[k - 1] + forward_[k - 2]);
    }
    return forward_[idx];
  }

  std::vector<BigInt> prefix(std::int64_t n) {
    at(n);
    std::shared_lock lock(mutex_);
    return {forward_.begin(), forward_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BigInt> forward_;
  std::deque<BigInt> backward_;
};

SignedRecurrenceCache& fib_cache() {
  static SignedRecurrenceCache cache(0, 1);
  return cache;
}

SignedRecurrenceCache& lucas_cache() {
  static SignedRecurrenceCache cache(2, 1);
  return cache;
}

class FibonacciLcmCache {
 public:
  const BigInt& at(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      BigInt next;
      const BigInt& f = fibonacci_ref(static_cast<std::int64_t>(values_.size()));
      mpz_lcm(next.get_mpz_t(), values_.back().get_mpz_t(), f.get_mpz_t());
      values_.push_back(std::move(next));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BigInt> values_{BigInt(1)};
};

PrefixSumTable<Rational>& hyperharmonic_table() {
  static PrefixSumTable<Rational> table(
      [](std::int64_t n) { return Rational(BigInt(1), BigInt(static_cast<long>(n))); });
  return table;
}

PrefixSumTable<BigInt>& hyperfibonacci_table() {
  static PrefixSumTable<BigInt> table([](std::int64_t n) { return fibonacci(n); });
  return table;
}

}  // namespace

BigInt fibonacci(std::int64_t n) { return fib_cache().at(n); }

const BigInt& fibonacci_ref(std::int64_t n) { return fib_cache().at(n); }

const BigInt& fibonacci_lcm(std::int64_t n) {
  require_nonnegative(n, "Fibonacci lcm index");
  static FibonacciLcmCache cache;
  return cache.at(static_cast<std::size_t>(n));
}

BigInt lucas(std::int64_t n) { return lucas_cache().at(n); }

std::vector<BigInt> fibonacci_prefix(std::int64_t n) {
  require_nonnegative(n, "Fibonacci index");
  return fib_cache().prefix(n);
}

Rational harmonic(std::int64_t n) {
  require_nonnegative(n, "harmonic index");
  return hyperharmonic_table().at(n, 1);
}

Rational hyperharmonic(std::int64_t n, std::int64_t r) {
  require_nonnegative(n, "hyperharmonic index n");
  require_nonnegative(r, "hyperharmonic order r");
  return hyperharmonic_table().at(n, r);
}

Rational hyperharmonic_closed(std::int64_t n, std::int64_t r) {
  require_nonnegative(n, "hyperharmonic index n");
  if (r < 1) throw DomainError("closed-form hyperharmonic requires r >= 1");
  // Plain summation so this path shares nothing with the table.
  RationalSum tail;
  for (std::int64_t k = r; k <= n + r - 1; ++k) {
    tail += Rational(BigInt(1), BigInt(static_cast<long>(k)));
  }
  return Rational(binomial(n + r - 1, r - 1)) * tail.value();
}

BigInt hyperfibonacci(std::int64_t n, std::int64_t r) {
  require_nonnegative(n, "hyperfibonacci index n");
  require_nonnegative(r, "hyperfibonacci order r");
  return hyperfibonacci_table().at(n, r);
}

Rational zeta_f1_partial(std::int64_t n) {
  if (n < 1) throw DomainError("Fibonacci zeta partial sum requires n >= 1");
  RationalSum sum(fibonacci_lcm(n));
  for (std::int64_t k = 1; k <= n; ++k) sum += Rational(BigInt(1), fibonacci_ref(k));
  return sum.value();
}

}  // namespace hfib
