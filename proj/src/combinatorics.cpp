#include "hfib/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace hfib {

namespace {

void require_nonnegative(std::int64_t value, const char* what) {
  if (value < 0) {
    throw DomainError(std::string(what) + " must be non-negative, got " + std::to_string(value));
  }
}

class FactorialTable {
 public:
  BigInt get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      values_.push_back(values_.back() * static_cast<unsigned long>(values_.size()));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<BigInt> values_{BigInt(1)};
};

// Row n holds [n 0] .. [n n].
class StirlingTable {
 public:
  BigInt get(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const std::vector<BigInt>& prev = rows_.back();
      const std::size_t m = prev.size() - 1;  // previous row index
      std::vector<BigInt> row(m + 2);
      row[0] = 0;
      for (std::size_t j = 1; j <= m + 1; ++j) {
        BigInt term = j <= m ? BigInt(prev[j] * static_cast<unsigned long>(m)) : BigInt(0);
        row[j] = term + prev[j - 1];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_{{BigInt(1)}};
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  require_nonnegative(n, "binomial upper index");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

std::vector<BigInt> binomial_diagonal(std::int64_t c, std::int64_t count) {
  require_nonnegative(c, "binomial lower index");
  std::vector<BigInt> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  out.emplace_back(1);
  // C(m+1, c) = C(m, c) (m+1) / (m+1-c)
  for (std::int64_t d = 1; d < count; ++d) {
    const std::int64_t m = c + d - 1;
    BigInt next = out.back() * static_cast<unsigned long>(m + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(m + 1 - c));
    out.push_back(std::move(next));
  }
  return out;
}

BigInt falling_power(const BigInt& x, std::int64_t m) {
  require_nonnegative(m, "falling power exponent");
  BigInt result = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    result *= x - i;
    if (sgn(result) == 0) break;
  }
  return result;
}

BigInt falling_power(std::int64_t x, std::int64_t m) { return falling_power(BigInt(x), m); }

BigInt factorial(std::int64_t n) {
  require_nonnegative(n, "factorial argument");
  return factorial_table().get(static_cast<std::size_t>(n));
}

BigInt stirling1_unsigned(std::int64_t n, std::int64_t k) {
  require_nonnegative(n, "Stirling number n");
  require_nonnegative(k, "Stirling number k");
  return stirling_table().get(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

}  // namespace hfib
