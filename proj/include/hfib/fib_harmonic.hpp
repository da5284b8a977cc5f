#pragma once

#include <cstdint>
#include <vector>

#include "hfib/rational.hpp"

namespace hfib {

/// Harmonic Fibonacci number: 1/F_1 + ... + 1/F_n, zero for n = 0.
Rational fib_harmonic(std::int64_t n);

/// Hyperharmonic Fibonacci number of order r, by iterated prefix sums of
/// 1/F_n. Entry (0, r) is 0 for every r >= 0, including r = 0.
Rational hyper_fib_harmonic(std::int64_t n, std::int64_t r);

/// Entries 0..n of order r in one call.
std::vector<Rational> hyper_fib_harmonic_row(std::int64_t n, std::int64_t r);

/// Like hyper_fib_harmonic_row, but pointing into the memo table instead of
/// copying. The pointers stay valid for the life of the program.
std::vector<const Rational*> hyper_fib_harmonic_view(std::int64_t n, std::int64_t r);

/// Binomial-weighted form sum_{k=1}^{n} C(n-k+r-1, r-1) / F_k, r >= 1.
/// Does not touch the memo table.
Rational hyper_fib_harmonic_closed(std::int64_t n, std::int64_t r);

/// Both sides of an identity evaluated at one parameter point.
struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// lhs: order-j value at index n-i+1 from the table.
/// rhs: sum_{k=i}^{n} C(n-k+j-1, j-1) / F_{k-i+1}.
/// Requires 1 <= i <= n and j >= 1.
IdentitySides shifted_hyper_identity(std::int64_t n, std::int64_t i, std::int64_t j);

/// lhs: order r+s value at n. rhs: sum_{t=1}^{n} C(n-t+r-1, r-1) * (order-s value at t).
/// Requires n >= 1, r >= 1, s >= 0.
IdentitySides order_composition(std::int64_t n, std::int64_t r, std::int64_t s);

/// Dense square matrix of exact values, row-major, 1-based accessors.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::int64_t size)
      : size_(size), data_(static_cast<std::size_t>(size * size)) {}

  std::int64_t size() const { return size_; }
  const T& at(std::int64_t row, std::int64_t col) const { return data_[index(row, col)]; }
  T& at(std::int64_t row, std::int64_t col) { return data_[index(row, col)]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t index(std::int64_t row, std::int64_t col) const {
    return static_cast<std::size_t>((row - 1) * size_ + (col - 1));
  }

  std::int64_t size_ = 0;
  std::vector<T> data_;
};

/// A^r for the n x n all-ones upper triangle A.
struct UpperShiftMatrix {
  std::int64_t power = 0;
  SquareMatrix<BigInt> entries;

  std::int64_t size() const { return entries.size(); }
};

/// Matrix whose (i, j) entry is the order (r+j-1) value at index n-i+1, so
/// the first column read upward is orders r at indices 1..n.
struct HyperFibMatrix {
  std::int64_t order = 0;
  SquareMatrix<Rational> entries;

  std::int64_t size() const { return entries.size(); }
};

/// Entry (i, j) = C(j-i+r-1, r-1) for i <= j, else 0. Requires n, r >= 1.
UpperShiftMatrix build_upper_shift(std::int64_t n, std::int64_t r);

/// Requires n >= 1, r >= 0 (order 0 makes the first column 1/F).
HyperFibMatrix build_hyperfib_matrix(std::int64_t n, std::int64_t r);

SquareMatrix<BigInt> multiply(const SquareMatrix<BigInt>& a, const SquareMatrix<BigInt>& b);
SquareMatrix<Rational> multiply(const SquareMatrix<BigInt>& a, const SquareMatrix<Rational>& b);

}  // namespace hfib
