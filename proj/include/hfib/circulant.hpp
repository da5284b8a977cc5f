#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hfib/rational.hpp"

namespace hfib {

/// Which sequence generated a circulant's first row.
enum class CirculantKind { Custom, HarmonicFib, HyperharmonicFib };

/// n x n circulant matrix Circ(c_0, ..., c_{n-1}); row i is the first row
/// shifted right i places. Only the first row is stored.
struct Circulant {
  std::vector<Rational> first_row;
  CirculantKind kind = CirculantKind::Custom;
  std::int64_t order = 0;  // r for HyperharmonicFib

  std::int64_t size() const { return static_cast<std::int64_t>(first_row.size()); }
  /// Entry (i, j), 0-based: c_{(j - i) mod n}.
  const Rational& at(std::int64_t i, std::int64_t j) const;
};

/// Circ(FF_0, ..., FF_{n-1}), n >= 1.
Circulant build_c1(std::int64_t n);

/// Circ(FF_0^(r), ..., FF_{n-1}^(r)), n >= 1, r >= 1.
Circulant build_c2(std::int64_t n, std::int64_t r);

/// Spectral norm of a nonnegative circulant: its Perron root, which is the
/// common row sum. Throws DomainError on any negative entry.
Rational spectral_norm_exact(const Circulant& c);

/// Squared Frobenius norm, n * sum c_k^2.
Rational euclid_norm_sq_exact(const Circulant& c);

/// lambda_j = sum_k c_k w^{jk}, w = exp(2 pi i / n), by direct O(n^2) evaluation.
std::vector<std::complex<double>> eigenvalues_numeric(const Circulant& c);

struct NormResult {
  std::int64_t n = 0;
  CirculantKind kind = CirculantKind::Custom;
  std::int64_t order = 0;
  Rational spectral_exact;
  Rational euclid_sq_exact;
  double spectral_numeric = 0;
  double euclid_numeric = 0;
  double lambda_max_numeric = 0;
  /// max |lambda_j| matches spectral_exact within relative 1e-9.
  bool perron_ok = false;
  /// spectral^2 <= euclid_sq <= n * spectral^2 as exact comparisons.
  bool chain_ok = false;
  /// Closed form for the construction (row-sum and Frobenius identities for
  /// C1, order-raising identity and both norm bounds for C2). True for
  /// custom circulants.
  bool closed_form_ok = false;

  bool ok() const { return perron_ok && chain_ok && closed_form_ok; }
};

inline constexpr double kPerronRelTol = 1e-9;

/// Exact and numeric norms plus every consistency check above.
NormResult norm_report(const Circulant& c);

/// n FF_n - sum_{k<n} (k+1)/F_{k+1}.
Rational c1_spectral_closed_form(std::int64_t n);

/// n^2 FF_n^2 - n sum_{k<n} (k+1)/F_{k+1} (2 FF_k + 1/F_{k+1}).
Rational c1_euclid_sq_closed_form(std::int64_t n);

nlohmann::json to_json(const NormResult& result);

}  // namespace hfib
