#include "hfib/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hfib/fib_harmonic.hpp"
#include "hfib/sequences.hpp"

namespace hfib {

const Rational& Circulant::at(std::int64_t i, std::int64_t j) const {
  const std::int64_t n = size();
  const std::int64_t k = ((j - i) % n + n) % n;
  return first_row[static_cast<std::size_t>(k)];
}

Circulant build_c1(std::int64_t n) {
  if (n < 1) throw DomainError("circulant size must be >= 1");
  std::vector<Rational> row = hyper_fib_harmonic_row(n - 1, 1);
  return {std::move(row), CirculantKind::HarmonicFib, 1};
}

Circulant build_c2(std::int64_t n, std::int64_t r) {
  if (n < 1) throw DomainError("circulant size must be >= 1");
  if (r < 1) throw DomainError("circulant order must be >= 1");
  std::vector<Rational> row = hyper_fib_harmonic_row(n - 1, r);
  return {std::move(row), CirculantKind::HyperharmonicFib, r};
}

Rational spectral_norm_exact(const Circulant& c) {
  if (c.first_row.empty()) throw DomainError("empty circulant");
  RationalSum sum;
  for (const Rational& v : c.first_row) {
    if (v.sign() < 0) throw DomainError("spectral norm shortcut needs nonnegative entries");
    sum += v;
  }
  return sum.value();
}

Rational euclid_norm_sq_exact(const Circulant& c) {
  RationalSum sum;
  for (const Rational& v : c.first_row) sum += v.squared();
  return Rational(c.size()) * sum.value();
}

std::vector<std::complex<double>> eigenvalues_numeric(const Circulant& c) {
  const std::size_t n = c.first_row.size();
  std::vector<double> values(n);
  std::transform(c.first_row.begin(), c.first_row.end(), values.begin(),
                 [](const Rational& v) { return v.to_double(); });
  // Roots indexed by (j*k mod n) so every twiddle is evaluated from an exact angle.
  std::vector<std::complex<double>> roots(n);
  for (std::size_t t = 0; t < n; ++t) {
    roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n));
  }
  std::vector<std::complex<double>> lambda(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += values[k] * roots[(j * k) % n];
    lambda[j] = acc;
  }
  return lambda;
}

Rational c1_spectral_closed_form(std::int64_t n) {
  RationalSum tail;
  for (std::int64_t k = 0; k < n; ++k) tail += Rational(BigInt(static_cast<long>(k + 1)), fibonacci_ref(k + 1));
  return Rational(n) * fib_harmonic(n) - tail.value();
}

Rational c1_euclid_sq_closed_form(std::int64_t n) {
  RationalSum tail;
  for (std::int64_t k = 0; k < n; ++k) {
    const Rational inv(BigInt(1), fibonacci_ref(k + 1));
    tail += Rational(k + 1) * inv * (Rational(2) * fib_harmonic(k) + inv);
  }
  const Rational fn = fib_harmonic(n);
  const Rational nn(n);
  return nn * nn * fn * fn - nn * tail.value();
}

NormResult norm_report(const Circulant& c) {
  NormResult out;
  out.n = c.size();
  out.kind = c.kind;
  out.order = c.order;
  out.spectral_exact = spectral_norm_exact(c);
  out.euclid_sq_exact = euclid_norm_sq_exact(c);
  out.spectral_numeric = out.spectral_exact.to_double();
  out.euclid_numeric = std::sqrt(out.euclid_sq_exact.to_double());

  for (const auto& lambda : eigenvalues_numeric(c)) {
    out.lambda_max_numeric = std::max(out.lambda_max_numeric, std::abs(lambda));
  }
  const double scale = out.spectral_exact.is_zero() ? 1.0 : std::abs(out.spectral_numeric);
  out.perron_ok = std::abs(out.lambda_max_numeric - out.spectral_numeric) <= kPerronRelTol * scale;

  const Rational spectral_sq = out.spectral_exact * out.spectral_exact;
  out.chain_ok = spectral_sq <= out.euclid_sq_exact &&
                 out.euclid_sq_exact <= Rational(out.n) * spectral_sq;

  switch (c.kind) {
    case CirculantKind::HarmonicFib:
      out.closed_form_ok = out.spectral_exact == c1_spectral_closed_form(out.n) &&
                           out.euclid_sq_exact == c1_euclid_sq_closed_form(out.n);
      break;
    case CirculantKind::HyperharmonicFib: {
      // Row sum equals the next order at index n-1; the two norm bounds
      // are checked squared, without square roots.
      const Rational next = hyper_fib_harmonic(out.n - 1, c.order + 1);
      const Rational next_sq = next * next;
      const Rational sum_sq = out.euclid_sq_exact / Rational(out.n);
      const bool euclid_bounds = next_sq <= out.euclid_sq_exact &&
                                 out.euclid_sq_exact <= Rational(out.n) * next_sq;
      const bool sum_sq_bounds = next_sq <= Rational(out.n) * sum_sq && sum_sq <= next_sq;
      out.closed_form_ok = out.spectral_exact == next && euclid_bounds && sum_sq_bounds;
      break;
    }
    case CirculantKind::Custom:
      out.closed_form_ok = true;
      break;
  }
  return out;
}

nlohmann::json to_json(const NormResult& result) {
  nlohmann::json j;
  j["n"] = result.n;
  switch (result.kind) {
    case CirculantKind::HarmonicFib:
      j["kind"] = "C1";
      break;
    case CirculantKind::HyperharmonicFib:
      j["kind"] = "C2";
      j["r"] = result.order;
      break;
    case CirculantKind::Custom:
      j["kind"] = "custom";
      break;
  }
  j["spectral_exact"] = result.spectral_exact.str();
  j["euclid_sq_exact"] = result.euclid_sq_exact.str();
  j["spectral_numeric"] = result.spectral_numeric;
  j["euclid_numeric"] = result.euclid_numeric;
  j["lambda_max_numeric"] = result.lambda_max_numeric;
  j["chain_ok"] = result.chain_ok;
  j["perron_ok"] = result.perron_ok;
  j["closed_form_ok"] = result.closed_form_ok;
  return j;
}

}  // namespace hfib
