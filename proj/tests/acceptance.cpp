// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hfib/circulant.hpp"
#include "hfib/combinatorics.hpp"
#include "hfib/fib_harmonic.hpp"
#include "hfib/finite_calculus.hpp"
#include "hfib/identities.hpp"
#include "hfib/sequences.hpp"

using namespace hfib;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int number;
  const char* title;
  double budget_s;
  std::function<Outcome()> body;
};

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }

// Runs one identity over explicit ranges; records the first failing point.
void check_identity(Outcome& out, const std::string& id, const RangeOverrides& ranges,
                    std::size_t& tuples) {
  const VerificationReport report = verify(id, ranges, Scale::Default);
  tuples += report.grid_size;
  if (report.grid_size == 0) out.fail(id + " produced an empty grid");
  if (!report.passed()) {
    out.fail(id + " failed at " + report.failures.front().params.str() + " (" +
             std::to_string(report.failures.size()) + " failures)");
  }
}

Outcome table_values() {
  const Rational expected[4][5] = {
      {q(1, 1), q(2, 1), q(5, 2), q(17, 6), q(91, 30)},
      {q(1, 1), q(3, 1), q(11, 2), q(25, 3), q(341, 30)},
      {q(1, 1), q(4, 1), q(19, 2), q(107, 6), q(146, 5)},
      {q(1, 1), q(5, 1), q(29, 2), q(97, 3), q(923, 15)},
  };
  Outcome out;
  int matched = 0;
  for (int r = 1; r <= 4; ++r) {
    for (int n = 1; n <= 5; ++n) {
      const Rational got = hyper_fib_harmonic(n, r);
      if (got == expected[r - 1][n - 1]) {
        ++matched;
      } else {
        out.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " gave " + got.str());
      }
    }
  }
  if (out.ok) out.detail = std::to_string(matched) + "/20 values exact";
  return out;
}

Outcome zeta_digits() {
  Outcome out;
  const std::string expansion = zeta_f1_partial(100).to_decimal(10);
  if (expansion != "3.3598856662") out.fail("got " + expansion);
  if (out.ok) out.detail = "partial sum to n=100 is " + expansion + "...";
  return out;
}

Outcome fibonacci_harmonic_suite() {
  Outcome out;
  std::size_t tuples = 0;
  for (const char* id : {"FH-T21", "FH-T22", "FH-T25", "FH-C26", "FH-T27", "FH-T28"}) {
    check_identity(out, id, {{"n", {1, 200}}}, tuples);
  }
  for (const char* id : {"FH-T23", "FH-T24"}) {
    check_identity(out, id, {{"n", {1, 200}}, {"m", {0, 6}}}, tuples);
  }
  if (out.ok) out.detail = "8 identities, " + std::to_string(tuples) + " tuples";
  return out;
}

Outcome hyperharmonic_fibonacci_suite() {
  Outcome out;
  std::size_t tuples = 0;
  check_identity(out, "HH-L32", {{"n", {1, 60}}, {"r", {1, 6}}}, tuples);
  check_identity(out, "HH-C34", {{"n", {1, 60}}, {"r", {1, 6}}}, tuples);
  check_identity(out, "HH-T33", {{"n", {1, 40}}, {"i", {1, 40}}, {"j", {1, 40}}}, tuples);
  check_identity(out, "HH-T35", {{"n", {1, 60}}, {"r", {1, 6}}, {"s", {0, 6}}}, tuples);
  check_identity(out, "HH-T35M",
                 {{"n", {1, 25}}, {"r", {1, 4}}, {"s", {0, 4}}, {"i", {1, 25}}, {"j", {1, 25}}},
                 tuples);
  if (out.ok) out.detail = "5 identities, " + std::to_string(tuples) + " tuples";
  return out;
}

Outcome background_suite() {
  Outcome out;
  std::size_t tuples = 0;
  for (const char* id : {"BG-H1", "BG-H2", "BG-H3", "BG-SP1", "BG-SP2", "BG-HSTIR"}) {
    const Identity& identity = find_identity(id);
    RangeOverrides ranges{{"n", {1, 300}}};
    for (const ParamSpec& p : identity.params) {
      if (p.name == "m") ranges["m"] = {0, kAuxCap};
    }
    check_identity(out, id, ranges, tuples);
  }
  for (const char* id : {"BG-HH1", "BG-HH2", "BG-HHC"}) {
    check_identity(out, id, {{"n", {1, 300}}, {"r", {1, 6}}}, tuples);
  }
  if (out.ok) out.detail = "9 identities, " + std::to_string(tuples) + " tuples";
  return out;
}

bool chain_holds(const Rational& spectral, const Rational& euclid_sq, std::int64_t n) {
  const Rational sq = spectral * spectral;
  return sq <= euclid_sq && euclid_sq <= Rational(n) * sq;
}

Outcome norm_closed_forms() {
  Outcome out;
  int matrices = 0;
  for (std::int64_t n = 1; n <= 300; ++n) {
    const Circulant c = build_c1(n);
    const Rational spectral = spectral_norm_exact(c);
    const Rational euclid_sq = euclid_norm_sq_exact(c);
    ++matrices;
    if (spectral != c1_spectral_closed_form(n)) out.fail("C1 spectral closed form at n=" + std::to_string(n));
    if (n <= 200 && euclid_sq != c1_euclid_sq_closed_form(n)) {
      out.fail("C1 Euclidean closed form at n=" + std::to_string(n));
    }
    if (!chain_holds(spectral, euclid_sq, n)) out.fail("C1 norm chain at n=" + std::to_string(n));
  }
  for (std::int64_t r = 1; r <= 5; ++r) {
    for (std::int64_t n = 1; n <= 300; ++n) {
      const Circulant c = build_c2(n, r);
      const Rational spectral = spectral_norm_exact(c);
      const Rational euclid_sq = euclid_norm_sq_exact(c);
      ++matrices;
      const std::string at = " at n=" + std::to_string(n) + " r=" + std::to_string(r);
      if (spectral != hyper_fib_harmonic_closed(n - 1, r + 1)) out.fail("C2 spectral closed form" + at);
      if (!chain_holds(spectral, euclid_sq, n)) out.fail("C2 norm chain" + at);
    }
  }
  if (out.ok) out.detail = std::to_string(matrices) + " matrices";
  return out;
}

Outcome perron_numeric() {
  Outcome out;
  double worst = 0;
  int matrices = 0;
  auto check = [&](const Circulant& c, const std::string& label) {
    const NormResult r = norm_report(c);
    ++matrices;
    const double scale = r.spectral_exact.is_zero() ? 1.0 : r.spectral_numeric;
    worst = std::max(worst, std::abs(r.lambda_max_numeric - r.spectral_numeric) / scale);
    if (!r.perron_ok) out.fail(label + " n=" + std::to_string(r.n));
  };
  for (std::int64_t n = 1; n <= 256; ++n) check(build_c1(n), "C1");
  for (std::int64_t r = 1; r <= 5; ++r) {
    for (std::int64_t n = 1; n <= 128; ++n) check(build_c2(n, r), "C2 r=" + std::to_string(r));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d matrices, worst relative gap %.2e", matrices, worst);
  if (out.ok) out.detail = buf;
  return out;
}

Outcome oracles() {
  Outcome out;
  // permutation-cycle counts
  for (int n = 1; n <= 7; ++n) {
    std::vector<long> counts(n + 1, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<bool> seen(n, false);
      int cycles = 0;
      for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
      }
      ++counts[cycles];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int k = 0; k <= n; ++k) {
      if (stirling1_unsigned(n, k) != counts[k]) out.fail("Stirling [" + std::to_string(n) + " " + std::to_string(k) + "]");
    }
  }
  // H_n from reciprocals against [n+1 2]/n!
  Rational h;
  for (int n = 1; n <= 100; ++n) {
    h += q(1, n);
    if (Rational(stirling1_unsigned(n + 1, 2), factorial(n)) != h) out.fail("H_n via Stirling at n=" + std::to_string(n));
  }
  // summation by parts on random pairs
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> length(2, 50);
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = length(rng);
    std::vector<Rational> u, v;
    for (std::size_t i = 0; i < len; ++i) {
      u.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
      v.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
    }
    const auto b = static_cast<std::int64_t>(len) - 2;
    if (!summation_by_parts(u, v, 0, b).holds()) out.fail("summation by parts, trial " + std::to_string(trial));
  }
  if (out.ok) out.detail = "Stirling n<=7, H_n n<=100, 100 summation-by-parts pairs";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "hyperharmonic Fibonacci table", 1, table_values},
      {2, "reciprocal Fibonacci sum digits", 1, zeta_digits},
      {3, "harmonic Fibonacci identities", 30, fibonacci_harmonic_suite},
      {4, "hyperharmonic Fibonacci identities", 60, hyperharmonic_fibonacci_suite},
      {5, "harmonic background identities", 60, background_suite},
      {6, "circulant norm closed forms", 60, norm_closed_forms},
      {7, "numeric Perron cross-check", 120, perron_numeric},
      {8, "independent oracles", 10, oracles},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_s) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "over time budget (%.0f s)", c.budget_s);
      outcome.fail(buf);
    }
    if (!outcome.ok) ++failed;
    std::printf("criterion %d %s  %-36s %7.2f s  %s\n", c.number, outcome.ok ? "PASS" : "FAIL", c.title,
                seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
