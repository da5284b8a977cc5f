#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "hfib/combinatorics.hpp"
#include "hfib/fib_harmonic.hpp"
#include "hfib/identities.hpp"
#include "hfib/sequences.hpp"

namespace hfib {

namespace {

using Kind = ParamSpec::Kind;

ParamSpec index_param(std::string name = "n", std::int64_t min_value = 1) {
  return {std::move(name), Kind::Index, min_value, {}, {}};
}

ParamSpec aux_param(std::string name, std::int64_t min_value) {
  return {std::move(name), Kind::Aux, min_value, {}, {}};
}

// Aux parameter bounded above by the index n.
ParamSpec aux_up_to_n(std::string name) {
  ParamSpec spec = aux_param(name, 1);
  spec.coupled_max = [](const ParamPoint& p) { return p["n"]; };
  spec.coupled_rule = name + " <= n";
  return spec;
}

Rational frac(const BigInt& p, const BigInt& q) { return Rational(p, q); }
Rational frac(std::int64_t p, std::int64_t q) {
  return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
}
Rational inv_fib(std::int64_t k) { return Rational(BigInt(1), fibonacci(k)); }
Rational big(const BigInt& v) { return Rational(v); }

// ---- harmonic background -------------------------------------------------

Identity bg_h1() {
  return {"BG-H1", "Sum of the first n-1 harmonic numbers", "sum H_k = nH_n - n",
          {index_param()},
          [](const ParamPoint& p) {
            RationalSum sum;
            for (std::int64_t k = 1; k <= p["n"] - 1; ++k) sum += harmonic(k);
            return sum.value();
          },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            return Rational(n) * harmonic(n) - Rational(n);
          }};
}

Identity bg_h2() {
  return {"BG-H2", "Binomially weighted sum of harmonic numbers",
          "sum C(k,m) H_k = C(n, m+1)(H_n - 1/(m+1))",
          {index_param(), aux_param("m", 0)},
          [](const ParamPoint& p) {
            const std::int64_t m = p["m"];
            RationalSum sum;
            for (std::int64_t k = 1; k <= p["n"] - 1; ++k) sum += big(binomial(k, m)) * harmonic(k);
            return sum.value();
          },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t m = p["m"];
            return big(binomial(n, m + 1)) * (harmonic(n) - frac(1, m + 1));
          }};
}

Identity bg_h3() {
  return {"BG-H3", "Index-weighted sum of harmonic numbers",
          "sum k H_k = (n^(2)/2)(H_n - 1/2)",
          {index_param()},
          [](const ParamPoint& p) {
            RationalSum sum;
            for (std::int64_t k = 1; k <= p["n"] - 1; ++k) sum += Rational(k) * harmonic(k);
            return sum.value();
          },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            return frac(falling_power(n, 2), 2) * (harmonic(n) - frac(1, 2));
          }};
}

Identity bg_sp1() {
  return {"BG-SP1", "Binomial transform of harmonic numbers",
          "sum C(n,k) H_k = 2^n(H_n - sum 1/(k2^k))",
          {index_param()},
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            RationalSum sum;
            for (std::int64_t k = 0; k <= n; ++k) sum += big(binomial(n, k)) * harmonic(k);
            return sum.value();
          },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            Rational dyadic;
            BigInt power = 1;
            for (std::int64_t k = 1; k <= n; ++k) {
              power *= 2;
              dyadic += frac(BigInt(1), BigInt(power * static_cast<long>(k)));
            }
            return big(power) * (harmonic(n) - dyadic);
          }};
}

Identity bg_sp2() {
  return {"BG-SP2", "Alternating binomial transform of harmonic numbers",
          "sum C(n,k)(-1)^k H_k = -1/n",
          {index_param()},
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            RationalSum sum;
            for (std::int64_t k = 0; k <= n; ++k) {
              Rational term = big(binomial(n, k)) * harmonic(k);
              if (k % 2) sum -= term;
              else sum += term;
            }
            return sum.value();
          },
          [](const ParamPoint& p) { return frac(-1, p["n"]); }};
}

Identity bg_hh1() {
  return {"BG-HH1", "Hyperharmonic numbers as weighted reciprocal sums",
          "H_n^(r) = sum C(n+r-t-1, r-1) 1/t",
          {index_param(), aux_param("r", 1)},
          [](const ParamPoint& p) { return hyperharmonic(p["n"], p["r"]); },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t r = p["r"];
            RationalSum sum;
            for (std::int64_t t = 1; t <= n; ++t) sum += frac(binomial(n + r - t - 1, r - 1), BigInt(static_cast<long>(t)));
            return sum.value();
          }};
}

Identity bg_hh2() {
  ParamSpec m = aux_param("m", 0);
  m.coupled_max = [](const ParamPoint& p) { return p["r"] - 1; };
  m.coupled_rule = "m <= r - 1";
  return {"BG-HH2", "Hyperharmonic numbers from lower orders",
          "H_n^(r) = sum C(n+r-m-t-1, r-m-1) H_t^(m), 0 <= m <= r-1",
          {index_param(), aux_param("r", 1), m},
          [](const ParamPoint& p) { return hyperharmonic_closed(p["n"], p["r"]); },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t r = p["r"];
            const std::int64_t m = p["m"];
            RationalSum sum;
            for (std::int64_t t = 1; t <= n; ++t) {
              sum += big(binomial(n + r - m - t - 1, r - m - 1)) * hyperharmonic(t, m);
            }
            return sum.value();
          }};
}

Identity bg_hhc() {
  return {"BG-HHC", "Closed form of hyperharmonic numbers",
          "H_n^(r) = C(n+r-1, r-1)(H_{n+r-1} - H_{r-1})",
          {index_param(), aux_param("r", 1)},
          [](const ParamPoint& p) { return hyperharmonic(p["n"], p["r"]); },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t r = p["r"];
            return big(binomial(n + r - 1, r - 1)) * (harmonic(n + r - 1) - harmonic(r - 1));
          }};
}

Identity bg_hstir() {
  return {"BG-HSTIR", "Harmonic numbers via Stirling numbers of the first kind",
          "H_n = [n+1 2]/n!",
          {index_param()},
          [](const ParamPoint& p) { return harmonic(p["n"]); },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            return frac(stirling1_unsigned(n + 1, 2), factorial(n));
          }};
}

// ---- harmonic Fibonacci numbers -----------------------------------------

// Shared shape of the summation-by-parts identities: lhs = sum_{k<n} w(k) FF_k.
template <typename Weight>
Evaluator weighted_fh_sum(Weight weight) {
  return [weight](const ParamPoint& p) {
    const std::int64_t n = p["n"];
    const std::vector<const Rational*> fh = hyper_fib_harmonic_view(n, 1);
    RationalSum sum;
    for (std::int64_t k = 0; k < n; ++k) {
      const Rational& value = *fh[static_cast<std::size_t>(k)];
      if (!value.is_zero()) sum += weight(p, k) * value;
    }
    return sum.value();
  };
}

Identity fh_t21() {
  return {"FH-T21", "Sum of harmonic Fibonacci numbers",
          "sum FF_k = n FF_n - sum (k+1)/F_{k+1}",
          {index_param()},
          weighted_fh_sum([](const ParamPoint&, std::int64_t) { return Rational(1); }),
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            RationalSum tail;
            for (std::int64_t k = 0; k < n; ++k) tail += frac(BigInt(static_cast<long>(k + 1)), fibonacci_ref(k + 1));
            return Rational(n) * fib_harmonic(n) - tail.value();
          }};
}

Identity fh_t22() {
  return {"FH-T22", "Sum of squared harmonic Fibonacci numbers",
          "n FF_n^2 - sum (k+1)/F_{k+1} (2 FF_k + 1/F_{k+1})",
          {index_param()},
          [](const ParamPoint& p) {
            const std::vector<const Rational*> fh = hyper_fib_harmonic_view(p["n"], 1);
            RationalSum sum;
            for (std::int64_t k = 0; k < p["n"]; ++k) {
              const Rational& v = *fh[static_cast<std::size_t>(k)];
              sum += v * v;
            }
            return sum.value();
          },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            RationalSum tail;
            for (std::int64_t k = 0; k < n; ++k) {
              Rational inv = inv_fib(k + 1);
              tail += Rational(k + 1) * inv * (Rational(2) * fib_harmonic(k) + inv);
            }
            const Rational fn = fib_harmonic(n);
            return Rational(n) * fn * fn - tail.value();
          }};
}

Identity fh_t23() {
  return {"FH-T23", "Binomially weighted sum of harmonic Fibonacci numbers",
          "C(n, m+1) FF_n - sum C(k+1, m+1) 1/F_{k+1}",
          {index_param(), aux_param("m", 0)},
          weighted_fh_sum([](const ParamPoint& p, std::int64_t k) { return big(binomial(k, p["m"])); }),
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t m = p["m"];
            RationalSum tail;
            for (std::int64_t k = 0; k < n; ++k) tail += frac(binomial(k + 1, m + 1), fibonacci_ref(k + 1));
            return big(binomial(n, m + 1)) * fib_harmonic(n) - tail.value();
          }};
}

Identity fh_t24() {
  return {"FH-T24", "Falling-power weighted sum of harmonic Fibonacci numbers",
          "n^(m+1)/(m+1) FF_n - sum (k+1)^(m+1)/(m+1) 1/F_{k+1}",
          {index_param(), aux_param("m", 0)},
          weighted_fh_sum([](const ParamPoint& p, std::int64_t k) { return big(falling_power(k, p["m"])); }),
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t m = p["m"];
            const BigInt m1 = static_cast<long>(m + 1);
            RationalSum tail;
            for (std::int64_t k = 0; k < n; ++k) {
              tail += frac(falling_power(k + 1, m + 1), BigInt(m1 * fibonacci_ref(k + 1)));
            }
            return frac(falling_power(n, m + 1), m1) * fib_harmonic(n) - tail.value();
          }};
}

Identity fh_t25() {
  return {"FH-T25", "Harmonic-number form of the reciprocal-index sum",
          "H_n FF_n - sum H_{k+1}/F_{k+1}",
          {index_param()},
          weighted_fh_sum([](const ParamPoint&, std::int64_t k) { return frac(1, k + 1); }),
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            RationalSum tail;
            for (std::int64_t k = 0; k < n; ++k) tail += harmonic(k + 1) * inv_fib(k + 1);
            return harmonic(n) * fib_harmonic(n) - tail.value();
          }};
}

Identity fh_c26() {
  return {"FH-C26", "Stirling-number form of the reciprocal-index sum",
          "[n+1 2]/n! FF_n - sum [k+2 2]/((k+1)! F_{k+1})",
          {index_param()},
          weighted_fh_sum([](const ParamPoint&, std::int64_t k) { return frac(1, k + 1); }),
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            RationalSum tail;
            for (std::int64_t k = 0; k < n; ++k) {
              tail += frac(stirling1_unsigned(k + 2, 2), BigInt(factorial(k + 1) * fibonacci_ref(k + 1)));
            }
            return frac(stirling1_unsigned(n + 1, 2), factorial(n)) * fib_harmonic(n) - tail.value();
          }};
}

Identity fh_t27() {
  return {"FH-T27", "Fibonacci-weighted sum of harmonic Fibonacci numbers",
          "sum F_{k-1} FF_k = F_n FF_n - n",
          {index_param()},
          weighted_fh_sum([](const ParamPoint&, std::int64_t k) { return big(fibonacci(k - 1)); }),
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            return big(fibonacci(n)) * fib_harmonic(n) - Rational(n);
          }};
}

Identity fh_t28() {
  return {"FH-T28", "Lucas-weighted sum of harmonic Fibonacci numbers",
          "L_n FF_n - sum L_{k+1}/F_{k+1}",
          {index_param()},
          weighted_fh_sum([](const ParamPoint&, std::int64_t k) { return big(lucas(k - 1)); }),
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            RationalSum tail;
            for (std::int64_t k = 0; k < n; ++k) tail += frac(lucas(k + 1), fibonacci_ref(k + 1));
            return big(lucas(n)) * fib_harmonic(n) - tail.value();
          }};
}

// ---- hyperharmonic Fibonacci numbers ------------------------------------

Identity hh_l32() {
  return {"HH-L32", "Pascal-type recurrence of hyperharmonic Fibonacci numbers",
          "FF_n^(r) = FF_n^(r-1) + FF_{n-1}^(r)",
          {index_param(), aux_param("r", 1)},
          [](const ParamPoint& p) { return hyper_fib_harmonic_closed(p["n"], p["r"]); },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t r = p["r"];
            return hyper_fib_harmonic(n, r - 1) + hyper_fib_harmonic(n - 1, r);
          }};
}

Identity hh_t33() {
  return {"HH-T33", "Shifted binomial form of hyperharmonic Fibonacci numbers",
          "FF_{n-i+1}^(j) = sum_{k=i}^{n} C(n-k+j-1, j-1) 1/F_{k-i+1}",
          {index_param(), aux_up_to_n("i"), aux_up_to_n("j")},
          [](const ParamPoint& p) { return hyper_fib_harmonic(p["n"] - p["i"] + 1, p["j"]); },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t i = p["i"];
            const std::int64_t j = p["j"];
            RationalSum sum(fibonacci_lcm(n - i + 1));
            for (std::int64_t k = i; k <= n; ++k) sum += frac(binomial(n - k + j - 1, j - 1), fibonacci_ref(k - i + 1));
            return sum.value();
          }};
}

Identity hh_c34() {
  return {"HH-C34", "Binomial closed form of hyperharmonic Fibonacci numbers",
          "FF_n^(r) = sum C(n-k+r-1, r-1) 1/F_k",
          {index_param(), aux_param("r", 1)},
          [](const ParamPoint& p) { return hyper_fib_harmonic(p["n"], p["r"]); },
          [](const ParamPoint& p) { return hyper_fib_harmonic_closed(p["n"], p["r"]); }};
}

Identity hh_t35() {
  return {"HH-T35", "Order composition of hyperharmonic Fibonacci numbers",
          "FF_n^(r+s) = sum C(n-t+r-1, r-1) FF_t^(s), r >= 1, s >= 0",
          {index_param(), aux_param("r", 1), aux_param("s", 0)},
          [](const ParamPoint& p) { return hyper_fib_harmonic_closed(p["n"], p["r"] + p["s"]); },
          [](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t r = p["r"];
            const std::vector<const Rational*> lower = hyper_fib_harmonic_view(n, p["s"]);
            RationalSum sum(fibonacci_lcm(n));
            for (std::int64_t t = 1; t <= n; ++t) {
              sum.add_scaled(binomial(n - t + r - 1, r - 1), *lower[static_cast<std::size_t>(t)]);
            }
            return sum.value();
          }};
}

// Closed-form values keyed by (index, order). The entrywise matrix grid asks
// for the same few thousand entries over and over.
class ClosedFormCache {
 public:
  Rational get(std::int64_t n, std::int64_t r) {
    const std::pair key{n, r};
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    Rational value = hyper_fib_harmonic_closed(n, r);
    std::unique_lock lock(mutex_);
    return values_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> values_;
};

// D * FF_m^(o) for m = 0..n as integers, D = lcm(F_1..F_n), built by the
// prefix-sum recurrence. Kept for one n at a time since grids run n in order.
class ScaledColumns {
 public:
  struct Rows {
    std::int64_t n = -1;
    BigInt denominator;
    std::vector<std::vector<BigInt>> by_order;
  };

  std::shared_ptr<const Rows> get(std::int64_t n, std::int64_t order) {
    std::lock_guard lock(mutex_);
    const auto need = static_cast<std::size_t>(order) + 1;
    if (!current_ || current_->n != n || current_->by_order.size() < need) {
      auto rows = std::make_shared<Rows>();
      if (current_ && current_->n == n) *rows = *current_;
      rows->n = n;
      rows->denominator = fibonacci_lcm(n);
      if (rows->by_order.empty()) {
        std::vector<BigInt> base(static_cast<std::size_t>(n) + 1);
        for (std::int64_t m = 1; m <= n; ++m) base[m] = rows->denominator / fibonacci_ref(m);
        rows->by_order.push_back(std::move(base));
      }
      while (rows->by_order.size() < need) {
        const std::vector<BigInt>& prev = rows->by_order.back();
        std::vector<BigInt> next(prev.size());
        for (std::size_t m = 1; m < prev.size(); ++m) next[m] = next[m - 1] + prev[m];
        rows->by_order.push_back(std::move(next));
      }
      current_ = std::move(rows);
    }
    return current_;
  }

 private:
  std::mutex mutex_;
  std::shared_ptr<const Rows> current_;
};

// Entry (i, j) of C_n^(r+s) against entry (i, j) of A^r C_n^(s).
Identity hh_t35m() {
  return {"HH-T35M", "Matrix form C_n^(r+s) = A^r C_n^(s), entrywise",
          "C_n^(r+s) = A^r C_n^(s)",
          {index_param(), aux_param("r", 1), aux_param("s", 0), aux_up_to_n("i"), aux_up_to_n("j")},
          [cache = std::make_shared<ClosedFormCache>()](const ParamPoint& p) {
            return cache->get(p["n"] - p["i"] + 1, p["r"] + p["s"] + p["j"] - 1);
          },
          [cache = std::make_shared<ScaledColumns>()](const ParamPoint& p) {
            const std::int64_t n = p["n"];
            const std::int64_t r = p["r"];
            const std::int64_t i = p["i"];
            const auto rows = cache->get(n, p["s"] + p["j"] - 1);
            const std::vector<BigInt>& column = rows->by_order[static_cast<std::size_t>(p["s"] + p["j"] - 1)];
            const std::vector<BigInt> b = binomial_diagonal(r - 1, n - i + 1);
            BigInt sum = 0;
            for (std::int64_t k = i; k <= n; ++k) {
              // b_ik = C(k-i+r-1, r-1) of A^r times row k of C_n^(s), which holds index n-k+1.
              sum += b[static_cast<std::size_t>(k - i)] * column[static_cast<std::size_t>(n - k + 1)];
            }
            return Rational(std::move(sum), rows->denominator);
          }};
}

std::vector<Identity> make_registry() {
  std::vector<Identity> all{bg_h1(),  bg_h2(),  bg_h3(),  bg_sp1(), bg_sp2(), bg_hh1(),  bg_hh2(),
                            bg_hhc(), bg_hstir(), fh_t21(), fh_t22(), fh_t23(), fh_t24(), fh_t25(),
                            fh_c26(), fh_t27(), fh_t28(), hh_l32(), hh_t33(), hh_c34(), hh_t35(),
                            hh_t35m()};
  std::sort(all.begin(), all.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; });
  return all;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> all = make_registry();
  return all;
}

}  // namespace hfib
