#include "dascent/genfun.hpp"

#include <stdexcept>
#include <vector>

namespace dascent {

Poly fib_poly(Entry d, Entry n, std::optional<Entry> trunc) {
  if (d < 0) throw std::invalid_argument("fib_poly: d must be >= 0");
  if (d == 0) {
    if (!trunc || *trunc < 0)
      throw std::invalid_argument("fib_poly: d = 0 requires a truncation order");
    if (n < 0) return Poly::one();
    // 1/(1-x)^(n+1): coefficient of x^j is C(n+j, j), built incrementally.
    std::vector<std::int64_t> c(static_cast<std::size_t>(*trunc) + 1);
    c[0] = 1;
    for (Entry j = 1; j <= *trunc; ++j) {
      auto& prev = c[static_cast<std::size_t>(j) - 1];
      c[static_cast<std::size_t>(j)] = checked_mul(prev, n + j) / j;
    }
    return Poly(std::move(c));
  }
  if (n < d) return Poly::one();
  // One column of the recurrence per index; indices below d are all 1.
  std::vector<Poly> f(static_cast<std::size_t>(n) + 1, Poly::one());
  for (Entry m = d; m <= n; ++m) {
    f[static_cast<std::size_t>(m)] =
        f[static_cast<std::size_t>(m - 1)] +
        Poly::x() * f[static_cast<std::size_t>(m - d)];
  }
  return f[static_cast<std::size_t>(n)];
}

Poly k_poly(Entry d, Entry n, std::optional<Entry> trunc) {
  if (n < 0) throw std::invalid_argument("k_poly: n must be >= 0");
  if (n == 0) return fib_poly(d, 0, trunc);
  return fib_poly(d, n, trunc) - fib_poly(d, n - 1, trunc);
}

Poly fibotorial(Entry d, Entry n, std::optional<Entry> trunc) {
  Poly prod = Poly::one();
  for (Entry i = 0; i <= n; ++i) {
    if (trunc) {
      prod = mul_trunc(prod, fib_poly(d, i, trunc), *trunc);
    } else {
      prod = prod * fib_poly(d, i);
    }
  }
  return prod;
}

QxSeries self_gf(Entry d, Entry trunc) {
  if (trunc < 0) throw std::invalid_argument("self_gf: trunc must be >= 0");
  QxSeries s(static_cast<std::size_t>(trunc));
  s.qcoeff(0) += Poly::one();  // the empty sequence
  for (Entry k = 1; k <= trunc; ++k) {
    Poly tails = fibotorial(d, k - 1, trunc - k);
    for (Entry j = 0; j <= tails.degree(); ++j) {
      if (k + j > trunc) break;
      s.qcoeff(static_cast<std::size_t>(k + j)) +=
          Poly::monomial(tails[static_cast<std::size_t>(j)],
                         static_cast<std::size_t>(k));
    }
  }
  return s;
}

QxSeries shifted_self(Entry d, Entry trunc) {
  if (d < 0) throw std::invalid_argument("shifted_self: d must be >= 0");
  if (trunc < 0) throw std::invalid_argument("shifted_self: trunc must be >= 0");
  QxSeries full = self_gf(d, trunc + d);
  // Remove the head 1 + qx + ... + (qx)^(d-1), then shift down by (qx)^d.
  for (Entry k = 0; k < d; ++k)
    full.qcoeff(static_cast<std::size_t>(k)) -=
        Poly::monomial(1, static_cast<std::size_t>(k));
  QxSeries out(static_cast<std::size_t>(trunc));
  for (Entry n = 0; n <= trunc + d; ++n) {
    const Poly& col = full.qcoeff(static_cast<std::size_t>(n));
    for (Entry k = 0; k <= col.degree(); ++k) {
      std::int64_t c = col[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      if (n < d || k < d)
        throw std::logic_error("shifted_self: division by (qx)^d is not exact");
      out.qcoeff(static_cast<std::size_t>(n - d)) +=
          Poly::monomial(c, static_cast<std::size_t>(k - d));
    }
  }
  return out;
}

QxSeries limit_series(Entry trunc) {
  if (trunc < 0) throw std::invalid_argument("limit_series: trunc must be >= 0");
  QxSeries s(static_cast<std::size_t>(trunc));
  Poly rising = Poly::one();  // (1+x)(1+2x)...(1+kx), truncated as needed
  for (Entry k = 0; k <= trunc; ++k) {
    if (k > 0) {
      Poly factor({1, k});
      rising = mul_trunc(rising, factor, static_cast<std::size_t>(trunc - k));
    }
    for (Entry j = 0; j <= rising.degree(); ++j) {
      if (k + j > trunc) break;
      s.qcoeff(static_cast<std::size_t>(k + j)) +=
          Poly::monomial(rising[static_cast<std::size_t>(j)],
                         static_cast<std::size_t>(k));
    }
  }
  return s;
}

Poly des_poly(Entry d, Entry n) {
  if (n < 1) throw std::invalid_argument("des_poly: n must be >= 1");
  return fib_poly(d + 1, n - 1);
}

}  // namespace dascent
