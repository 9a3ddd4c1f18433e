#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Dense exact-integer polynomials. Coefficients are 64-bit and every
// arithmetic step is overflow-checked: overflow throws, never wraps.

namespace dascent {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<std::int64_t> coeffs);
  static Poly one();
  static Poly x();
  static Poly monomial(std::int64_t coef, std::size_t exp);

  // 0 beyond the degree; exponents are never negative.
  std::int64_t operator[](std::size_t exp) const;
  std::int64_t degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

  Poly truncated(std::size_t order) const;  // drop exponents > order
  std::int64_t eval(std::int64_t at) const;

  // Ascending powers, e.g. "1 + 3x + 2x^2"; "0" for the zero polynomial.
  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<std::int64_t> c_;  // index = exponent; trailing zeros trimmed
};

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t order);

// Power series in x whose coefficients are polynomials in q. Exact up to
// the construction's truncation order; the q-degree at x-power n is at
// most n throughout this project.
class QxSeries {
 public:
  explicit QxSeries(std::size_t trunc) : byx_(trunc + 1) {}
  std::size_t trunc() const { return byx_.size() - 1; }
  const Poly& qcoeff(std::size_t xpow) const { return byx_.at(xpow); }
  Poly& qcoeff(std::size_t xpow) { return byx_.at(xpow); }
  bool operator==(const QxSeries&) const = default;

  std::vector<std::int64_t> counts() const;  // evaluation at q = 1, per x-power
  std::string str() const;                   // one "x^n: <q-polynomial>" line per power

 private:
  std::vector<Poly> byx_;
};

}  // namespace dascent
