#include "dascent/polynomial.hpp"

#include <stdexcept>

namespace dascent {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial arithmetic overflowed 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial arithmetic overflowed 64 bits");
  return r;
}

Poly::Poly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::one() { return Poly({1}); }
Poly Poly::x() { return Poly({0, 1}); }

Poly Poly::monomial(std::int64_t coef, std::size_t exp) {
  if (coef == 0) return Poly();
  std::vector<std::int64_t> c(exp + 1, 0);
  c[exp] = coef;
  return Poly(std::move(c));
}

std::int64_t Poly::operator[](std::size_t exp) const {
  return exp < c_.size() ? c_[exp] : 0;
}

std::int64_t Poly::degree() const { return std::int64_t(c_.size()) - 1; }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  return Poly(std::move(c));
}

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t order) {
  std::vector<std::int64_t> c(order + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size() && i <= order; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size() && i + j <= order; ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly(std::move(c));
}

Poly Poly::truncated(std::size_t order) const {
  if (c_.size() <= order + 1) return *this;
  return Poly(std::vector<std::int64_t>(c_.begin(), c_.begin() + std::ptrdiff_t(order) + 1));
}

std::int64_t Poly::eval(std::int64_t at) const {
  std::int64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = checked_add(checked_mul(r, at), c_[i]);
  return r;
}

std::string Poly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    const std::int64_t v = c_[e];
    if (v == 0) continue;
    if (first) {
      if (v < 0) s += '-';
      first = false;
    } else {
      s += v < 0 ? " - " : " + ";
    }
    const std::uint64_t a = v < 0 ? ~std::uint64_t(v) + 1 : std::uint64_t(v);
    if (a != 1 || e == 0) s += std::to_string(a);
    if (e >= 1) {
      s += var;
      if (e >= 2) {
        s += '^';
        s += std::to_string(e);
      }
    }
  }
  return s;
}

std::vector<std::int64_t> QxSeries::counts() const {
  std::vector<std::int64_t> out;
  out.reserve(byx_.size());
  for (const Poly& p : byx_) out.push_back(p.eval(1));
  return out;
}

std::string QxSeries::str() const {
  std::string s;
  for (std::size_t n = 0; n < byx_.size(); ++n) {
    s += "x^";
    s += std::to_string(n);
    s += ": ";
    s += byx_[n].str("q");
    s += '\n';
  }
  return s;
}

}  // namespace dascent
