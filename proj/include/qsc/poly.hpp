#pragma once

// Dense univariate polynomials in q, templated on the coefficient ring.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qsc/error.hpp"

namespace qsc {

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = 32;

template <class R>
inline void addmul(R& acc, const R& a, const R& b) {
  if constexpr (std::is_same_v<R, mpz_class>) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    acc += a * b;
  }
}

template <class R>
void schoolbook(const R* a, std::size_t na, const R* b, std::size_t nb, R* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) addmul(out[i + j], a[i], b[j]);
  }
}

// out[0 .. 2n-1) += a[0..n) * b[0..n)
template <class R>
void karatsuba(const R* a, const R* b, std::size_t n, R* out) {
  if (n <= kKaratsubaThreshold) {
    schoolbook(a, n, b, n, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  std::vector<R> z0(2 * lo), z2(2 * hi), z1(2 * hi);
  karatsuba(a, b, lo, z0.data());
  karatsuba(a + lo, b + lo, hi, z2.data());
  std::vector<R> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a[lo + i];
    sb[i] = b[lo + i];
    if (i < lo) {
      sa[i] += a[i];
      sb[i] += b[i];
    }
  }
  karatsuba(sa.data(), sb.data(), hi, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] += z2[i];
}

template <class R>
std::vector<R> multiply(const std::vector<R>& a, const std::vector<R>& b) {
  if (a.empty() || b.empty()) return {};
  const std::vector<R>& small = a.size() <= b.size() ? a : b;
  const std::vector<R>& big = a.size() <= b.size() ? b : a;
  std::vector<R> out(a.size() + b.size() - 1);

  std::size_t nnz = 0;
  for (const auto& x : small) nnz += (x != 0);
  if (nnz * 4 <= small.size() || small.size() <= kKaratsubaThreshold || !std::is_same_v<R, mpz_class>) {
    // sparse or short operand: direct loop skipping zero coefficients
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (small[i] == 0) continue;
      for (std::size_t j = 0; j < big.size(); ++j) addmul(out[i + j], small[i], big[j]);
    }
    return out;
  }
  // split the long operand into blocks of the short operand's length
  const std::size_t n = small.size();
  std::vector<R> block(n), partial(2 * n);
  for (std::size_t start = 0; start < big.size(); start += n) {
    const std::size_t len = std::min(n, big.size() - start);
    for (std::size_t i = 0; i < n; ++i) block[i] = i < len ? big[start + i] : R(0);
    for (auto& x : partial) x = 0;
    karatsuba(small.data(), block.data(), n, partial.data());
    for (std::size_t i = 0; i < 2 * n - 1 && start + i < out.size(); ++i) out[start + i] += partial[i];
  }
  return out;
}

}  // namespace detail

template <class R>
class Poly {
 public:
  using Scalar = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const R& value) { return Poly(std::vector<R>{value}); }
  static Poly one() { return constant(R(1)); }
  /// value * q^degree
  static Poly monomial(const R& value, int degree) {
    std::vector<R> c(static_cast<std::size_t>(degree) + 1);
    c.back() = value;
    return Poly(std::move(c));
  }
  /// 1 - value * q^degree
  static Poly binomial(const R& value, int degree) {
    if (degree == 0) return constant(R(1) - value);
    std::vector<R> c(static_cast<std::size_t>(degree) + 1);
    c.front() = R(1);
    c.back() = -value;
    return Poly(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::size_t size() const noexcept { return c_.size(); }

  const std::vector<R>& coeffs() const noexcept { return c_; }
  std::vector<R>& mutable_coeffs() noexcept { return c_; }

  /// Coefficient of q^i, zero beyond the degree.
  R coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[static_cast<std::size_t>(i)] : R(0); }
  const R& operator[](std::size_t i) const { return c_[i]; }
  const R& lead() const { return c_.back(); }

  std::size_t nonzero_terms() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const R& x) { return x != 0; }));
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  /// Multiplies by q^k (k >= 0).
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<R> c(static_cast<std::size_t>(k));
    c.insert(c.end(), c_.begin(), c_.end());
    Poly out;
    out.c_ = std::move(c);
    return out;
  }

  template <class S>
  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += S(*it);
    }
    return acc;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return Poly(detail::multiply(a.c_, b.c_)); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::vector<R> c_;
};


template <class R>
Poly<R> pow(const Poly<R>& base, unsigned e) {
  Poly<R> out = Poly<R>::one();
  Poly<R> b = base;
  while (e > 0) {
    if (e & 1u) out *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return out;
}

/// Division with remainder over a field: f = g*quot + rem, deg rem < deg g.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& f, const Poly<R>& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (f.degree() < g.degree()) return {Poly<R>(), f};
  std::vector<R> rem = f.coeffs();
  const int dg = g.degree();
  std::vector<R> quot(static_cast<std::size_t>(f.degree() - dg + 1));
  const R inv_lead = R(1) / g.lead();
  std::vector<std::pair<int, R>> terms;
  for (int i = 0; i < dg; ++i) {
    if (g[static_cast<std::size_t>(i)] != 0) terms.emplace_back(i, g[static_cast<std::size_t>(i)]);
  }
  for (int i = f.degree(); i >= dg; --i) {
    R c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    c *= inv_lead;
    const int shift = i - dg;
    for (const auto& [j, gj] : terms) rem[static_cast<std::size_t>(shift + j)] -= c * gj;
    rem[static_cast<std::size_t>(i)] = 0;
    quot[static_cast<std::size_t>(shift)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {Poly<R>(std::move(quot)), Poly<R>(std::move(rem))};
}

template <class R>
std::string to_string(const Poly<R>& p, const char* var = "q") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const R& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    R mag = c < 0 ? R(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& p) {
  return os << to_string(p);
}

}  // namespace qsc
