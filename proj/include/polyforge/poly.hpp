#pragma once

#include <polyforge/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyforge {

// Dense univariate polynomial over the rationals. coeff_[i] multiplies x^i;
// the top coefficient is nonzero unless the polynomial is zero (empty vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const Rat& constant) : c_{constant} { trim(); }
  Poly(long long constant) : c_{Rat(constant)} { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }
  static Poly x() { return monomial(1, Rat(1)); }
  static Poly monomial(int deg, const Rat& coeff) {
    if (coeff == 0) return Poly();
    std::vector<Rat> c(size_t(deg) + 1, Rat(0));
    c[size_t(deg)] = coeff;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial

  const Rat& coeff(int i) const {
    static const Rat kZero = Rat(0);
    if (i < 0 || size_t(i) >= c_.size()) return kZero;
    return c_[size_t(i)];
  }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const {
    if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
  }

  void set_coeff(int i, const Rat& v) {
    if (i < 0) throw std::invalid_argument("negative exponent");
    if (size_t(i) >= c_.size()) {
      if (v == 0) return;
      c_.resize(size_t(i) + 1, Rat(0));
    }
    c_[size_t(i)] = v;
    trim();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& operator*=(const Rat& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

  Poly pow(unsigned e) const {
    Poly r = one();
    Poly b = *this;
    while (e) {
      if (e & 1) r *= b;
      if (e > 1) b *= b;
      e >>= 1;
    }
    return r;
  }

  Rat operator()(const Rat& x) const {
    Rat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // Substitute another polynomial for the variable.
  Poly compose(const Poly& inner) const {
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * inner + Poly(c_[i]);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(BigInt(i), 1);
    return Poly(std::move(d));
  }

  // Quotient and remainder by a nonzero divisor.
  std::pair<Poly, Poly> divrem(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly r = *this;
    Poly q;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      Rat f = r.leading() / d.leading();
      q += monomial(k, f);
      for (size_t i = 0; i < d.c_.size(); ++i) r.c_[size_t(k) + i] -= f * d.c_[i];
      r.trim();
    }
    return {q, r};
  }

  Poly divexact(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rat& a = c_[size_t(i)];
      if (a == 0) continue;
      bool first = out.empty();
      Rat mag = a < 0 ? Rat(-a) : a;
      if (first)
        out += (a < 0 ? "-" : "");
      else
        out += (a < 0 ? " - " : " + ");
      bool unit = (mag == 1) && i > 0;
      if (!unit) out += to_string(mag);
      if (i > 0) {
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// (x)_k = x(x-1)...(x-k+1)
inline Poly falling_factorial_poly(unsigned k) {
  Poly r = Poly::one();
  for (unsigned i = 0; i < k; ++i) r *= (Poly::x() - Poly(Rat(BigInt(i), 1)));
  return r;
}

// <x>_k = x(x+1)...(x+k-1)
inline Poly rising_factorial_poly(unsigned k) {
  Poly r = Poly::one();
  for (unsigned i = 0; i < k; ++i) r *= (Poly::x() + Poly(Rat(BigInt(i), 1)));
  return r;
}

// C(x+a, p) as a polynomial in x.
inline Poly binom_shift_poly(long long a, unsigned p) {
  Poly r = Poly::one();
  for (unsigned i = 0; i < p; ++i) r *= (Poly::x() + Poly(Rat(BigInt(a) - BigInt(i), 1)));
  return r * Rat(BigInt(1), factorial(p));
}

}  // namespace polyforge
