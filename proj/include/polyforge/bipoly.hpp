#pragma once

#include <polyforge/poly.hpp>

#include <map>
#include <string>
#include <utility>

namespace polyforge {

// Sparse bivariate polynomial over the rationals, keyed by (x-power, y-power).
// No zero coefficients are stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  static BiPoly one() { return monomial(0, 0, Rat(1)); }
  static BiPoly x() { return monomial(1, 0, Rat(1)); }
  static BiPoly y() { return monomial(0, 1, Rat(1)); }
  static BiPoly monomial(int i, int j, const Rat& c) {
    BiPoly r;
    r.add_term(i, j, c);
    return r;
  }
  static BiPoly from_x(const Poly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(i, 0, p.coeff(i));
    return r;
  }
  static BiPoly from_y(const Poly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(0, i, p.coeff(i));
    return r;
  }
  // p(x*y): each x^d becomes x^d y^d.
  static BiPoly from_uni_at_xy(const Poly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(i, i, p.coeff(i));
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, Rat>& terms() const { return t_; }

  void add_term(int i, int j, const Rat& c) {
    if (c == 0) return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
      t_.emplace(Key{i, j}, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Rat coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) {
    BiPoly r;
    for (const auto& [k, c] : a.t_) r.t_.emplace(k, -c);
    return r;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly& operator*=(const Rat& s) {
    if (s == 0) {
      t_.clear();
      return *this;
    }
    for (auto& [k, c] : t_) c *= s;
    return *this;
  }
  friend BiPoly operator*(BiPoly a, const Rat& s) { return a *= s; }
  friend BiPoly operator*(const Rat& s, BiPoly a) { return a *= s; }

  BiPoly pow(unsigned e) const {
    BiPoly r = one();
    BiPoly b = *this;
    while (e) {
      if (e & 1) r *= b;
      if (e > 1) b *= b;
      e >>= 1;
    }
    return r;
  }

  Rat operator()(const Rat& x, const Rat& y) const {
    Rat r = 0;
    for (const auto& [k, c] : t_) r += c * rat_pow(x, k.first) * rat_pow(y, k.second);
    return r;
  }

  // Fix y, leaving a polynomial in x.
  Poly eval_y(const Rat& y) const {
    Poly r;
    for (const auto& [k, c] : t_) r += Poly::monomial(k.first, c * rat_pow(y, k.second));
    return r;
  }
  Poly eval_x(const Rat& x) const {
    Poly r;
    for (const auto& [k, c] : t_) r += Poly::monomial(k.second, c * rat_pow(x, k.first));
    return r;
  }

  // Substitute y := q(x); the result collapses to a univariate polynomial in x.
  Poly substitute_y(const Poly& q) const {
    Poly r;
    for (const auto& [k, c] : t_)
      r += Poly::monomial(k.first, c) * q.pow(unsigned(k.second));
    return r;
  }

  int x_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
  }
  int y_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
  }

  std::string str(const std::string& vx = "x", const std::string& vy = "y") const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [k, c] = *it;
      bool first = out.empty();
      Rat mag = c < 0 ? Rat(-c) : c;
      if (first)
        out += (c < 0 ? "-" : "");
      else
        out += (c < 0 ? " - " : " + ");
      bool unit = (mag == 1) && (k.first > 0 || k.second > 0);
      if (!unit) out += to_string(mag);
      if (k.first > 0) {
        out += vx;
        if (k.first > 1) out += "^" + std::to_string(k.first);
      }
      if (k.second > 0) {
        out += vy;
        if (k.second > 1) out += "^" + std::to_string(k.second);
      }
    }
    return out;
  }

 private:
  std::map<Key, Rat> t_;
};

// Substitute a bivariate value into a univariate polynomial.
inline BiPoly compose_biv(const Poly& p, const BiPoly& inner) {
  BiPoly r;
  for (int i = p.degree(); i >= 0; --i) {
    r = r * inner;
    r += BiPoly::monomial(0, 0, p.coeff(i));
  }
  return r;
}

}  // namespace polyforge
