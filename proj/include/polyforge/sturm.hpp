#pragma once

#include <polyforge/poly.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace polyforge {

// Scales a nonzero polynomial by a positive rational so the coefficients are
// coprime integers. Sign-preserving, so Sturm sign sequences are unaffected.
inline Poly primitive_part(const Poly& f) {
  if (f.is_zero()) return f;
  BigInt g = 0, l = 1;
  for (const Rat& c : f.coeffs()) {
    if (c == 0) continue;
    g = boost::multiprecision::gcd(g, num(c));
    l = l / boost::multiprecision::gcd(l, den(c)) * den(c);
  }
  Rat scale(l, g);
  std::vector<Rat> out(f.coeffs());
  for (auto& c : out) c *= scale;
  return Poly(std::move(out));
}

inline Poly poly_gcd(Poly a, Poly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    Poly r = a.divrem(b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  if (a.leading() < 0) a *= Rat(-1);
  return a;
}

inline Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Poly g = poly_gcd(f, f.derivative());
  if (g.degree() <= 0) return primitive_part(f);
  return primitive_part(f.divexact(g));
}

// Yun decomposition: pairwise-coprime squarefree factors with multiplicities,
// product over factors of factor^mult equal to f up to a constant.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  Poly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.push_back({primitive_part(f), 1});
    return out;
  }
  Poly a = f.divexact(g);
  Poly b = f.derivative().divexact(g);
  Poly c = b - a.derivative();
  int i = 1;
  while (a.degree() > 0) {
    Poly d = poly_gcd(a, c);
    if (d.degree() > 0) out.push_back({d, i});
    a = a.divexact(d.degree() > 0 ? d : Poly::one());
    b = (d.degree() > 0) ? c.divexact(d) : c;
    c = b - a.derivative();
    ++i;
  }
  return out;
}

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain;
  chain.push_back(primitive_part(f));
  Poly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive_part(d));
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = a.divrem(b).second;
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

inline int variations_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const Poly& p : chain) s.push_back(sign(p(x)));
  return variations(s);
}

// dir = +1 for +infinity, -1 for -infinity.
inline int variations_at_inf(const std::vector<Poly>& chain, int dir) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const Poly& p : chain) {
    if (p.is_zero()) {
      s.push_back(0);
      continue;
    }
    int lc = sign(p.leading());
    s.push_back((dir < 0 && (p.degree() % 2 == 1)) ? -lc : lc);
  }
  return variations(s);
}

}  // namespace detail

// All real roots lie in (-B, B].
inline Rat cauchy_root_bound(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Rat m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rat a = f.coeff(i) / f.leading();
    if (a < 0) a = -a;
    if (a > m) m = a;
  }
  return m + 1;
}

// Number of distinct real roots in the half-open interval (a, b].
inline int sturm_count_interval(const Poly& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (b < a) throw std::invalid_argument("empty interval");
  Poly g = squarefree_part(f);
  if (g.degree() == 0) return 0;
  auto chain = detail::sturm_chain(g);
  return detail::variations_at(chain, a) - detail::variations_at(chain, b);
}

// Number of distinct real roots on the whole line.
inline int sturm_count_all(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Poly g = squarefree_part(f);
  if (g.degree() == 0) return 0;
  auto chain = detail::sturm_chain(g);
  return detail::variations_at_inf(chain, -1) - detail::variations_at_inf(chain, +1);
}

// True iff every root of f is real, counting multiplicity via the squarefree
// decomposition so multiple roots are not misclassified.
inline bool all_roots_real(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.degree() == 0) return true;
  int with_mult = 0;
  for (const auto& [fac, mult] : squarefree_decomposition(f))
    with_mult += mult * sturm_count_all(fac);
  return with_mult == f.degree();
}

inline int root_multiplicity_at(const Poly& f, const Rat& r) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Poly g = f;
  Poly lin = Poly::x() - Poly(r);
  int mult = 0;
  while (!g.is_zero() && g(r) == 0) {
    g = g.divexact(lin);
    ++mult;
  }
  return mult;
}

// Isolating half-open intervals (lo, hi] for the distinct real roots of f,
// refined by bisection until hi - lo <= width (width 0 keeps raw isolation;
// an exact rational root may come back as a point interval).
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& f, const Rat& width) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Poly g = squarefree_part(f);
  std::vector<std::pair<Rat, Rat>> out;
  if (g.degree() == 0) return out;
  auto chain = detail::sturm_chain(g);
  Rat bound = cauchy_root_bound(g);
  struct Seg {
    Rat lo, hi;
    int nroots;
  };
  std::vector<Seg> stack;
  int total = detail::variations_at(chain, -bound) - detail::variations_at(chain, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.nroots == 1 && (width == 0 || s.hi - s.lo <= width)) {
      out.push_back({s.lo, s.hi});
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (s.nroots == 1 && g(mid) == 0) {
      out.push_back({mid, mid});
      continue;
    }
    int left = detail::variations_at(chain, s.lo) - detail::variations_at(chain, mid);
    int right = s.nroots - left;
    if (right > 0) stack.push_back({mid, s.hi, right});
    if (left > 0) stack.push_back({s.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace polyforge
