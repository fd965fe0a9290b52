#pragma once

#include <polyforge/bases.hpp>
#include <polyforge/bipoly.hpp>
#include <polyforge/digraph.hpp>
#include <polyforge/poly.hpp>
#include <polyforge/report.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyforge {

// An order-preserved ordering of the vertices with its two descent-like
// statistics: rho counts label ascents, delta additionally counts arc steps.
struct Ordering {
  std::vector<int> perm;
  int rho = 0;
  int delta = 0;
};

struct OrderPolyResult {
  Poly poly;                             // polynomial in k
  std::vector<BigInt> tournament_counts; // t_i from the recursion route, else empty
  std::vector<int> rho_values;           // per-ordering rho from the expansion route
};

namespace detail {

inline void check_small_order(const Digraph& d) {
  if (d.order() > 9) throw std::invalid_argument("ordering enumeration limited to 9 vertices");
}

inline int rho_of(const std::vector<int>& perm) {
  int r = 0;
  for (size_t j = 0; j + 1 < perm.size(); ++j)
    if (perm[j] < perm[j + 1]) ++r;
  return r;
}

inline int delta_of(const std::vector<int>& perm, const Digraph& d) {
  int r = 0;
  for (size_t j = 0; j + 1 < perm.size(); ++j)
    if (perm[j] < perm[j + 1] || d.has_arc(perm[j], perm[j + 1])) ++r;
  return r;
}

// Orderings in which every arc points forward in the sequence; labels are not
// assumed topological here.
inline std::vector<Ordering> orderings_by_position(const Digraph& d) {
  check_small_order(d);
  int p = d.order();
  std::vector<int> perm(static_cast<size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Ordering> out;
  do {
    std::vector<int> pos(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) pos[size_t(perm[size_t(i)])] = i;
    bool ok = true;
    for (auto [u, v] : d.arcs())
      if (pos[size_t(u)] > pos[size_t(v)]) {
        ok = false;
        break;
      }
    if (ok) out.push_back({perm, rho_of(perm), delta_of(perm, d)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace detail

// OP(D) for a topologically labelled acyclic digraph (i -> j implies i < j);
// throws if the labelling is not topological.
inline std::vector<Ordering> op_list(const Digraph& d) {
  if (!d.is_acyclic()) throw std::invalid_argument("digraph must be acyclic");
  if (!d.is_topologically_labelled())
    throw std::invalid_argument("labels must be topological (relabel first)");
  return detail::orderings_by_position(d);
}

// Strict order polynomial via Stanley's recursion: branch on a non-adjacent
// pair until every surviving digraph is an acyclic tournament, then
// Omega-bar = sum_i t_i C(k, i).
inline OrderPolyResult omega_strict_recursion(const Digraph& d0) {
  detail::check_small_order(d0);
  std::vector<BigInt> t(size_t(d0.order()) + 1, BigInt(0));
  std::vector<Digraph> stack;
  if (d0.is_acyclic()) stack.push_back(d0);
  while (!stack.empty()) {
    Digraph d = stack.back();
    stack.pop_back();
    int p = d.order();
    int u = -1, v = -1;
    for (int a = 0; a < p && u < 0; ++a)
      for (int b = a + 1; b < p && u < 0; ++b)
        if (!d.has_arc(a, b) && !d.has_arc(b, a)) {
          u = a;
          v = b;
        }
    if (u < 0) {
      t[size_t(p)] += 1;  // acyclic tournament
      continue;
    }
    Digraph d1 = d;
    d1.add_arc(u, v);
    if (d1.is_acyclic()) stack.push_back(d1);
    Digraph d2 = d;
    d2.add_arc(v, u);
    if (d2.is_acyclic()) stack.push_back(d2);
    Digraph d3 = d.identify(u, v);
    if (d3.is_acyclic()) stack.push_back(d3);
  }
  OrderPolyResult res;
  res.tournament_counts = t;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) res.poly += binom_shift_poly(0, unsigned(i)) * Rat(t[i], 1);
  return res;
}

// Omega-bar(D,k) = sum over OP(D) of C(k + p - 1 - rho, p).
inline OrderPolyResult omega_strict_expansion(const Digraph& d) {
  if (!d.is_acyclic()) throw std::invalid_argument("digraph must be acyclic");
  Digraph t = d.is_topologically_labelled() ? d : d.topological_relabel();
  int p = t.order();
  OrderPolyResult res;
  for (const Ordering& pi : op_list(t)) {
    res.rho_values.push_back(pi.rho);
    res.poly += binom_shift_poly(p - 1 - pi.rho, unsigned(p));
  }
  if (p == 0) res.poly = Poly::one();
  return res;
}

// Omega(D,k) = sum over OP(D) of C(k + rho, p).
inline OrderPolyResult omega_weak_expansion(const Digraph& d) {
  if (!d.is_acyclic()) throw std::invalid_argument("digraph must be acyclic");
  Digraph t = d.is_topologically_labelled() ? d : d.topological_relabel();
  int p = t.order();
  OrderPolyResult res;
  for (const Ordering& pi : op_list(t)) {
    res.rho_values.push_back(pi.rho);
    res.poly += binom_shift_poly(pi.rho, unsigned(p));
  }
  if (p == 0) res.poly = Poly::one();
  return res;
}

// Brute-force count of (strictly) order-preserving maps V -> {1..k}.
inline BigInt omega_enum(const Digraph& d, int k, bool strict) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  int p = d.order();
  double budget = 1;
  for (int i = 0; i < p; ++i) {
    budget *= std::max(k, 1);
    if (budget > 1e7) throw std::invalid_argument("enumeration bound exceeded");
  }
  std::vector<int> theta(static_cast<size_t>(p), 1);
  BigInt count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == p) {
      for (auto [a, b] : d.arcs()) {
        if (strict ? !(theta[size_t(a)] < theta[size_t(b)])
                   : !(theta[size_t(a)] <= theta[size_t(b)]))
          return;
      }
      ++count;
      return;
    }
    for (int c = 1; c <= k; ++c) {
      theta[size_t(v)] = c;
      rec(v + 1);
    }
  };
  if (p == 0) return 1;
  if (k == 0) return 0;
  rec(0);
  return count;
}

// Exact polynomial through the p+1 points (0..p, values) by Lagrange.
inline Poly interpolate_at_integers(const std::vector<Rat>& values) {
  int n = int(values.size());
  Poly out;
  for (int i = 0; i < n; ++i) {
    Poly li = Poly::one();
    Rat denom = 1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      li *= (Poly::x() - Poly(Rat(j)));
      denom *= Rat(i - j);
    }
    out += li * (values[size_t(i)] / denom);
  }
  return out;
}

// Omega(D,k) = (-1)^p Omega-bar(D,-k) as exact polynomials.
inline IdentityReport reciprocity_check(const Digraph& d, const std::string& instance) {
  Poly strict = omega_strict_expansion(d).poly;
  Poly weak = omega_weak_expansion(d).poly;
  Poly reflected = strict.compose(-Poly::x());
  if (d.order() % 2) reflected *= Rat(-1);
  if (reflected == weak) return report_pass("order-reciprocity", instance);
  return report_fail("order-reciprocity", instance, weak.str("k"), reflected.str("k"));
}

// Generating functions: sum_k Omega-bar(D,k) x^k = sum_pi x^{rho+1}/(1-x)^{p+1}
// and the weak version with numerator sum_pi x^{p-rho}.
inline IdentityReport genfun_check(const Digraph& d, int k_max, const std::string& instance) {
  OrderPolyResult strict = omega_strict_expansion(d);
  OrderPolyResult weak = omega_weak_expansion(d);
  int p = d.order();
  Poly num_strict, num_weak;
  for (int r : strict.rho_values) num_strict += Poly::monomial(r + 1, Rat(1));
  for (int r : weak.rho_values) num_weak += Poly::monomial(p - r, Rat(1));
  auto strict_series = series_coeffs(num_strict, p, k_max);
  auto weak_series = series_coeffs(num_weak, p, k_max);
  for (int k = 0; k <= k_max; ++k) {
    if (strict_series[size_t(k)] != strict.poly(Rat(k)))
      return report_fail("order-genfun-strict", instance, to_string(strict_series[size_t(k)]),
                         to_string(strict.poly(Rat(k))) + " at k=" + std::to_string(k));
    if (weak_series[size_t(k)] != weak.poly(Rat(k)))
      return report_fail("order-genfun-weak", instance, to_string(weak_series[size_t(k)]),
                         to_string(weak.poly(Rat(k))) + " at k=" + std::to_string(k));
  }
  return report_pass("order-genfun", instance);
}

// Tugger: Omega-bar(D, x+y) = sum over order ideals D' of
// Omega-bar(D',x) Omega-bar(D minus V(D'), y).
inline IdentityReport tugger_check(const Digraph& d, const std::string& instance) {
  if (!d.is_acyclic()) throw std::invalid_argument("digraph must be acyclic");
  int p = d.order();
  if (p > 10) throw std::invalid_argument("tugger check limited to 10 vertices");
  BiPoly lhs = compose_biv(omega_strict_expansion(d).poly, BiPoly::x() + BiPoly::y());
  BiPoly rhs;
  for (uint32_t s = 0; s < (uint32_t(1) << p); ++s) {
    bool ideal = true;
    for (auto [a, b] : d.arcs())
      if ((s >> b & 1) && !(s >> a & 1)) {
        ideal = false;
        break;
      }
    if (!ideal) continue;
    auto induce = [&](uint32_t mask) {
      std::vector<int> map(static_cast<size_t>(p), -1);
      int next = 0;
      for (int v = 0; v < p; ++v)
        if (mask >> v & 1) map[size_t(v)] = next++;
      Digraph sub(next);
      for (auto [a, b] : d.arcs())
        if ((mask >> a & 1) && (mask >> b & 1)) sub.add_arc(map[size_t(a)], map[size_t(b)]);
      return sub;
    };
    Poly in = omega_strict_expansion(induce(s)).poly;
    Poly out = omega_strict_expansion(induce(~s & ((uint32_t(1) << p) - 1))).poly;
    rhs += BiPoly::from_x(in) * BiPoly::from_y(out);
  }
  if (lhs == rhs) return report_pass("order-tugger", instance);
  return report_fail("order-tugger", instance, lhs.str(), rhs.str());
}

// Dong's criterion: with W(D) = { a<b<c : (c,a) in A, b not reachable from c,
// a not reachable from b }, the formula sum_pi C(x + delta(pi), p) equals the
// weak order polynomial exactly when W(D) is empty.
inline IdentityReport dong_criterion(const Digraph& d, const std::string& instance) {
  if (!d.is_acyclic()) throw std::invalid_argument("digraph must be acyclic");
  int p = d.order();
  if (p > 8) throw std::invalid_argument("dong criterion limited to 8 vertices");
  // W(D)
  bool w_empty = true;
  std::vector<std::vector<char>> reach(static_cast<size_t>(p));
  for (int v = 0; v < p; ++v) reach[size_t(v)] = d.reachable_from(v);
  for (int c = 0; c < p && w_empty; ++c)
    for (int a = 0; a < c && w_empty; ++a) {
      if (!d.has_arc(c, a)) continue;
      for (int b = a + 1; b < c && w_empty; ++b)
        if (!reach[size_t(c)][size_t(b)] && !reach[size_t(b)][size_t(a)]) w_empty = false;
    }
  // candidate formula on the original labelling
  Poly candidate;
  for (const Ordering& pi : detail::orderings_by_position(d))
    candidate += binom_shift_poly(pi.delta, unsigned(p));
  // true weak order polynomial via enumeration and interpolation
  std::vector<Rat> values;
  for (int k = 0; k <= p; ++k) values.push_back(Rat(omega_enum(d, k, false), 1));
  Poly omega = interpolate_at_integers(values);
  bool equal = (candidate == omega);
  if (equal == w_empty)
    return report_pass("dong-criterion", instance,
                       w_empty ? "W empty, formula matches" : "W nonempty, formula differs");
  return report_fail("dong-criterion", instance,
                     std::string(w_empty ? "W empty" : "W nonempty"),
                     equal ? "formula matches" : "formula differs");
}

// e_i of Stanley's surjective expansion, by direct enumeration.
inline BigInt surjective_strict_count(const Digraph& d, int i) {
  int p = d.order();
  if (p > 6) throw std::invalid_argument("surjective enumeration limited to 6 vertices");
  std::vector<int> theta(static_cast<size_t>(p), 1);
  BigInt count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == p) {
      std::vector<char> hit(size_t(i) + 1, 0);
      for (int x : theta) hit[size_t(x)] = 1;
      for (int c = 1; c <= i; ++c)
        if (!hit[size_t(c)]) return;
      for (auto [a, b] : d.arcs())
        if (!(theta[size_t(a)] < theta[size_t(b)])) return;
      ++count;
      return;
    }
    for (int c = 1; c <= i; ++c) {
      theta[size_t(v)] = c;
      rec(v + 1);
    }
  };
  if (p == 0) return i == 0 ? 1 : 0;
  if (i == 0) return 0;
  rec(0);
  return count;
}

// File format "p a" then a lines "tail head", 1-based.
inline Digraph parse_digraph(std::istream& in) {
  int p, a;
  if (!(in >> p >> a)) throw std::invalid_argument("bad digraph header");
  Digraph d(p);
  for (int i = 0; i < a; ++i) {
    int t, h;
    if (!(in >> t >> h)) throw std::invalid_argument("bad arc line");
    if (t < 1 || t > p || h < 1 || h > p)
      throw std::invalid_argument("arc endpoint out of range");
    d.add_arc(t - 1, h - 1);
  }
  return d;
}

}  // namespace polyforge
