#pragma once

#include <polyforge/poly.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace polyforge {

namespace detail {

// Memoized triangles for S(p,k) and unsigned c(p,k). Filled row by row under a
// lock so concurrent readers always see completed rows.
struct StirlingTables {
  std::vector<std::vector<BigInt>> s2{{BigInt(1)}};
  std::vector<std::vector<BigInt>> c1{{BigInt(1)}};
  std::mutex mu;

  void ensure(unsigned p) {
    std::lock_guard<std::mutex> g(mu);
    while (s2.size() <= p) {
      unsigned r = unsigned(s2.size());
      std::vector<BigInt> rs(r + 1), rc(r + 1);
      for (unsigned k = 0; k <= r; ++k) {
        BigInt a = (k <= r - 1) ? s2[r - 1][k] : BigInt(0);
        BigInt b = (k >= 1) ? s2[r - 1][k - 1] : BigInt(0);
        rs[k] = BigInt(k) * a + b;  // S(p+1,k) = k S(p,k) + S(p,k-1)
        BigInt a2 = (k <= r - 1) ? c1[r - 1][k] : BigInt(0);
        BigInt b2 = (k >= 1) ? c1[r - 1][k - 1] : BigInt(0);
        rc[k] = BigInt(r - 1) * a2 + b2;  // c(p+1,k) = p c(p,k) + c(p,k-1)
      }
      s2.push_back(std::move(rs));
      c1.push_back(std::move(rc));
    }
  }
};

inline StirlingTables& stirling_tables() {
  static StirlingTables t;
  return t;
}

}  // namespace detail

// Partitions of a p-set into k nonempty blocks.
inline BigInt stirling2(int p, int k) {
  if (p < 0 || k < 0) throw std::invalid_argument("negative Stirling argument");
  if (k > p) return 0;
  auto& t = detail::stirling_tables();
  t.ensure(unsigned(p));
  return t.s2[size_t(p)][size_t(k)];
}

// Unsigned Stirling numbers of the first kind: <x>_p = sum_k c(p,k) x^k.
inline BigInt stirling1_unsigned(int p, int k) {
  if (p < 0 || k < 0) throw std::invalid_argument("negative Stirling argument");
  if (k > p) return 0;
  auto& t = detail::stirling_tables();
  t.ensure(unsigned(p));
  return t.c1[size_t(p)][size_t(k)];
}

// B_p(x) = sum_k S(p,k) x^k
inline Poly bell_poly(int p) {
  if (p < 0) throw std::invalid_argument("negative Bell index");
  Poly r;
  for (int k = 0; k <= p; ++k) r += Poly::monomial(k, Rat(stirling2(p, k), 1));
  return r;
}

enum class BasisTag { Power, Falling, Rising, ShiftedBinomial };

// The i-th basis polynomial; ShiftedBinomial is C(x+p-i, p) and needs the
// degree bound p, the others ignore it.
inline Poly basis_poly(BasisTag tag, int i, int p) {
  switch (tag) {
    case BasisTag::Power:
      return Poly::monomial(i, Rat(1));
    case BasisTag::Falling:
      return falling_factorial_poly(unsigned(i));
    case BasisTag::Rising:
      return rising_factorial_poly(unsigned(i));
    case BasisTag::ShiftedBinomial:
      return binom_shift_poly(p - i, unsigned(p));
  }
  throw std::logic_error("unreachable");
}

inline Poly poly_from_basis(const std::vector<Rat>& coeffs, BasisTag tag, int p) {
  Poly r;
  for (int i = 0; i < int(coeffs.size()); ++i) {
    if (coeffs[size_t(i)] == 0) continue;
    r += basis_poly(tag, i, p) * coeffs[size_t(i)];
  }
  return r;
}

// Expands a polynomial of degree <= p in the given basis by exact Gaussian
// elimination on the (p+1)x(p+1) coefficient matrix.
inline std::vector<Rat> poly_to_basis(const Poly& f, BasisTag tag, int p) {
  if (f.degree() > p) throw std::invalid_argument("degree exceeds basis bound");
  int n = p + 1;
  // Columns are basis polynomials in the power basis; solve M a = f.
  std::vector<std::vector<Rat>> m(size_t(n), std::vector<Rat>(size_t(n) + 1, Rat(0)));
  for (int j = 0; j < n; ++j) {
    Poly bj = basis_poly(tag, j, p);
    for (int i = 0; i <= bj.degree(); ++i) m[size_t(i)][size_t(j)] = bj.coeff(i);
  }
  for (int i = 0; i < n; ++i) m[size_t(i)][size_t(n)] = f.coeff(i);
  for (int col = 0, row = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (m[size_t(r)][size_t(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[size_t(piv)], m[size_t(row)]);
    Rat inv = Rat(1) / m[size_t(row)][size_t(col)];
    for (int c = col; c <= n; ++c) m[size_t(row)][size_t(c)] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[size_t(r)][size_t(col)] == 0) continue;
      Rat f2 = m[size_t(r)][size_t(col)];
      for (int c = col; c <= n; ++c) m[size_t(r)][size_t(c)] -= f2 * m[size_t(row)][size_t(c)];
    }
    ++row;
  }
  std::vector<Rat> out(size_t(n), Rat(0));
  for (int i = 0; i < n; ++i) out[size_t(i)] = m[size_t(i)][size_t(n)];
  return out;
}

inline std::vector<Rat> convert_basis(const std::vector<Rat>& coeffs, BasisTag from,
                                      BasisTag to, int p) {
  if (int(coeffs.size()) > p + 1) throw std::invalid_argument("coefficient vector too long");
  return poly_to_basis(poly_from_basis(coeffs, from, p), to, p);
}

// First k_max+1 power-series coefficients of numerator/(1-x)^(p+1).
// [x^k] = sum_j num_j C(p+k-j, p).
inline std::vector<Rat> series_coeffs(const Poly& numerator, int p, int k_max) {
  if (p < 0) throw std::invalid_argument("negative exponent in series_coeffs");
  std::vector<Rat> out(size_t(k_max) + 1, Rat(0));
  for (int k = 0; k <= k_max; ++k) {
    Rat s = 0;
    for (int j = 0; j <= std::min(k, numerator.degree()); ++j)
      s += numerator.coeff(j) * Rat(binomial(BigInt(p + k - j), unsigned(p)), 1);
    out[size_t(k)] = s;
  }
  return out;
}

}  // namespace polyforge
