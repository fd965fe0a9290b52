#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyforge {

// Thrown when a budgeted computation runs past its deadline.
struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const BigInt& z) { return z.sign(); }

inline Rat rat(long long n, long long d = 1) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(BigInt(n), BigInt(d));
}

inline BigInt int_pow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, int e) {
  if (e >= 0) return Rat(int_pow(num(base), unsigned(e)), int_pow(den(base), unsigned(e)));
  if (base == 0) throw std::invalid_argument("0 to a negative power");
  return Rat(int_pow(den(base), unsigned(-e)), int_pow(num(base), unsigned(-e)));
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(const BigInt& n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact at every step
  }
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return binomial(BigInt(n), k);
}

// Parses "n" or "n/d"; throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

inline std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace polyforge
