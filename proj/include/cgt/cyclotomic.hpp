#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cgt {

using Integer = mpz_class;
using Rational = mpq_class;

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1), i.e.
// reduced modulo the n-th cyclotomic polynomial. Only nonzero coefficients
// are stored. Arithmetic on operands with different conductors happens in
// Q(zeta_lcm). The conductor is not minimized, so equality compares in a
// common field.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  // z_n^k for any integer k.
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k = 1);

  // Sum of c_k z_n^k; exponents are taken mod n and need not be reduced.
  static Cyclotomic from_terms(std::uint32_t n,
                               const std::map<std::int64_t, Rational>& terms);

  std::uint32_t conductor() const { return n_; }
  const std::map<std::uint32_t, Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  // Throws if the element is not rational.
  Rational rational_value() const;

  // Same element written over Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic embed(std::uint32_t m) const;

  // The Galois automorphism z_n -> z_n^r; gcd(r, n) must be 1.
  Cyclotomic galois(std::int64_t r) const;
  // Complex conjugation, z -> z^-1.
  Cyclotomic conj() const;
  // The automorphism fixing 2-power roots of unity and squaring odd ones.
  Cyclotomic apply_sigma() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // "Q(zeta_n): c0 + c1*z^1 + ..."
  std::string to_string() const;
  // Only the polynomial part of to_string().
  std::string poly_string() const;

 private:
  Cyclotomic(std::uint32_t n, std::map<std::uint32_t, Rational> coeffs)
      : n_(n), coeffs_(std::move(coeffs)) {}

  std::uint32_t n_ = 1;
  std::map<std::uint32_t, Rational> coeffs_;
};

// Integer linear combination of n-th roots of unity held in the group ring
// Z[C_n] (not reduced). Used where many products are summed before a single
// reduction, e.g. orthogonality relations and traces.
class RootSum {
 public:
  RootSum() = default;
  explicit RootSum(std::uint32_t n) : n_(n), c_(n, 0) {}

  std::uint32_t conductor() const { return n_; }
  std::int64_t& operator[](std::uint32_t k) { return c_[k]; }
  std::int64_t operator[](std::uint32_t k) const { return c_[k]; }

  void add_root(std::int64_t k, std::int64_t mult = 1);
  RootSum& operator+=(const RootSum& rhs);
  RootSum operator*(const RootSum& rhs) const;
  RootSum conj() const;
  RootSum galois(std::int64_t r) const;

  Cyclotomic to_cyclotomic() const;

 private:
  std::uint32_t n_ = 1;
  std::vector<std::int64_t> c_{0};
};

std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// Exponent r of sigma on Q(zeta_n): r = 1 mod the 2-part of n, r = 2 mod the
// odd part, 1 <= r < n (r = 1 when n is a power of 2).
std::int64_t galois_exponent(std::uint32_t n);

Cyclotomic apply_sigma(const Cyclotomic& x);

// Legendre symbol (a | p) for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);

// sum_{k=1}^{p-1} (k | p) z_p^k; squares to (-1)^((p-1)/2) p.
Cyclotomic gauss_sum(std::int64_t p);

// +1 if sigma fixes gauss_sum(p), -1 if it negates it.
int sqrt_sign_under_sigma(std::int64_t p);

// The positive real square root of r^j for an odd prime r.
Cyclotomic sqrt_prime_power(std::int64_t r, unsigned j);

}  // namespace cgt
