#pragma once

#include <cstdint>
#include <vector>

namespace cgt {

using FqElem = std::uint32_t;

// GF(q), q = p^k. An element is the integer whose base-p digits are the
// coefficients of a polynomial in x, reduced modulo the lexicographically
// first primitive polynomial of degree k. For k = 1 this is just Z/p.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);  // throws InputError unless q is a prime power

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }

  FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
  FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
  FqElem neg(FqElem a) const { return neg_[a]; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem inv(FqElem a) const;  // throws on zero
  FqElem pow(FqElem a, std::int64_t e) const;
  // Image of an integer in the prime field.
  FqElem from_int(std::int64_t v) const;

  // Fixed generator of the multiplicative group and the discrete log to it.
  FqElem primitive() const { return gen_; }
  std::uint32_t log(FqElem a) const;  // throws on zero

 private:
  std::uint32_t q_, p_, k_;
  std::vector<FqElem> add_, mul_, neg_;
  FqElem gen_ = 1;
  std::vector<FqElem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace cgt
