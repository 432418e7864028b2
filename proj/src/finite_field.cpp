#include "cgt/finite_field.hpp"

#include "cgt/cyclotomic.hpp"
#include "cgt/errors.hpp"

namespace cgt {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t v, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Product of two residues modulo the monic polynomial x^k - sum(red[i] x^i).
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                          const std::vector<std::uint32_t>& low) {
  auto da = digits(a, p, k), db = digits(b, p, k);
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // x^k = -low(x)
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - low[i]) % p * c) % p;
  }
  prod.resize(k);
  return undigits(prod, p);
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q < 2) throw InputError("field order must be a prime power");
  p_ = 0;
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  k_ = 0;
  std::uint32_t t = q;
  while (t % p_ == 0) {
    t /= p_;
    ++k_;
  }
  if (t != 1) throw InputError("field order " + std::to_string(q) + " is not a prime power");

  add_.resize(std::size_t(q) * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto da = digits(a, p_, k_);
    std::vector<std::uint32_t> dn(k_);
    for (std::uint32_t i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (std::uint32_t b = 0; b < q; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<std::uint32_t> ds(k_);
      for (std::uint32_t i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[std::size_t(a) * q + b] = undigits(ds, p_);
    }
  }

  // Search monic polynomials x^k + low(x) in lexicographic order of their
  // low coefficients until x generates the multiplicative group. For k = 1
  // "x" is the constant -low[0], so this finds the least primitive root.
  mul_.resize(std::size_t(q) * q);
  for (std::uint32_t code = 0; code < q; ++code) {
    auto low = digits(code, p_, k_);
    if (low[0] == 0) continue;
    const std::uint32_t x = k_ == 1 ? (p_ - low[0]) % p_ : p_;
    std::vector<FqElem> ex;
    FqElem cur = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      ex.push_back(cur);
      cur = poly_mulmod(cur, x, p_, k_, low);
      if (cur == 1 && i + 2 < q) {
        ok = false;
        break;
      }
    }
    if (!ok || cur != 1) continue;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        mul_[std::size_t(a) * q + b] = poly_mulmod(a, b, p_, k_, low);
    gen_ = x;
    exp_ = std::move(ex);
    log_.assign(q, 0);
    for (std::uint32_t i = 0; i < exp_.size(); ++i) log_[exp_[i]] = i;
    return;
  }
  throw ConsistencyError("no primitive polynomial found");
}

FqElem FiniteField::inv(FqElem a) const {
  if (a == 0) throw InputError("inverse of zero in a finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqElem FiniteField::pow(FqElem a, std::int64_t e) const {
  if (a == 0) {
    if (e <= 0) throw InputError("nonpositive power of zero");
    return 0;
  }
  const std::int64_t m = q_ - 1;
  const std::int64_t r = ((static_cast<std::int64_t>(log_[a]) * (e % m)) % m + m) % m;
  return exp_[static_cast<std::size_t>(r)];
}

FqElem FiniteField::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<FqElem>(((v % p) + p) % p);
}

std::uint32_t FiniteField::log(FqElem a) const {
  if (a == 0) throw InputError("logarithm of zero");
  return log_[a];
}

}  // namespace cgt
