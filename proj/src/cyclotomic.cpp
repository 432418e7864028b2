#include "cgt/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, lowest degree first

struct FieldData {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  // high_rows[k - phi] is x^k mod Phi_n as sparse (exponent, coefficient).
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> high_rows;
};

Poly cyclotomic_poly_uncached(std::uint32_t n);

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const Poly& cyclotomic_poly(std::uint32_t n) {
  static std::map<std::uint32_t, std::unique_ptr<Poly>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto p = std::make_unique<Poly>(cyclotomic_poly_uncached(n));
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(p));
  return *it->second;
}

Poly cyclotomic_poly_uncached(std::uint32_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly& den = cyclotomic_poly(d);
    const std::size_t dd = den.size() - 1;
    Poly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];  // den is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

const FieldData& field(std::uint32_t n) {
  static std::map<std::uint32_t, std::unique_ptr<FieldData>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  const Poly& phi_poly = cyclotomic_poly(n);
  auto data = std::make_unique<FieldData>();
  data->n = n;
  data->phi = static_cast<std::uint32_t>(phi_poly.size() - 1);
  const std::uint32_t phi = data->phi;
  // x^phi = -(Phi_n - x^phi); then repeatedly multiply by x.
  std::vector<std::int64_t> cur(phi, 0);
  for (std::uint32_t j = 0; j < phi; ++j) cur[j] = -phi_poly[j];
  for (std::uint32_t k = phi; k < n; ++k) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    for (std::uint32_t j = 0; j < phi; ++j)
      if (cur[j] != 0) row.emplace_back(j, cur[j]);
    data->high_rows.push_back(std::move(row));
    const std::int64_t top = cur[phi - 1];
    for (std::uint32_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1] - top * phi_poly[j];
    cur[0] = -top * phi_poly[0];
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(data));
  return *it->second;
}

// Reduce terms with exponents in [0, n) to the canonical power basis.
std::map<std::uint32_t, Rational> reduce(std::uint32_t n,
                                         const std::map<std::uint32_t, Rational>& raw) {
  const FieldData& f = field(n);
  bool needs = false;
  for (const auto& [k, c] : raw) {
    if (k >= f.phi) {
      needs = true;
      break;
    }
  }
  std::map<std::uint32_t, Rational> out;
  if (!needs) {
    for (const auto& [k, c] : raw)
      if (c != 0) out.emplace(k, c);
    return out;
  }
  std::vector<Rational> dense(f.phi);
  for (const auto& [k, c] : raw) {
    if (c == 0) continue;
    if (k < f.phi) {
      dense[k] += c;
    } else {
      for (const auto& [j, v] : f.high_rows[k - f.phi]) dense[j] += c * v;
    }
  }
  for (std::uint32_t j = 0; j < f.phi; ++j)
    if (dense[j] != 0) out.emplace(j, std::move(dense[j]));
  return out;
}

std::uint32_t mod_exp(std::int64_t k, std::uint32_t n) {
  std::int64_t r = k % static_cast<std::int64_t>(n);
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t result = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (e > 0) {
    if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % m);
    base = static_cast<std::int64_t>((__int128)base * base % m);
    e >>= 1;
  }
  return result;
}

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("expected an odd prime, got " + std::to_string(p));
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Cyclotomic::Cyclotomic(long value) {
  if (value != 0) coeffs_.emplace(0, Rational(value));
}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (value == 0) return;
  Rational v = value;
  v.canonicalize();
  coeffs_.emplace(0, v);
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k) {
  std::map<std::uint32_t, Rational> raw;
  raw.emplace(mod_exp(k, n), Rational(1));
  return Cyclotomic(n, reduce(n, raw));
}

Cyclotomic Cyclotomic::from_terms(std::uint32_t n,
                                  const std::map<std::int64_t, Rational>& terms) {
  std::map<std::uint32_t, Rational> raw;
  for (const auto& [k, c] : terms) {
    Rational v = c;
    v.canonicalize();
    raw[mod_exp(k, n)] += v;
  }
  return Cyclotomic(n, reduce(n, raw));
}

bool Cyclotomic::is_rational() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InputError("cyclotomic value is not rational: " + to_string());
  return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::embed(std::uint32_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw InputError("embed: target conductor is not a multiple");
  const std::uint32_t step = m / n_;
  std::map<std::uint32_t, Rational> raw;
  for (const auto& [k, c] : coeffs_) raw.emplace(k * step, c);
  return Cyclotomic(m, reduce(m, raw));
}

Cyclotomic Cyclotomic::galois(std::int64_t r) const {
  if (std::gcd(static_cast<std::uint64_t>(mod_exp(r, n_)), static_cast<std::uint64_t>(n_)) != 1 &&
      n_ > 1)
    throw InputError("galois: exponent not coprime to conductor");
  std::map<std::uint32_t, Rational> raw;
  const std::uint32_t rr = mod_exp(r, n_);
  for (const auto& [k, c] : coeffs_)
    raw[static_cast<std::uint32_t>((std::uint64_t)k * rr % n_)] += c;
  return Cyclotomic(n_, reduce(n_, raw));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::apply_sigma() const { return galois(galois_exponent(n_)); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& [k, c] : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) return *this;
  if (n_ != rhs.n_) {
    const auto m = static_cast<std::uint32_t>(std::lcm(n_, rhs.n_));
    *this = embed(m);
    return *this += rhs.embed(m);
  }
  for (const auto& [k, c] : rhs.coeffs_) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (rhs.is_rational()) {
    const Rational r = rhs.rational_value();
    for (auto& [k, c] : coeffs_) c *= r;
    return *this;
  }
  if (is_rational()) {
    const Rational r = rational_value();
    *this = rhs;
    for (auto& [k, c] : coeffs_) c *= r;
    return *this;
  }
  if (n_ != rhs.n_) {
    const auto m = static_cast<std::uint32_t>(std::lcm(n_, rhs.n_));
    *this = embed(m);
    return *this *= rhs.embed(m);
  }
  std::map<std::uint32_t, Rational> raw;
  for (const auto& [i, a] : coeffs_)
    for (const auto& [j, b] : rhs.coeffs_) raw[(i + j) % n_] += a * b;
  coeffs_ = reduce(n_, raw);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_ == b.coeffs_;
  const auto m = static_cast<std::uint32_t>(std::lcm(a.n_, b.n_));
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string Cyclotomic::poly_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    Rational mag = c;
    if (first) {
      if (c < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    os << mag.get_str();
    if (k > 0) os << "*z^" << k;
    first = false;
  }
  return os.str();
}

std::string Cyclotomic::to_string() const {
  return "Q(zeta_" + std::to_string(n_) + "): " + poly_string();
}

void RootSum::add_root(std::int64_t k, std::int64_t mult) { c_[mod_exp(k, n_)] += mult; }

RootSum& RootSum::operator+=(const RootSum& rhs) {
  if (rhs.n_ != n_) throw InputError("RootSum: conductor mismatch");
  for (std::uint32_t k = 0; k < n_; ++k) c_[k] += rhs.c_[k];
  return *this;
}

RootSum RootSum::operator*(const RootSum& rhs) const {
  if (rhs.n_ != n_) throw InputError("RootSum: conductor mismatch");
  RootSum out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (rhs.c_[j] == 0) continue;
      out.c_[(i + j) % n_] += c_[i] * rhs.c_[j];
    }
  }
  return out;
}

RootSum RootSum::conj() const { return galois(-1); }

RootSum RootSum::galois(std::int64_t r) const {
  RootSum out(n_);
  const std::uint32_t rr = mod_exp(r, n_);
  for (std::uint32_t k = 0; k < n_; ++k)
    if (c_[k] != 0) out.c_[(std::uint64_t)k * rr % n_] += c_[k];
  return out;
}

Cyclotomic RootSum::to_cyclotomic() const {
  const FieldData& f = field(n_);
  std::vector<std::int64_t> dense(f.phi, 0);
  for (std::uint32_t k = 0; k < n_; ++k) {
    if (c_[k] == 0) continue;
    if (k < f.phi) {
      dense[k] += c_[k];
    } else {
      for (const auto& [j, v] : f.high_rows[k - f.phi]) dense[j] += c_[k] * v;
    }
  }
  std::map<std::int64_t, Rational> terms;
  for (std::uint32_t j = 0; j < f.phi; ++j)
    if (dense[j] != 0) terms.emplace(j, Rational(static_cast<long>(dense[j])));
  return Cyclotomic::from_terms(n_, terms);
}

std::int64_t galois_exponent(std::uint32_t n) {
  if (n == 0) throw InputError("galois_exponent: n must be positive");
  std::uint32_t two = 1, odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    two *= 2;
  }
  if (odd == 1) return 1;
  for (std::int64_t r = 1; r < static_cast<std::int64_t>(n); ++r)
    if (r % two == 1 % two && r % odd == 2 % odd) return r;
  throw ConsistencyError("galois_exponent: no CRT solution");
}

Cyclotomic apply_sigma(const Cyclotomic& x) { return x.apply_sigma(); }

int legendre(std::int64_t a, std::int64_t p) {
  require_odd_prime(p);
  std::int64_t r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Cyclotomic gauss_sum(std::int64_t p) {
  require_odd_prime(p);
  std::map<std::int64_t, Rational> terms;
  for (std::int64_t k = 1; k < p; ++k) terms.emplace(k, Rational(legendre(k, p)));
  return Cyclotomic::from_terms(static_cast<std::uint32_t>(p), terms);
}

int sqrt_sign_under_sigma(std::int64_t p) {
  const Cyclotomic g = gauss_sum(p);
  const Cyclotomic s = g.apply_sigma();
  if (s == g) return 1;
  if (s == -g) return -1;
  throw ConsistencyError("sigma does not map the Gauss sum to +/- itself");
}

Cyclotomic sqrt_prime_power(std::int64_t r, unsigned j) {
  require_odd_prime(r);
  Integer base;
  mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(r), j / 2);
  Cyclotomic out{Rational(base)};
  if (j % 2 == 1) {
    // Gauss sum is sqrt(r) for r = 1 mod 4 and i*sqrt(r) for r = 3 mod 4.
    Cyclotomic root = gauss_sum(r);
    if (r % 4 == 3) root *= -Cyclotomic::root_of_unity(4, 1);
    out *= root;
  }
  return out;
}

}  // namespace cgt
