#pragma once

// Brute-force reference computations used to freeze expected values. They
// share no code with the library beyond the Perm and Cyclotomic value types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "cgt/cyclotomic.hpp"
#include "cgt/perm.hpp"

namespace oracle {

inline std::vector<cgt::Perm> closure(const std::vector<cgt::Perm>& gens, std::size_t degree) {
  std::set<cgt::Perm> seen{cgt::Perm::identity(degree)};
  std::deque<cgt::Perm> todo{cgt::Perm::identity(degree)};
  while (!todo.empty()) {
    auto x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      auto y = g * x;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

// Conjugacy class sizes, sorted.
inline std::multiset<std::size_t> class_sizes(const std::vector<cgt::Perm>& elems) {
  std::set<cgt::Perm> done;
  std::multiset<std::size_t> out;
  for (const auto& x : elems) {
    if (done.count(x)) continue;
    std::set<cgt::Perm> cls;
    for (const auto& g : elems) cls.insert(g * x * g.inverse());
    done.insert(cls.begin(), cls.end());
    out.insert(cls.size());
  }
  return out;
}

inline std::complex<double> eval(const cgt::Cyclotomic& x) {
  std::complex<double> s = 0;
  const double n = x.conductor();
  for (const auto& [k, c] : x.coeffs())
    s += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * k / n);
  return s;
}

inline int legendre(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

// Smallest r in [1, n) with r = 1 mod the 2-part and r = 2 mod the odd part.
inline std::int64_t sigma_exponent(std::int64_t n) {
  std::int64_t two = 1;
  while (n % (2 * two) == 0) two *= 2;
  const std::int64_t odd = n / two;
  if (odd == 1) return 1;
  for (std::int64_t r = 1; r < n; ++r)
    if (r % two == 1 % two && r % odd == 2 % odd) return r;
  return -1;
}

inline cgt::Cyclotomic random_cyclotomic(std::mt19937_64& rng, std::uint32_t n, int terms) {
  std::uniform_int_distribution<std::int64_t> k(0, n - 1), c(-5, 5), d(1, 3);
  std::map<std::int64_t, cgt::Rational> t;
  for (int i = 0; i < terms; ++i) t[k(rng)] += cgt::Rational(c(rng), d(rng));
  return cgt::Cyclotomic::from_terms(n, t);
}

// Regular representation from a list of distinct group elements.
inline std::vector<cgt::Perm> regular_generators(const std::vector<cgt::Perm>& elems,
                                                 const std::vector<cgt::Perm>& gens) {
  std::map<cgt::Perm, cgt::Point> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<cgt::Point>(i);
  std::vector<cgt::Perm> out;
  for (const auto& g : gens) {
    std::vector<cgt::Point> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) img[i] = idx.at(g * elems[i]);
    out.emplace_back(img);
  }
  return out;
}

}  // namespace oracle
