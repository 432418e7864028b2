#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgt/cyclotomic.hpp"
#include "cgt/hecke.hpp"
#include "cgt/root_system.hpp"

namespace cgt {

// Laurent polynomial with integer coefficients in u_0, ..., u_{k-1}.
class Laurent {
 public:
  Laurent() = default;
  static Laurent constant(long c, std::size_t nvars);
  static Laurent var(std::size_t i, std::size_t nvars);
  bool is_zero() const { return terms_.empty(); }
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;
  Rational evaluate(const std::vector<Rational>& u) const;
  std::string to_string() const;

 private:
  std::map<std::vector<int>, Integer> terms_;
};

// Generic Iwahori-Hecke algebra of a small Coxeter group with basis a_w and
// a_s a_w = a_sw if l(sw) > l(w), else u_s a_sw + (u_s - 1) a_w.
class GenericHecke {
 public:
  explicit GenericHecke(const std::string& type);  // "A1", "A1xA1", "B2"

  const std::string& type() const { return type_; }
  std::size_t size() const { return elems_.size(); }
  std::size_t num_generators() const { return gens_.size(); }
  std::size_t num_params() const { return num_params_; }
  int length(std::size_t w) const { return len_[w]; }
  std::size_t index_of_word(const std::vector<int>& word) const;
  const Laurent& coeff(std::size_t x, std::size_t y, std::size_t z) const {
    return table_[(x * size() + y) * size() + z];
  }
  // u_s specialized; result flattened like coeff.
  std::vector<Rational> specialize(const std::vector<Rational>& u) const;
  // u = 1 gives the group algebra of W.
  bool specializes_to_group_algebra() const;
  std::size_t center_dimension(const std::vector<Rational>& u) const;
  std::size_t num_linear_characters(const std::vector<Rational>& u) const;
  // Degrees of the simple modules, from the center dimension and the count
  // of linear characters; empty when those do not determine them.
  std::vector<std::uint64_t> irreducible_degrees(const std::vector<Rational>& u) const;

 private:
  std::string type_;
  std::size_t num_params_ = 0;
  std::vector<SignedPerm> gens_;
  std::vector<std::size_t> param_;
  std::vector<SignedPerm> elems_;
  std::vector<int> len_;
  std::vector<std::vector<int>> word_;
  std::map<SignedPerm, std::size_t> index_;
  std::vector<Laurent> table_;
};

// Compares the specialization u_s -> p_s with the T-basis structure
// constants of R(lambda) inside the endomorphism algebra.
bool matches_module(const GenericHecke& h, const HeckeModule& m, std::string* why = nullptr);

}  // namespace cgt
