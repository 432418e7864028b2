#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cgt/conjugacy.hpp"
#include "cgt/cyclotomic.hpp"

#include "json.hpp"

namespace cgt {

using ClassFunction = std::vector<Cyclotomic>;

struct TableOptions {
  std::uint64_t prime_cap = 50'000'000;
};

// Irreducible characters. values[i][c] lives in Q(zeta_o) with o the order
// of class c; eigen[i][c][k] is the multiplicity of zeta_o^k as an eigenvalue
// of a representation affording row i at rep(c).
class CharacterTable {
 public:
  CharacterTable(ConjClasses classes, std::uint64_t prime,
                 std::vector<std::vector<std::vector<std::int64_t>>> eigen);

  const ConjClasses& classes() const { return classes_; }
  std::size_t size() const { return values_.size(); }
  std::uint64_t exponent() const { return classes_.exponent(); }
  std::uint64_t prime() const { return prime_; }
  const std::vector<std::vector<Cyclotomic>>& values() const { return values_; }
  const Cyclotomic& value(std::size_t row, std::size_t cls) const { return values_[row][cls]; }
  const std::vector<std::int64_t>& eigen(std::size_t row, std::size_t cls) const {
    return eigen_[row][cls];
  }
  std::uint64_t degree(std::size_t row) const { return degrees_[row]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }

  // Value as an element of Z[C_n]; n must be a multiple of the class order.
  RootSum root_sum(std::size_t row, std::size_t cls, std::uint32_t n) const;

 private:
  ConjClasses classes_;
  std::uint64_t prime_;
  std::vector<std::vector<std::vector<std::int64_t>>> eigen_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::uint64_t> degrees_;
};

// Smallest prime p = 1 mod e with p > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order, std::uint64_t cap);

CharacterTable character_table(const ConjClasses& classes, const TableOptions& opts = {});
CharacterTable character_table(const PermGroup& g, const TableOptions& opts = {});

// Row j with values sigma(chi_i); throws ConsistencyError if none matches.
std::size_t sigma_on_character(const CharacterTable& t, std::size_t row);
std::vector<std::size_t> odd_degree_rows(const CharacterTable& t);

ClassFunction table_row(const CharacterTable& t, std::size_t row);
// Induce f from the classes of H to the classes of G (same degree, H <= G).
ClassFunction induce(const ConjClasses& h, const ClassFunction& f, const ConjClasses& g);
ClassFunction restrict_to(const ConjClasses& g, const ClassFunction& f, const ConjClasses& h);
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const ConjClasses& c);
// (row, multiplicity) with positive multiplicity; throws InputError if f is
// not a character.
std::vector<std::pair<std::size_t, std::uint64_t>> irr_constituents(const ClassFunction& f,
                                                                      const CharacterTable& t);

struct TableCheck {
  bool row_orthogonality = true;
  bool column_orthogonality = true;
  bool degree_sum = true;
  bool degrees_divide = true;
  bool sigma_permutes_rows = true;
  bool sigma_power_map = true;
  bool brauer_count = true;
  bool ok() const {
    return row_orthogonality && column_orthogonality && degree_sum && degrees_divide &&
           sigma_permutes_rows && sigma_power_map && brauer_count;
  }
};

// Exact checks of the orthogonality relations and the sigma identities.
TableCheck verify_table(const CharacterTable& t);

nlohmann::json table_to_json(const CharacterTable& t);

}  // namespace cgt
