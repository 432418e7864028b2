#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/finite_field.hpp"
#include "cgt/perm.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

// Square matrix over GF(q), row-major.
struct FqMatrix {
  std::size_t dim = 0;
  std::vector<FqElem> a;

  FqElem operator()(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
  FqElem& operator()(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  static FqMatrix identity(std::size_t dim);
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

FqMatrix mat_mul(const FiniteField& F, const FqMatrix& x, const FqMatrix& y);
FqElem determinant(const FiniteField& F, FqMatrix m);
FqMatrix transpose(const FqMatrix& m);

enum class MatrixAction { Vectors, Projective };

MatrixAction parse_action(const std::string& s);

// Matrices acting on column vectors, permuting either the nonzero vectors of
// GF(q)^dim or the projective points (first nonzero coordinate 1), both in
// lexicographic order of coordinate tuples. to_perm is a homomorphism.
class MatrixPermAction {
 public:
  MatrixPermAction(std::uint32_t q, std::size_t dim, MatrixAction action);

  const FiniteField& field() const { return F_; }
  std::size_t dim() const { return dim_; }
  MatrixAction action() const { return action_; }
  std::size_t num_points() const { return points_.size(); }
  const std::vector<FqElem>& point(std::size_t i) const { return points_[i]; }
  std::size_t index_of(const std::vector<FqElem>& v) const;  // normalizes projectively

  Perm to_perm(const FqMatrix& m) const;  // throws InputError if singular
  // Inverse of to_perm for the vector action.
  FqMatrix to_matrix(const Perm& p) const;

 private:
  std::uint64_t code(const std::vector<FqElem>& v) const;

  FiniteField F_;
  std::size_t dim_;
  MatrixAction action_;
  std::vector<std::vector<FqElem>> points_;
  std::vector<std::int64_t> index_;  // code -> point index or -1
};

PermGroup matrix_group_to_perm(std::uint32_t q, std::size_t dim,
                               const std::vector<FqMatrix>& generators, MatrixAction action,
                               std::uint64_t max_order = kDefaultMaxOrder);

}  // namespace cgt
