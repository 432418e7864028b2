#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cgt {

enum class RootKind { A, B, C, D };

RootKind parse_root_kind(const std::string& s);
char kind_letter(RootKind k);

using IVec = std::vector<int>;

// Signed permutation of the ambient coordinates: w(e_i) = sign[i] e_{perm[i]}.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPerm identity(std::size_t n);
  IVec apply(const IVec& v) const;
  SignedPerm inverse() const;
  // (a * b)(v) = a(b(v))
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.perm != b.perm ? a.perm < b.perm : a.sign < b.sign;
  }
};

// Classical root system in the standard e_i coordinates, simple roots
// e_1 - e_2, ..., plus e_n (B), 2e_n (C) or e_{n-1} + e_n (D). A positive
// root is one whose first nonzero coordinate is positive.
//
// Torus characters are written in a fixed Z-basis of the coroot lattice:
// for C this is e_1, ..., e_n (the coroots of the long roots 2e_i), for the
// other kinds it is the simple coroots.
class RootSystem {
 public:
  RootSystem(RootKind kind, int rank);

  RootKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::size_t ambient() const { return ambient_; }
  std::string name() const;

  const std::vector<IVec>& roots() const { return roots_; }
  const std::vector<IVec>& simple_roots() const { return simple_; }
  std::vector<IVec> positive_roots() const;
  std::size_t num_positive() const { return roots_.size() / 2; }
  int root_index(const IVec& v) const;  // -1 if v is not a root
  static bool is_positive(const IVec& v);

  IVec coroot(const IVec& alpha) const;
  // Coordinates in torus_basis(); throws if y is outside the lattice.
  std::vector<std::int64_t> lattice_coords(const IVec& y) const;
  const std::vector<IVec>& torus_basis() const { return basis_; }
  std::vector<std::vector<int>> cartan_matrix() const;
  // Rows of dual_num and the common denominator, so that a character with
  // exponents c pairs with y as (c * dual_num * y) / den.
  const std::vector<std::vector<std::int64_t>>& dual_num() const { return dual_num_; }
  std::int64_t dual_den() const { return dual_den_; }

  SignedPerm reflection(const IVec& alpha) const;
  int length(const SignedPerm& w) const;

 private:
  RootKind kind_;
  int rank_;
  std::size_t ambient_;
  std::vector<IVec> roots_;
  std::vector<IVec> simple_;
  std::vector<IVec> basis_;
  std::map<IVec, int> index_;
  // lattice_coords(y) = dual_num_ * y / dual_den_
  std::vector<std::vector<std::int64_t>> dual_num_;
  std::int64_t dual_den_ = 1;
};

int dot(const IVec& a, const IVec& b);

}  // namespace cgt
