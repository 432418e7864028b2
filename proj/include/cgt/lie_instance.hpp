#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cgt/matrix_group.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/weyl.hpp"

namespace cgt {

enum class Family { SL2, GL2, SP4 };

Family parse_family(const std::string& s);
std::string family_name(Family f, std::uint32_t q);

// A small finite group of Lie type acting on the nonzero vectors of its
// natural module, with its Borel subgroup B = U T, Weyl representatives
// n_w (products of n_a(1) = x_a(1) x_-a(-1) x_a(1) along a reduced word) and
// the right cosets B\G.
class LieInstance {
 public:
  LieInstance(Family family, std::uint32_t q, std::uint64_t max_order = kDefaultMaxOrder);

  Family family() const { return family_; }
  std::uint32_t q() const { return q_; }
  std::string name() const { return family_name(family_, q_); }
  const FiniteField& field() const { return act_->field(); }
  const MatrixPermAction& action() const { return *act_; }
  const PermGroup& G() const { return *G_; }
  const PermGroup& B() const { return *B_; }
  const PermGroup& T() const { return *T_; }
  const PermGroup& U() const { return *U_; }
  const WeylGroup& weyl() const { return *W_; }
  const RootSystem& roots() const { return W_->roots(); }

  // Torus element for cocharacter y (ambient coordinates) at t.
  Perm torus_element(const IVec& y, FqElem t) const;
  Perm root_element(const IVec& alpha, FqElem t) const;
  Perm h_alpha(const IVec& alpha, FqElem t) const;
  const Perm& wdot(std::size_t w) const { return wdot_[w]; }

  std::size_t num_cosets() const { return coset_rep_.size(); }
  const Perm& coset_rep(std::size_t i) const { return coset_rep_[i]; }
  int coset_length(std::size_t i) const { return coset_len_[i]; }
  std::size_t coset_of(const Perm& g) const;
  // x_i g = b x_j; returns j and b.
  std::pair<std::size_t, Perm> coset_action(std::size_t i, const Perm& g) const;

  FqMatrix matrix(const Perm& g) const { return act_->to_matrix(g); }
  // Diagonal coordinates that torus characters see: (t) for SL2, (t1, t2)
  // for GL2 and for SP4's diag(t1, t2, t2^-1, t1^-1).
  std::vector<FqElem> torus_coords(const Perm& b) const;

  // |U cap n U n^-1| for n = n_{w0 w}
  std::uint64_t ind_count(std::size_t w) const;
  // Checks of |B| = |U||T|, the Bruhat count and n_w t n_w^-1 = w(t).
  bool structure_ok() const { return structure_ok_; }

 private:
  Family family_;
  std::uint32_t q_;
  std::unique_ptr<MatrixPermAction> act_;
  std::unique_ptr<PermGroup> G_, B_, T_, U_;
  std::unique_ptr<WeylGroup> W_;
  std::vector<Perm> wdot_;
  std::vector<Perm> coset_rep_;
  std::vector<int> coset_len_;
  std::vector<std::uint32_t> coset_of_;  // by element index of G
  bool structure_ok_ = false;
};

}  // namespace cgt
