#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/char_table.hpp"
#include "cgt/lie_instance.hpp"
#include "json.hpp"

namespace cgt {

// lambda(b) = omega(t_1)^a_1 ... on the torus coordinates of b.
struct InstanceCharacter {
  std::uint32_t q = 3;
  std::vector<std::int64_t> a;
  std::string to_string() const;
};

InstanceCharacter instance_character(const LieInstance& inst, const std::string& kind);
// Exponent of omega-values, mod q - 1.
std::int64_t lambda_exponent(const LieInstance& inst, const InstanceCharacter& l, const Perm& b);
// The same character seen through the torus basis of the Weyl root system.
TorusCharacter weyl_character(const LieInstance& inst, const InstanceCharacter& l);
// lambda as a class function on B.
ClassFunction borel_character(const LieInstance& inst, const ConjClasses& b_classes,
                              const InstanceCharacter& l);
// Rows of t occurring in Ind_B^G(mu) for some mu in Irr(T).
std::vector<std::size_t> principal_series_rows(const LieInstance& inst, const CharacterTable& t);

struct QuadraticData {
  IVec alpha;
  std::size_t w = 0;
  int length = 0;
  bool relation_holds = false;  // B_s^2 lies in span(1, B_s)
  Rational ind_relation;        // coefficient of 1 in B_s^2
  std::uint64_t ind_count = 0;  // |U cap U^(w0 s)|
  Cyclotomic c;                 // coefficient of B_s
  std::uint64_t p = 0;          // 0 when no prime power solves the relation
  int epsilon = 0;              // 0 when p = 1
  bool in_phi_lambda = false;
  bool relevant = false;  // alpha in Delta_lambda or s_alpha in C(lambda)
};

struct Constituent {
  std::size_t row = 0;
  std::uint64_t degree = 0;
  std::uint64_t multiplicity = 0;
  std::vector<Cyclotomic> eta;  // Hecke character on T_w, w in W(lambda)
  std::vector<int> gamma;       // sign of T_s over Delta_lambda then C; empty unless linear
  std::size_t sigma_row = 0;
  std::size_t predicted_sigma_row = 0;
  bool all_rational = false;
};

// Endomorphism algebra of Ind_B^G(lambda) through intertwiners B_w, the
// normalized basis T_w and the resulting decomposition.
class HeckeModule {
 public:
  HeckeModule(const LieInstance& inst, InstanceCharacter lambda, const CharacterTable& table);

  const LieInstance& instance() const { return inst_; }
  const InstanceCharacter& lambda() const { return lambda_; }
  const RelativeWeylData& relative() const { return rel_; }
  std::size_t dim() const { return inst_.num_cosets(); }
  const std::vector<std::size_t>& w_lambda() const { return wl_; }
  bool w_lambda_matches() const { return wl_matches_; }
  bool phi_lambda_matches() const { return phi_matches_; }

  std::size_t commutant_dim() const { return commutant_dim_; }
  bool intertwiners_commute() const { return commute_; }
  bool b_structure_verified() const { return b_verified_; }
  // B_x B_y = sum_z b(x,y,z) B_z, positions in w_lambda()
  const Cyclotomic& b_const(std::size_t x, std::size_t y, std::size_t z) const {
    return bconst_[(x * wl_.size() + y) * wl_.size() + z];
  }
  const std::vector<QuadraticData>& quadratic() const { return quad_; }
  const std::vector<std::vector<Cyclotomic>>& t_in_b() const { return t_in_b_; }
  const Rational& t_const(std::size_t x, std::size_t y, std::size_t z) const {
    return tconst_[(x * wl_.size() + y) * wl_.size() + z];
  }
  bool t_rational() const { return t_rational_; }
  // Positions of W(lambda) inside R(lambda) with their words in the
  // reflections of Delta_lambda, and the parameter p of each of those.
  bool in_r(std::size_t x) const { return in_r_[x]; }
  const std::vector<int>& r_word(std::size_t x) const { return r_word_[x]; }
  const std::vector<std::uint64_t>& delta_p() const { return delta_p_; }
  bool braid_ok() const { return braid_ok_; }

  bool module_character_ok() const { return module_char_ok_; }
  const std::vector<Constituent>& constituents() const { return cons_; }
  std::uint64_t sum_mult_squares() const;
  bool galois_prediction_ok() const;
  bool ok() const;

 private:
  const LieInstance& inst_;
  InstanceCharacter lambda_;
  RelativeWeylData rel_;
  std::vector<std::size_t> wl_;
  bool wl_matches_ = false, phi_matches_ = false;
  std::size_t commutant_dim_ = 0;
  bool commute_ = false, b_verified_ = false;
  std::vector<Cyclotomic> bconst_;
  std::vector<QuadraticData> quad_;
  std::vector<std::vector<Cyclotomic>> t_in_b_;
  std::vector<Rational> tconst_;
  std::vector<bool> in_r_;
  std::vector<std::vector<int>> r_word_;
  std::vector<std::uint64_t> delta_p_;
  bool t_rational_ = false, braid_ok_ = false;
  bool module_char_ok_ = false;
  std::vector<Constituent> cons_;
};

nlohmann::json hecke_to_json(const HeckeModule& h);

}  // namespace cgt
