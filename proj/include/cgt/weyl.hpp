#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgt/root_system.hpp"

#include "json.hpp"

namespace cgt {

// All elements of the Weyl group, breadth first from the identity over the
// simple reflections.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  std::size_t size() const { return elems_.size(); }
  const SignedPerm& element(std::size_t i) const { return elems_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  std::size_t index_of(const SignedPerm& w) const;  // throws if absent
  std::size_t mul(std::size_t a, std::size_t b) const { return index_of(elems_[a] * elems_[b]); }
  std::size_t inverse(std::size_t a) const { return index_of(elems_[a].inverse()); }
  const std::vector<SignedPerm>& simple_reflections() const { return simple_; }
  // Index of the longest element.
  std::size_t longest() const;
  // Reduced word in the simple reflections (indices into simple_reflections()).
  std::vector<int> reduced_word(std::size_t i) const;

 private:
  RootSystem rs_;
  std::vector<SignedPerm> simple_;
  std::vector<SignedPerm> elems_;
  std::vector<int> lengths_;
  std::vector<int> parent_, via_;
  std::map<SignedPerm, std::size_t> index_;
};

std::uint64_t weyl_order(RootKind kind, int rank);

// lambda(y (x) t) = omega(t)^(sum c_i y_i) in the torus basis of the root
// system, exponents mod q - 1.
struct TorusCharacter {
  std::uint32_t q = 3;
  std::vector<std::int64_t> c;

  std::int64_t modulus() const { return static_cast<std::int64_t>(q) - 1; }
  std::uint64_t order() const;
  bool is_trivial() const;
  std::string to_string() const;
  friend bool operator==(const TorusCharacter&, const TorusCharacter&) = default;
};

TorusCharacter make_character(std::uint32_t q, std::vector<std::int64_t> c);
// <lambda, y> mod q - 1
std::int64_t pairing(const RootSystem& rs, const TorusCharacter& l, const IVec& y);
TorusCharacter weyl_action_on_character(const RootSystem& rs, const SignedPerm& w,
                                        const TorusCharacter& l);

struct RelativeWeylData {
  TorusCharacter lambda;
  std::vector<std::size_t> w_lambda;  // element indices of W(lambda)
  std::vector<int> phi_lambda;        // root indices
  std::vector<int> delta_lambda;
  std::vector<std::size_t> r;  // R(lambda)
  std::vector<std::size_t> c;  // C(lambda)
  std::string r_type;          // e.g. "A1xA1xB1"
  int r_rank = 0;
  bool order_identity = false;  // |W(lambda)| = |R| |C|
  bool r_normal = false;
  bool trivial_intersection = false;
  bool phi_closed = false;  // under W(lambda) and negation

  bool contains(std::size_t w) const;
  bool in_r(std::size_t w) const;
  // w = w1 w2 with w1 in C, w2 in R; throws InputError if w is not in W(lambda).
  std::pair<std::size_t, std::size_t> factor(const WeylGroup& W, std::size_t w) const;
  bool structure_ok() const {
    return order_identity && r_normal && trivial_intersection && phi_closed;
  }
};

RelativeWeylData relative_weyl(const WeylGroup& W, const TorusCharacter& l);

// Dynkin type of the subsystem with the given simple roots, components
// sorted, e.g. "A1xB2"; "1" for the empty system.
std::string subsystem_type(const RootSystem& rs, const std::vector<IVec>& simple, int* rank = nullptr);

// +1 when q = +-1 mod 8, else (-1)^l(w1) for w = w1 w2.
int r_sigma(const WeylGroup& W, std::size_t w, std::uint32_t q, const RelativeWeylData& d);

struct SurveyRecord {
  TorusCharacter lambda;
  std::uint64_t index = 0;
  std::uint64_t w_order = 0, r_order = 0, c_order = 0;
  std::string r_type;
  int r_rank = 0;
  std::size_t c_odd_length = 0;
  bool structure_ok = false;
  bool wreath_form = true;  // kind B: |R| of the form |B_n1| |B_n2|
};

struct SurveyReport {
  RootKind kind;
  int rank = 0;
  std::uint32_t q = 0;
  std::uint64_t num_characters = 0;
  std::uint64_t num_orbits = 0;
  std::vector<SurveyRecord> records;  // odd index only, lexicographic in lambda
  std::uint64_t odd_length_count = 0;  // records with an odd-length C element
  bool all_structure_ok = true;
  bool all_wreath_form = true;
};

SurveyReport survey_odd_index(RootKind kind, int rank, std::uint32_t q);
nlohmann::json survey_to_json(const SurveyReport& s);

// Order 2 on the first k e-coordinates (k the largest power of 2 below n).
TorusCharacter witness_lambda_type_C(int n, std::uint32_t q);
int witness_k(int n);

}  // namespace cgt
