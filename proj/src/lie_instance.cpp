#include "cgt/lie_instance.hpp"

#include <algorithm>

#include "cgt/errors.hpp"
#include "cgt/group_spec.hpp"

namespace cgt {

Family parse_family(const std::string& s) {
  if (s == "sl2" || s == "SL2") return Family::SL2;
  if (s == "gl2" || s == "GL2") return Family::GL2;
  if (s == "sp4" || s == "SP4") return Family::SP4;
  throw InputError("unknown family '" + s + "'");
}

std::string family_name(Family f, std::uint32_t q) {
  const char* n = f == Family::SL2 ? "SL2" : f == Family::GL2 ? "GL2" : "Sp4";
  return std::string(n) + "(" + std::to_string(q) + ")";
}

namespace {

std::vector<std::pair<int, int>> sp4_support(const IVec& a) {
  // roots in e-coordinates of C2
  if (a == IVec{1, -1}) return {{0, 1}, {2, 3}};
  if (a == IVec{-1, 1}) return {{1, 0}, {3, 2}};
  if (a == IVec{0, 2}) return {{1, 2}};
  if (a == IVec{0, -2}) return {{2, 1}};
  if (a == IVec{1, 1}) return {{0, 2}, {1, 3}};
  if (a == IVec{-1, -1}) return {{2, 0}, {3, 1}};
  if (a == IVec{2, 0}) return {{0, 3}};
  if (a == IVec{-2, 0}) return {{3, 0}};
  throw InputError("not a root of C2");
}

bool is_monomial(const FqMatrix& m) {
  for (std::size_t i = 0; i < m.dim; ++i) {
    int nz = 0;
    for (std::size_t j = 0; j < m.dim; ++j) nz += m(i, j) != 0;
    if (nz != 1) return false;
  }
  return true;
}

}  // namespace

LieInstance::LieInstance(Family family, std::uint32_t q, std::uint64_t max_order)
    : family_(family), q_(q) {
  if (q % 2 == 0) throw InputError("q must be odd");
  const std::size_t dim = family == Family::SP4 ? 4 : 2;
  act_ = std::make_unique<MatrixPermAction>(q, dim, MatrixAction::Vectors);
  const FiniteField& F = act_->field();
  W_ = std::make_unique<WeylGroup>(family == Family::SP4 ? RootSystem(RootKind::C, 2)
                                                          : RootSystem(RootKind::A, 1));

  std::vector<Perm> ugens, tgens;
  for (const IVec& a : roots().positive_roots())
    for (FqElem t = 1; t < q; ++t) ugens.push_back(root_element(a, t));
  const FqElem w = F.primitive();
  if (family == Family::SL2) {
    tgens.push_back(torus_element({1, -1}, w));
  } else {
    tgens.push_back(torus_element({1, 0}, w));
    tgens.push_back(torus_element({0, 1}, w));
  }
  U_ = std::make_unique<PermGroup>(generate_subgroup(act_->num_points(), ugens, max_order));
  T_ = std::make_unique<PermGroup>(act_->num_points(), tgens, max_order);
  std::vector<Perm> bgens = U_->generators();
  bgens.insert(bgens.end(), tgens.begin(), tgens.end());
  B_ = std::make_unique<PermGroup>(act_->num_points(), bgens, max_order);

  std::vector<Perm> simple_n;
  for (const IVec& a : roots().simple_roots()) {
    IVec na = a;
    for (int& x : na) x = -x;
    // the sign convention of x_-a is only fixed up to t -> -t
    Perm n = root_element(a, 1) * root_element(na, F.neg(1)) * root_element(a, 1);
    if (!is_monomial(matrix(n))) n = root_element(a, 1) * root_element(na, 1) * root_element(a, 1);
    if (!is_monomial(matrix(n))) throw ConsistencyError("n_alpha(1) is not monomial");
    simple_n.push_back(n);
  }
  std::vector<Perm> ggens = bgens;
  ggens.insert(ggens.end(), simple_n.begin(), simple_n.end());
  if (family == Family::GL2) ggens.push_back(torus_element({1, 0}, w));
  G_ = std::make_unique<PermGroup>(act_->num_points(), ggens, max_order);

  const std::size_t id = act_->num_points();
  for (std::size_t i = 0; i < W_->size(); ++i) {
    Perm x = Perm::identity(id);
    for (int s : W_->reduced_word(i)) x = x * simple_n[s];
    wdot_.push_back(std::move(x));
  }

  // Right cosets B g.
  const ElementList& el = G_->elements();
  const ElementList& bel = B_->elements();
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> raw(el.size(), kNone);
  std::vector<Perm> reps;
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    if (raw[i] != kNone) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    Perm best = el.elements[i];
    for (const Perm& b : bel.elements) {
      Perm x = b * el.elements[i];
      raw[el.index_of(x)] = c;
      if (x < best) best = std::move(x);
    }
    reps.push_back(std::move(best));
  }
  std::vector<int> len(reps.size(), -1);
  for (std::size_t wi = 0; wi < W_->size(); ++wi)
    for (const Perm& u : U_->elements().elements) {
      int& l = len[raw[el.index_of(wdot_[wi] * u)]];
      if (l >= 0 && l != W_->length(wi)) throw ConsistencyError("Bruhat cells overlap");
      l = W_->length(wi);
    }
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return reps[a] < reps[b];
  });
  std::vector<std::uint32_t> pos(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    pos[order[k]] = static_cast<std::uint32_t>(k);
    coset_rep_.push_back(reps[order[k]]);
    coset_len_.push_back(len[order[k]]);
  }
  coset_of_.resize(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) coset_of_[i] = pos[raw[i]];

  std::uint64_t bruhat = 0;
  for (std::size_t i = 0; i < W_->size(); ++i) {
    std::uint64_t p = 1;
    for (int k = 0; k < W_->length(i); ++k) p *= q;
    bruhat += p;
  }
  structure_ok_ = B_->order() == U_->order() * T_->order() && bruhat == num_cosets() &&
                  std::all_of(coset_len_.begin(), coset_len_.end(), [](int l) { return l >= 0; });
  for (std::size_t i = 0; i < W_->size() && structure_ok_; ++i) {
    const Perm ni = wdot_[i].inverse();
    for (const IVec& y : roots().torus_basis()) {
      const Perm lhs = wdot_[i] * torus_element(y, w) * ni;
      if (lhs != torus_element(W_->element(i).apply(y), w)) structure_ok_ = false;
    }
  }
}

Perm LieInstance::torus_element(const IVec& y, FqElem t) const {
  const FiniteField& F = field();
  const std::size_t dim = act_->dim();
  FqMatrix m{dim, std::vector<FqElem>(dim * dim, 0)};
  if (family_ == Family::SP4) {
    m(0, 0) = F.pow(t, y[0]);
    m(1, 1) = F.pow(t, y[1]);
    m(2, 2) = F.pow(t, -y[1]);
    m(3, 3) = F.pow(t, -y[0]);
  } else {
    m(0, 0) = F.pow(t, y[0]);
    m(1, 1) = F.pow(t, y[1]);
  }
  return act_->to_perm(m);
}

Perm LieInstance::root_element(const IVec& alpha, FqElem t) const {
  const FiniteField& F = field();
  if (family_ == Family::SP4) return act_->to_perm(symplectic_unipotent(F, sp4_support(alpha), t));
  FqMatrix m = FqMatrix::identity(2);
  if (alpha == IVec{1, -1}) m(0, 1) = t;
  else if (alpha == IVec{-1, 1}) m(1, 0) = t;
  else throw InputError("not a root of A1");
  return act_->to_perm(m);
}

Perm LieInstance::h_alpha(const IVec& alpha, FqElem t) const {
  return torus_element(roots().coroot(alpha), t);
}

std::size_t LieInstance::coset_of(const Perm& g) const {
  return coset_of_[G_->elements().index_of(g)];
}

std::pair<std::size_t, Perm> LieInstance::coset_action(std::size_t i, const Perm& g) const {
  const Perm x = coset_rep_[i] * g;
  const std::size_t j = coset_of(x);
  return {j, x * coset_rep_[j].inverse()};
}

std::vector<FqElem> LieInstance::torus_coords(const Perm& b) const {
  const FqMatrix m = matrix(b);
  if (family_ == Family::SL2) return {m(0, 0)};
  return {m(0, 0), m(1, 1)};
}

std::uint64_t LieInstance::ind_count(std::size_t w) const {
  const std::size_t x = W_->mul(W_->longest(), w);
  const Perm& n = wdot_[x];
  const Perm ni = n.inverse();
  std::uint64_t c = 0;
  for (const Perm& u : U_->elements().elements)
    if (U_->contains(ni * u * n)) ++c;
  return c;
}

}  // namespace cgt
