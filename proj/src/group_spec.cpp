#include "cgt/group_spec.hpp"

#include <fstream>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

Perm perm_from_map(std::size_t n, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(f(i));
  return Perm(std::move(img));
}

FqMatrix mat2(FqElem a, FqElem b, FqElem c, FqElem d) { return FqMatrix{2, {a, b, c, d}}; }

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  if (n == 1) return PermGroup(1, {});
  return PermGroup(n, {perm_from_map(n, [n](std::size_t i) { return (i + 1) % n; })});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 2) throw InputError("dihedral group needs n >= 2");
  if (n == 2) return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                   Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  return PermGroup(n, {perm_from_map(n, [n](std::size_t i) { return (i + 1) % n; }),
                       perm_from_map(n, [n](std::size_t i) { return (n - i) % n; })});
}

PermGroup quaternion_group() {
  return PermGroup(8, {Perm::from_cycles(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                       Perm::from_cycles(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})});
}

PermGroup semidihedral16() {
  // x -> x + 1 and x -> 3x on Z/8
  return PermGroup(8, {perm_from_map(8, [](std::size_t i) { return (i + 1) % 8; }),
                       perm_from_map(8, [](std::size_t i) { return (3 * i) % 8; })});
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw InputError("symmetric group on 0 points");
  if (n == 1) return PermGroup(1, {});
  if (n == 2) return PermGroup(2, {Perm::from_cycles(2, {{0, 1}})});
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}),
                       perm_from_map(n, [n](std::size_t i) { return (i + 1) % n; })});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup(std::max<std::size_t>(n, 1), {});
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, gens);
}

std::vector<FqMatrix> sl2_generators(const FiniteField& F) {
  const FqElem w = F.primitive();
  const FqElem m1 = F.neg(1);
  return {mat2(1, 1, 0, 1), mat2(1, w, 0, 1), mat2(0, 1, m1, 0), mat2(w, 0, 0, F.inv(w))};
}

std::vector<FqMatrix> gl2_generators(const FiniteField& F) {
  auto g = sl2_generators(F);
  g.push_back(mat2(F.primitive(), 0, 0, 1));
  return g;
}

FqMatrix sp4_gram(const FiniteField& F) {
  FqMatrix j{4, std::vector<FqElem>(16, 0)};
  j(0, 3) = 1;
  j(1, 2) = 1;
  j(2, 1) = F.neg(1);
  j(3, 0) = F.neg(1);
  return j;
}

bool is_symplectic(const FiniteField& F, const FqMatrix& m) {
  const FqMatrix j = sp4_gram(F);
  return mat_mul(F, mat_mul(F, transpose(m), j), m) == j;
}

FqMatrix symplectic_unipotent(const FiniteField& F, const std::vector<std::pair<int, int>>& support,
                              FqElem t) {
  const std::size_t s = support.size();
  for (std::uint32_t signs = 0; signs < (1u << s); ++signs) {
    FqMatrix m = FqMatrix::identity(4);
    for (std::size_t i = 0; i < s; ++i)
      m(support[i].first, support[i].second) = (signs >> i) & 1 ? F.neg(t) : t;
    if (is_symplectic(F, m)) return m;
  }
  throw ConsistencyError("no sign pattern gives a symplectic root element");
}

std::vector<FqMatrix> sp4_generators(const FiniteField& F) {
  // positive and negative simple root elements at t = 1 and t = primitive
  std::vector<FqMatrix> g;
  for (FqElem t : {FqElem(1), F.primitive()}) {
    g.push_back(symplectic_unipotent(F, {{0, 1}, {2, 3}}, t));
    g.push_back(symplectic_unipotent(F, {{1, 2}}, t));
    g.push_back(symplectic_unipotent(F, {{1, 0}, {3, 2}}, t));
    g.push_back(symplectic_unipotent(F, {{2, 1}}, t));
  }
  return g;
}

namespace {

GroupSpec matrix_spec(std::string name, std::uint32_t q, std::size_t dim,
                      std::function<std::vector<FqMatrix>(const FiniteField&)> gens,
                      MatrixAction action) {
  return {std::move(name), [=](std::uint64_t max_order) {
            FiniteField F(q);
            return matrix_group_to_perm(q, dim, gens(F), action, max_order);
          }};
}

GroupSpec fixed_spec(std::string name, std::function<PermGroup()> make) {
  return {std::move(name), [make](std::uint64_t max_order) {
            PermGroup g = make();
            return PermGroup(g.degree(), g.generators(), max_order);
          }};
}

}  // namespace

GroupSpec parse_group_spec(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InputError("group spec must be a JSON object");
    const std::string kind = j.at("kind").get<std::string>();
    const std::string name = j.value("name", kind);
    if (kind == "perm") {
      const auto degree = j.at("degree").get<std::size_t>();
      if (degree == 0) throw InputError("degree must be positive");
      std::vector<Perm> gens;
      for (const auto& g : j.at("generators")) {
        auto img = g.get<std::vector<std::int64_t>>();
        std::vector<Point> pts;
        for (std::int64_t x : img) {
          if (x < 0 || static_cast<std::size_t>(x) >= degree)
            throw InputError("generator image out of range");
          pts.push_back(static_cast<Point>(x));
        }
        if (pts.size() != degree) throw InputError("generator length differs from degree");
        gens.emplace_back(std::move(pts));
      }
      return {name, [degree, gens](std::uint64_t max_order) {
                return group_from_generators(degree, gens, max_order);
              }};
    }
    if (kind == "matfq") {
      const auto q = j.at("q").get<std::uint32_t>();
      const auto dim = j.at("dim").get<std::size_t>();
      const MatrixAction action = parse_action(j.value("action", std::string("vectors")));
      FiniteField F(q);
      std::vector<FqMatrix> gens;
      for (const auto& g : j.at("generators")) {
        FqMatrix m{dim, {}};
        if (g.size() != dim) throw InputError("matrix has wrong number of rows");
        for (const auto& row : g) {
          if (row.size() != dim) throw InputError("matrix row has wrong length");
          for (const auto& x : row) {
            const auto v = x.get<std::int64_t>();
            if (v < 0 || v >= static_cast<std::int64_t>(q))
              throw InputError("matrix entry outside 0..q-1");
            m.a.push_back(static_cast<FqElem>(v));
          }
        }
        if (determinant(F, m) == 0) throw InputError("singular matrix generator");
        gens.push_back(std::move(m));
      }
      return {name, [=](std::uint64_t max_order) {
                return matrix_group_to_perm(q, dim, gens, action, max_order);
              }};
    }
    throw InputError("unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group spec: ") + e.what());
  }
}

GroupSpec load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_group_spec(j);
}

std::vector<GroupSpec> builtin_corpus(const CorpusOptions& opts) {
  std::vector<GroupSpec> c;
  for (std::size_t n = 1; n <= 16; ++n)
    c.push_back(fixed_spec("C" + std::to_string(n), [n] { return cyclic_group(n); }));
  for (std::size_t n = 2; n <= 12; ++n)
    c.push_back(fixed_spec("D" + std::to_string(2 * n), [n] { return dihedral_group(n); }));
  c.push_back(fixed_spec("Q8", quaternion_group));
  c.push_back(fixed_spec("SD16", semidihedral16));
  for (std::size_t n = 2; n <= 7; ++n)
    c.push_back(fixed_spec("S" + std::to_string(n), [n] { return symmetric_group(n); }));
  for (std::size_t n = 3; n <= 7; ++n)
    c.push_back(fixed_spec("A" + std::to_string(n), [n] { return alternating_group(n); }));
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u}) {
    const std::string s = std::to_string(q);
    c.push_back(matrix_spec("SL2(" + s + ")", q, 2, sl2_generators, MatrixAction::Vectors));
    c.push_back(matrix_spec("GL2(" + s + ")", q, 2, gl2_generators, MatrixAction::Vectors));
    c.push_back(matrix_spec("PSL2(" + s + ")", q, 2, sl2_generators, MatrixAction::Projective));
    c.push_back(matrix_spec("PGL2(" + s + ")", q, 2, gl2_generators, MatrixAction::Projective));
  }
  if (opts.include_sp4)
    c.push_back(matrix_spec("Sp4(3)", 3, 4, sp4_generators, MatrixAction::Vectors));
  c.push_back({"SL2(3)xC3", [](std::uint64_t max_order) {
                 FiniteField F(3);
                 return direct_product(
                     matrix_group_to_perm(3, 2, sl2_generators(F), MatrixAction::Vectors),
                     cyclic_group(3), max_order);
               }});
  c.push_back({"S4xC5", [](std::uint64_t max_order) {
                 return direct_product(symmetric_group(4), cyclic_group(5), max_order);
               }});
  return c;
}

}  // namespace cgt
