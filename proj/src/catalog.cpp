#include "rbl2/catalog.hpp"

#include "rbl2/errors.hpp"

namespace rbl2::catalog {

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (const long x : xs) v.emplace_back(x);
  return v;
}

LinearMap rows(std::initializer_list<std::initializer_list<long>> rs) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rs) out.push_back(vec(r));
  return LinearMap::from_rows(out);
}

RBLieCrossedModule inclusion(const RotaBaxterLieAlgebra& g, const std::vector<std::size_t>& basis,
                             const LinearMap& T1) {
  // The ideal is spanned by the listed basis vectors of g and is closed
  // under ad; its bracket and the action are read off g.
  const std::size_t n = g.dim(), m = basis.size();
  LinearMap d(n, m);
  for (std::size_t c = 0; c < m; ++c) d.at(basis[c], c) = Scalar(1);
  auto coords = [&](const Vector& v) {
    Vector out(m);
    for (std::size_t c = 0; c < m; ++c) out[c] = v[basis[c]];
    return out;
  };
  LieAlgebra h = make_lie(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector v = coords(g.base(d.column(a), d.column(b)));
      for (std::size_t k = 0; k < m; ++k) h.bracket.at(k, a, b) = v[k];
    }
  Action rho(n, LinearMap(m, m));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector v = coords(g.base(basis_vector(n, x), d.column(b)));
      for (std::size_t k = 0; k < m; ++k) rho[x].at(k, b) = v[k];
    }
  return {{g.base, h, d, rho}, g.R, T1};
}

}  // namespace

LieAlgebra abelian(std::size_t n) { return make_lie(n); }

LieAlgebra aff1() {
  LieAlgebra g = make_lie(2, {"e1", "e2"});
  set_bracket(g, 0, 1, vec({0, 1}));
  return g;
}

LieAlgebra h3() {
  LieAlgebra g = make_lie(3, {"x", "y", "z"});
  set_bracket(g, 0, 1, vec({0, 0, 1}));
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g = make_lie(3, {"e", "f", "h"});
  set_bracket(g, 0, 1, vec({0, 0, 1}));
  set_bracket(g, 2, 0, vec({2, 0, 0}));
  set_bracket(g, 2, 1, vec({0, -2, 0}));
  return g;
}

LieAlgebra diamond() {
  LieAlgebra g = make_lie(4, {"t", "p", "q", "z"});
  set_bracket(g, 0, 1, vec({0, 1, 0, 0}));
  set_bracket(g, 0, 2, vec({0, 0, -1, 0}));
  set_bracket(g, 1, 2, vec({0, 0, 0, 1}));
  return g;
}

LieAlgebra aff1sq() {
  LieAlgebra g = make_lie(4, {"a1", "b1", "a2", "b2"});
  set_bracket(g, 0, 1, vec({0, 1, 0, 0}));
  set_bracket(g, 2, 3, vec({0, 0, 0, 1}));
  return g;
}

RotaBaxterLieAlgebra aff1_rb() { return {aff1(), rows({{0, 1}, {0, 0}})}; }

RotaBaxterLieAlgebra aff1_rb_diag() { return {aff1(), rows({{1, 0}, {0, 0}})}; }

RotaBaxterLieAlgebra h3_rb() { return {h3(), rows({{-1, -1, 0}, {-1, 0, 0}, {-1, -1, 1}})}; }

RotaBaxterLieAlgebra sl2_rb() { return {sl2(), rows({{0, 0, 0}, {0, 0, 0}, {0, 0, -1}})}; }

RotaBaxterLieAlgebra diamond_rb() {
  return {diamond(), rows({{0, -1, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}, {-1, 0, 0, 1}})};
}

TwoTermRBLInfinity aff1_adjoint() {
  const RotaBaxterLieAlgebra r = aff1_rb();
  TwoTermLInfinity L{{LinearMap::identity(2)}, r.base.bracket, r.base.bracket, TrilinearMap(2, 2)};
  return {L, {r.R, r.R, BilinearMap(2, 2, 2)}};
}

TwoTermRBLInfinity h3_adjoint() {
  const RotaBaxterLieAlgebra r = h3_rb();
  TwoTermLInfinity L{{LinearMap::identity(3)}, r.base.bracket, r.base.bracket, TrilinearMap(3, 3)};
  return {L, {r.R, r.R, BilinearMap(3, 3, 3)}};
}

TwoTermRBLInfinity sl2_string() {
  const RotaBaxterLieAlgebra r = sl2_rb();
  TwoTermLInfinity L{{LinearMap(3, 1)}, r.base.bracket, BilinearMap(3, 1, 1), TrilinearMap(3, 1)};
  L.l3.set_alternating(0, 1, 2, vec({1}));
  return {L, {r.R, rows({{1}}), BilinearMap(3, 3, 1)}};
}

TwoTermRBLInfinity aff1sq_string() {
  TwoTermLInfinity L{{LinearMap(4, 1)}, aff1sq().bracket, BilinearMap(4, 1, 1), TrilinearMap(4, 1)};
  L.l3.set_alternating(0, 1, 2, vec({1}));
  return {L, RBTriple::zero(4, 1)};
}

TwoTermRBLInfinity probe() {
  TwoTermRBLInfinity G{TwoTermLInfinity::zero(4, 2), RBTriple::zero(4, 2)};
  G.linf.complex.l1.at(3, 0) = Scalar(1);
  return G;
}

TwoTermRBLInfinity module_2term(const RBRepresentation& rep) {
  const std::size_t n = rep.algebra.dim(), m = rep.dim_v;
  BilinearMap act(n, m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u) act.set_on_basis(i, u, rep.rho[i].column(u));
  TwoTermLInfinity L{{LinearMap(n, m)}, rep.algebra.base.bracket, act, TrilinearMap(n, m)};
  return {L, {rep.algebra.R, rep.calR, BilinearMap(n, n, m)}};
}

RBLieCrossedModule aff1_ideal() { return inclusion(aff1_rb_diag(), {1}, rows({{0}})); }

RBLieCrossedModule h3_centre() { return inclusion(h3_rb(), {2}, rows({{1}})); }

RBLieCrossedModule aff1_identity_cm() {
  const RotaBaxterLieAlgebra r = aff1_rb();
  Action rho;
  for (std::size_t x = 0; x < 2; ++x) rho.push_back(r.base.ad(basis_vector(2, x)));
  return {{r.base, r.base, LinearMap::identity(2), rho}, r.R, r.R};
}

RBLInfinityHom twist(const TwoTermRBLInfinity& G, const BilinearMap& phi2, const LinearMap& phi3) {
  const TwoTermLInfinity& L = G.linf;
  const std::size_t n0 = G.dim0(), n1 = G.dim1();
  require_shape(phi2.dim_a() == n0 && phi2.dim_b() == n0 && phi2.dim_out() == n1, "twist: phi2 shape");
  require_shape(phi3.rows() == n1 && phi3.cols() == n0, "twist: phi3 shape");
  const LinearMap& l1 = L.complex.l1;
  auto e0 = [&](std::size_t i) { return basis_vector(n0, i); };

  TwoTermLInfinity T{L.complex, BilinearMap(n0, n0, n0), BilinearMap(n0, n1, n1), TrilinearMap(n0, n1)};
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j)
      T.l2_00.set_on_basis(i, j, L.br(e0(i), e0(j)) - l1.apply(phi2.on_basis(i, j)));
    for (std::size_t u = 0; u < n1; ++u)
      T.l2_01.set_on_basis(i, u, L.act(e0(i), basis_vector(n1, u)) - phi2.apply(e0(i), l1.column(u)));
  }
  for (const auto& t : tuples(n0, 3, false)) {
    const Vector x = e0(t[0]), y = e0(t[1]), z = e0(t[2]);
    const Vector v = -T.act(z, phi2.apply(x, y)) + phi2.apply(L.br(x, y), z) + L.l3v(x, y, z) -
                     T.act(x, phi2.apply(y, z)) + T.act(y, phi2.apply(x, z)) - phi2.apply(x, L.br(y, z)) -
                     phi2.apply(L.br(x, z), y);
    for (std::size_t l = 0; l < n1; ++l) T.l3.at(l, t[0], t[1], t[2]) = v[l];
  }

  const RBTriple& R = G.rb;
  RBTriple S{R.R0 - l1 * phi3, R.R1 - phi3 * l1, BilinearMap(n0, n0, n1)};
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      const Vector x = e0(i), y = e0(j);
      const Vector R0x = R.R0.apply(x), R0y = R.R0.apply(y);
      const Vector p3x = phi3.apply(x), p3y = phi3.apply(y);
      const Vector D = -T.act(S.R0.apply(y), p3x) + T.act(R0x, p3y);
      const Vector v = D + phi2.apply(R0x, R0y) + R.R2.apply(x, y) -
                       S.R1.apply(-T.act(y, p3x) + T.act(x, p3y)) -
                       S.R1.apply(phi2.apply(R0x, y) + phi2.apply(x, R0y)) -
                       phi3.apply(L.br(R0x, y) + L.br(x, R0y));
      S.R2.set_on_basis(i, j, v);
    }
  return {G, {T, S}, LinearMap::identity(n0), LinearMap::identity(n1), phi2, phi3};
}

std::vector<RBLInfinityHom> homs() {
  std::vector<RBLInfinityHom> out;
  const TwoTermRBLInfinity a = aff1_adjoint();
  const TwoTermRBLInfinity s = sl2_string();
  out.push_back(identity_rb_hom(a));
  out.push_back(identity_rb_hom(s));
  out.push_back(identity_rb_hom(probe()));

  BilinearMap p2(2, 2, 2);
  p2.set_on_basis(0, 1, vec({1, 0}));
  p2.set_on_basis(1, 0, vec({-1, 0}));
  const RBLInfinityHom f = twist(a, p2, rows({{0, 1}, {1, 0}}));
  BilinearMap q2(2, 2, 2);
  q2.set_on_basis(0, 1, vec({0, 1}));
  q2.set_on_basis(1, 0, vec({0, -1}));
  const RBLInfinityHom g = twist(f.target, q2, rows({{1, 0}, {0, 0}}));
  const RBLInfinityHom h = twist(g.target, BilinearMap(2, 2, 2), rows({{0, 0}, {-1, 1}}));
  out.push_back(f);
  out.push_back(g);
  out.push_back(h);
  out.push_back(compose_rb_homs(g, f));

  BilinearMap s2(3, 3, 1);
  s2.set_on_basis(0, 2, vec({1}));
  s2.set_on_basis(2, 0, vec({-1}));
  out.push_back(twist(s, s2, rows({{1, 0, 2}})));

  BilinearMap t2(3, 3, 3);
  t2.set_on_basis(0, 2, vec({1, 0, 1}));
  t2.set_on_basis(2, 0, vec({-1, 0, -1}));
  t2.set_on_basis(1, 2, vec({0, 2, 0}));
  t2.set_on_basis(2, 1, vec({0, -2, 0}));
  out.push_back(twist(h3_adjoint(), t2, rows({{0, 1, 0}, {0, 0, 0}, {1, 0, -1}})));
  return out;
}

std::vector<Entry> entries() {
  std::vector<Entry> out{
      {"abelian1", abelian(1)},
      {"abelian2", abelian(2)},
      {"abelian3", abelian(3)},
      {"aff1", aff1()},
      {"h3", h3()},
      {"sl2", sl2()},
      {"diamond", diamond()},
      {"aff1sq", aff1sq()},
      {"aff1-rb", aff1_rb()},
      {"aff1-rb-diag", aff1_rb_diag()},
      {"h3-rb", h3_rb()},
      {"sl2-rb", sl2_rb()},
      {"diamond-rb", diamond_rb()},
      {"aff1-prelie", prelie_from_rb(aff1_rb())},
      {"aff1-adjoint-rep", adjoint_representation(aff1_rb())},
      {"h3-coadjoint-rep", coadjoint_representation(h3_rb())},
      {"aff1-adjoint-2term", aff1_adjoint().linf},
      {"aff1-adjoint", aff1_adjoint()},
      {"h3-adjoint", h3_adjoint()},
      {"sl2-string", sl2_string()},
      {"aff1sq-string", aff1sq_string()},
      {"probe", probe()},
      {"h3-adjoint-module", module_2term(adjoint_representation(h3_rb()))},
      {"sl2-adjoint-module", module_2term(adjoint_representation(sl2_rb()))},
      {"aff1-ideal", aff1_ideal()},
      {"h3-centre", h3_centre()},
      {"aff1-identity-cm", aff1_identity_cm()},
      {"aff1-ideal-lie-cm", aff1_ideal().base},
      {"h3-centre-prelie-cm", rb_crossed_to_prelie_crossed(h3_centre())},
  };
  const auto hs = homs();
  out.push_back({"aff1-adjoint-id-hom", identity_hom(aff1_adjoint().linf)});
  const char* names[] = {"aff1-adjoint-id", "sl2-string-id", "probe-id", "aff1-twist-1",
                         "aff1-twist-2",    "aff1-twist-3",  "aff1-twist-21", "sl2-twist", "h3-twist"};
  for (std::size_t i = 0; i < hs.size(); ++i) out.push_back({names[i], hs[i]});
  return out;
}

}  // namespace rbl2::catalog
