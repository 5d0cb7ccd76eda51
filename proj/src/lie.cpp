#include "rbl2/lie.hpp"

#include "rbl2/errors.hpp"

namespace rbl2 {

LinearMap act(const Action& action, const Vector& x, std::size_t dim_v) {
  require_shape(x.size() == action.size(), "action evaluated on vector of wrong length");
  LinearMap m(dim_v, dim_v);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (!x[a].is_zero()) m = m + x[a] * action[a];
  return m;
}

void LieAlgebra::check_shape() const {
  require_shape(bracket.dim_a() == bracket.dim_out() && bracket.dim_b() == bracket.dim_out(),
                "Lie bracket must be g x g -> g");
  require_shape(labels.empty() || labels.size() == dim(), "label count differs from dimension");
}

void RotaBaxterLieAlgebra::check_shape() const {
  base.check_shape();
  require_shape(R.rows() == dim() && R.cols() == dim(), "Rota-Baxter operator must be dim x dim");
}

void PreLieAlgebra::check_shape() const {
  require_shape(mult.dim_a() == mult.dim_out() && mult.dim_b() == mult.dim_out(),
                "pre-Lie product must be g x g -> g");
}

void RBRepresentation::check_shape() const {
  algebra.check_shape();
  require_shape(rho.size() == algebra.dim(), "one representation matrix per basis vector is required");
  for (const auto& m : rho) require_shape(m.rows() == dim_v && m.cols() == dim_v, "representation matrix must be dimV x dimV");
  require_shape(calR.rows() == dim_v && calR.cols() == dim_v, "calR must be dimV x dimV");
}

LieAlgebra make_lie(std::size_t dim, std::vector<std::string> labels) {
  LieAlgebra g{BilinearMap(dim, dim, dim), std::move(labels)};
  g.check_shape();
  return g;
}

void set_bracket(LieAlgebra& g, std::size_t i, std::size_t j, const Vector& value) {
  g.bracket.set_on_basis(i, j, value);
  g.bracket.set_on_basis(j, i, -value);
}

namespace {

Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i); }

}  // namespace

VerificationReport verify_lie(const LieAlgebra& g, const Exec& exec) {
  g.check_shape();
  const std::size_t n = g.dim();
  VerificationReport out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector r = g.bracket.on_basis(i, j) + g.bracket.on_basis(j, i);
      if (!is_zero(r)) out.add("lie.skew", {i, j}, std::move(r));
    }
  // With skew symmetry the Jacobiator is alternating, so increasing triples suffice.
  const auto triples = tuples(n, 3, out.ok());
  out.merge(check_range(triples.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = triples[t];
    const Vector x = e(n, ix[0]), y = e(n, ix[1]), z = e(n, ix[2]);
    Vector r = g(x, g(y, z)) + g(y, g(z, x)) + g(z, g(x, y));
    if (!is_zero(r)) rep.add("lie.jacobi", ix, std::move(r));
  }));
  out.sort();
  return out;
}

Vector rb_residual(const RotaBaxterLieAlgebra& rba, std::size_t i, std::size_t j) {
  const std::size_t n = rba.dim();
  const auto& g = rba.base;
  const Vector x = e(n, i), y = e(n, j);
  const Vector rx = rba.R.column(i), ry = rba.R.column(j);
  return g(rx, ry) - rba.R.apply(g(rx, y) + g(x, ry));
}

VerificationReport verify_rb(const RotaBaxterLieAlgebra& rba, const Exec& exec) {
  rba.check_shape();
  const auto pairs = tuples(rba.dim(), 2, rba.base.bracket.is_skew());
  return check_range(pairs.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    Vector r = rb_residual(rba, pairs[t][0], pairs[t][1]);
    if (!is_zero(r)) rep.add("rb", pairs[t], std::move(r));
  });
}

VerificationReport verify_prelie(const PreLieAlgebra& p, const Exec& exec) {
  p.check_shape();
  const std::size_t n = p.dim();
  auto assoc = [&](const Vector& x, const Vector& y, const Vector& z) { return p(p(x, y), z) - p(x, p(y, z)); };
  std::vector<std::vector<std::size_t>> triples;
  for (const auto& pr : tuples(n, 2, true))
    for (std::size_t k = 0; k < n; ++k) triples.push_back({pr[0], pr[1], k});
  return check_range(triples.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = triples[t];
    const Vector x = e(n, ix[0]), y = e(n, ix[1]), z = e(n, ix[2]);
    Vector r = assoc(x, y, z) - assoc(y, x, z);
    if (!is_zero(r)) rep.add("prelie.assoc", ix, std::move(r));
  });
}

VerificationReport verify_representation(const RBRepresentation& rep, const Exec& exec) {
  rep.check_shape();
  const auto& g = rep.algebra.base;
  const std::size_t n = g.dim();
  const auto pairs = tuples(n, 2, g.bracket.is_skew());
  VerificationReport out = check_range(pairs.size(), exec, [&](std::size_t t, VerificationReport& r) {
    const std::size_t i = pairs[t][0], j = pairs[t][1];
    const LinearMap lhs = act(rep.rho, g(e(n, i), e(n, j)), rep.dim_v);
    const LinearMap res = lhs - (rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i]);
    if (!res.is_zero()) r.add("rep.hom", pairs[t], res.flat());
  });
  for (std::size_t i = 0; i < n; ++i) {
    const LinearMap rrx = act(rep.rho, rep.algebra.R.column(i), rep.dim_v);
    const LinearMap res = rrx * rep.calR - rep.calR * rrx - rep.calR * rep.rho[i] * rep.calR;
    if (!res.is_zero()) out.add("rep.rb", {i}, res.flat());
  }
  out.sort();
  return out;
}

VerificationReport verify_lie_hom(const LieAlgebra& src, const LieAlgebra& tgt, const LinearMap& phi,
                                  const std::string& id, const Exec& exec) {
  src.check_shape();
  tgt.check_shape();
  require_shape(phi.rows() == tgt.dim() && phi.cols() == src.dim(), "homomorphism matrix has wrong shape");
  const auto pairs = tuples(src.dim(), 2, src.bracket.is_skew() && tgt.bracket.is_skew());
  return check_range(pairs.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const std::size_t i = pairs[t][0], j = pairs[t][1];
    Vector r = phi.apply(src.bracket.on_basis(i, j)) - tgt(phi.column(i), phi.column(j));
    if (!is_zero(r)) rep.add(id, pairs[t], std::move(r));
  });
}

namespace {

void certify(const VerificationReport& r, const std::string& what) {
  if (!r.ok()) throw InternalInvariantBroken(what + " failed verification:\n" + r.render());
}

}  // namespace

PreLieAlgebra prelie_from_rb(const RotaBaxterLieAlgebra& rba) {
  rba.check_shape();
  const std::size_t n = rba.dim();
  PreLieAlgebra p{BilinearMap(n, n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.mult.set_on_basis(i, j, rba.base(rba.R.column(i), e(n, j)));
  certify(verify_prelie(p), "pre-Lie product [Rx,y]");
  return p;
}

LieAlgebra subadjacent_lie(const PreLieAlgebra& p) {
  p.check_shape();
  const std::size_t n = p.dim();
  LieAlgebra g = make_lie(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.bracket.set_on_basis(i, j, p.mult.on_basis(i, j) - p.mult.on_basis(j, i));
  certify(verify_lie(g), "sub-adjacent Lie algebra");
  return g;
}

LieAlgebra derived_bracket(const RotaBaxterLieAlgebra& rba) {
  rba.check_shape();
  const std::size_t n = rba.dim();
  LieAlgebra g = make_lie(n, rba.base.labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.bracket.set_on_basis(i, j, rba.base(rba.R.column(i), e(n, j)) + rba.base(e(n, i), rba.R.column(j)));
  certify(verify_lie(g), "derived bracket");
  certify(verify_lie_hom(g, rba.base, rba.R, "derived.R-hom"), "R as a homomorphism from the derived bracket");
  return g;
}

RBRepresentation adjoint_representation(const RotaBaxterLieAlgebra& rba) {
  rba.check_shape();
  const std::size_t n = rba.dim();
  RBRepresentation rep{rba, n, {}, rba.R};
  for (std::size_t a = 0; a < n; ++a) rep.rho.push_back(rba.base.ad(e(n, a)));
  certify(verify_representation(rep), "adjoint representation");
  return rep;
}

RBRepresentation dual_representation(const RBRepresentation& rep) {
  rep.check_shape();
  RBRepresentation d{rep.algebra, rep.dim_v, {}, Scalar(-1) * rep.calR.transpose()};
  for (const auto& m : rep.rho) d.rho.push_back(Scalar(-1) * m.transpose());
  certify(verify_representation(d), "dual representation");
  return d;
}

RBRepresentation coadjoint_representation(const RotaBaxterLieAlgebra& rba) {
  return dual_representation(adjoint_representation(rba));
}

RotaBaxterLieAlgebra semidirect_product(const RBRepresentation& rep) {
  rep.check_shape();
  const std::size_t n = rep.algebra.dim(), m = rep.dim_v, N = n + m;
  const auto& g = rep.algebra.base;
  std::vector<std::string> labels;
  if (!g.labels.empty()) {
    labels = g.labels;
    for (std::size_t j = 0; j < m; ++j) labels.push_back("v" + std::to_string(j + 1));
  }
  RotaBaxterLieAlgebra s{make_lie(N, labels), LinearMap(N, N)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.base.bracket.at(k, i, j) = g.bracket.at(k, i, j);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        s.base.bracket.at(n + k, i, n + j) = rep.rho[i].at(k, j);
        s.base.bracket.at(n + k, n + j, i) = -rep.rho[i].at(k, j);
      }
    for (std::size_t j = 0; j < n; ++j) s.R.at(i, j) = rep.algebra.R.at(i, j);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s.R.at(n + i, n + j) = rep.calR.at(i, j);

  certify(verify_lie(s.base), "semidirect product bracket");
  certify(verify_rb(s), "semidirect product operator");
  LinearMap proj(n, N);
  for (std::size_t i = 0; i < n; ++i) proj.at(i, i) = 1;
  certify(verify_lie_hom(s.base, g, proj, "semidirect.projection"), "projection onto g");
  if (!(proj * s.R == rep.algebra.R * proj)) throw InternalInvariantBroken("projection does not intertwine the operators");
  return s;
}

}  // namespace rbl2
