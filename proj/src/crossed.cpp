#include "rbl2/crossed.hpp"

#include "rbl2/errors.hpp"

namespace rbl2 {

namespace {

Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i); }

void certify(const VerificationReport& r, const std::string& what) {
  if (!r.ok()) throw InternalInvariantBroken(what + " failed verification:\n" + r.render());
}

void check_action_shape(const Action& a, std::size_t n0, std::size_t n1, const std::string& name) {
  require_shape(a.size() == n0, name + " needs one matrix per g0 basis vector");
  for (const auto& m : a) require_shape(m.rows() == n1 && m.cols() == n1, name + " matrices must be dim g1 square");
}

}  // namespace

void LieCrossedModule::check_shape() const {
  g0.check_shape();
  g1.check_shape();
  require_shape(d.rows() == g0.dim() && d.cols() == g1.dim(), "d must be g1 -> g0");
  check_action_shape(rho, g0.dim(), g1.dim(), "rho");
}

void RBLieCrossedModule::check_shape() const {
  base.check_shape();
  require_shape(T0.rows() == base.g0.dim() && T0.cols() == base.g0.dim(), "T0 must be g0 -> g0");
  require_shape(T1.rows() == base.g1.dim() && T1.cols() == base.g1.dim(), "T1 must be g1 -> g1");
}

void PreLieCrossedModule::check_shape() const {
  p0.check_shape();
  p1.check_shape();
  require_shape(delta.rows() == p0.dim() && delta.cols() == p1.dim(), "delta must be g1 -> g0");
  check_action_shape(l, p0.dim(), p1.dim(), "l");
  check_action_shape(r, p0.dim(), p1.dim(), "r");
}

VerificationReport verify_crossed(const LieCrossedModule& cm, const Exec& exec) {
  cm.check_shape();
  const auto& g0 = cm.g0;
  const auto& g1 = cm.g1;
  const std::size_t n0 = g0.dim(), n1 = g1.dim();
  VerificationReport out;
  out.merge(verify_lie(g0, exec), "g0.");
  out.merge(verify_lie(g1, exec), "g1.");
  out.merge(verify_lie_hom(g1, g0, cm.d, "cm.d-hom", exec));

  for (const auto& ix : tuples(n0, 2, g0.bracket.is_skew())) {
    const LinearMap res = act(cm.rho, g0(e(n0, ix[0]), e(n0, ix[1])), n1) -
                          (cm.rho[ix[0]] * cm.rho[ix[1]] - cm.rho[ix[1]] * cm.rho[ix[0]]);
    if (!res.is_zero()) out.add("cm.action", ix, res.flat());
  }
  for (std::size_t a = 0; a < n0; ++a)
    for (const auto& p : tuples(n1, 2, g1.bracket.is_skew())) {
      const Vector u = e(n1, p[0]), v = e(n1, p[1]);
      const LinearMap& r = cm.rho[a];
      Vector res = r.apply(g1(u, v)) - g1(r.apply(u), v) - g1(u, r.apply(v));
      if (!is_zero(res)) out.add("cm.derivation", {a, p[0], p[1]}, std::move(res));
    }
  for (const auto& ix : product({n0, n1})) {
    Vector res = cm.d.apply(cm.rho[ix[0]].column(ix[1])) - g0(e(n0, ix[0]), cm.d.column(ix[1]));
    if (!is_zero(res)) out.add("cm.peiffer1", ix, std::move(res));
  }
  for (const auto& ix : tuples(n1, 2, false)) {
    Vector res = act(cm.rho, cm.d.column(ix[0]), n1).column(ix[1]) - g1.bracket.on_basis(ix[0], ix[1]);
    if (!is_zero(res)) out.add("cm.peiffer2", ix, std::move(res));
  }
  out.sort();
  return out;
}

VerificationReport verify_crossed(const RBLieCrossedModule& cm, const Exec& exec) {
  cm.check_shape();
  const auto& b = cm.base;
  const std::size_t n0 = b.g0.dim(), n1 = b.g1.dim();
  VerificationReport out = verify_crossed(b, exec);
  out.merge(verify_rb({b.g0, cm.T0}, exec), "g0.");
  out.merge(verify_rb({b.g1, cm.T1}, exec), "g1.");
  for (std::size_t u = 0; u < n1; ++u) {
    Vector r = b.d.apply(cm.T1.column(u)) - cm.T0.apply(b.d.column(u));
    if (!is_zero(r)) out.add("cm.d-rb", {u}, std::move(r));
  }
  for (std::size_t x = 0; x < n0; ++x) {
    const LinearMap rt = act(b.rho, cm.T0.column(x), n1);
    const LinearMap res = rt * cm.T1 - cm.T1 * rt - cm.T1 * b.rho[x] * cm.T1;
    if (!res.is_zero()) out.add("cm.rep-rb", {x}, res.flat());
  }
  out.sort();
  return out;
}

LinearMap prelie_rep_alternate_residual(const PreLieCrossedModule& pm, std::size_t i, std::size_t j) {
  const std::size_t n1 = pm.p1.dim();
  const LinearMap& lx = pm.l[i];
  const LinearMap& ly = pm.l[j];
  const LinearMap& rx = pm.r[i];
  const LinearMap& ry = pm.r[j];
  return rx * ly - ry * lx - act(pm.r, pm.p0.mult.on_basis(i, j), n1) + ry * rx;
}

VerificationReport verify_crossed(const PreLieCrossedModule& pm, const Exec& exec) {
  pm.check_shape();
  const auto& p0 = pm.p0;
  const auto& p1 = pm.p1;
  const std::size_t n0 = p0.dim(), n1 = p1.dim();
  VerificationReport out;
  out.merge(verify_prelie(p0, exec), "p0.");
  out.merge(verify_prelie(p1, exec), "p1.");
  for (const auto& ix : tuples(n1, 2, false)) {
    const Vector u = e(n1, ix[0]), v = e(n1, ix[1]);
    Vector r = pm.delta.apply(p1(u, v)) - p0(pm.delta.apply(u), pm.delta.apply(v));
    if (!is_zero(r)) out.add("pcm.delta-hom", ix, std::move(r));
  }
  for (const auto& ix : tuples(n0, 2, true)) {
    const Vector x = e(n0, ix[0]), y = e(n0, ix[1]);
    const LinearMap res = act(pm.l, p0(x, y) - p0(y, x), n1) -
                          (pm.l[ix[0]] * pm.l[ix[1]] - pm.l[ix[1]] * pm.l[ix[0]]);
    if (!res.is_zero()) out.add("pcm.l-action", ix, res.flat());
  }
  for (const auto& ix : tuples(n0, 2, false)) {
    const std::size_t i = ix[0], j = ix[1];
    const LinearMap res = pm.l[i] * pm.r[j] - pm.r[j] * pm.l[i] - act(pm.r, p0.mult.on_basis(i, j), n1) +
                          pm.r[j] * pm.r[i];
    if (!res.is_zero()) out.add("pcm.lr", ix, res.flat());
  }
  for (const auto& ix : product({n0, n1})) {
    const Vector x = e(n0, ix[0]), du = pm.delta.column(ix[1]);
    Vector rl = pm.delta.apply(pm.l[ix[0]].column(ix[1])) - p0(x, du);
    if (!is_zero(rl)) out.add("pcm.delta-l", ix, std::move(rl));
    Vector rr = pm.delta.apply(pm.r[ix[0]].column(ix[1])) - p0(du, x);
    if (!is_zero(rr)) out.add("pcm.delta-r", ix, std::move(rr));
  }
  for (const auto& ix : tuples(n1, 2, false)) {
    const Vector uv = p1.mult.on_basis(ix[0], ix[1]);
    Vector rl = act(pm.l, pm.delta.column(ix[0]), n1).column(ix[1]) - uv;
    if (!is_zero(rl)) out.add("pcm.l-delta", ix, std::move(rl));
    Vector rr = act(pm.r, pm.delta.column(ix[1]), n1).column(ix[0]) - uv;
    if (!is_zero(rr)) out.add("pcm.r-delta", ix, std::move(rr));
  }
  out.sort();
  return out;
}

RBLieCrossedModule strict_to_crossed(const TwoTermRBLInfinity& G) {
  G.check_shape();
  if (!G.strict()) throw NotStrict("l3 and R2 must vanish");
  const auto& L = G.linf;
  const std::size_t n0 = G.dim0(), n1 = G.dim1();
  RBLieCrossedModule cm{{make_lie(n0), make_lie(n1), L.complex.l1, {}}, G.rb.R0, G.rb.R1};
  cm.base.g0.bracket = L.l2_00;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) cm.base.g1.bracket.set_on_basis(i, j, L.act(L.l1(e(n1, i)), e(n1, j)));
  for (std::size_t a = 0; a < n0; ++a) cm.base.rho.push_back(L.l2_01.left(e(n0, a)));
  certify(verify_crossed(cm), "crossed module of a strict instance");
  return cm;
}

TwoTermRBLInfinity crossed_to_strict(const RBLieCrossedModule& cm) {
  cm.check_shape();
  const auto& b = cm.base;
  const std::size_t n0 = b.g0.dim(), n1 = b.g1.dim();
  TwoTermRBLInfinity G{TwoTermLInfinity::zero(n0, n1), {cm.T0, cm.T1, BilinearMap(n0, n0, n1)}};
  G.linf.complex.l1 = b.d;
  G.linf.l2_00 = b.g0.bracket;
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t j = 0; j < n1; ++j) G.linf.l2_01.set_on_basis(a, j, b.rho[a].column(j));
  certify(verify_rb_2term_full(G), "strict instance of a crossed module");
  return G;
}

RotaBaxterLieAlgebra crossed_semidirect(const RBLieCrossedModule& cm) {
  cm.check_shape();
  const auto& b = cm.base;
  const std::size_t n0 = b.g0.dim(), n1 = b.g1.dim(), N = n0 + n1;
  std::vector<std::string> labels;
  if (!b.g0.labels.empty() && !b.g1.labels.empty()) {
    labels = b.g0.labels;
    labels.insert(labels.end(), b.g1.labels.begin(), b.g1.labels.end());
  }
  RotaBaxterLieAlgebra s{make_lie(N, labels), LinearMap(N, N)};
  auto& br = s.base.bracket;
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) br.at(k, i, j) = b.g0.bracket.at(k, i, j);
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) {
        br.at(n0 + k, i, n0 + j) = b.rho[i].at(k, j);
        br.at(n0 + k, n0 + j, i) = -b.rho[i].at(k, j);
      }
    for (std::size_t j = 0; j < n0; ++j) s.R.at(i, j) = cm.T0.at(i, j);
  }
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) br.at(n0 + k, n0 + i, n0 + j) = b.g1.bracket.at(k, i, j);
    for (std::size_t j = 0; j < n1; ++j) s.R.at(n0 + i, n0 + j) = cm.T1.at(i, j);
  }
  certify(verify_lie(s.base), "semidirect bracket on g0 + g1");
  certify(verify_rb(s), "semidirect operator on g0 + g1");
  return s;
}

PreLieCrossedModule rb_crossed_to_prelie_crossed(const RBLieCrossedModule& cm) {
  cm.check_shape();
  const auto& b = cm.base;
  const std::size_t n0 = b.g0.dim(), n1 = b.g1.dim();
  PreLieCrossedModule pm{prelie_from_rb({b.g0, cm.T0}), prelie_from_rb({b.g1, cm.T1}), b.d, {}, {}};
  for (std::size_t a = 0; a < n0; ++a) {
    pm.l.push_back(act(b.rho, cm.T0.column(a), n1));
    pm.r.push_back(Scalar(-1) * (b.rho[a] * cm.T1));
  }
  certify(verify_crossed(pm), "pre-Lie crossed module");
  return pm;
}

LieCrossedModule prelie_crossed_to_lie_crossed(const PreLieCrossedModule& pm) {
  pm.check_shape();
  LieCrossedModule cm{subadjacent_lie(pm.p0), subadjacent_lie(pm.p1), pm.delta, {}};
  for (std::size_t a = 0; a < pm.p0.dim(); ++a) cm.rho.push_back(pm.l[a] - pm.r[a]);
  certify(verify_crossed(cm), "Lie crossed module of a pre-Lie crossed module");
  return cm;
}

VerificationReport verify_crossed_hom(const LieCrossedModule& src, const LieCrossedModule& tgt, const LinearMap& psi0,
                                      const LinearMap& psi1) {
  src.check_shape();
  tgt.check_shape();
  const std::size_t n0 = src.g0.dim(), n1 = src.g1.dim();
  require_shape(psi1.rows() == tgt.g1.dim() && psi1.cols() == n1, "psi1 has wrong shape");
  VerificationReport out;
  out.merge(verify_lie_hom(src.g0, tgt.g0, psi0, "cmhom.psi0"));
  out.merge(verify_lie_hom(src.g1, tgt.g1, psi1, "cmhom.psi1"));
  for (std::size_t u = 0; u < n1; ++u) {
    Vector r = tgt.d.apply(psi1.column(u)) - psi0.apply(src.d.column(u));
    if (!is_zero(r)) out.add("cmhom.d", {u}, std::move(r));
  }
  for (const auto& ix : product({n0, n1})) {
    Vector r = psi1.apply(src.rho[ix[0]].column(ix[1])) -
               act(tgt.rho, psi0.column(ix[0]), tgt.g1.dim()).apply(psi1.column(ix[1]));
    if (!is_zero(r)) out.add("cmhom.action", ix, std::move(r));
  }
  out.sort();
  return out;
}

DerivedCrossed derived_crossed(const RBLieCrossedModule& cm) {
  cm.check_shape();
  const auto& b = cm.base;
  const std::size_t n0 = b.g0.dim(), n1 = b.g1.dim();
  LieCrossedModule d{derived_bracket({b.g0, cm.T0}), derived_bracket({b.g1, cm.T1}), b.d, {}};
  for (std::size_t a = 0; a < n0; ++a) d.rho.push_back(act(b.rho, cm.T0.column(a), n1) + b.rho[a] * cm.T1);
  certify(verify_crossed(d), "derived crossed module");
  return {d, verify_crossed_hom(d, b, cm.T0, cm.T1)};
}

}  // namespace rbl2
