#include "rbl2/two_term.hpp"

#include <array>

#include "rbl2/errors.hpp"

namespace rbl2 {

namespace {

Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i); }

// l2(u, x) for u in g1, x in g0.
Vector act_rev(const TwoTermLInfinity& L, const Vector& u, const Vector& x) { return -L.act(x, u); }

void check_skew(const BilinearMap& m, const std::string& id, VerificationReport& out) {
  for (std::size_t i = 0; i < m.dim_a(); ++i)
    for (std::size_t j = i; j < m.dim_b(); ++j) {
      Vector r = m.on_basis(i, j) + m.on_basis(j, i);
      if (!is_zero(r)) out.add(id, {i, j}, std::move(r));
    }
}

void check_alternating(const TrilinearMap& m, const std::string& id, VerificationReport& out) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const Vector base = m.on_basis(i, j, k);
        const std::array<std::array<std::size_t, 3>, 6> perms{{{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}}};
        Vector r;
        for (std::size_t p = 1; p < perms.size(); ++p) {
          const Vector v = m.on_basis(perms[p][0], perms[p][1], perms[p][2]);
          r = concat(r, p < 3 ? v - base : v + base);
        }
        // Repeated indices force a zero value.
        if (i == j || j == k) r = concat(r, base);
        if (!is_zero(r)) out.add(id, {i, j, k}, std::move(r));
      }
}

std::vector<std::vector<std::size_t>> pairs_with(std::size_t n0, std::size_t n1) {
  return product({n0, n1});
}

}  // namespace

void TwoTermLInfinity::check_shape() const {
  const std::size_t n0 = dim0(), n1 = dim1();
  require_shape(l2_00.dim_a() == n0 && l2_00.dim_b() == n0 && l2_00.dim_out() == n0, "l2 on g0 x g0 must land in g0");
  require_shape(l2_01.dim_a() == n0 && l2_01.dim_b() == n1 && l2_01.dim_out() == n1, "l2 on g0 x g1 must land in g1");
  require_shape(l3.dim() == n0 && l3.dim_out() == n1, "l3 must be g0^3 -> g1");
}

TwoTermLInfinity TwoTermLInfinity::zero(std::size_t dim0, std::size_t dim1) {
  return {{LinearMap(dim0, dim1)}, BilinearMap(dim0, dim0, dim0), BilinearMap(dim0, dim1, dim1), TrilinearMap(dim0, dim1)};
}

RBTriple RBTriple::zero(std::size_t dim0, std::size_t dim1) {
  return {LinearMap(dim0, dim0), LinearMap(dim1, dim1), BilinearMap(dim0, dim0, dim1)};
}

void TwoTermRBLInfinity::check_shape() const {
  linf.check_shape();
  const std::size_t n0 = dim0(), n1 = dim1();
  require_shape(rb.R0.rows() == n0 && rb.R0.cols() == n0, "R0 must be g0 -> g0");
  require_shape(rb.R1.rows() == n1 && rb.R1.cols() == n1, "R1 must be g1 -> g1");
  require_shape(rb.R2.dim_a() == n0 && rb.R2.dim_b() == n0 && rb.R2.dim_out() == n1, "R2 must be g0 x g0 -> g1");
}

void LInfinityHom::check_shape() const {
  source.check_shape();
  target.check_shape();
  require_shape(phi0.rows() == target.dim0() && phi0.cols() == source.dim0(), "phi0 must be g0 -> g0'");
  require_shape(phi1.rows() == target.dim1() && phi1.cols() == source.dim1(), "phi1 must be g1 -> g1'");
  require_shape(phi2.dim_a() == source.dim0() && phi2.dim_b() == source.dim0() && phi2.dim_out() == target.dim1(),
                "phi2 must be g0 x g0 -> g1'");
}

void RBLInfinityHom::check_shape() const {
  source.check_shape();
  target.check_shape();
  underlying().check_shape();
  require_shape(phi3.rows() == target.dim1() && phi3.cols() == source.dim0(), "phi3 must be g0 -> g1'");
}

VerificationReport verify_2term(const TwoTermLInfinity& L, const Exec& exec) {
  L.check_shape();
  const std::size_t n0 = L.dim0(), n1 = L.dim1();
  VerificationReport out;
  check_skew(L.l2_00, "2term.l2-skew", out);
  check_alternating(L.l3, "2term.l3-alt", out);
  const bool alt = out.ok();

  for (const auto& ix : pairs_with(n0, n1)) {
    const Vector x = e(n0, ix[0]), u = e(n1, ix[1]);
    Vector r = L.l1(L.act(x, u)) - L.br(x, L.l1(u));
    if (!is_zero(r)) out.add("2term.a:1", ix, std::move(r));
  }
  for (const auto& ix : tuples(n1, 2, false)) {
    if (ix[0] > ix[1]) continue;
    const Vector u = e(n1, ix[0]), v = e(n1, ix[1]);
    Vector r = L.act(L.l1(u), v) + L.act(L.l1(v), u);
    if (!is_zero(r)) out.add("2term.a:2", ix, std::move(r));
  }

  const auto triples = tuples(n0, 3, alt);
  out.merge(check_range(triples.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = triples[t];
    const Vector x = e(n0, ix[0]), y = e(n0, ix[1]), z = e(n0, ix[2]);
    Vector r = L.l1(L.l3v(x, y, z)) - L.br(x, L.br(y, z)) - L.br(z, L.br(x, y)) - L.br(y, L.br(z, x));
    if (!is_zero(r)) rep.add("2term.b", ix, std::move(r));
  }));

  std::vector<std::vector<std::size_t>> mixed;
  for (const auto& p : tuples(n0, 2, alt))
    for (std::size_t k = 0; k < n1; ++k) mixed.push_back({p[0], p[1], k});
  out.merge(check_range(mixed.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = mixed[t];
    const Vector x = e(n0, ix[0]), y = e(n0, ix[1]), u = e(n1, ix[2]);
    // l2(u,[x,y]) = -l2([x,y],u) and l2(y, l2(u,x)) = -l2(y, l2(x,u)).
    Vector r = L.l3v(x, y, L.l1(u)) - L.act(x, L.act(y, u)) + L.act(L.br(x, y), u) + L.act(y, L.act(x, u));
    if (!is_zero(r)) rep.add("2term.c", ix, std::move(r));
  }));

  const auto quads = tuples(n0, 4, alt);
  out.merge(check_range(quads.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = quads[t];
    std::array<Vector, 4> x;
    for (std::size_t a = 0; a < 4; ++a) x[a] = e(n0, ix[a]);
    Vector r = zero_vector(n1);
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<const Vector*> rest;
      for (std::size_t a = 0; a < 4; ++a)
        if (a != i) rest.push_back(&x[a]);
      const Vector term = L.act(x[i], L.l3v(*rest[0], *rest[1], *rest[2]));
      if (i % 2 == 0) r += term; else r -= term;
    }
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        std::vector<const Vector*> rest;
        for (std::size_t a = 0; a < 4; ++a)
          if (a != i && a != j) rest.push_back(&x[a]);
        const Vector term = L.l3v(L.br(x[i], x[j]), *rest[0], *rest[1]);
        if ((i + j) % 2 == 0) r += term; else r -= term;
      }
    if (!is_zero(r)) rep.add("2term.d", ix, std::move(r));
  }));
  out.sort();
  return out;
}

Vector rbt3_residual(const TwoTermRBLInfinity& G, std::size_t i, std::size_t j, std::size_t k) {
  const auto& L = G.linf;
  const auto& rb = G.rb;
  const std::size_t n0 = G.dim0();
  auto S = [&](const Vector& x1, const Vector& x2, const Vector& x3) {
    const Vector r0x1 = rb.R0.apply(x1), r0x2 = rb.R0.apply(x2), r0x3 = rb.R0.apply(x3);
    const Vector r2 = rb.R2.apply(x2, x3);
    return L.act(r0x1, r2) + rb.R2.apply(x3, L.br(r0x1, x2) - L.br(r0x2, x1)) +
           rb.R1.apply(act_rev(L, r2, x1) - L.l3v(r0x2, r0x3, x1));
  };
  const Vector x = e(n0, i), y = e(n0, j), z = e(n0, k);
  return S(x, y, z) + S(y, z, x) + S(z, x, y) + L.l3v(rb.R0.apply(x), rb.R0.apply(y), rb.R0.apply(z));
}

VerificationReport verify_rb_triple(const TwoTermRBLInfinity& G, const Exec& exec) {
  G.check_shape();
  const auto& L = G.linf;
  const auto& rb = G.rb;
  const std::size_t n0 = G.dim0(), n1 = G.dim1();
  VerificationReport out;
  check_skew(rb.R2, "rbt.r2-skew", out);
  const bool skew = out.ok() && L.l2_00.is_skew();

  for (std::size_t u = 0; u < n1; ++u) {
    Vector r = L.l1(rb.R1.column(u)) - rb.R0.apply(L.complex.l1.column(u));
    if (!is_zero(r)) out.add("rbt.chain", {u}, std::move(r));
  }
  for (const auto& ix : tuples(n0, 2, skew)) {
    const Vector x = e(n0, ix[0]), y = e(n0, ix[1]);
    const Vector rx = rb.R0.apply(x), ry = rb.R0.apply(y);
    Vector r = rb.R0.apply(L.br(rx, y) + L.br(x, ry)) - L.br(rx, ry) - L.l1(rb.R2.apply(x, y));
    if (!is_zero(r)) out.add("rbt.1", ix, std::move(r));
  }
  for (const auto& ix : product({n1, n0})) {
    const Vector u = e(n1, ix[0]), x = e(n0, ix[1]);
    const Vector r1u = rb.R1.apply(u), r0x = rb.R0.apply(x);
    Vector r = rb.R1.apply(act_rev(L, r1u, x) + act_rev(L, u, r0x)) - act_rev(L, r1u, r0x) -
               rb.R2.apply(L.l1(u), x);
    if (!is_zero(r)) out.add("rbt.2", ix, std::move(r));
  }
  const auto triples = tuples(n0, 3, false);
  out.merge(check_range(triples.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = triples[t];
    Vector r = rbt3_residual(G, ix[0], ix[1], ix[2]);
    if (!is_zero(r)) rep.add("rbt.3", ix, std::move(r));
  }));
  out.sort();
  return out;
}

VerificationReport verify_hom(const LInfinityHom& f, const Exec& exec) {
  f.check_shape();
  const auto& S = f.source;
  const auto& T = f.target;
  const std::size_t n0 = S.dim0(), n1 = S.dim1();
  VerificationReport out;
  check_skew(f.phi2, "hom.phi2-skew", out);
  const bool skew = out.ok() && S.l2_00.is_skew() && T.l2_00.is_skew();

  for (std::size_t u = 0; u < n1; ++u) {
    Vector r = T.l1(f.phi1.column(u)) - f.phi0.apply(S.complex.l1.column(u));
    if (!is_zero(r)) out.add("hom.chain", {u}, std::move(r));
  }
  for (const auto& ix : tuples(n0, 2, skew)) {
    const Vector x = e(n0, ix[0]), y = e(n0, ix[1]);
    Vector r = T.l1(f.phi2.apply(x, y)) - f.phi0.apply(S.br(x, y)) + T.br(f.phi0.apply(x), f.phi0.apply(y));
    if (!is_zero(r)) out.add("hom.1", ix, std::move(r));
  }
  for (const auto& ix : product({n0, n1})) {
    const Vector x = e(n0, ix[0]), u = e(n1, ix[1]);
    Vector r = f.phi2.apply(x, S.l1(u)) - f.phi1.apply(S.act(x, u)) + T.act(f.phi0.apply(x), f.phi1.apply(u));
    if (!is_zero(r)) out.add("hom.2", ix, std::move(r));
  }
  const auto triples = tuples(n0, 3, false);
  out.merge(check_range(triples.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = triples[t];
    const Vector x = e(n0, ix[0]), y = e(n0, ix[1]), z = e(n0, ix[2]);
    const Vector px = f.phi0.apply(x), py = f.phi0.apply(y), pz = f.phi0.apply(z);
    const Vector lhs = -T.act(pz, f.phi2.apply(x, y)) + f.phi2.apply(S.br(x, y), z) + f.phi1.apply(S.l3v(x, y, z));
    const Vector rhs = T.l3v(px, py, pz) + T.act(px, f.phi2.apply(y, z)) - T.act(py, f.phi2.apply(x, z)) +
                       f.phi2.apply(x, S.br(y, z)) + f.phi2.apply(S.br(x, z), y);
    Vector r = lhs - rhs;
    if (!is_zero(r)) rep.add("hom.3", ix, std::move(r));
  }));
  out.sort();
  return out;
}

Vector rbhom_bracket_term(const RBLInfinityHom& f, const Vector& x, const Vector& y) {
  const auto& T = f.target.linf;
  // F3(x) = (R0' phi0 x, phi3 x); arrow of [F3 x, F3 y] is l2(phi3 x, R0' phi0 y) + l2(phi0 R0 x, phi3 y).
  const Vector r0py = f.target.rb.R0.apply(f.phi0.apply(y));
  return act_rev(T, f.phi3.apply(x), r0py) + T.act(f.phi0.apply(f.source.rb.R0.apply(x)), f.phi3.apply(y));
}

Vector rbhom3_residual(const RBLInfinityHom& f, std::size_t i, std::size_t j) {
  const auto& S = f.source;
  const auto& T = f.target;
  const std::size_t n0 = S.dim0();
  const Vector x = e(n0, i), y = e(n0, j);
  const Vector px = f.phi0.apply(x), py = f.phi0.apply(y);
  const Vector rx = S.rb.R0.apply(x), ry = S.rb.R0.apply(y);
  const Vector p3x = f.phi3.apply(x), p3y = f.phi3.apply(y);
  const Vector lhs = T.rb.R2.apply(px, py) + T.rb.R1.apply(act_rev(T.linf, p3x, py) + T.linf.act(px, p3y)) +
                     T.rb.R1.apply(f.phi2.apply(rx, y) + f.phi2.apply(x, ry)) +
                     f.phi3.apply(S.linf.br(rx, y) + S.linf.br(x, ry));
  const Vector rhs = rbhom_bracket_term(f, x, y) + f.phi2.apply(rx, ry) + f.phi1.apply(S.rb.R2.apply(x, y));
  return lhs - rhs;
}

VerificationReport verify_rb_hom(const RBLInfinityHom& f, const Exec& exec) {
  f.check_shape();
  const auto& S = f.source;
  const auto& T = f.target;
  const std::size_t n0 = S.dim0(), n1 = S.dim1();
  VerificationReport out;
  for (std::size_t i = 0; i < n0; ++i) {
    const Vector x = e(n0, i);
    Vector r = T.linf.l1(f.phi3.apply(x)) + T.rb.R0.apply(f.phi0.apply(x)) - f.phi0.apply(S.rb.R0.apply(x));
    if (!is_zero(r)) out.add("rbhom.1", {i}, std::move(r));
  }
  for (std::size_t a = 0; a < n1; ++a) {
    const Vector u = e(n1, a);
    Vector r = f.phi3.apply(S.linf.l1(u)) - f.phi1.apply(S.rb.R1.apply(u)) + T.rb.R1.apply(f.phi1.apply(u));
    if (!is_zero(r)) out.add("rbhom.2", {a}, std::move(r));
  }
  const auto pairs = tuples(n0, 2, false);
  out.merge(check_range(pairs.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    Vector r = rbhom3_residual(f, pairs[t][0], pairs[t][1]);
    if (!is_zero(r)) rep.add("rbhom.3", pairs[t], std::move(r));
  }));
  out.sort();
  return out;
}

VerificationReport verify_rb_2term_full(const TwoTermRBLInfinity& G, const Exec& exec) {
  VerificationReport out = verify_2term(G.linf, exec);
  out.merge(verify_rb_triple(G, exec));
  out.sort();
  return out;
}

VerificationReport verify_rb_hom_full(const RBLInfinityHom& f, const Exec& exec) {
  VerificationReport out;
  out.merge(verify_rb_2term_full(f.source, exec), "source.");
  out.merge(verify_rb_2term_full(f.target, exec), "target.");
  out.merge(verify_hom(f.underlying(), exec));
  out.merge(verify_rb_hom(f, exec));
  out.sort();
  return out;
}

Completion complete_rb_triple(const TwoTermLInfinity& L, const LinearMap& R0, const LinearMap& R1) {
  L.check_shape();
  const std::size_t n0 = L.dim0(), n1 = L.dim1();
  require_shape(R0.rows() == n0 && R0.cols() == n0 && R1.rows() == n1 && R1.cols() == n1, "R0/R1 have wrong shape");
  if (!(L.complex.l1 * R1 == R0 * L.complex.l1)) throw NotChainMap("(R0, R1) does not commute with l1");

  Completion c;
  RBTriple t{R0, R1, BilinearMap(n0, n0, n1)};
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i; j < n0; ++j) {
      const Vector x = e(n0, i), y = e(n0, j);
      const Vector rx = R0.apply(x), ry = R0.apply(y);
      const Vector defect = R0.apply(L.br(rx, y) + L.br(x, ry)) - L.br(rx, ry);
      if (i == j) {
        if (!is_zero(defect)) c.report.add("rbt.1", {i, j}, defect);
        continue;
      }
      const auto w = solve(L.complex.l1, defect);
      if (!w) {
        c.report.add("rbt.1", {i, j}, defect);
        continue;
      }
      t.R2.set_on_basis(i, j, *w);
      t.R2.set_on_basis(j, i, -*w);
    }
  if (!c.report.ok()) {
    c.status = Completion::Status::condition1_unsolvable;
    return c;
  }
  c.triple = t;
  c.report = verify_rb_triple({L, t});
  c.status = c.report.ok() ? Completion::Status::ok : Completion::Status::post_check_failed;
  return c;
}

LInfinityHom identity_hom(const TwoTermLInfinity& L) {
  L.check_shape();
  return {L, L, LinearMap::identity(L.dim0()), LinearMap::identity(L.dim1()), BilinearMap(L.dim0(), L.dim0(), L.dim1())};
}

RBLInfinityHom identity_rb_hom(const TwoTermRBLInfinity& G) {
  G.check_shape();
  return {G, G, LinearMap::identity(G.dim0()), LinearMap::identity(G.dim1()), BilinearMap(G.dim0(), G.dim0(), G.dim1()),
          LinearMap(G.dim1(), G.dim0())};
}

namespace {

BilinearMap compose_phi2(const LinearMap& g1, const BilinearMap& g2, const LinearMap& f0, const BilinearMap& f2) {
  const std::size_t n = f2.dim_a();
  BilinearMap out(n, n, g1.rows());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set_on_basis(i, j, g1.apply(f2.on_basis(i, j)) + g2.apply(f0.column(i), f0.column(j)));
  return out;
}

}  // namespace

LInfinityHom compose_homs(const LInfinityHom& g, const LInfinityHom& f) {
  f.check_shape();
  g.check_shape();
  if (!(f.target == g.source)) throw SourceTargetMismatch("target of the first hom differs from source of the second");
  return {f.source, g.target, g.phi0 * f.phi0, g.phi1 * f.phi1, compose_phi2(g.phi1, g.phi2, f.phi0, f.phi2)};
}

RBLInfinityHom compose_rb_homs(const RBLInfinityHom& g, const RBLInfinityHom& f) {
  f.check_shape();
  g.check_shape();
  if (!(f.target == g.source)) throw SourceTargetMismatch("target of the first hom differs from source of the second");
  RBLInfinityHom h{f.source, g.target, g.phi0 * f.phi0, g.phi1 * f.phi1, compose_phi2(g.phi1, g.phi2, f.phi0, f.phi2),
                   g.phi1 * f.phi3 + g.phi3 * f.phi0};
  if (verify_rb_hom_full(f).ok() && verify_rb_hom_full(g).ok()) {
    const VerificationReport r = verify_rb_hom_full(h);
    if (!r.ok()) throw InternalInvariantBroken("composite of verified homs failed verification:\n" + r.render());
  }
  return h;
}

}  // namespace rbl2
