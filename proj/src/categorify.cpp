#include "rbl2/categorify.hpp"

#include <vector>

#include "rbl2/errors.hpp"

namespace rbl2 {

Morphism2V operator+(const Morphism2V& a, const Morphism2V& b) { return {a.source + b.source, a.arrow + b.arrow}; }
Morphism2V operator-(const Morphism2V& a, const Morphism2V& b) { return {a.source - b.source, a.arrow - b.arrow}; }
Morphism2V operator*(const Scalar& s, const Morphism2V& f) { return {s * f.source, s * f.arrow}; }

Vector TwoVectorSpace::target(const Morphism2V& f) const {
  require_shape(f.source.size() == dim0() && f.arrow.size() == dim1(), "morphism has wrong shape");
  return f.source + l1_.apply(f.arrow);
}

Morphism2V TwoVectorSpace::identity(const Vector& x) const {
  require_shape(x.size() == dim0(), "object has wrong dimension");
  return {x, zero_vector(dim1())};
}

bool TwoVectorSpace::composable(const Morphism2V& f, const Morphism2V& g) const { return target(g) == f.source; }

Morphism2V TwoVectorSpace::compose(const Morphism2V& f, const Morphism2V& g) const {
  if (!composable(f, g))
    throw NotComposable("target " + to_string(target(g)) + " differs from source " + to_string(f.source));
  return {g.source, g.arrow + f.arrow};
}

// RBLie2View

RBLie2View::RBLie2View(TwoTermRBLInfinity base) : base_(std::move(base)), space_(base_.linf.complex.l1) {
  base_.check_shape();
}

Vector RBLie2View::bracket(const Vector& x, const Vector& y) const { return base_.linf.br(x, y); }

Morphism2V RBLie2View::bracket(const Morphism2V& f, const Morphism2V& g) const {
  const auto& L = base_.linf;
  return {L.br(f.source, g.source), -L.act(g.source, f.arrow) + L.act(space_.target(f), g.arrow)};
}

Morphism2V RBLie2View::bracket_alt(const Morphism2V& f, const Morphism2V& g) const {
  const auto& L = base_.linf;
  return {L.br(f.source, g.source), L.act(f.source, g.arrow) - L.act(space_.target(g), f.arrow)};
}

Morphism2V RBLie2View::jacobiator(const Vector& x, const Vector& y, const Vector& z) const {
  const auto& L = base_.linf;
  return {L.br(L.br(x, y), z), L.l3v(x, y, z)};
}

Vector RBLie2View::P0(const Vector& x) const { return base_.rb.R0.apply(x); }

Morphism2V RBLie2View::P1(const Morphism2V& f) const { return {base_.rb.R0.apply(f.source), base_.rb.R1.apply(f.arrow)}; }

Morphism2V RBLie2View::calR(const Vector& x, const Vector& y) const {
  return {bracket(P0(x), P0(y)), base_.rb.R2.apply(x, y)};
}

// RBLie2HomView

RBLie2HomView::RBLie2HomView(RBLInfinityHom hom) : hom_(std::move(hom)), source_(hom_.source), target_(hom_.target) {
  hom_.check_shape();
}

Vector RBLie2HomView::F0(const Vector& x) const { return hom_.phi0.apply(x); }

Morphism2V RBLie2HomView::F1(const Morphism2V& f) const { return {hom_.phi0.apply(f.source), hom_.phi1.apply(f.arrow)}; }

Morphism2V RBLie2HomView::F2(const Vector& x, const Vector& y) const {
  return {target_.bracket(F0(x), F0(y)), hom_.phi2.apply(x, y)};
}

Morphism2V RBLie2HomView::F3(const Vector& x) const { return {target_.P0(F0(x)), hom_.phi3.apply(x)}; }

namespace {

Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i); }

// Composes a path step by step. A step whose source differs from the
// running target is recorded and the arrows are still summed.
class Path {
 public:
  Path(const TwoVectorSpace& space, Morphism2V first) : space_(space), acc_(std::move(first)) {}

  void then(const Morphism2V& next, const std::string& step) {
    const Vector t = space_.target(acc_);
    if (!(t == next.source)) failures_.push_back({step, t - next.source});
    acc_.arrow += next.arrow;
  }
  /// "1 + f" starting at the current target.
  void then_padded(const Vector& arrow) { acc_.arrow += arrow; }

  Vector target() const { return space_.target(acc_); }
  const Morphism2V& value() const { return acc_; }
  const std::vector<std::pair<std::string, Vector>>& failures() const { return failures_; }

 private:
  const TwoVectorSpace& space_;
  Morphism2V acc_;
  std::vector<std::pair<std::string, Vector>> failures_;
};

void node_check(VerificationReport& rep, const std::string& node, const std::vector<std::size_t>& ix,
                const Vector& actual, const Vector& printed) {
  Vector r = actual - printed;
  if (!is_zero(r)) rep.add("rbcoh.node:" + node, ix, std::move(r));
}

struct CohPaths {
  Morphism2V left;
  Morphism2V right;
};

// Both composites of the coherence diagram at a basis triple. Node and
// composability checks go to `rep` when it is given.
CohPaths rbcoh_paths(const RBLie2View& L, const std::vector<std::size_t>& ix, VerificationReport* rep) {
  const std::size_t n0 = L.base().dim0();
  const Vector x = e(n0, ix[0]), y = e(n0, ix[1]), z = e(n0, ix[2]);
  const auto& V = L.space();
  auto id = [&](const Vector& v) { return V.identity(v); };
  auto br = [&](const Vector& u, const Vector& v) { return L.bracket(u, v); };
  auto P0 = [&](const Vector& v) { return L.P0(v); };
  auto node = [&](const std::string& name, const Vector& actual, const Vector& printed) {
    if (rep) node_check(*rep, name, ix, actual, printed);
  };
  const Vector a = P0(x), b = P0(y), c = P0(z);

  Path left(V, L.jacobiator(a, b, c));
  node("L1", left.target(), br(a, br(b, c)) + br(br(a, c), b));
  left.then(L.bracket(id(a), L.calR(y, z)) + L.bracket(L.calR(x, z), id(b)), "left.2");
  node("A", left.target(), br(a, P0(br(b, z))) + br(a, P0(br(y, c))) + br(P0(br(x, c)), b) + br(P0(br(a, z)), b));
  left.then(L.calR(x, br(b, z)) + L.calR(x, br(y, c)) + L.calR(br(x, c), y) + L.calR(br(a, z), y), "left.3");
  node("B", left.target(),
       P0(br(a, br(b, z)) + br(x, P0(br(b, z))) + br(a, br(y, c)) + br(x, P0(br(y, c))) + br(P0(br(x, c)), y) +
          br(br(x, c), b) + br(P0(br(a, z)), y) + br(br(a, z), b)));
  left.then_padded(L.P1(L.jacobiator(a, z, b)).arrow);
  node("C", left.target(),
       P0(br(a, br(b, z)) + br(x, P0(br(b, z))) + br(a, br(y, c)) + br(x, P0(br(y, c))) + br(P0(br(x, c)), y) +
          br(br(x, c), b) + br(P0(br(a, z)), y) + br(a, br(z, b)) + br(br(a, b), z)));
  left.then_padded(L.P1(L.bracket(L.calR(x, y), id(z))).arrow);

  Path right(V, id(br(br(a, b), c)));
  right.then(L.bracket(L.calR(x, y), id(c)), "right.2");
  node("R2", right.target(), br(P0(br(a, y)), c) + br(P0(br(x, b)), c));
  right.then(L.calR(br(a, y), z) + L.calR(br(x, b), z), "right.3");
  node("D", right.target(), P0(br(P0(br(a, y)), z) + br(P0(br(x, b)), z) + br(br(a, y), c) + br(br(x, b), c)));
  right.then_padded((L.P1(L.jacobiator(a, y, c)) + L.P1(L.jacobiator(x, b, c))).arrow);
  node("E", right.target(),
       P0(br(P0(br(a, y)), z) + br(P0(br(x, b)), z) + br(a, br(y, c)) + br(br(x, c), b) + br(br(a, c), y) +
          br(x, br(b, c))));
  right.then_padded((L.P1(L.bracket(L.calR(x, z), id(y))) + L.P1(L.bracket(id(x), L.calR(y, z)))).arrow);

  const Vector F = P0(br(P0(br(a, y)), z) + br(P0(br(x, b)), z) + br(a, br(y, c)) + br(br(x, c), b) +
                      br(P0(br(a, z)), y) + br(P0(br(x, c)), y) + br(x, P0(br(b, z))) + br(x, P0(br(y, c))));
  node("F", left.target(), F);
  node("F-right", right.target(), F);
  if (rep) {
    for (const auto& [step, r] : left.failures()) rep->add("rbcoh.compose:" + step, ix, r);
    for (const auto& [step, r] : right.failures()) rep->add("rbcoh.compose:" + step, ix, r);
  }
  return {left.value(), right.value()};
}

}  // namespace

Vector rbcoh_arrow_difference(const RBLie2View& L, std::size_t i, std::size_t j, std::size_t k) {
  const CohPaths p = rbcoh_paths(L, {i, j, k}, nullptr);
  return p.left.arrow - p.right.arrow;
}

VerificationReport verify_rbcoh(const RBLie2View& L, const Exec& exec) {
  const auto triples = tuples(L.base().dim0(), 3, false);
  return check_range(triples.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = triples[t];
    const CohPaths p = rbcoh_paths(L, ix, &rep);
    const Vector diff = concat(p.left.source - p.right.source, p.left.arrow - p.right.arrow);
    const bool paths_agree = is_zero(diff);
    if (!paths_agree) rep.add("rbcoh", ix, diff);
    const Vector arrow_form = rbt3_residual(L.base(), ix[0], ix[1], ix[2]);
    if (paths_agree != is_zero(arrow_form)) rep.add("rbcoh.arrow-form", ix, arrow_form);
  });
}

VerificationReport verify_rbcohm(const RBLInfinityHom& F, const Exec& exec) {
  const RBLie2HomView H(F);
  const auto& S = H.source();
  const auto& T = H.target();
  const auto& V = T.space();
  const std::size_t n0 = F.source.dim0();
  const auto pairs = tuples(n0, 2, false);
  return check_range(pairs.size(), exec, [&](std::size_t t, VerificationReport& rep) {
    const auto& ix = pairs[t];
    const Vector x = e(n0, ix[0]), y = e(n0, ix[1]);
    const Vector X = H.F0(x), Y = H.F0(y);
    const Vector px = S.P0(x), py = S.P0(y);

    Path top(V, T.calR(X, Y));
    top.then(T.P1(T.bracket(H.F3(x), V.identity(Y)) + T.bracket(V.identity(X), H.F3(y))), "top.2");
    top.then(T.P1(H.F2(px, y) + H.F2(x, py)), "top.3");
    top.then(H.F3(S.bracket(px, y)) + H.F3(S.bracket(x, py)), "top.4");

    Path bottom(V, T.bracket(H.F3(x), H.F3(y)));
    bottom.then(H.F2(px, py), "bottom.2");
    bottom.then(H.F1(S.calR(x, y)), "bottom.3");

    for (const auto& [step, r] : top.failures()) rep.add("rbcohm.compose:" + step, ix, r);
    for (const auto& [step, r] : bottom.failures()) rep.add("rbcohm.compose:" + step, ix, r);

    const Vector diff = concat(top.value().source - bottom.value().source, top.value().arrow - bottom.value().arrow);
    const bool agree = is_zero(diff);
    if (!agree) rep.add("rbcohm", ix, diff);
    const Vector arrow_form = rbhom3_residual(F, ix[0], ix[1]);
    if (agree != is_zero(arrow_form)) rep.add("rbcohm.arrow-form", ix, arrow_form);
  });
}

VerificationReport verify_rb_naturality(const RBLie2View& L) {
  const std::size_t n0 = L.base().dim0(), n1 = L.base().dim1();
  const auto& V = L.space();
  VerificationReport rep;
  for (const auto& ix : product({n1, n0})) {
    const Morphism2V f{zero_vector(n0), e(n1, ix[0])};
    const Vector y = e(n0, ix[1]);
    const Vector s = f.source, tf = V.target(f);
    Path lhs(V, L.bracket(L.P1(f), V.identity(L.P0(y))));
    lhs.then(L.calR(tf, y), "lhs.2");
    Path rhs(V, L.calR(s, y));
    rhs.then(L.P1(L.bracket(L.P1(f), V.identity(y)) + L.bracket(f, V.identity(L.P0(y)))), "rhs.2");
    for (const auto& [step, r] : lhs.failures()) rep.add("ntRB.compose:" + step, ix, r);
    for (const auto& [step, r] : rhs.failures()) rep.add("ntRB.compose:" + step, ix, r);
    Vector diff = concat(lhs.value().source - rhs.value().source, lhs.value().arrow - rhs.value().arrow);
    if (!is_zero(diff)) rep.add("ntRB", ix, std::move(diff));
  }
  rep.sort();
  return rep;
}

TwoTermRBLInfinity extract(const RBLie2View& L) {
  const std::size_t n0 = L.base().dim0(), n1 = L.base().dim1();
  const auto& V = L.space();
  TwoTermRBLInfinity G{TwoTermLInfinity::zero(n0, n1), RBTriple::zero(n0, n1)};
  auto u_ = [&](std::size_t a) { return Morphism2V{zero_vector(n0), e(n1, a)}; };
  for (std::size_t a = 0; a < n1; ++a) {
    const Vector t = V.target(u_(a));
    for (std::size_t r = 0; r < n0; ++r) G.linf.complex.l1.at(r, a) = t[r];
    const Vector r1 = L.P1(u_(a)).arrow;
    for (std::size_t r = 0; r < n1; ++r) G.rb.R1.at(r, a) = r1[r];
  }
  for (std::size_t i = 0; i < n0; ++i) {
    const Vector x = e(n0, i);
    const Vector p = L.P0(x);
    for (std::size_t r = 0; r < n0; ++r) G.rb.R0.at(r, i) = p[r];
    for (std::size_t a = 0; a < n1; ++a) G.linf.l2_01.set_on_basis(i, a, L.bracket(V.identity(x), u_(a)).arrow);
    for (std::size_t j = 0; j < n0; ++j) {
      const Vector y = e(n0, j);
      G.linf.l2_00.set_on_basis(i, j, L.bracket(x, y));
      G.rb.R2.set_on_basis(i, j, L.calR(x, y).arrow);
      for (std::size_t k = 0; k < n0; ++k) {
        const Vector l3 = L.jacobiator(x, y, e(n0, k)).arrow;
        for (std::size_t r = 0; r < n1; ++r) G.linf.l3.at(r, i, j, k) = l3[r];
      }
    }
  }
  return G;
}

RBLInfinityHom extract(const RBLie2HomView& F) {
  const TwoTermRBLInfinity S = extract(F.source());
  const TwoTermRBLInfinity T = extract(F.target());
  const std::size_t n0 = S.dim0(), n1 = S.dim1(), m0 = T.dim0(), m1 = T.dim1();
  RBLInfinityHom h{S, T, LinearMap(m0, n0), LinearMap(m1, n1), BilinearMap(n0, n0, m1), LinearMap(m1, n0)};
  for (std::size_t i = 0; i < n0; ++i) {
    const Vector x = e(n0, i);
    const Vector f0 = F.F0(x), f3 = F.F3(x).arrow;
    for (std::size_t r = 0; r < m0; ++r) h.phi0.at(r, i) = f0[r];
    for (std::size_t r = 0; r < m1; ++r) h.phi3.at(r, i) = f3[r];
    for (std::size_t j = 0; j < n0; ++j) h.phi2.set_on_basis(i, j, F.F2(x, e(n0, j)).arrow);
  }
  for (std::size_t a = 0; a < n1; ++a) {
    const Vector f1 = F.F1({zero_vector(n0), e(n1, a)}).arrow;
    for (std::size_t r = 0; r < m1; ++r) h.phi1.at(r, a) = f1[r];
  }
  return h;
}

namespace {

void diff(const LinearMap& got, const LinearMap& want, const std::string& id, VerificationReport& rep) {
  for (std::size_t c = 0; c < want.cols(); ++c) {
    Vector r = got.column(c) - want.column(c);
    if (!is_zero(r)) rep.add(id, {c}, std::move(r));
  }
}

void diff(const BilinearMap& got, const BilinearMap& want, const std::string& id, VerificationReport& rep) {
  for (std::size_t i = 0; i < want.dim_a(); ++i)
    for (std::size_t j = 0; j < want.dim_b(); ++j) {
      Vector r = got.on_basis(i, j) - want.on_basis(i, j);
      if (!is_zero(r)) rep.add(id, {i, j}, std::move(r));
    }
}

void diff(const TrilinearMap& got, const TrilinearMap& want, const std::string& id, VerificationReport& rep) {
  const std::size_t n = want.dim();
  for (const auto& ix : tuples(n, 3, false)) {
    Vector r = got.on_basis(ix[0], ix[1], ix[2]) - want.on_basis(ix[0], ix[1], ix[2]);
    if (!is_zero(r)) rep.add(id, ix, std::move(r));
  }
}

void diff(const TwoTermRBLInfinity& got, const TwoTermRBLInfinity& want, const std::string& prefix,
          VerificationReport& rep) {
  diff(got.linf.complex.l1, want.linf.complex.l1, prefix + "roundtrip.l1", rep);
  diff(got.linf.l2_00, want.linf.l2_00, prefix + "roundtrip.l2_00", rep);
  diff(got.linf.l2_01, want.linf.l2_01, prefix + "roundtrip.l2_01", rep);
  diff(got.linf.l3, want.linf.l3, prefix + "roundtrip.l3", rep);
  diff(got.rb.R0, want.rb.R0, prefix + "roundtrip.R0", rep);
  diff(got.rb.R1, want.rb.R1, prefix + "roundtrip.R1", rep);
  diff(got.rb.R2, want.rb.R2, prefix + "roundtrip.R2", rep);
}

}  // namespace

VerificationReport roundtrip_ST(const TwoTermRBLInfinity& G) {
  VerificationReport rep;
  diff(extract(RBLie2View(G)), G, "", rep);
  rep.sort();
  return rep;
}

VerificationReport roundtrip_ST(const RBLInfinityHom& f) {
  VerificationReport rep;
  const RBLInfinityHom back = extract(RBLie2HomView(f));
  diff(back.source, f.source, "source.", rep);
  diff(back.target, f.target, "target.", rep);
  diff(back.phi0, f.phi0, "roundtrip.phi0", rep);
  diff(back.phi1, f.phi1, "roundtrip.phi1", rep);
  diff(back.phi2, f.phi2, "roundtrip.phi2", rep);
  diff(back.phi3, f.phi3, "roundtrip.phi3", rep);
  rep.sort();
  return rep;
}

}  // namespace rbl2
