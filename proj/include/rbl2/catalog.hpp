#pragma once

#include <string>
#include <vector>

#include "rbl2/crossed.hpp"
#include "rbl2/document.hpp"
#include "rbl2/lie.hpp"
#include "rbl2/two_term.hpp"

namespace rbl2::catalog {

LieAlgebra abelian(std::size_t n);
/// [e1, e2] = e2.
LieAlgebra aff1();
/// [x, y] = z.
LieAlgebra h3();
/// [e, f] = h, [h, e] = 2e, [h, f] = -2f.
LieAlgebra sl2();
/// [t, p] = p, [t, q] = -q, [p, q] = z.
LieAlgebra diamond();
/// aff1 + aff1 on (a1, b1, a2, b2).
LieAlgebra aff1sq();

/// R e1 = 0, R e2 = e1.
RotaBaxterLieAlgebra aff1_rb();
/// R e1 = e1, R e2 = 0; keeps span(e2) invariant.
RotaBaxterLieAlgebra aff1_rb_diag();
/// Fixes z and sends x, y into span(x, y, z).
RotaBaxterLieAlgebra h3_rb();
/// h -> -h, e and f to zero.
RotaBaxterLieAlgebra sl2_rb();
RotaBaxterLieAlgebra diamond_rb();

/// g0 = g1 = aff1, l1 = id, both brackets the aff1 bracket, R0 = R1.
TwoTermRBLInfinity aff1_adjoint();
/// The same on h3 with R0 = R1 = h3_rb().
TwoTermRBLInfinity h3_adjoint();
/// g0 = sl2, g1 = K, l1 = 0, l3(e, f, h) = 1, with a nonzero RB triple.
TwoTermRBLInfinity sl2_string();
/// g0 = aff1 + aff1, g1 = K, l1 = 0, l3(a1, b1, a2) = 1.
TwoTermRBLInfinity aff1sq_string();
/// g0 = K^4 abelian, g1 = K^2, l1 u1 = e4, l1 u2 = 0, everything else zero.
TwoTermRBLInfinity probe();
/// l1 = 0, g1 = V with l2(x, u) = rho(x) u, R0 = R, R1 = calR, R2 = l3 = 0.
TwoTermRBLInfinity module_2term(const RBRepresentation& rep);

/// Inclusion of span(e2) into aff1 with T0 = diag(1, 0).
RBLieCrossedModule aff1_ideal();
/// Inclusion of the centre of h3.
RBLieCrossedModule h3_centre();
/// The identity crossed module on aff1 with T0 = T1 = aff1_rb().
RBLieCrossedModule aff1_identity_cm();

/// phi0 = phi1 = id with the given phi2, phi3; the target is transported
/// along them so that every homomorphism equation holds by construction.
/// The result is not verified here.
RBLInfinityHom twist(const TwoTermRBLInfinity& G, const BilinearMap& phi2, const LinearMap& phi3);

/// Corpus homs: identities, twists and composites of twists.
std::vector<RBLInfinityHom> homs();

struct Entry {
  std::string name;
  AnyStructure value;
};

/// Every catalog structure under its file stem.
std::vector<Entry> entries();

}  // namespace rbl2::catalog
