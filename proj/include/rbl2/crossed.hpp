#pragma once

#include "rbl2/lie.hpp"
#include "rbl2/two_term.hpp"

namespace rbl2 {

/// d: g1 -> g0 with rho: g0 -> Der(g1), one g1 matrix per g0 basis vector.
struct LieCrossedModule {
  LieAlgebra g0;
  LieAlgebra g1;
  LinearMap d;
  Action rho;

  void check_shape() const;
  friend bool operator==(const LieCrossedModule&, const LieCrossedModule&) = default;
};

struct RBLieCrossedModule {
  LieCrossedModule base;
  LinearMap T0;
  LinearMap T1;

  void check_shape() const;
  friend bool operator==(const RBLieCrossedModule&, const RBLieCrossedModule&) = default;
};

struct PreLieCrossedModule {
  PreLieAlgebra p0;
  PreLieAlgebra p1;
  LinearMap delta;
  Action l;
  Action r;

  void check_shape() const;
  friend bool operator==(const PreLieCrossedModule&, const PreLieCrossedModule&) = default;
};

VerificationReport verify_crossed(const LieCrossedModule& cm, const Exec& exec = {});
VerificationReport verify_crossed(const RBLieCrossedModule& cm, const Exec& exec = {});
VerificationReport verify_crossed(const PreLieCrossedModule& pm, const Exec& exec = {});

/// Strict instance -> crossed module: [u,v] = l2(l1 u, v), rho(x)u = l2(x,u).
RBLieCrossedModule strict_to_crossed(const TwoTermRBLInfinity& G);
TwoTermRBLInfinity crossed_to_strict(const RBLieCrossedModule& cm);
/// g0 + g1 with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u + [u,v] and T0 + T1.
RotaBaxterLieAlgebra crossed_semidirect(const RBLieCrossedModule& cm);
/// x*y = [T0 x, y], u*v = [T1 u, v], l_x = rho(T0 x), r_x = -rho(x) T1.
PreLieCrossedModule rb_crossed_to_prelie_crossed(const RBLieCrossedModule& cm);
/// Commutator brackets and rho = l - r.
LieCrossedModule prelie_crossed_to_lie_crossed(const PreLieCrossedModule& pm);

struct DerivedCrossed {
  LieCrossedModule module;
  /// (T0, T1) as a crossed-module homomorphism into the original.
  VerificationReport hom_report;
};

/// Derived brackets [x,y]_T0, [u,v]_T1 and rho_T(x) = rho(T0 x) + rho(x) T1.
DerivedCrossed derived_crossed(const RBLieCrossedModule& cm);

/// psi0: g0 -> h0, psi1: g1 -> h1 between Lie crossed modules.
VerificationReport verify_crossed_hom(const LieCrossedModule& src, const LieCrossedModule& tgt, const LinearMap& psi0,
                                      const LinearMap& psi1);

/// The action axiom of a pre-Lie representation in the form with r on the
/// left of both products: r_x l_y - r_y l_x - r_{x*y} + r_y r_x.
LinearMap prelie_rep_alternate_residual(const PreLieCrossedModule& pm, std::size_t i, std::size_t j);

}  // namespace rbl2
