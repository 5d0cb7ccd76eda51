#pragma once

#include <optional>

#include "rbl2/linalg.hpp"
#include "rbl2/report.hpp"

namespace rbl2 {

/// g1 --l1--> g0.
struct TwoTermComplex {
  LinearMap l1;

  std::size_t dim0() const { return l1.rows(); }
  std::size_t dim1() const { return l1.cols(); }
  friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

/// l2 on g1 x g1 is zero by degree. On mixed arguments l2(u, x) = -l2(x, u).
struct TwoTermLInfinity {
  TwoTermComplex complex;
  BilinearMap l2_00;  // g0 x g0 -> g0
  BilinearMap l2_01;  // g0 x g1 -> g1
  TrilinearMap l3;    // g0^3 -> g1

  std::size_t dim0() const { return complex.dim0(); }
  std::size_t dim1() const { return complex.dim1(); }
  Vector l1(const Vector& u) const { return complex.l1.apply(u); }
  Vector br(const Vector& x, const Vector& y) const { return l2_00.apply(x, y); }
  /// l2(x, u) for x in g0, u in g1.
  Vector act(const Vector& x, const Vector& u) const { return l2_01.apply(x, u); }
  Vector l3v(const Vector& x, const Vector& y, const Vector& z) const { return l3.apply(x, y, z); }
  bool strict() const { return l3.is_zero(); }
  void check_shape() const;

  static TwoTermLInfinity zero(std::size_t dim0, std::size_t dim1);
  friend bool operator==(const TwoTermLInfinity&, const TwoTermLInfinity&) = default;
};

struct RBTriple {
  LinearMap R0;
  LinearMap R1;
  BilinearMap R2;  // g0 x g0 -> g1, skew

  static RBTriple zero(std::size_t dim0, std::size_t dim1);
  friend bool operator==(const RBTriple&, const RBTriple&) = default;
};

struct TwoTermRBLInfinity {
  TwoTermLInfinity linf;
  RBTriple rb;

  std::size_t dim0() const { return linf.dim0(); }
  std::size_t dim1() const { return linf.dim1(); }
  bool strict() const { return linf.strict() && rb.R2.is_zero(); }
  void check_shape() const;
  friend bool operator==(const TwoTermRBLInfinity&, const TwoTermRBLInfinity&) = default;
};

struct LInfinityHom {
  TwoTermLInfinity source;
  TwoTermLInfinity target;
  LinearMap phi0;    // g0 -> g0'
  LinearMap phi1;    // g1 -> g1'
  BilinearMap phi2;  // g0 x g0 -> g1', skew

  void check_shape() const;
  friend bool operator==(const LInfinityHom&, const LInfinityHom&) = default;
};

struct RBLInfinityHom {
  TwoTermRBLInfinity source;
  TwoTermRBLInfinity target;
  LinearMap phi0;
  LinearMap phi1;
  BilinearMap phi2;
  LinearMap phi3;  // g0 -> g1'

  LInfinityHom underlying() const { return {source.linf, target.linf, phi0, phi1, phi2}; }
  void check_shape() const;
  friend bool operator==(const RBLInfinityHom&, const RBLInfinityHom&) = default;
};

/// Conditions (a)-(d) plus the skew/alternating shape flags.
VerificationReport verify_2term(const TwoTermLInfinity& L, const Exec& exec = {});
/// Chain-map property and conditions (1)-(3) of the triple.
VerificationReport verify_rb_triple(const TwoTermRBLInfinity& G, const Exec& exec = {});
VerificationReport verify_hom(const LInfinityHom& f, const Exec& exec = {});
/// The three Rota-Baxter compatibility equations only.
VerificationReport verify_rb_hom(const RBLInfinityHom& f, const Exec& exec = {});

/// Residual of condition (3) at an ordered triple of basis indices.
Vector rbt3_residual(const TwoTermRBLInfinity& G, std::size_t i, std::size_t j, std::size_t k);
/// Residual of the third homomorphism equation at a basis pair.
Vector rbhom3_residual(const RBLInfinityHom& f, std::size_t i, std::size_t j);
/// Arrow part of the bracket of F3(x) and F3(y) in the target.
Vector rbhom_bracket_term(const RBLInfinityHom& f, const Vector& x, const Vector& y);

struct Completion {
  enum class Status { ok, condition1_unsolvable, post_check_failed };
  Status status = Status::ok;
  std::optional<RBTriple> triple;  // set unless condition (1) was unsolvable
  VerificationReport report;       // the unsolvable pairs, or the post-solve violations
};

/// Solves condition (1) for R2 pair by pair and re-verifies the triple.
Completion complete_rb_triple(const TwoTermLInfinity& L, const LinearMap& R0, const LinearMap& R1);

LInfinityHom identity_hom(const TwoTermLInfinity& L);
RBLInfinityHom identity_rb_hom(const TwoTermRBLInfinity& G);
/// g after f.
LInfinityHom compose_homs(const LInfinityHom& g, const LInfinityHom& f);
/// g after f; the result is certified when both inputs verify.
RBLInfinityHom compose_rb_homs(const RBLInfinityHom& g, const RBLInfinityHom& f);

/// Every check for an RB hom: both ends, the L-infinity part and the RB part.
VerificationReport verify_rb_hom_full(const RBLInfinityHom& f, const Exec& exec = {});
VerificationReport verify_rb_2term_full(const TwoTermRBLInfinity& G, const Exec& exec = {});

}  // namespace rbl2
