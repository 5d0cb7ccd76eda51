#pragma once

#include "rbl2/report.hpp"
#include "rbl2/two_term.hpp"

namespace rbl2 {

/// A morphism of the skeletal 2-vector space g1 -> g0: its source object
/// and its arrow part. The target source + l1(arrow) is derived.
struct Morphism2V {
  Vector source;
  Vector arrow;

  friend bool operator==(const Morphism2V&, const Morphism2V&) = default;
};

Morphism2V operator+(const Morphism2V& a, const Morphism2V& b);
Morphism2V operator-(const Morphism2V& a, const Morphism2V& b);
Morphism2V operator*(const Scalar& s, const Morphism2V& f);

/// The 2-vector space presented by a 2-term complex.
class TwoVectorSpace {
 public:
  explicit TwoVectorSpace(LinearMap l1) : l1_(std::move(l1)) {}

  std::size_t dim0() const { return l1_.rows(); }
  std::size_t dim1() const { return l1_.cols(); }
  Vector target(const Morphism2V& f) const;
  Morphism2V identity(const Vector& x) const;
  /// "g then f": requires target(g) == f.source, else NotComposable.
  Morphism2V compose(const Morphism2V& f, const Morphism2V& g) const;
  bool composable(const Morphism2V& f, const Morphism2V& g) const;

 private:
  LinearMap l1_;
};

/// Rota-Baxter Lie 2-algebra presented by 2-term data.
class RBLie2View {
 public:
  explicit RBLie2View(TwoTermRBLInfinity base);

  const TwoTermRBLInfinity& base() const { return base_; }
  const TwoVectorSpace& space() const { return space_; }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// [f, g] = (l2(x,z), l2(arrow f, z) + l2(target f, arrow g)).
  Morphism2V bracket(const Morphism2V& f, const Morphism2V& g) const;
  /// [f, g] = (l2(x,z), l2(x, arrow g) + l2(arrow f, target g)).
  Morphism2V bracket_alt(const Morphism2V& f, const Morphism2V& g) const;
  Morphism2V jacobiator(const Vector& x, const Vector& y, const Vector& z) const;
  Vector P0(const Vector& x) const;
  Morphism2V P1(const Morphism2V& f) const;
  /// ([P0 x, P0 y], R2(x, y)).
  Morphism2V calR(const Vector& x, const Vector& y) const;

 private:
  TwoTermRBLInfinity base_;
  TwoVectorSpace space_;
};

/// Homomorphism of Rota-Baxter Lie 2-algebras presented by chain data.
class RBLie2HomView {
 public:
  explicit RBLie2HomView(RBLInfinityHom hom);

  const RBLie2View& source() const { return source_; }
  const RBLie2View& target() const { return target_; }
  Vector F0(const Vector& x) const;
  Morphism2V F1(const Morphism2V& f) const;
  /// ([F0 x, F0 y]', phi2(x, y)).
  Morphism2V F2(const Vector& x, const Vector& y) const;
  /// (R0' F0 x, phi3(x)).
  Morphism2V F3(const Vector& x) const;

 private:
  RBLInfinityHom hom_;
  RBLie2View source_;
  RBLie2View target_;
};

/// The coherence diagram for P and calR, evaluated on every ordered basis
/// triple. Ids: "rbcoh" (the two paths differ), "rbcoh.compose" (an arrow
/// is not composable with its predecessor), "rbcoh.node" (an intermediate
/// object differs from the displayed node), "rbcoh.arrow-form" (the two
/// paths disagree with the arrow-part identity about this triple).
VerificationReport verify_rbcoh(const RBLie2View& L, const Exec& exec = {});
/// Arrow difference (left path minus right path) at a basis triple.
Vector rbcoh_arrow_difference(const RBLie2View& L, std::size_t i, std::size_t j, std::size_t k);

/// The coherence square of a homomorphism, on every ordered basis pair.
VerificationReport verify_rbcohm(const RBLInfinityHom& F, const Exec& exec = {});

/// Naturality of calR in its first slot along the morphisms (0, u).
VerificationReport verify_rb_naturality(const RBLie2View& L);

/// Functor S: reads 2-term data back off a view.
TwoTermRBLInfinity extract(const RBLie2View& L);
RBLInfinityHom extract(const RBLie2HomView& F);

/// S after T compared entrywise with the input.
VerificationReport roundtrip_ST(const TwoTermRBLInfinity& G);
VerificationReport roundtrip_ST(const RBLInfinityHom& f);

}  // namespace rbl2
