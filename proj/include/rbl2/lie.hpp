#pragma once

#include <string>
#include <vector>

#include "rbl2/linalg.hpp"
#include "rbl2/report.hpp"

namespace rbl2 {

/// One matrix per basis vector of the acting algebra, extended linearly.
using Action = std::vector<LinearMap>;

/// Sum of x_a * action[a].
LinearMap act(const Action& action, const Vector& x, std::size_t dim_v);

struct LieAlgebra {
  BilinearMap bracket;
  std::vector<std::string> labels;

  std::size_t dim() const { return bracket.dim_out(); }
  Vector operator()(const Vector& x, const Vector& y) const { return bracket.apply(x, y); }
  /// ad_x as a dim x dim matrix.
  LinearMap ad(const Vector& x) const { return bracket.left(x); }
  void check_shape() const;

  /// Labels are presentation only and do not take part in equality.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.bracket == b.bracket; }
};

struct RotaBaxterLieAlgebra {
  LieAlgebra base;
  LinearMap R;

  std::size_t dim() const { return base.dim(); }
  void check_shape() const;
  friend bool operator==(const RotaBaxterLieAlgebra&, const RotaBaxterLieAlgebra&) = default;
};

struct PreLieAlgebra {
  BilinearMap mult;

  std::size_t dim() const { return mult.dim_out(); }
  Vector operator()(const Vector& x, const Vector& y) const { return mult.apply(x, y); }
  void check_shape() const;
  friend bool operator==(const PreLieAlgebra&, const PreLieAlgebra&) = default;
};

/// (V; rho, calR) over a Rota-Baxter Lie algebra.
struct RBRepresentation {
  RotaBaxterLieAlgebra algebra;
  std::size_t dim_v = 0;
  Action rho;
  LinearMap calR;

  void check_shape() const;
  friend bool operator==(const RBRepresentation&, const RBRepresentation&) = default;
};

LieAlgebra make_lie(std::size_t dim, std::vector<std::string> labels = {});
/// Sets [e_i, e_j] = value and [e_j, e_i] = -value (0-based indices).
void set_bracket(LieAlgebra& g, std::size_t i, std::size_t j, const Vector& value);

VerificationReport verify_lie(const LieAlgebra& g, const Exec& exec = {});
VerificationReport verify_rb(const RotaBaxterLieAlgebra& rba, const Exec& exec = {});
VerificationReport verify_prelie(const PreLieAlgebra& p, const Exec& exec = {});
/// Homomorphism and rep-RB identities only; the algebra is checked separately.
VerificationReport verify_representation(const RBRepresentation& rep, const Exec& exec = {});
/// phi[x,y]_src - [phi x, phi y]_tgt on basis pairs, reported under `id`.
VerificationReport verify_lie_hom(const LieAlgebra& src, const LieAlgebra& tgt, const LinearMap& phi,
                                  const std::string& id = "lie-hom", const Exec& exec = {});
/// [R e_i, R e_j] - R([R e_i, e_j] + [e_i, R e_j]).
Vector rb_residual(const RotaBaxterLieAlgebra& rba, std::size_t i, std::size_t j);

/// x * y = [R x, y].
PreLieAlgebra prelie_from_rb(const RotaBaxterLieAlgebra& rba);
/// [x, y] = x * y - y * x.
LieAlgebra subadjacent_lie(const PreLieAlgebra& p);
/// [x, y]_R = [R x, y] + [x, R y], computed directly and certified.
LieAlgebra derived_bracket(const RotaBaxterLieAlgebra& rba);
RBRepresentation adjoint_representation(const RotaBaxterLieAlgebra& rba);
RBRepresentation dual_representation(const RBRepresentation& rep);
RBRepresentation coadjoint_representation(const RotaBaxterLieAlgebra& rba);
/// g + V with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u and R + calR.
RotaBaxterLieAlgebra semidirect_product(const RBRepresentation& rep);

}  // namespace rbl2
