#pragma once

#include "rptgeo/connection.hpp"
#include "rptgeo/frame_algebra.hpp"
#include "rptgeo/tensor.hpp"

#include <string>

namespace rptgeo {

/// Levi-Civita connection from the Koszul formula with constant metric
/// components:
///   2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g([e_k,e_j],e_i).
/// Throws SingularMetric when g has no inverse.
Connection levi_civita(const FrameAlgebra& fa);

/// (nabla_{e_i} P) e_j = nabla_i (P e_j) - P nabla_i e_j as a (co i, co j, contra l)
/// tensor. Works for any connection.
Tensor nabla_P(const FrameAlgebra& fa, const Connection& conn);

/// F(x, y, z) = g((nabla_x P) y, z) for the Levi-Civita connection lc.
/// Throws InternalInconsistency if the F identities below fail.
Tensor fundamental_F(const FrameAlgebra& fa, const Connection& lc);

/// F(x,y,z) = F(x,z,y) = -F(x,Py,Pz) and F(x,y,Pz) = -F(x,Py,z).
CheckReport check_F_identities(const FrameAlgebra& fa, const Tensor& f);

/// N(x,y) = (nabla_x P)Py - (nabla_y P)Px + (nabla_{Px} P)y - (nabla_{Py} P)x,
/// as (co, co, contra).
Tensor nijenhuis(const FrameAlgebra& fa, const Connection& lc);

/// g^{ij} g^{ks} g((nabla_i P) e_k, (nabla_j P) e_s).
Scalar square_norm_nabla_P(const FrameAlgebra& fa, const Connection& lc);

struct Curvature {
  Tensor riemann;  // R(x,y,z,w) = g(R(x,y)z, w)
  Tensor ricci;    // rho(y,z) = g^{ij} R(e_i, y, z, e_j)
  Scalar scalar;   // tau = g^{ij} rho(e_i, e_j)
};

/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z on the
/// frame, i.e. R^s_{ijk} = A^m_{jk} A^s_{im} - A^m_{ik} A^s_{jm} - c^m_{ij} A^s_{mk}.
Curvature curvature(const FrameAlgebra& fa, const Connection& conn);

enum class ManifoldClass { W0, W3Strict, Outside };

struct ClassLabel {
  ManifoldClass kind;
  bool f_zero;
  bool cyclic_sum_zero;
};

std::string to_string(ManifoldClass c);

/// W0 when F = 0, W3-strict when the cyclic sum of F vanishes but F does
/// not, otherwise outside the implemented classes (W1/W2 are never claimed).
ClassLabel classify(const FrameAlgebra& fa);

struct TorsionProjections {
  Tensor p1, p2, p3, p4;
};

/// Components of a torsion-type (0,3) tensor (antisymmetric in its first
/// two slots) in the four invariant subspaces determined by P and g.
/// Throws TensorError when t is not antisymmetric in slots 1 and 2.
TorsionProjections torsion_projections(const Tensor& t, const FrameAlgebra& fa);

/// u(x,y,z) = t(x or Px, y or Py, z or Pz), bit s of mask selecting P in slot s.
/// Shared helper for formulas that feed P into several slots.
class PTwisted {
public:
  PTwisted(const Tensor& t, const Matrix& p);
  /// Component of t with P applied to the slots in mask.
  const Scalar& operator()(unsigned mask, std::initializer_list<std::size_t> idx) const {
    return variants_[mask].at(idx);
  }
  const Tensor& variant(unsigned mask) const { return variants_[mask]; }

private:
  std::vector<Tensor> variants_;
};

}  // namespace rptgeo
