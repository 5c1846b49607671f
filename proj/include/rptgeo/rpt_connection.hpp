#pragma once

#include "rptgeo/connection.hpp"
#include "rptgeo/frame_algebra.hpp"
#include "rptgeo/tensor.hpp"

#include <stdexcept>

namespace rptgeo {

/// Raised when an RPT-connection is requested on a frame whose F has a
/// nonzero cyclic sum; no such connection exists there.
class NotW3 : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The Levi-Civita connection together with the three natural connections
/// built from it. Every Q is the (0,3) difference tensor g(nabla^X_x y - nabla_x y, z).
struct ConnectionPack {
  Connection nabla;
  Connection rpt;
  Connection canonical;
  Connection p_conn;
  Tensor F;
  Tensor T;  // torsion of rpt, a 3-form
  Tensor Q;  // = T / 2
  Tensor Q_C;
  Tensor Q_P;
};

/// T(x,y,z) = 1/2 (F(x,y,Pz) + F(y,z,Px) + F(z,x,Py)). Defined on any frame;
/// only on W3 frames is it the torsion of a natural connection.
Tensor rpt_torsion(const Tensor& f, const FrameAlgebra& fa);

/// Builds the pack. Q is assembled from nabla P directly:
///   Q(x,y) = -1/4 {(nabla_x P)Py - (nabla_{Px} P)y - 2(nabla_y P)Px}
/// and cross-checked against T/2.
/// Throws NotW3 outside W3 and InternalInconsistency if the routes disagree.
ConnectionPack rpt_connection(const FrameAlgebra& fa);

/// Q^C(x,y,z) = -1/4 {F(y,Px,z) - F(Py,x,z) + 2F(x,Py,z)}.
Tensor canonical_difference(const Tensor& f, const FrameAlgebra& fa);
/// Q^P(x,y,z) = -1/2 F(x,Py,z).
Tensor p_connection_difference(const Tensor& f, const FrameAlgebra& fa);

/// Passes iff conn P = 0 and conn g = 0.
CheckReport natural_check(const FrameAlgebra& fa, const Connection& conn);

/// (nabla_{e_i} t)(e_{j1},...,e_{jk}) = -sum_s t(..., nabla_{e_i} e_{js}, ...) for an
/// all-covariant t. Slot 0 of the result is the direction i.
Tensor covariant_derivative(const FrameAlgebra& fa, const Connection& conn, const Tensor& t);

/// g(T(x,y), T(z,w)) as a (0,4) tensor.
Tensor torsion_pairing(const Tensor& t, const FrameAlgebra& fa);

/// sigma^T(x,y,z,w) = cyclic sum over x,y,z of g(T(x,y), T(z,w)).
/// Throws TensorError unless t is totally skew.
Tensor sigma_T(const Tensor& t, const FrameAlgebra& fa);

/// dT(x,y,z,w) = S_{x,y,z} (nabla'_x T)(y,z,w) - (nabla'_w T)(x,y,z) + 2 sigma^T(x,y,z,w),
/// where conn is a metric connection whose torsion is T.
/// Throws TensorError unless T is totally skew and std::invalid_argument
/// when conn's torsion differs from T.
Tensor exterior_derivative_torsion(const FrameAlgebra& fa, const Connection& conn, const Tensor& t);

}  // namespace rptgeo
