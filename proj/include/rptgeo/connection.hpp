#pragma once

#include "rptgeo/frame_algebra.hpp"
#include "rptgeo/tensor.hpp"

#include <stdexcept>
#include <string>

namespace rptgeo {

/// Signals that an identity guaranteed by construction failed; seeing one
/// means a bug, not bad input.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Left-invariant linear connection on a frame algebra, given by
/// nabla_{e_i} e_j = A^k_{ij} e_k. Functions taking a Connection also take
/// the FrameAlgebra it lives on.
struct Connection {
  std::string name;
  Tensor coefficients;  // (co i, co j, contra k)

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return coefficients(i, j, k);
  }
};

/// T(e_i, e_j) = nabla_i e_j - nabla_j e_i - [e_i, e_j], as (co, co, contra).
Tensor torsion_vector(const FrameAlgebra& fa, const Connection& conn);
/// T(x, y, z) = g(T(x, y), z).
Tensor torsion(const FrameAlgebra& fa, const Connection& conn);

/// nabla'_x y = nabla_x y + Q(x, y), with Q given as the (0,3) tensor
/// Q(x, y, z) = g(Q(x, y), z).
Connection shift_connection(const FrameAlgebra& fa, const Connection& base, const Tensor& q,
                            std::string name);

/// The (0,3) difference tensor g(nabla'_x y - nabla_x y, z).
Tensor difference_tensor(const FrameAlgebra& fa, const Connection& from, const Connection& to);

}  // namespace rptgeo
