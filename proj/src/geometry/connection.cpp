#include "rptgeo/connection.hpp"

namespace rptgeo {

Tensor torsion_vector(const FrameAlgebra& fa, const Connection& conn) {
  return Tensor::generate(fa.dim(), {Variance::Co, Variance::Co, Variance::Contra}, [&](const Index& x) {
    return conn(x[0], x[1], x[2]) - conn(x[1], x[0], x[2]) - fa.c(x[0], x[1], x[2]);
  });
}

Tensor torsion(const FrameAlgebra& fa, const Connection& conn) {
  return lower(torsion_vector(fa, conn), 2, fa.metric());
}

Connection shift_connection(const FrameAlgebra& fa, const Connection& base, const Tensor& q,
                            std::string name) {
  if (q.rank() != 3 || q.dim() != fa.dim()) throw TensorError("difference tensor must be (0,3)");
  return Connection{std::move(name), base.coefficients + raise(q, 2, fa.inverse_metric())};
}

Tensor difference_tensor(const FrameAlgebra& fa, const Connection& from, const Connection& to) {
  return lower(to.coefficients - from.coefficients, 2, fa.metric());
}

}  // namespace rptgeo
