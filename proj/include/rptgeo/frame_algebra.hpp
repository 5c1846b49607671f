#pragma once

#include "rptgeo/matrix.hpp"
#include "rptgeo/scalar.hpp"
#include "rptgeo/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rptgeo {

/// Malformed shapes or dimensions; distinct from failed axioms, which are
/// reported through CheckReport.
class StructureError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SingularMetric : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// One failing component of a check. Indices are 1-based. expected is empty
/// for conditions that are not equalities (e.g. "det(g) != 0").
struct Witness {
  std::string what;
  Index index;
  std::optional<Scalar> expected;
  Scalar actual;
};

/// Outcome of a structural check. witnesses is empty iff passed.
struct CheckReport {
  static constexpr std::size_t kMaxWitnessesPerCondition = 8;

  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  /// Records a failure; keeps at most kMaxWitnessesPerCondition per `what`.
  void fail(Witness w);
  void merge(const CheckReport& other);
};

/// Lie algebra with a chosen basis {e_1..e_n}, a constant metric and an
/// almost product structure, all expressed by frame components.
///
/// Every tensor built from it is left-invariant: frame components are
/// constants on the group, so directional derivatives of components vanish.
class FrameAlgebra {
public:
  /// structure(i, j, k) = c^k_{ij}, meaning [e_i, e_j] = c^k_{ij} e_k.
  /// Throws StructureError on inconsistent sizes or an odd/zero dimension.
  FrameAlgebra(ParamNames params, Tensor structure, Matrix metric, Matrix product);

  std::size_t dim() const { return dim_; }
  const ParamNames& params() const { return params_; }
  const Tensor& structure() const { return c_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  const Matrix& metric() const { return g_; }
  const Matrix& product() const { return p_; }

  /// g^{-1}, or nullopt when det(g) is the zero rational function.
  const std::optional<Matrix>& metric_inverse() const { return g_inv_; }
  /// g^{-1}; throws SingularMetric when it does not exist.
  const Matrix& inverse_metric() const;

  /// Substitutes Scalars for the parameters everywhere.
  FrameAlgebra substitute(const std::vector<Scalar>& values) const;

  friend bool operator==(const FrameAlgebra& a, const FrameAlgebra& b) {
    return a.params_ == b.params_ && a.c_ == b.c_ && a.g_ == b.g_ && a.p_ == b.p_;
  }

private:
  std::size_t dim_;
  ParamNames params_;
  Tensor c_;
  Matrix g_;
  Matrix p_;
  std::optional<Matrix> g_inv_;
};

/// Empty structure-constant tensor of the right shape, for building frames.
Tensor zero_structure(std::size_t dim);

/// Checks bracket antisymmetry, the Jacobi identity, symmetry and
/// nondegeneracy of g (plus positivity when g is parameter-free), P^2 = I,
/// P^T g P = g and tr P = 0.
CheckReport validate(const FrameAlgebra& fa);

/// g~(x, y) = g(x, Py), i.e. the matrix g P.
Matrix associated_metric(const FrameAlgebra& fa);

/// g([e_i,e_j], P e_k) + g([e_i,e_k], P e_j) = 0 for all i, j, k.
CheckReport killing_check(const FrameAlgebra& fa);

/// The same algebra in the basis f_a = sum_i basis(i, a) e_i.
FrameAlgebra change_basis(const FrameAlgebra& fa, const Matrix& basis);

/// Orthogonal direct sum; b's parameters are appended after a's and must
/// have distinct names.
FrameAlgebra direct_sum(const FrameAlgebra& a, const FrameAlgebra& b);

}  // namespace rptgeo
