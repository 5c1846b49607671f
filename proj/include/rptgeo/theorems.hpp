#pragma once

#include "rptgeo/frame_algebra.hpp"
#include "rptgeo/rpt_connection.hpp"

#include <array>
#include <string>
#include <vector>

namespace rptgeo {

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

enum class Suite { All, Geometry, Rpt, Theorems };
Suite parse_suite(const std::string& name);  // throws std::invalid_argument
std::string to_string(Suite s);

/// Outcome of one identity or theorem check.
///
/// When hypotheses_satisfied is false the result is a skip: the conclusion is
/// still evaluated and reported but never counts as a failure. witnesses
/// holds failing components only; evidence holds components that decided a
/// Boolean side of an equivalence without being a failure.
struct TheoremResult {
  std::string id;
  std::string suite;
  std::string title;
  bool hypotheses_satisfied = true;
  bool conclusion_holds = true;
  /// Advisory checks are reported but do not affect the exit status.
  bool advisory = false;
  std::vector<Witness> witnesses;
  std::vector<Witness> evidence;
  std::vector<std::string> details;
  std::string reason;

  Status status() const;
};

/// Antisymmetry in (x,y) and in (z,w), the cyclic sum over x,y,z, and
/// L(x,y,Pz,Pw) = L(x,y,z,w).
TheoremResult check_p_tensor(const Tensor& l, const FrameAlgebra& fa);

/// R against R' through the torsion, the matching Ricci and scalar
/// relations, tau = tau' + 3/8 |nabla P|^2, and tau = tau' exactly when F = 0.
TheoremResult verify_curvature_relation(const FrameAlgebra& fa, const ConnectionPack& pack);

/// The torsion of the RPT-connection has no p1 or p4 part, nonzero p2 and p3,
/// p2(x,y,z) = F(z,x,Py) and p3(x,y,z) = 1/2 {F(x,y,Pz) + F(y,z,Px) - F(z,x,Py)}.
/// Needs F != 0.
TheoremResult verify_torsion_type(const FrameAlgebra& fa, const ConnectionPack& pack);

/// R' is a P-tensor iff R = R' - 1/4 g(T(x,y),T(z,w)) + 1/12 sigma^T; both sides
/// are evaluated. When R' is a P-tensor, also (nabla'_x T)(y,z,w) = -1/3 sigma^T
/// and rho = rho' - 1/4 g^{ij} g(T(e_i,y),T(z,e_j)).
TheoremResult verify_p_tensor_curvature(const FrameAlgebra& fa, const ConnectionPack& pack);

/// nabla'T = 0 iff R = R' - 1/4 g(T(x,y),T(z,w)) - 1/4 sigma^T; when parallel,
/// the pair symmetry of R', its cyclic sum equal to sigma^T, P-invariance of
/// R' and sigma^T, and with a P-tensor R' also sigma^T = 0 and
/// R = R' - 1/4 g(T(x,y),T(z,w)).
TheoremResult verify_parallel_torsion(const FrameAlgebra& fa, const ConnectionPack& pack);

/// On the example family: (i) R' is a P-tensor, (ii) T is parallel,
/// (iii) l3 = e l1 and l4 = e l2 for e = 1 or e = -1. All three are evaluated
/// independently and must agree. params names the variables used in lambda.
TheoremResult verify_example_equivalence(const std::array<Scalar, 4>& lambda, const ParamNames& params = {});

/// Every check applicable to fa in the selected suite, in a fixed order.
/// RPT-dependent checks are skipped with a reason outside W3.
std::vector<TheoremResult> run_all(const FrameAlgebra& fa, Suite suite = Suite::All);

}  // namespace rptgeo
