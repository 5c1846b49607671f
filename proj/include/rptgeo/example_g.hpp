#pragma once

#include "rptgeo/frame_algebra.hpp"

#include <array>
#include <optional>

namespace rptgeo {

/// Parameters of the four-dimensional Lie group family
///   [X1,X2] = l1 X1 + l2 X2    [X1,X3] = l3 X2 - l1 X4
///   [X1,X4] = -l3 X1 - l2 X4   [X2,X3] = l4 X2 + l1 X3
///   [X2,X4] = -l4 X1 + l2 X3   [X3,X4] = l3 X3 + l4 X4
/// with g = identity and P swapping X1 <-> X3, X2 <-> X4.
struct ExampleSpec {
  ParamNames params;
  std::array<Scalar, 4> lambda;

  /// lambda = (l1, l2, l3, l4) as free parameters.
  static ExampleSpec symbolic();
  static ExampleSpec numeric(const std::array<Rational, 4>& values);
};

FrameAlgebra build_example(const ExampleSpec& spec);

/// Reads lambda back from a frame when it is exactly a member of the family
/// (same metric, product and brackets); nullopt otherwise.
std::optional<std::array<Scalar, 4>> match_example(const FrameAlgebra& fa);

}  // namespace rptgeo
