#include "rptgeo/example_g.hpp"

namespace rptgeo {

ExampleSpec ExampleSpec::symbolic() {
  return ExampleSpec{{"l1", "l2", "l3", "l4"},
                     {Scalar::variable(0), Scalar::variable(1), Scalar::variable(2), Scalar::variable(3)}};
}

ExampleSpec ExampleSpec::numeric(const std::array<Rational, 4>& values) {
  return ExampleSpec{{}, {Scalar(values[0]), Scalar(values[1]), Scalar(values[2]), Scalar(values[3])}};
}

FrameAlgebra build_example(const ExampleSpec& spec) {
  const auto& [l1, l2, l3, l4] = spec.lambda;
  Tensor c = zero_structure(4);
  auto bracket = [&c](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c(i - 1, j - 1, k - 1) = v;
    c(j - 1, i - 1, k - 1) = -v;
  };
  bracket(1, 2, 1, l1);
  bracket(1, 2, 2, l2);
  bracket(1, 3, 2, l3);
  bracket(1, 3, 4, -l1);
  bracket(1, 4, 1, -l3);
  bracket(1, 4, 4, -l2);
  bracket(2, 3, 2, l4);
  bracket(2, 3, 3, l1);
  bracket(2, 4, 1, -l4);
  bracket(2, 4, 3, l2);
  bracket(3, 4, 3, l3);
  bracket(3, 4, 4, l4);

  Matrix p(4);
  p(2, 0) = p(3, 1) = p(0, 2) = p(1, 3) = Scalar(1);
  return FrameAlgebra(spec.params, std::move(c), Matrix::identity(4), std::move(p));
}

std::optional<std::array<Scalar, 4>> match_example(const FrameAlgebra& fa) {
  if (fa.dim() != 4) return std::nullopt;
  std::array<Scalar, 4> lambda{fa.c(0, 1, 0), fa.c(0, 1, 1), fa.c(0, 2, 1), fa.c(1, 2, 1)};
  const FrameAlgebra candidate = build_example(ExampleSpec{fa.params(), lambda});
  if (!(candidate == fa)) return std::nullopt;
  return lambda;
}

}  // namespace rptgeo
