#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "printing.hpp"
#include "process.hpp"
#include "rptgeo/example_g.hpp"
#include "rptgeo/spec_io.hpp"

#include <algorithm>
#include <fstream>

using namespace rptgeo;
using namespace rptgeo::testing;
using nlohmann::json;

namespace {

bool has_witness(const CheckReport& r, const std::string& what, const Index& idx) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const Witness& w) { return w.what == what && w.index == idx; });
}

json example_doc() { return read_json_file(data_dir() / "example_w3.json"); }

std::string spec_error_message(const json& doc) {
  try {
    parse_spec(doc);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

FrameAlgebra single_bracket() {
  Tensor c = zero_structure(4);
  c(0, 1, 2) = 1;
  c(1, 0, 2) = -1;
  return FrameAlgebra({}, std::move(c), Matrix::identity(4), block_swap(4));
}

}  // namespace

TEST_CASE("validate accepts the symbolic example") {
  const CheckReport r = validate(build_example(ExampleSpec::symbolic()));
  CHECK(r.passed);
  CHECK(r.witnesses.empty());
  CHECK(jacobi_violations(build_example(ExampleSpec::symbolic())).empty());
}

TEST_CASE("validate accepts the abelian frame with the swap structure") {
  const FrameAlgebra fa = load_spec(data_dir() / "abelian.json");
  CHECK(validate(fa).passed);
  CHECK(fa.structure().is_zero());
}

TEST_CASE("perturbing the [X3,X4] coefficient by one breaks Jacobi") {
  const FrameAlgebra fa = load_spec(data_dir() / "broken_jacobi.json");
  const CheckReport r = validate(fa);
  CHECK_FALSE(r.passed);
  const auto oracle = jacobi_violations(fa);
  REQUIRE_FALSE(oracle.empty());
  std::size_t jacobi = 0;
  for (const Witness& w : r.witnesses) {
    if (w.what != "jacobi") continue;
    ++jacobi;
    CHECK(std::find(oracle.begin(), oracle.end(), w.index) != oracle.end());
  }
  CHECK(jacobi == std::min(oracle.size(), CheckReport::kMaxWitnessesPerCondition));
}

TEST_CASE("validate reports each broken axiom") {
  SUBCASE("asymmetric metric") {
    Matrix g = Matrix::identity(2);
    g(0, 1) = 1;
    const FrameAlgebra fa({}, zero_structure(2), g, block_swap(2));
    CHECK(has_witness(validate(fa), "metric symmetry", {1, 2}));
  }
  SUBCASE("indefinite numeric metric") {
    Matrix g = Matrix::identity(2);
    g(0, 0) = -1;
    g(1, 1) = -1;
    const CheckReport r = validate(FrameAlgebra({}, zero_structure(2), g, block_swap(2)));
    CHECK(has_witness(r, "positive definite (leading minor > 0)", {1}));
  }
  SUBCASE("parametric metric gets a positivity note") {
    Matrix g = Matrix::identity(2);
    g(0, 0) = Scalar::variable(0).pow(2) + Scalar(1);
    g(1, 1) = g(0, 0);
    const CheckReport r = validate(FrameAlgebra({"a"}, zero_structure(2), g, block_swap(2)));
    CHECK(r.passed);
    CHECK(std::find(r.notes.begin(), r.notes.end(), "positivity unverified (parametric)") != r.notes.end());
  }
  SUBCASE("P that is not an involution") {
    Matrix p = block_swap(2);
    p(0, 1) = 2;
    const CheckReport r = validate(FrameAlgebra({}, zero_structure(2), Matrix::identity(2), p));
    CHECK(has_witness(r, "P^2 = I", {1, 1}));
    CHECK(has_witness(r, "g(Px, Py) = g(x, y)", {2, 2}));
  }
  SUBCASE("P with nonzero trace") {
    const CheckReport r = validate(FrameAlgebra({}, zero_structure(2), Matrix::identity(2), Matrix::identity(2)));
    CHECK_FALSE(r.passed);
    CHECK(std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const Witness& w) { return w.what == "tr P = 0"; }));
  }
  SUBCASE("non-antisymmetric brackets") {
    Tensor c = zero_structure(2);
    c(0, 1, 0) = 1;
    c(1, 0, 0) = 1;
    const CheckReport r = validate(FrameAlgebra({}, c, Matrix::identity(2), block_swap(2)));
    CHECK(has_witness(r, "bracket antisymmetry", {1, 2, 1}));
  }
}

TEST_CASE("structural errors are raised, not reported") {
  CHECK_THROWS_AS(FrameAlgebra({}, zero_structure(3), Matrix::identity(3), Matrix::identity(3)), StructureError);
  CHECK_THROWS_AS(FrameAlgebra({}, zero_structure(2), Matrix::identity(2), Matrix::identity(4)), StructureError);
  CHECK_THROWS_AS(FrameAlgebra({"a", "a"}, zero_structure(2), Matrix::identity(2), block_swap(2)), StructureError);
  CHECK_THROWS_AS(FrameAlgebra({}, zero_structure(2), Matrix(2), block_swap(2)).inverse_metric(), SingularMetric);
}

TEST_CASE("associated metric on the example") {
  const FrameAlgebra fa = build_example(ExampleSpec::symbolic());
  const Matrix gt = associated_metric(fa);
  CHECK(gt == fa.product());
  CHECK(gt(0, 2) == Scalar(1));
  CHECK(gt.is_symmetric());
}

TEST_CASE("associated metric is symmetric on rotated frames") {
  Gen gen(21);
  for (int i = 0; i < 5; ++i) {
    const FrameAlgebra fa = rotated_example(gen);
    const Matrix gt = associated_metric(fa);
    CHECK(gt == gt.transpose());
    CHECK(gt == fa.metric() * fa.product());
  }
}

TEST_CASE("Killing condition") {
  SUBCASE("symbolic example") {
    const FrameAlgebra fa = build_example(ExampleSpec::symbolic());
    CHECK(killing_check(fa).passed);
    CHECK(killing_violations(fa).empty());
  }
  SUBCASE("abelian") { CHECK(killing_check(load_spec(data_dir() / "abelian.json")).passed); }
  SUBCASE("single bracket [X1,X2] = X3") {
    const FrameAlgebra fa = single_bracket();
    const CheckReport r = killing_check(fa);
    CHECK_FALSE(r.passed);
    const auto oracle = killing_violations(fa);
    CHECK(std::find(oracle.begin(), oracle.end(), Index{1, 2, 1}) != oracle.end());
    CHECK(has_witness(r, "g([x,y],Pz) + g([x,z],Py) = 0", {1, 2, 1}));
    CHECK(r.witnesses.size() == oracle.size());
  }
}

TEST_CASE("the shipped example spec loads to the example family") {
  const FrameAlgebra fa = load_spec(data_dir() / "example_w3.json");
  CHECK(fa == build_example(ExampleSpec::symbolic()));
  // [X2,X4] = -l4 X1 + l2 X3
  CHECK(fa.c(1, 3, 0) == -Scalar::variable(3));
  CHECK(fa.c(1, 3, 2) == Scalar::variable(1));
}

TEST_CASE("empty brackets list gives an abelian frame") {
  json doc = example_doc();
  doc["brackets"] = json::array();
  const FrameAlgebra fa = parse_spec(doc);
  CHECK(fa.structure().is_zero());
  CHECK(validate(fa).passed);
}

TEST_CASE("metric shape violations name the offending row") {
  json doc = example_doc();
  doc["metric"][2] = json::array({"0", "0", "1"});
  const std::string msg = spec_error_message(doc);
  CHECK(msg.rfind("metric[2]", 0) == 0);
  CHECK(msg.find("expected 4 entries, got 3") != std::string::npos);

  json short_doc = example_doc();
  short_doc["metric"].erase(3);
  CHECK(spec_error_message(short_doc) == "metric: expected 4 rows, got 3");
}

TEST_CASE("schema errors carry a field path") {
  json doc = example_doc();
  doc["brackets"][0]["result"]["1"] = "l1 +";
  CHECK(spec_error_message(doc).rfind("brackets[0].result.1", 0) == 0);

  doc = example_doc();
  doc.erase("product");
  CHECK(spec_error_message(doc).rfind("product", 0) == 0);

  doc = example_doc();
  doc["brackets"][0]["left"] = 2;
  doc["brackets"][0]["right"] = 1;
  CHECK(spec_error_message(doc).find("left < right") != std::string::npos);

  doc = example_doc();
  doc["dimension"] = 3;
  CHECK(spec_error_message(doc) == "dimension: must be even");

  CHECK_THROWS_AS(load_spec(data_dir() / "does_not_exist.json"), SpecError);
}

TEST_CASE("load, save, load is the identity") {
  TempDir tmp("rptgeo-spec");
  for (const char* name : {"example_w3.json", "abelian.json", "nonw3.json", "broken_jacobi.json"}) {
    const FrameAlgebra fa = load_spec(data_dir() / name);
    save_spec(fa, tmp.path() / name);
    const FrameAlgebra again = load_spec(tmp.path() / name);
    CHECK(again == fa);
    CHECK(spec_to_json(again) == spec_to_json(fa));
  }
}

TEST_CASE("P is an isometric involution on every generated frame") {
  Gen gen(22);
  for (int i = 0; i < 10; ++i) {
    const NamedFrame f = random_valid_frame(gen, i);
    INFO(f.label);
    const Matrix& p = f.frame.product();
    const Matrix& g = f.frame.metric();
    CHECK(p * p == Matrix::identity(f.frame.dim()));
    CHECK(p.transpose() * g * p == g);
    CHECK(validate(f.frame).passed);
    CHECK(jacobi_violations(f.frame).empty());
  }
}

TEST_CASE("change of basis and direct sums") {
  Gen gen(23);
  const FrameAlgebra fa = random_example(gen);
  const Matrix b = gen.invertible(4);
  const FrameAlgebra rotated = change_basis(fa, b);
  CHECK(change_basis(rotated, *b.inverse()) == fa);
  CHECK_THROWS_AS(change_basis(fa, Matrix(4)), StructureError);

  const FrameAlgebra sum = direct_sum(build_example(ExampleSpec::symbolic()), abelian_plane());
  CHECK(sum.dim() == 6);
  CHECK(validate(sum).passed);
  CHECK(sum.product()(4, 5) == Scalar(1));
  CHECK_THROWS_AS(direct_sum(build_example(ExampleSpec::symbolic()), build_example(ExampleSpec::symbolic())),
                  StructureError);
}
