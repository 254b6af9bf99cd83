#include "blocklab/quiverlab.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"

using namespace blocklab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("parse errors carry their line and kind") {
  try {
    parse_quiver("field 3\nvertices v\nrelation w.w");
    FAIL("expected unknown_label");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_label);
  }
  try {
    parse_quiver("field 3\nvertices v\nbogus 1");
    FAIL("expected parse_error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  // a ends at w, b starts at v: a.b is not composable
  try {
    parse_quiver("field 3\nvertices v w\narrow a v w\narrow b v w\nrelation a.b");
    FAIL("expected non_composable_path");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_composable_path);
  }
  // a lone arrow inside a difference is not admissible
  try {
    parse_quiver("field 3\nvertices v\narrow x v v\nrelation x.x - x");
    FAIL("expected parse_error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("the shipped presentation parses to 2 vertices, 4 arrows, 8 relations") {
  QuiverSpec q = parse_quiver(algebra_A_source());
  CHECK(q.vertices.size() == 2);
  CHECK(q.arrows.size() == 4);
  CHECK(q.relations.size() == 8);
  CHECK(q.maxlen == 6);
  CHECK(q.p == 3);
}

TEST_CASE("vertex names inside paths denote trivial paths") {
  BuiltQuiver b = build_path_algebra(parse_quiver(
      "field 3\nvertices i j\narrow a i j\narrow b j i\nrelation a.j.b\nrelation b.i.a\nmaxlen 3"));
  CHECK(b.alg.dim == 4);  // i, j, a, b survive; both length-2 paths are killed
  CHECK(vec_is_zero(b.alg.mul(b.arrow_elements[0], b.arrow_elements[1])));
}

TEST_CASE("single vertex with no arrows builds GF(p)") {
  BuiltQuiver b = build_path_algebra(parse_quiver("field 3\nvertices v\nmaxlen 2"));
  CHECK(b.alg.dim == 1);
  CHECK(b.alg.unit == FpVector{1});
}

TEST_CASE("loop with x.x = 0 builds the dual numbers") {
  BuiltQuiver b = build_path_algebra(parse_quiver("field 3\nvertices v\narrow x v v\nrelation x.x\nmaxlen 3"));
  CHECK(b.alg.dim == 2);
  FpVector x = b.arrow_elements[0];
  CHECK(vec_is_zero(b.alg.mul(x, x)));
}

TEST_CASE("the nine-dimensional algebra A") {
  AlgebraAHandles a = algebra_A();
  CHECK(a.alg.dim == 9);
  CHECK(a.alg.p == 3);

  // the defining relations hold element-wise
  FpVector dd = a.alg.mul(a.delta, a.delta);
  FpVector ggg = a.alg.mul(a.gamma, a.alg.mul(a.gamma, a.gamma));
  FpVector ab = a.alg.mul(a.alpha, a.beta);
  CHECK(dd == ggg);
  CHECK(ggg == ab);
  CHECK_FALSE(vec_is_zero(ab));
  CHECK(vec_is_zero(a.alg.mul(a.delta, a.gamma)));
  CHECK(vec_is_zero(a.alg.mul(a.gamma, a.delta)));
  CHECK(vec_is_zero(a.alg.mul(a.delta, a.alpha)));
  CHECK(vec_is_zero(a.alg.mul(a.gamma, a.alpha)));
  CHECK(vec_is_zero(a.alg.mul(a.beta, a.delta)));
  CHECK(vec_is_zero(a.alg.mul(a.beta, a.gamma)));

  // vertex idempotents decompose the unit
  CHECK(a.alg.mul(a.i, a.i) == a.i);
  CHECK(a.alg.mul(a.j, a.j) == a.j);
  CHECK(vec_add(a.i, a.j, 3) == a.alg.unit);
  CHECK(vec_is_zero(a.alg.mul(a.i, a.j)));

  // composition convention gate: the nine stated elements are a basis
  FpVector ba = a.alg.mul(a.beta, a.alpha);
  FpVector gg = a.alg.mul(a.gamma, a.gamma);
  std::vector<FpVector> nine = {a.i, a.j, a.alpha, a.beta, ba, a.gamma, gg, a.delta, dd};
  CHECK(span(nine, 9, 3).dim() == 9);
}

TEST_CASE("rebuild determinism") {
  AlgebraAHandles a = algebra_A();
  AlgebraAHandles b = algebra_A();
  CHECK(a.alg.table == b.alg.table);
  CHECK(a.alg.unit == b.alg.unit);
  CHECK(a.alg.labels == b.alg.labels);
}

TEST_CASE("truncation stability and monotonicity") {
  QuiverSpec q = parse_quiver(algebra_A_source());
  for (std::uint32_t l : {1u, 2u}) {
    q.maxlen = l;
    CHECK_THROWS_AS(build_path_algebra(q), error);
  }
  std::size_t prev = 0;
  for (std::uint32_t l : {5u, 6u, 7u}) {
    q.maxlen = l;
    std::size_t dim = build_path_algebra(q).alg.dim;
    CHECK(dim == 9);
    if (prev != 0) CHECK(dim <= prev);
    prev = dim;
  }
}

TEST_CASE("commutative presentations") {
  PresentedAlgebra z = build_comm_presented(parse_comm(stable_center_presentation_source()));
  CHECK(z.alg.dim == 5);
  CHECK(z.alg.labels == std::vector<std::string>{"1", "x", "y", "x^2", "y^2"});
  CHECK(z.alg.is_commutative());
  // x^3 = y^2 as elements, x^4 = 0
  FpVector x3 = z.alg.power(z.generators[0], 3);
  CHECK(x3 == z.alg.power(z.generators[1], 2));
  CHECK_FALSE(vec_is_zero(x3));
  CHECK(vec_is_zero(z.alg.power(z.generators[0], 4)));

  PresentedAlgebra kp = build_comm_presented(parse_comm(truncated_poly_source()));
  CHECK(kp.alg.dim == 9);

  PresentedAlgebra u3 = build_comm_presented(parse_comm(uniserial_dim3_source()));
  CHECK(u3.alg.dim == 3);

  // relation with a constant term exercises the boundary-pivot stability path
  PresentedAlgebra split = build_comm_presented(parse_comm("field 3\ngenerators x\nbound 4\nrelation x^2 - 1"));
  CHECK(split.alg.dim == 2);
  CHECK(split.alg.power(split.generators[0], 2) == split.alg.unit);

  // unstable: bound too small for the relation degrees
  CHECK_THROWS_AS(build_comm_presented(parse_comm("field 3\ngenerators x\nbound 2\nrelation x^3")), error);
  // genuinely infinite-dimensional: no relations
  CHECK_THROWS_AS(build_comm_presented(parse_comm("field 3\ngenerators x y\nbound 3")), error);
}

TEST_CASE("shipped presentation files match the embedded sources") {
  std::string dir = BLOCKLAB_SPECS_DIR;
  CHECK(read_file(dir + "/algebra_A.quiver") == std::string(algebra_A_source()));
  CHECK(read_file(dir + "/stable_center_A.comm") == std::string(stable_center_presentation_source()));
  CHECK(read_file(dir + "/poly_xy_cubed.comm") == std::string(truncated_poly_source()));
  CHECK(read_file(dir + "/uniserial_dim3.comm") == std::string(uniserial_dim3_source()));
}
