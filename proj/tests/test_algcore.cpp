#include "blocklab/algcore.hpp"

#include "blocklab/quiverlab.hpp"
#include "doctest.h"

using namespace blocklab;

namespace {

struct Rng {
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  std::uint32_t next(std::uint32_t bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>((state >> 33) % bound);
  }
};

FpMatrix random_invertible(Rng& rng, std::size_t n, std::uint32_t p) {
  for (;;) {
    FpMatrix m(n, n, p);
    for (auto& v : m.a) v = rng.next(p);
    if (rank(m) == n) return m;
  }
}

// k x k with componentwise multiplication
Algebra split_semisimple_2() {
  std::vector<FpVector> table = {{1, 0}, {0, 0}, {0, 0}, {0, 1}};
  return Algebra::create(2, 3, std::move(table), {1, 1}, {"e1", "e2"});
}

LinearForm form_from_values(const Algebra& a, const std::vector<FpVector>& basis, const FpVector& values) {
  FpMatrix b = FpMatrix::from_rows(basis, a.dim, a.p);
  LinearForm s;
  s.p = a.p;
  s.coeffs = mat_apply(mat_inverse(b), values);
  return s;
}

struct Fixture {
  AlgebraAHandles a = algebra_A();
  FpVector ab, ba, gg, dd;
  LinearForm s;

  Fixture() {
    ab = a.alg.mul(a.alpha, a.beta);
    ba = a.alg.mul(a.beta, a.alpha);
    gg = a.alg.mul(a.gamma, a.gamma);
    dd = a.alg.mul(a.delta, a.delta);
    // the symmetrizing form: 1 on alpha.beta and beta.alpha, 0 on the rest of
    // the standard basis
    std::vector<FpVector> basis = {a.i, a.j, a.alpha, a.beta, ba, a.gamma, gg, a.delta, dd};
    s = form_from_values(a.alg, basis, {0, 0, 0, 0, 1, 0, 0, 0, 1});
  }
};

}  // namespace

TEST_CASE("validate rejects perturbed tables and bad units") {
  AlgebraAHandles a = algebra_A();
  validate(a.alg);  // sanity

  Algebra broken = a.alg;
  broken.table[3 * 9 + 5][0] = fp_add(broken.table[3 * 9 + 5][0], 1, 3);
  try {
    validate(broken);
    FAIL("expected non_associative");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_associative);
  }

  Algebra bad_unit = a.alg;
  bad_unit.unit = a.i;
  try {
    validate(bad_unit);
    FAIL("expected bad_unit");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_unit);
  }
}

TEST_CASE("center and commutator of A") {
  Fixture f;
  Subspace z = center(f.a.alg);
  CHECK(z.dim() == 6);
  FpVector one = f.a.alg.unit;
  Subspace z_expected = span({one, f.a.gamma, f.gg, f.a.delta, f.dd, f.ba}, 9, 3);
  CHECK(z == z_expected);

  Subspace comm = commutator_subspace(f.a.alg);
  CHECK(comm.dim() == 3);
  CHECK(comm == span({f.a.alpha, f.a.beta, vec_sub(f.ab, f.ba, 3)}, 9, 3));

  // a commutative algebra is its own center
  PresentedAlgebra u3 = build_comm_presented(parse_comm(uniserial_dim3_source()));
  CHECK(center(u3.alg) == Subspace::full(3, 3));
  CHECK(commutator_subspace(u3.alg).dim() == 0);
}

TEST_CASE("symmetrizing form, dual basis, trace and Higman ideal on A") {
  Fixture f;
  FormCheck fc = symm_form_check(f.a.alg, f.s);
  CHECK(fc.symmetric);
  CHECK(fc.nondegenerate);

  LinearForm zero{3, FpVector(9, 0)};
  CHECK_FALSE(symm_form_check(f.a.alg, zero).nondegenerate);

  // dual basis of the standard ordered basis
  std::vector<FpVector> basis = {f.a.i, f.a.j, f.a.alpha, f.a.beta, f.ba, f.a.gamma, f.gg, f.a.delta, f.dd};
  std::vector<FpVector> expect = {f.ab, f.ba, f.a.beta, f.a.alpha, f.a.j, f.gg, f.a.gamma, f.a.delta, f.a.i};
  CHECK(dual_basis_of(f.a.alg, f.s, basis) == expect);

  CHECK_THROWS_AS(dual_basis(f.a.alg, zero), error);

  // trace values
  FpVector tr_i = trace_map(f.a.alg, f.s, f.a.i);
  CHECK(tr_i == vec_sub(f.ba, f.ab, 3));
  CHECK(trace_map(f.a.alg, f.s, f.a.j) == vec_scale(2, tr_i, 3));
  for (const FpVector& v : {f.a.alpha, f.a.beta, f.ba, f.a.gamma, f.gg, f.a.delta, f.dd})
    CHECK(vec_is_zero(trace_map(f.a.alg, f.s, v)));

  // trace images are central for every basis element
  Subspace z = center(f.a.alg);
  for (std::size_t u = 0; u < 9; ++u)
    CHECK(contains(z, trace_map(f.a.alg, f.s, f.a.alg.basis_vector(u))));

  Subspace zpr = higman_ideal(f.a.alg, f.s);
  CHECK(zpr.dim() == 1);
  CHECK(zpr == span({vec_sub(f.ab, f.ba, 3)}, 9, 3));

  // an ideal of the center: closed under multiplication by central elements
  for (std::size_t i = 0; i < z.dim(); ++i)
    CHECK(contains(zpr, f.a.alg.mul(z.basis.row(i), zpr.basis.row(0))));
}

TEST_CASE("higman ideal of a separable algebra is the whole center") {
  Algebra kk = split_semisimple_2();
  LinearForm s{3, {1, 1}};
  Subspace zpr = higman_ideal(kk, s);
  CHECK(zpr == center(kk));
  CHECK(zpr.dim() == 2);
}

TEST_CASE("higman ideal does not depend on scaling the form by a central unit") {
  Fixture f;
  Subspace zpr = higman_ideal(f.a.alg, f.s);
  Subspace z = center(f.a.alg);
  std::size_t tested = 0;
  for (std::uint32_t code = 1; code < 729 && tested < 40; ++code) {
    FpVector coords(6);
    std::uint32_t c = code;
    for (std::size_t k = 0; k < 6; ++k) {
      coords[k] = c % 3;
      c /= 3;
    }
    FpVector zu(9, 0);
    for (std::size_t k = 0; k < 6; ++k) vec_addmul(zu, coords[k], z.basis.row(k), 3);
    if (rank(f.a.alg.left_mult_matrix(zu)) != 9) continue;  // not a unit
    LinearForm scaled{3, FpVector(9, 0)};
    for (std::size_t u = 0; u < 9; ++u)
      scaled.coeffs[u] = f.s.eval(f.a.alg.mul(zu, f.a.alg.basis_vector(u)));
    FormCheck fc = symm_form_check(f.a.alg, scaled);
    REQUIRE(fc.symmetric);
    REQUIRE(fc.nondegenerate);
    CHECK(higman_ideal(f.a.alg, scaled) == zpr);
    ++tested;
  }
  CHECK(tested == 40);
}

TEST_CASE("quotient algebra: stable center of A has dimension 5") {
  Fixture f;
  Subspace z = center(f.a.alg);
  SubalgebraResult zalg = subalgebra(f.a.alg, z);
  CHECK(zalg.alg.dim == 6);
  CHECK(zalg.alg.is_commutative());

  Subspace zpr = higman_ideal(f.a.alg, f.s);
  Subspace zpr_in_z = span({coords_in(z, zpr.basis.row(0))}, 6, 3);
  QuotientResult q = quotient_algebra(zalg.alg, zpr_in_z);
  CHECK(q.alg.dim == 5);
  CHECK(check_map(q.projection).cls == MapClass::surjective);

  // quotient by the zero ideal is an isomorphic copy
  QuotientResult qz = quotient_algebra(zalg.alg, Subspace::zero(6, 3));
  CHECK(qz.alg.dim == 6);
  CHECK(check_map(qz.projection).cls == MapClass::iso);

  // span{alpha} is not an ideal of A
  CHECK_THROWS_AS(quotient_algebra(f.a.alg, span({f.a.alpha}, 9, 3)), error);
}

TEST_CASE("radical strategies") {
  Fixture f;

  // arrow ideal of A
  Subspace arrows = span({f.a.alpha, f.a.beta, f.a.gamma, f.a.delta}, 9, 3);
  Subspace cand = ideal_closure(f.a.alg, arrows);
  Subspace j = radical(f.a.alg, RadicalStrategy::ArrowIdeal(cand));
  CHECK(j.dim() == 7);
  CHECK(loewy_layers(f.a.alg, j) == std::vector<std::size_t>{2, 4, 2, 1});
  CHECK(radical_power_dims(f.a.alg, j) == std::vector<std::size_t>{7, 3, 1, 0});
  // cross-check J^3 = span{delta^2}
  Subspace j2 = subspace_product(f.a.alg, j, j);
  Subspace j3 = subspace_product(f.a.alg, j2, j);
  CHECK(j3 == span({f.dd}, 9, 3));
  CHECK(subspace_product(f.a.alg, j, Subspace::zero(9, 3)).dim() == 0);

  // split local: stable center presentation
  PresentedAlgebra z5 = build_comm_presented(parse_comm(stable_center_presentation_source()));
  Subspace jz = radical(z5.alg, RadicalStrategy::SplitLocal());
  CHECK(jz.dim() == 4);
  CHECK(jz == span({z5.generators[0], z5.alg.power(z5.generators[0], 2), z5.generators[1],
                    z5.alg.power(z5.generators[1], 2)},
                   5, 3));
  CHECK(radical_power_dims(z5.alg, jz) == std::vector<std::size_t>{4, 2, 1, 0});

  // failures
  try {
    radical(split_semisimple_2(), RadicalStrategy::SplitLocal());
    FAIL("expected not_split_local");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_split_local);
  }
  try {
    radical(f.a.alg, RadicalStrategy::ArrowIdeal(Subspace::full(9, 3)));
    FAIL("expected candidate_not_nilpotent");
  } catch (const error& e) {
    CHECK(e.code() == errc::candidate_not_nilpotent);
  }
  try {
    radical(f.a.alg, RadicalStrategy::ArrowIdeal(span({f.a.alpha}, 9, 3)));
    FAIL("expected candidate_not_ideal");
  } catch (const error& e) {
    CHECK(e.code() == errc::candidate_not_ideal);
  }
  // a nilpotent ideal that is too small to be the radical
  try {
    radical(f.a.alg, RadicalStrategy::ArrowIdeal(span({f.ab, f.ba}, 9, 3)));
    FAIL("expected candidate_not_maximal");
  } catch (const error& e) {
    CHECK(e.code() == errc::candidate_not_maximal);
  }
}

TEST_CASE("socle") {
  Fixture f;
  Subspace arrows = span({f.a.alpha, f.a.beta, f.a.gamma, f.a.delta}, 9, 3);
  Subspace j = radical(f.a.alg, RadicalStrategy::ArrowIdeal(ideal_closure(f.a.alg, arrows)));
  Subspace soc = socle(f.a.alg, j);
  CHECK(soc.dim() == 2);
  CHECK(soc == span({f.ab, f.ba}, 9, 3));

  // semisimple input: radical zero, socle everything
  Algebra kk = split_semisimple_2();
  CHECK(socle(kk, Subspace::zero(2, 3)) == Subspace::full(2, 3));
}

TEST_CASE("frobenius certificate for split local commutative algebras") {
  PresentedAlgebra z5 = build_comm_presented(parse_comm(stable_center_presentation_source()));
  LinearForm s = frobenius_form_split_local(z5.alg);
  FormCheck fc = symm_form_check(z5.alg, s);
  CHECK(fc.symmetric);
  CHECK(fc.nondegenerate);
  // the socle generator is y^2; the form sends it to 1 and 1,x,x^2,y to 0
  CHECK(s.eval(z5.alg.power(z5.generators[1], 2)) == 1);
  CHECK(s.eval(z5.alg.unit) == 0);
  CHECK(s.eval(z5.generators[0]) == 0);
  CHECK(s.eval(z5.alg.power(z5.generators[0], 2)) == 0);
  CHECK(s.eval(z5.generators[1]) == 0);

  // k[x,y]/(x,y)^2 has socle dimension 2: not Frobenius
  PresentedAlgebra bad =
      build_comm_presented(parse_comm("field 3\ngenerators x y\nbound 3\nrelation x^2\nrelation x*y\nrelation y^2"));
  CHECK(bad.alg.dim == 3);
  try {
    frobenius_form_split_local(bad.alg);
    FAIL("expected not_frobenius");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_frobenius);
  }
}

TEST_CASE("annihilator duality under a certified symmetrizing form") {
  for (std::string_view src : {stable_center_presentation_source(), uniserial_dim3_source()}) {
    PresentedAlgebra a = build_comm_presented(parse_comm(src));
    frobenius_form_split_local(a.alg);  // certificate must exist
    Subspace j = radical(a.alg, RadicalStrategy::SplitLocal());
    CHECK(subspace_product(a.alg, j, Subspace::full(a.alg.dim, 3)) == j);
    CHECK(socle(a.alg, j).dim() + j.dim() == a.alg.dim);
  }
}

TEST_CASE("corner algebras and the Cartan matrix of A") {
  Fixture f;
  SubalgebraResult iai = corner(f.a.alg, f.a.i);
  CHECK(iai.alg.dim == 5);
  CHECK(iai.alg.is_commutative());
  SubalgebraResult jaj = corner(f.a.alg, f.a.j);
  CHECK(jaj.alg.dim == 2);
  SubalgebraResult whole = corner(f.a.alg, f.a.alg.unit);
  CHECK(whole.alg.dim == 9);

  try {
    corner(f.a.alg, f.a.alpha);
    FAIL("expected not_idempotent");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_idempotent);
  }

  IntMatrix c = cartan_matrix(f.a.alg, {f.a.i, f.a.j});
  IntMatrix expect(2, 2);
  expect.at(0, 0) = 5;
  expect.at(0, 1) = 1;
  expect.at(1, 0) = 1;
  expect.at(1, 1) = 2;
  CHECK(c == expect);

  // entries sum to dim A
  std::int64_t total = 0;
  for (auto v : c.a) total += v;
  CHECK(total == 9);

  IntMatrix whole_c(1, 1);
  whole_c.at(0, 0) = 9;
  CHECK(cartan_matrix(f.a.alg, {f.a.alg.unit}) == whole_c);

  try {
    cartan_matrix(f.a.alg, {f.a.i, f.a.i});
    FAIL("expected not_orthogonal");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_orthogonal);
  }
  try {
    cartan_matrix(f.a.alg, {f.a.i});
    FAIL("expected not_unit_sum");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_unit_sum);
  }
}

TEST_CASE("check_map classifies and witnesses") {
  Fixture f;
  AlgebraMap id{f.a.alg, f.a.alg, FpMatrix::identity(9, 3)};
  CHECK(check_map(id).cls == MapClass::iso);

  // swapping two basis vectors of A is not multiplicative
  FpMatrix swapped = FpMatrix::identity(9, 3);
  std::swap(swapped.a[0 * 9 + 0], swapped.a[1 * 9 + 0]);
  std::swap(swapped.a[0 * 9 + 1], swapped.a[1 * 9 + 1]);
  MapCheckResult r = check_map(AlgebraMap{f.a.alg, f.a.alg, swapped});
  CHECK(r.cls == MapClass::fail);
  CHECK_FALSE(r.detail.empty());
}

TEST_CASE("uniserial detection") {
  PresentedAlgebra u3 = build_comm_presented(parse_comm(uniserial_dim3_source()));
  CHECK(is_uniserial_local(u3.alg));

  PresentedAlgebra z5 = build_comm_presented(parse_comm(stable_center_presentation_source()));
  CHECK_FALSE(is_uniserial_local(z5.alg));  // J/J^2 has dimension 2

  BuiltQuiver gf3 = build_path_algebra(parse_quiver("field 3\nvertices v\nmaxlen 1"));
  CHECK(is_uniserial_local(gf3.alg));
}

TEST_CASE("dimension invariants survive random basis change") {
  Fixture f;
  Rng rng;
  Subspace arrows = span({f.a.alpha, f.a.beta, f.a.gamma, f.a.delta}, 9, 3);
  Subspace cand = ideal_closure(f.a.alg, arrows);

  for (int iter = 0; iter < 20; ++iter) {
    FpMatrix q = random_invertible(rng, 9, 3);
    Algebra b = change_basis(f.a.alg, q);
    CHECK(center(b).dim() == 6);
    CHECK(commutator_subspace(b).dim() == 3);

    // transport the radical candidate through the basis change
    Subspace jb = radical(b, RadicalStrategy::ArrowIdeal(map_subspace(mat_transpose(mat_inverse(q)), cand)));
    CHECK(loewy_layers(b, jb) == std::vector<std::size_t>{2, 4, 2, 1});
    CHECK(socle(b, jb).dim() == 2);
  }
}

TEST_CASE("gram identity means the dual basis is the basis itself") {
  // semisimple k^3 with the componentwise form
  std::vector<FpVector> table(9, FpVector(3, 0));
  for (std::size_t u = 0; u < 3; ++u) table[u * 3 + u][u] = 1;
  Algebra k3 = Algebra::create(3, 3, std::move(table), {1, 1, 1}, {});
  LinearForm s{3, {1, 1, 1}};
  CHECK(symm_form_check(k3, s).gram == FpMatrix::identity(3, 3));
  std::vector<FpVector> duals = dual_basis(k3, s);
  for (std::size_t u = 0; u < 3; ++u) CHECK(duals[u] == k3.basis_vector(u));
}
