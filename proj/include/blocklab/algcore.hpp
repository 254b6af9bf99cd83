#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/exactlin.hpp"

namespace blocklab {

// Finite-dimensional associative unital algebras over GF(p), given by a
// structure-constant table on a distinguished basis, together with the
// invariants the verification pipeline needs: center, commutator space,
// symmetrizing forms, relative trace and the Higman ideal, stable center,
// radical filtrations, socle, Cartan data, corners, quotients and
// homomorphism checks.

struct Algebra {
  std::size_t dim = 0;
  std::uint32_t p = 3;
  std::vector<FpVector> table;  // table[u*dim+v] = coordinates of b_u * b_v
  FpVector unit;
  std::vector<std::string> labels;

  const FpVector& basis_product(std::size_t u, std::size_t v) const { return table[u * dim + v]; }

  // Validates associativity on all dim^3 triples and the two-sided unit law;
  // throws error(non_associative)/error(bad_unit) on failure.
  static Algebra create(std::size_t dim, std::uint32_t p, std::vector<FpVector> table, FpVector unit,
                        std::vector<std::string> labels);

  FpVector zero() const { return FpVector(dim, 0); }
  FpVector basis_vector(std::size_t u) const;
  FpVector mul(const FpVector& x, const FpVector& y) const;
  FpVector power(const FpVector& x, std::size_t n) const;  // x^n, n >= 1
  bool is_commutative() const;

  // Matrix of y -> x*y (resp. y -> y*x) acting on column coordinates.
  FpMatrix left_mult_matrix(const FpVector& x) const;
  FpMatrix right_mult_matrix(const FpVector& x) const;

  std::string format_element(const FpVector& x) const;
};

// Re-runs the construction checks on an existing instance.
void validate(const Algebra& a);

struct LinearForm {
  std::uint32_t p = 3;
  FpVector coeffs;  // value on each basis element

  std::uint32_t eval(const FpVector& x) const;
};

// Linear map between algebras; matrix maps source coordinates to target
// coordinates (columns = images of source basis vectors).
struct AlgebraMap {
  Algebra source;
  Algebra target;
  FpMatrix matrix;

  FpVector apply(const FpVector& x) const { return mat_apply(matrix, x); }
};

AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g);  // f after g

enum class MapClass { iso, surjective, hom, fail };

struct MapCheckResult {
  MapClass cls = MapClass::fail;
  std::string detail;  // witness description when cls == fail
};

// Verifies unit preservation and multiplicativity on all basis pairs, then
// classifies by rank.
MapCheckResult check_map(const AlgebraMap& m);

Subspace center(const Algebra& a);
Subspace commutator_subspace(const Algebra& a);

struct FormCheck {
  bool symmetric = false;
  bool nondegenerate = false;
  FpMatrix gram;  // gram(u,v) = s(b_u b_v)
};
FormCheck symm_form_check(const Algebra& a, const LinearForm& s);

// Vectors b_u' with s(b_u b_v') = delta_{uv}; error(degenerate_form) if the
// gram matrix is singular or the form is not symmetric.
std::vector<FpVector> dual_basis(const Algebra& a, const LinearForm& s);
// Same, for an arbitrary ordered basis of the algebra.
std::vector<FpVector> dual_basis_of(const Algebra& a, const LinearForm& s,
                                    const std::vector<FpVector>& basis);

// Relative trace sum_u b_u * x * b_u'; the result is checked to be central.
FpVector trace_map(const Algebra& a, const LinearForm& s, const FpVector& x);
// Span of the trace images of all basis elements; an ideal of the center.
Subspace higman_ideal(const Algebra& a, const LinearForm& s);

// True if U is closed under left and right multiplication by the algebra.
bool is_ideal(const Algebra& a, const Subspace& u);
// Smallest two-sided ideal containing U.
Subspace ideal_closure(const Algebra& a, const Subspace& u);

struct SubalgebraResult {
  Algebra alg;
  FpMatrix inclusion;  // alg coordinates -> ambient coordinates
};
// The subspace must contain the unit and be closed under multiplication.
SubalgebraResult subalgebra(const Algebra& a, const Subspace& u);

struct QuotientResult {
  Algebra alg;
  AlgebraMap projection;
};
// Quotient by a two-sided ideal; the complement basis is read off the
// non-pivot coordinates of the ideal's RREF, so quotients are reproducible.
QuotientResult quotient_algebra(const Algebra& a, const Subspace& ideal);

struct RadicalStrategy {
  enum class Kind { split_local, arrow_ideal, normal_p_subgroup };
  Kind kind = Kind::split_local;
  std::optional<Subspace> candidate;

  static RadicalStrategy SplitLocal() { return {Kind::split_local, std::nullopt}; }
  static RadicalStrategy ArrowIdeal(Subspace c) { return {Kind::arrow_ideal, std::move(c)}; }
  static RadicalStrategy NormalPSubgroup(Subspace c) { return {Kind::normal_p_subgroup, std::move(c)}; }
};

// Jacobson radical via one of three verified strategies. SplitLocal requires
// a commutative algebra and finds, per basis element, the unique scalar with
// (b - scalar*1)^dim = 0. The candidate strategies verify the supplied
// subspace is a nilpotent two-sided ideal with semisimple quotient, so a
// wrong hint fails loudly rather than returning a wrong answer.
Subspace radical(const Algebra& a, const RadicalStrategy& strategy);

// span{u*v : u in basis(U), v in basis(V)}.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);
// Dimensions of J, J^2, ... down to zero (strictly decreasing tail trimmed).
std::vector<std::size_t> radical_power_dims(const Algebra& a, const Subspace& j);
// Loewy layers dim(J^k/J^{k+1}) starting at k = 0 (so first entry = dim a/J).
std::vector<std::size_t> loewy_layers(const Algebra& a, const Subspace& j);

// Left socle {v : j*v = 0 for all j in J}.
Subspace socle(const Algebra& a, const Subspace& j);

// For a commutative split local algebra with one-dimensional socle, the form
// sending a fixed socle generator to 1 and the complement coordinates to 0;
// re-verified symmetric and nondegenerate. error(not_frobenius) if the socle
// has dimension > 1.
LinearForm frobenius_form_split_local(const Algebra& a);

// Corner algebra e*a*e for an idempotent e, with unit e.
SubalgebraResult corner(const Algebra& a, const FpVector& e);

// Entry (u,v) = dim e_u * a * e_v for pairwise orthogonal idempotents
// summing to the unit.
IntMatrix cartan_matrix(const Algebra& a, const std::vector<FpVector>& idempotents);

// True iff every radical layer of a commutative split local algebra has
// dimension <= 1.
bool is_uniserial_local(const Algebra& a);

// The same algebra expressed on the new basis whose u-th vector has the
// coordinates in row u of new_basis_rows (which must be invertible).
Algebra change_basis(const Algebra& a, const FpMatrix& new_basis_rows);

}  // namespace blocklab
