#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "blocklab/algcore.hpp"
#include "blocklab/quiverlab.hpp"

namespace blocklab {

// Finite group machinery for the group-algebra side of the pipeline: explicit
// multiplication tables, semidirect products, conjugacy classes, group
// algebras, fixed-point subalgebras under automorphism actions, subgroups of
// GL(2,p) with orbit counts, and brute-force homomorphism searches between
// small presented commutative algebras.

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::size_t> mult;  // order x order, row-major
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> labels;

  std::size_t at(std::size_t i, std::size_t j) const { return mult[i * order + j]; }
  std::size_t conjugate(std::size_t g, std::size_t x) const { return at(at(g, x), inverse[g]); }
  bool is_abelian() const;
  std::size_t element_order(std::size_t g) const;

  // Validates associativity, identity and inverse laws exhaustively.
  static GroupTable create(std::size_t order, std::vector<std::size_t> mult, std::vector<std::string> labels);
};

GroupTable cyclic(std::size_t n, const std::string& gen = "c");
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

// Action of a group on another group by automorphisms: one permutation of
// the target's elements per acting element.
struct GroupAction {
  std::vector<std::vector<std::size_t>> perms;
};

// error(invalid_action) unless every permutation is an automorphism of the
// target and the assignment is a homomorphism.
void validate_action(const GroupTable& acting, const GroupTable& target, const GroupAction& action);

// Element (x, e) has index e*|P| + x, so the first |P| indices are the
// canonical copy of P.
GroupTable semidirect(const GroupTable& p, const GroupTable& e, const GroupAction& action);

// Orbit partition under conjugation, each class sorted, classes ordered by
// smallest member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g);

Algebra group_algebra(const GroupTable& g, std::uint32_t p);

// The group-algebra symmetrizing form g -> [g = 1].
LinearForm group_form(const GroupTable& g, std::uint32_t p);

// sum_{g in elements} g*x*inverse(g) inside the group algebra of g.
FpVector conjugation_sum(const Algebra& kg, const GroupTable& g, const std::vector<std::size_t>& elements,
                         const FpVector& x);

// Fixed points under basis permutations generating a finite group; the basis
// of the result is the orbit sums. Each permutation is checked to be an
// algebra automorphism.
SubalgebraResult fixed_subalgebra(const Algebra& a, const std::vector<std::vector<std::size_t>>& perms);
// Fixed points under general algebra automorphisms given by matrices.
SubalgebraResult fixed_subalgebra(const Algebra& a, const std::vector<FpMatrix>& autos);

// --- subgroups of GL(2,p) acting on GF(p)^2 -------------------------------

using Mat2 = std::array<std::uint32_t, 4>;  // row-major 2x2

struct MatGroup {
  std::uint32_t p = 3;
  std::vector<Mat2> elements;  // sorted, closed under multiplication
};

MatGroup mat_closure(const std::vector<Mat2>& gens, std::uint32_t p);
std::size_t orbit_count(const MatGroup& g);
// Independent recount: average number of fixed vectors over the group.
std::size_t burnside_orbit_count(const MatGroup& g);
GroupTable to_group_table(const MatGroup& g);

enum class SmallGroupType { trivial, c2, c2c2, c4, c8, d8, q8, sd16, unclassified };
std::string to_string(SmallGroupType t);

// Iso-type from (order, abelian flag, element-order multiset); enough to
// separate the eight supported types, everything else is unclassified.
SmallGroupType classify_small_group(const GroupTable& g);
SmallGroupType classify_small_group(const MatGroup& g);

// Canonical generator sets used across the pipeline and the CLI.
std::vector<Mat2> inertial_quotient_generators(const std::string& name, std::uint32_t p = 3);

// --- brute-force homomorphism searches -------------------------------------

// All unital algebra homomorphisms from a presented commutative algebra with
// at most two generators into a commutative algebra, by exhaustive search
// over generator images.
std::vector<AlgebraMap> enumerate_homs(const PresentedAlgebra& source, const Algebra& target);

struct SplitSurjectionCheck {
  std::size_t hom_count = 0;
  std::size_t surjection_count = 0;
  bool split_found = false;
  std::string witness;  // generator images of a split pair, when found
  std::string field = "GF(3)";
};

// For every surjection source -> target, searches all homs target -> source
// for a section; reports whether any surjection splits.
SplitSurjectionCheck has_split_surjection(const PresentedAlgebra& source, const PresentedAlgebra& target);

// True iff some hom in the exhaustive search is bijective.
bool exists_isomorphism_exhaustive(const PresentedAlgebra& source, const Algebra& target);

}  // namespace blocklab
