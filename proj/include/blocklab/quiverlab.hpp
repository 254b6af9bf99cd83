#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blocklab/algcore.hpp"

namespace blocklab {

// Parsing of quiver and commutative presentations, and construction of
// validated Algebra instances by degree-truncated linear-algebra quotients.
// The build at truncation L is cross-checked against the build at L+1; a
// disagreement rejects the presentation instead of returning a wrong algebra.

struct QuiverArrow {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
};

// A relation is a GF(p)-linear combination of parallel composable paths,
// stored as (coefficient, word of arrow indices) with equalities already
// normalized to differences.
struct QuiverRelationTerm {
  std::uint32_t coeff = 1;
  std::vector<std::size_t> word;
};

struct QuiverRelation {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<QuiverRelationTerm> terms;
};

struct QuiverSpec {
  std::uint32_t p = 3;
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverRelation> relations;
  std::uint32_t maxlen = 6;
};

QuiverSpec parse_quiver(std::string_view text);

struct BuiltQuiver {
  Algebra alg;
  std::vector<FpVector> vertex_elements;  // classes of the trivial paths
  std::vector<FpVector> arrow_elements;   // classes of the arrows, spec order
};

BuiltQuiver build_path_algebra(const QuiverSpec& q);

// Commutative presentations on at most three generators with a componentwise
// degree bound per generator.
struct CommTerm {
  std::uint32_t coeff = 1;
  std::vector<std::uint32_t> exps;  // one exponent per generator
};

struct CommRelation {
  std::vector<CommTerm> terms;
};

struct PresentedCommSpec {
  std::uint32_t p = 3;
  std::vector<std::string> generators;
  std::vector<CommRelation> relations;
  std::uint32_t bound = 4;
};

PresentedCommSpec parse_comm(std::string_view text);

struct PresentedAlgebra {
  Algebra alg;
  std::vector<FpVector> generators;  // classes of the generators, spec order
  PresentedCommSpec spec;

  // Value of the monomial prod gens[i]^exps[i] in the algebra.
  FpVector monomial(const std::vector<std::uint32_t>& exps) const;
};

PresentedAlgebra build_comm_presented(const PresentedCommSpec& s);

// The 9-dimensional two-vertex algebra with arrows alpha: i->j, beta: j->i
// and loops gamma, delta at i, subject to
//   delta^2 = gamma^3 = alpha.beta,  delta.gamma = gamma.delta = 0,
//   delta.alpha = gamma.alpha = 0,   beta.delta = beta.gamma = 0.
struct AlgebraAHandles {
  Algebra alg;
  FpVector i, j, alpha, beta, gamma, delta;
};

AlgebraAHandles algebra_A(std::uint32_t p = 3);

// Canonical presentation texts; the files under specs/ ship the same content.
std::string_view algebra_A_source();
std::string_view stable_center_presentation_source();  // k[x,y]/(x^3 - y^2, x*y, y^3)
std::string_view truncated_poly_source();              // k[x,y]/(x^3, y^3)
std::string_view uniserial_dim3_source();              // k[u]/(u^3)

}  // namespace blocklab
