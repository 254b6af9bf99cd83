// Acceptance suite: runs the full pipeline at p = 3 and grades the thirteen
// acceptance criteria, one line each. Every comparison is an exact
// finite-field or integer equality; there are no tolerances anywhere.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "blocklab/algcore.hpp"
#include "blocklab/pipeline.hpp"
#include "blocklab/quiverlab.hpp"

using namespace blocklab;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> check_ids;
};

bool negative_control_detects_perturbation() {
  AlgebraAHandles a = algebra_A();
  Algebra broken = a.alg;
  broken.table[4 * 9 + 7][2] = fp_add(broken.table[4 * 9 + 7][2], 1, 3);
  try {
    validate(broken);
    return false;
  } catch (const error& e) {
    return e.code() == errc::non_associative;
  }
}

}  // namespace

int main() {
  Report report = run_pipeline({});
  std::map<std::string, const CheckResult*> by_id;
  for (const CheckResult& c : report.checks) by_id[c.id] = &c;

  const std::vector<Criterion> criteria = {
      {1, "dim A = 9 with the nine stated basis elements independent", {"S1.build", "S1.dim"}},
      {2, "[A,A] has dimension 3 with the stated basis", {"S1.commutator"}},
      {3, "dim Z(A) = 6 and soc(A) = span{alpha.beta, beta.alpha}", {"S1.center", "S1.socle"}},
      {4, "the symmetrizing form checks out with its dual basis order for order", {"S2.form", "S2.dual"}},
      {5,
       "trace values on i and j, vanishing elsewhere, and Z^pr(A) = span{alpha.beta - beta.alpha}",
       {"S4.trace", "S4.trace_vanishing", "S4.Zpr"}},
      {6,
       "Zbar(A): dimension 5, explicit isomorphism, radical powers 4,2,1,0, socle, Frobenius certificate",
       {"S4.Zbar_dim", "S4.iso", "S4.radical", "S4.radical_powers", "S4.socle", "S4.frobenius", "S4.dual"}},
      {7,
       "H has the six stated classes, Z^pr(kH) = span{sum xt}, dim Zbar(kH) = 5",
       {"S5.build", "S5.classes", "S5.center", "S5.trace", "S5.Zpr", "S5.Zbar_dim"}},
      {8,
       "Zbar(kH) = (kP)^E = (k[x,y]/(x^3,y^3))^E with the stated generator images and radical powers 4,1,0",
       {"S6.fixed_basis", "S6.iso", "S6.poly_iso", "S6.action", "S6.generator_images", "S6.fixed_poly",
        "S6.chain_iso", "S6.radical", "S6.radical_powers", "S6.socle", "S6.frobenius"}},
      {9,
       "the obstruction: dim J(Zbar(A))^2 = 2 vs dim J(Zbar(kH))^2 = 1, and no isomorphism exists over GF(3)",
       {"S7.obstruction", "S7.no_isomorphism"}},
      {10,
       "Cartan suite: matrix [[5,1],[1,2]], divisors {1,9}, transpose(D)*D = C, corner iAi commutative of dim 5",
       {"S3.cartan", "S3.smith", "S3.decomposition", "S3.corner_i", "S3.corner_j"}},
      {11,
       "orbit-count table over GF(3) with D8 giving 3 orbits and (kP)^D8 uniserial of dimension 3",
       {"S8.orbit_table", "S8.labels", "S8.at_most_3", "S9.uniserial"}},
      {12,
       "a surjection Zbar(A) -> k[u]/(u^3) exists and none splits, verified over GF(3)",
       {"S10.surjection_exists", "S10.no_split", "S10.cube_map", "S10.d8_target"}},
      {13,
       "property suites: form scaling, 100 random basis changes, Burnside recount, trace identity",
       {"S11.invariance", "S11.higman_scaling", "S12.trace_identity", "S12.burnside"}},
  };

  bool all_pass = true;
  for (const Criterion& cr : criteria) {
    bool ok = true;
    std::string why;
    for (const std::string& id : cr.check_ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        ok = false;
        why = id + " missing from report";
        break;
      }
      if (it->second->status != CheckResult::Status::pass) {
        ok = false;
        why = id + ": expected " + it->second->expected + ", got " + it->second->actual;
        break;
      }
    }
    if (cr.number == 13 && ok && !negative_control_detects_perturbation()) {
      ok = false;
      why = "perturbed structure constants were not detected";
    }
    all_pass = all_pass && ok;
    std::cout << "criterion " << cr.number << ": " << (ok ? "PASS" : "FAIL") << " - " << cr.description;
    if (!ok) std::cout << " (" << why << ")";
    std::cout << "\n";
  }

  std::cout << (all_pass ? "acceptance: PASS" : "acceptance: FAIL") << " (" << criteria.size() << " criteria)\n";
  return all_pass ? 0 : 1;
}
