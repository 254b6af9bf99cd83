#include "blocklab/algcore.hpp"

#include <algorithm>
#include <string>

namespace blocklab {

namespace {

std::string idx_label(const Algebra& a, std::size_t u) {
  if (u < a.labels.size() && !a.labels[u].empty()) return a.labels[u];
  return "b" + std::to_string(u);
}

}  // namespace

FpVector Algebra::basis_vector(std::size_t u) const {
  FpVector v(dim, 0);
  v[u] = 1;
  return v;
}

FpVector Algebra::mul(const FpVector& x, const FpVector& y) const {
  if (x.size() != dim || y.size() != dim) fail(errc::dimension_mismatch, "mul: coordinate size mismatch");
  FpVector r(dim, 0);
  for (std::size_t u = 0; u < dim; ++u) {
    if (x[u] == 0) continue;
    for (std::size_t v = 0; v < dim; ++v) {
      if (y[v] == 0) continue;
      std::uint32_t c = fp_mul(x[u], y[v], p);
      vec_addmul(r, c, basis_product(u, v), p);
    }
  }
  return r;
}

FpVector Algebra::power(const FpVector& x, std::size_t n) const {
  FpVector r = x;
  for (std::size_t i = 1; i < n; ++i) r = mul(r, x);
  return r;
}

bool Algebra::is_commutative() const {
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = u + 1; v < dim; ++v)
      if (basis_product(u, v) != basis_product(v, u)) return false;
  return true;
}

FpMatrix Algebra::left_mult_matrix(const FpVector& x) const {
  FpMatrix m(dim, dim, p);
  for (std::size_t v = 0; v < dim; ++v) {
    FpVector col = mul(x, basis_vector(v));
    for (std::size_t i = 0; i < dim; ++i) m.at(i, v) = col[i];
  }
  return m;
}

FpMatrix Algebra::right_mult_matrix(const FpVector& x) const {
  FpMatrix m(dim, dim, p);
  for (std::size_t v = 0; v < dim; ++v) {
    FpVector col = mul(basis_vector(v), x);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, v) = col[i];
  }
  return m;
}

std::string Algebra::format_element(const FpVector& x) const {
  std::string out;
  for (std::size_t u = 0; u < dim; ++u) {
    if (x[u] == 0) continue;
    if (!out.empty()) out += " + ";
    if (x[u] != 1) out += std::to_string(x[u]) + "*";
    out += idx_label(*this, u);
  }
  return out.empty() ? "0" : out;
}

void validate(const Algebra& a) {
  if (a.table.size() != a.dim * a.dim || a.unit.size() != a.dim)
    fail(errc::dimension_mismatch, "algebra table/unit size mismatch");
  for (const FpVector& t : a.table)
    if (t.size() != a.dim) fail(errc::dimension_mismatch, "structure constant size mismatch");

  // two-sided unit law on basis vectors
  for (std::size_t u = 0; u < a.dim; ++u) {
    FpVector b = a.basis_vector(u);
    if (a.mul(a.unit, b) != b || a.mul(b, a.unit) != b)
      fail(errc::bad_unit, "unit law fails on basis element " + idx_label(a, u));
  }

  // exhaustive associativity: (b_u b_v) b_w == b_u (b_v b_w)
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = 0; v < a.dim; ++v) {
      const FpVector& uv = a.basis_product(u, v);
      for (std::size_t w = 0; w < a.dim; ++w) {
        FpVector lhs(a.dim, 0);
        for (std::size_t x = 0; x < a.dim; ++x)
          if (uv[x] != 0) vec_addmul(lhs, uv[x], a.basis_product(x, w), a.p);
        const FpVector& vw = a.basis_product(v, w);
        FpVector rhs(a.dim, 0);
        for (std::size_t x = 0; x < a.dim; ++x)
          if (vw[x] != 0) vec_addmul(rhs, vw[x], a.basis_product(u, x), a.p);
        if (lhs != rhs)
          fail(errc::non_associative, "associativity fails on (" + idx_label(a, u) + ", " + idx_label(a, v) +
                                          ", " + idx_label(a, w) + ")");
      }
    }
}

Algebra Algebra::create(std::size_t dim, std::uint32_t p, std::vector<FpVector> table, FpVector unit,
                        std::vector<std::string> labels) {
  if (!is_prime(p)) fail(errc::invalid_argument, "modulus is not prime");
  Algebra a;
  a.dim = dim;
  a.p = p;
  a.table = std::move(table);
  a.unit = std::move(unit);
  a.labels = std::move(labels);
  if (a.labels.empty()) {
    for (std::size_t u = 0; u < dim; ++u) a.labels.push_back("b" + std::to_string(u));
  }
  validate(a);
  return a;
}

std::uint32_t LinearForm::eval(const FpVector& x) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size() && i < coeffs.size(); ++i)
    acc += static_cast<std::uint64_t>(coeffs[i]) * x[i];
  return static_cast<std::uint32_t>(acc % p);
}

AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) {
  return AlgebraMap{g.source, f.target, mat_mul(f.matrix, g.matrix)};
}

MapCheckResult check_map(const AlgebraMap& m) {
  MapCheckResult res;
  if (m.matrix.rows != m.target.dim || m.matrix.cols != m.source.dim) {
    res.cls = MapClass::fail;
    res.detail = "matrix shape does not match source/target dimensions";
    return res;
  }
  if (m.apply(m.source.unit) != m.target.unit) {
    res.cls = MapClass::fail;
    res.detail = "unit is not preserved";
    return res;
  }
  for (std::size_t u = 0; u < m.source.dim; ++u)
    for (std::size_t v = 0; v < m.source.dim; ++v) {
      FpVector lhs = m.apply(m.source.basis_product(u, v));
      FpVector rhs = m.target.mul(m.apply(m.source.basis_vector(u)), m.apply(m.source.basis_vector(v)));
      if (lhs != rhs) {
        res.cls = MapClass::fail;
        res.detail = "multiplicativity fails on (" + idx_label(m.source, u) + ", " + idx_label(m.source, v) + ")";
        return res;
      }
    }
  std::size_t r = rank(m.matrix);
  if (r == m.target.dim && m.source.dim == m.target.dim)
    res.cls = MapClass::iso;
  else if (r == m.target.dim)
    res.cls = MapClass::surjective;
  else
    res.cls = MapClass::hom;
  return res;
}

Subspace center(const Algebra& a) {
  // kernel of the stacked commutator maps z -> z b_w - b_w z
  FpMatrix stacked(a.dim * a.dim, a.dim, a.p);
  for (std::size_t w = 0; w < a.dim; ++w)
    for (std::size_t u = 0; u < a.dim; ++u) {
      const FpVector& uw = a.basis_product(u, w);
      const FpVector& wu = a.basis_product(w, u);
      for (std::size_t x = 0; x < a.dim; ++x) stacked.at(w * a.dim + x, u) = fp_sub(uw[x], wu[x], a.p);
    }
  return kernel(stacked);
}

Subspace commutator_subspace(const Algebra& a) {
  std::vector<FpVector> gens;
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = u + 1; v < a.dim; ++v)
      gens.push_back(vec_sub(a.basis_product(u, v), a.basis_product(v, u), a.p));
  return span(gens, a.dim, a.p);
}

FormCheck symm_form_check(const Algebra& a, const LinearForm& s) {
  FormCheck res;
  res.gram = FpMatrix(a.dim, a.dim, a.p);
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = 0; v < a.dim; ++v) res.gram.at(u, v) = s.eval(a.basis_product(u, v));
  res.symmetric = res.gram == mat_transpose(res.gram);
  res.nondegenerate = rank(res.gram) == a.dim;
  return res;
}

std::vector<FpVector> dual_basis(const Algebra& a, const LinearForm& s) {
  std::vector<FpVector> basis;
  for (std::size_t u = 0; u < a.dim; ++u) basis.push_back(a.basis_vector(u));
  return dual_basis_of(a, s, basis);
}

std::vector<FpVector> dual_basis_of(const Algebra& a, const LinearForm& s,
                                    const std::vector<FpVector>& basis) {
  if (basis.size() != a.dim) fail(errc::dimension_mismatch, "dual_basis_of: basis size mismatch");
  FpMatrix gram(a.dim, a.dim, a.p);
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = 0; v < a.dim; ++v) gram.at(u, v) = s.eval(a.mul(basis[u], basis[v]));
  if (gram != mat_transpose(gram)) fail(errc::degenerate_form, "form is not symmetric on the given basis");
  FpMatrix inv;
  try {
    inv = mat_inverse(gram);
  } catch (const error&) {
    fail(errc::degenerate_form, "gram matrix is singular");
  }
  // dual_v = sum_w inv(w,v) * basis_w satisfies s(basis_u * dual_v) = delta_{uv}
  std::vector<FpVector> duals;
  for (std::size_t v = 0; v < a.dim; ++v) {
    FpVector d(a.dim, 0);
    for (std::size_t w = 0; w < a.dim; ++w) vec_addmul(d, inv.at(w, v), basis[w], a.p);
    duals.push_back(std::move(d));
  }
  return duals;
}

FpVector trace_map(const Algebra& a, const LinearForm& s, const FpVector& x) {
  std::vector<FpVector> duals = dual_basis(a, s);
  FpVector r(a.dim, 0);
  for (std::size_t u = 0; u < a.dim; ++u) {
    FpVector t = a.mul(a.mul(a.basis_vector(u), x), duals[u]);
    vec_addmul(r, 1, t, a.p);
  }
  if (!contains(center(a), r))
    fail(errc::degenerate_form, "trace image is not central; form is not symmetrizing");
  return r;
}

Subspace higman_ideal(const Algebra& a, const LinearForm& s) {
  FormCheck fc = symm_form_check(a, s);
  if (!fc.symmetric || !fc.nondegenerate)
    fail(errc::degenerate_form, "higman_ideal requires a symmetric nondegenerate form");
  std::vector<FpVector> images;
  for (std::size_t u = 0; u < a.dim; ++u) images.push_back(trace_map(a, s, a.basis_vector(u)));
  return span(images, a.dim, a.p);
}

bool is_ideal(const Algebra& a, const Subspace& u) {
  for (std::size_t i = 0; i < u.dim(); ++i) {
    FpVector v = u.basis.row(i);
    for (std::size_t b = 0; b < a.dim; ++b) {
      if (!contains(u, a.mul(a.basis_vector(b), v))) return false;
      if (!contains(u, a.mul(v, a.basis_vector(b)))) return false;
    }
  }
  return true;
}

Subspace ideal_closure(const Algebra& a, const Subspace& u) {
  Subspace cur = u;
  for (;;) {
    std::vector<FpVector> gens;
    for (std::size_t i = 0; i < cur.dim(); ++i) {
      FpVector v = cur.basis.row(i);
      gens.push_back(v);
      for (std::size_t b = 0; b < a.dim; ++b) {
        gens.push_back(a.mul(a.basis_vector(b), v));
        gens.push_back(a.mul(v, a.basis_vector(b)));
      }
    }
    Subspace next = span(gens, a.dim, a.p);
    if (next == cur) return cur;
    cur = next;
  }
}

SubalgebraResult subalgebra(const Algebra& a, const Subspace& u) {
  std::size_t d = u.dim();
  if (!contains(u, a.unit)) fail(errc::not_a_subalgebra, "subspace does not contain the unit");
  std::vector<FpVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      FpVector prod = a.mul(u.basis.row(i), u.basis.row(j));
      if (!contains(u, prod)) fail(errc::not_a_subalgebra, "subspace is not closed under multiplication");
      table[i * d + j] = coords_in(u, prod);
    }
  SubalgebraResult res;
  std::vector<FpVector> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(u.basis.row(i));
  res.inclusion = FpMatrix::from_columns(cols, a.dim, a.p);
  res.alg = Algebra::create(d, a.p, std::move(table), coords_in(u, a.unit), {});
  return res;
}

QuotientResult quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) fail(errc::not_an_ideal, "subspace is not a two-sided ideal");

  // complement basis = non-pivot coordinates of the ideal's RREF
  std::vector<bool> is_pivot(a.dim, false);
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    FpVector row = ideal.basis.row(i);
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c < row.size()) is_pivot[c] = true;
  }
  std::vector<std::size_t> rep;  // quotient coordinate -> ambient coordinate
  for (std::size_t c = 0; c < a.dim; ++c)
    if (!is_pivot[c]) rep.push_back(c);
  std::size_t q = rep.size();

  auto project = [&](const FpVector& v) {
    FpVector red = reduce_mod(ideal, v);
    FpVector out(q, 0);
    for (std::size_t k = 0; k < q; ++k) out[k] = red[rep[k]];
    return out;
  };

  std::vector<FpVector> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = project(a.basis_product(rep[i], rep[j]));

  std::vector<std::string> labels;
  for (std::size_t k = 0; k < q; ++k) labels.push_back(idx_label(a, rep[k]));

  QuotientResult res;
  res.alg = Algebra::create(q, a.p, std::move(table), project(a.unit), std::move(labels));
  FpMatrix proj(q, a.dim, a.p);
  for (std::size_t u = 0; u < a.dim; ++u) {
    FpVector col = project(a.basis_vector(u));
    for (std::size_t i = 0; i < q; ++i) proj.at(i, u) = col[i];
  }
  res.projection = AlgebraMap{a, res.alg, std::move(proj)};
  return res;
}

namespace {

bool subspace_is_nilpotent(const Algebra& a, const Subspace& u) {
  Subspace power = u;
  for (std::size_t i = 1; i <= a.dim; ++i) {
    if (power.dim() == 0) return true;
    power = subspace_product(a, power, u);
  }
  return power.dim() == 0;
}

// Semisimplicity of a small commutative algebra by exhaustive nilpotency
// scan: a finite-dimensional commutative algebra over GF(p) is semisimple
// iff it has no nonzero nilpotent element.
bool commutative_semisimple_scan(const Algebra& a) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < a.dim; ++i) {
    count *= a.p;
    if (count > 2'000'000) fail(errc::invalid_argument, "semisimplicity scan too large");
  }
  for (std::uint64_t code = 1; code < count; ++code) {
    FpVector v(a.dim, 0);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < a.dim; ++i) {
      v[i] = static_cast<std::uint32_t>(c % a.p);
      c /= a.p;
    }
    if (vec_is_zero(a.power(v, a.dim))) return false;
  }
  return true;
}

Subspace radical_split_local(const Algebra& a) {
  if (!a.is_commutative()) fail(errc::not_split_local, "SplitLocal strategy requires a commutative algebra");
  std::vector<FpVector> gens;
  for (std::size_t u = 0; u < a.dim; ++u) {
    FpVector b = a.basis_vector(u);
    std::optional<std::uint32_t> found;
    for (std::uint32_t lam = 0; lam < a.p; ++lam) {
      FpVector cand = vec_sub(b, vec_scale(lam, a.unit, a.p), a.p);
      if (vec_is_zero(cand) || vec_is_zero(a.power(cand, a.dim))) {
        if (found) fail(errc::not_split_local, "scalar part of basis element " + idx_label(a, u) + " is not unique");
        found = lam;
      }
    }
    if (!found)
      fail(errc::not_split_local, "basis element " + idx_label(a, u) + " has no nilpotent shift by a scalar");
    gens.push_back(vec_sub(b, vec_scale(*found, a.unit, a.p), a.p));
  }
  Subspace j = span(gens, a.dim, a.p);
  if (j.dim() + 1 != a.dim) fail(errc::not_split_local, "residue field is larger than GF(p)");
  if (!is_ideal(a, j)) fail(errc::not_split_local, "nilpotent shifts do not span an ideal");
  if (!subspace_is_nilpotent(a, j)) fail(errc::not_split_local, "candidate radical is not nilpotent");
  return j;
}

Subspace radical_from_candidate(const Algebra& a, const Subspace& candidate) {
  if (candidate.ambient != a.dim) fail(errc::dimension_mismatch, "radical candidate: ambient mismatch");
  if (!is_ideal(a, candidate)) fail(errc::candidate_not_ideal, "radical candidate is not a two-sided ideal");
  if (!subspace_is_nilpotent(a, candidate)) fail(errc::candidate_not_nilpotent, "radical candidate is not nilpotent");
  // Maximality: the quotient must be semisimple. We only need this for
  // quotients that are commutative and small enough to scan exhaustively.
  QuotientResult q = quotient_algebra(a, candidate);
  if (!q.alg.is_commutative())
    fail(errc::candidate_not_maximal, "cannot certify maximality: quotient is not commutative");
  if (!commutative_semisimple_scan(q.alg))
    fail(errc::candidate_not_maximal, "quotient by candidate has nonzero nilpotents");
  return candidate;
}

}  // namespace

Subspace radical(const Algebra& a, const RadicalStrategy& strategy) {
  switch (strategy.kind) {
    case RadicalStrategy::Kind::split_local:
      return radical_split_local(a);
    case RadicalStrategy::Kind::arrow_ideal:
    case RadicalStrategy::Kind::normal_p_subgroup:
      if (!strategy.candidate) fail(errc::invalid_argument, "candidate subspace required");
      return radical_from_candidate(a, *strategy.candidate);
  }
  fail(errc::invalid_argument, "unknown radical strategy");
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  if (u.ambient != a.dim || v.ambient != a.dim) fail(errc::dimension_mismatch, "subspace_product: ambient mismatch");
  std::vector<FpVector> gens;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) gens.push_back(a.mul(u.basis.row(i), v.basis.row(j)));
  return span(gens, a.dim, a.p);
}

std::vector<std::size_t> radical_power_dims(const Algebra& a, const Subspace& j) {
  std::vector<std::size_t> dims;
  Subspace power = j;
  for (std::size_t k = 0; k < a.dim + 1; ++k) {
    dims.push_back(power.dim());
    if (power.dim() == 0) break;
    power = subspace_product(a, power, j);
  }
  return dims;
}

std::vector<std::size_t> loewy_layers(const Algebra& a, const Subspace& j) {
  std::vector<std::size_t> layers;
  std::size_t prev = a.dim;
  for (std::size_t d : radical_power_dims(a, j)) {
    layers.push_back(prev - d);
    prev = d;
  }
  return layers;
}

Subspace socle(const Algebra& a, const Subspace& j) {
  if (j.dim() == 0) return Subspace::full(a.dim, a.p);
  FpMatrix stacked(j.dim() * a.dim, a.dim, a.p);
  for (std::size_t i = 0; i < j.dim(); ++i) {
    FpMatrix lm = a.left_mult_matrix(j.basis.row(i));
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) stacked.at(i * a.dim + r, c) = lm.at(r, c);
  }
  return kernel(stacked);
}

LinearForm frobenius_form_split_local(const Algebra& a) {
  Subspace j = radical_split_local(a);
  Subspace soc = socle(a, j);
  if (soc.dim() != 1)
    fail(errc::not_frobenius, "socle has dimension " + std::to_string(soc.dim()) + ", not 1");
  FpVector gen = soc.basis.row(0);
  // s(socle generator) = 1, s = 0 on the non-pivot complement coordinates.
  std::size_t pivot = 0;
  while (pivot < gen.size() && gen[pivot] == 0) ++pivot;
  LinearForm s;
  s.p = a.p;
  s.coeffs = FpVector(a.dim, 0);
  s.coeffs[pivot] = fp_inv(gen[pivot], a.p);
  FormCheck fc = symm_form_check(a, s);
  if (!fc.symmetric || !fc.nondegenerate)
    fail(errc::not_frobenius, "constructed socle form is not a symmetrizing form");
  return s;
}

SubalgebraResult corner(const Algebra& a, const FpVector& e) {
  if (a.mul(e, e) != e) fail(errc::not_idempotent, "corner: element is not idempotent");
  std::vector<FpVector> gens;
  for (std::size_t u = 0; u < a.dim; ++u) gens.push_back(a.mul(a.mul(e, a.basis_vector(u)), e));
  Subspace u = span(gens, a.dim, a.p);
  std::size_t d = u.dim();
  std::vector<FpVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = coords_in(u, a.mul(u.basis.row(i), u.basis.row(j)));
  SubalgebraResult res;
  std::vector<FpVector> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(u.basis.row(i));
  res.inclusion = FpMatrix::from_columns(cols, a.dim, a.p);
  res.alg = Algebra::create(d, a.p, std::move(table), coords_in(u, e), {});
  return res;
}

IntMatrix cartan_matrix(const Algebra& a, const std::vector<FpVector>& idempotents) {
  FpVector total(a.dim, 0);
  for (std::size_t u = 0; u < idempotents.size(); ++u) {
    if (a.mul(idempotents[u], idempotents[u]) != idempotents[u])
      fail(errc::not_idempotent, "cartan_matrix: element " + std::to_string(u) + " is not idempotent");
    for (std::size_t v = 0; v < idempotents.size(); ++v) {
      if (u == v) continue;
      if (!vec_is_zero(a.mul(idempotents[u], idempotents[v])))
        fail(errc::not_orthogonal, "cartan_matrix: idempotents are not orthogonal");
    }
    vec_addmul(total, 1, idempotents[u], a.p);
  }
  if (total != a.unit) fail(errc::not_unit_sum, "cartan_matrix: idempotents do not sum to the unit");

  IntMatrix c(idempotents.size(), idempotents.size());
  for (std::size_t u = 0; u < idempotents.size(); ++u)
    for (std::size_t v = 0; v < idempotents.size(); ++v) {
      std::vector<FpVector> gens;
      for (std::size_t b = 0; b < a.dim; ++b)
        gens.push_back(a.mul(a.mul(idempotents[u], a.basis_vector(b)), idempotents[v]));
      c.at(u, v) = static_cast<std::int64_t>(span(gens, a.dim, a.p).dim());
    }
  return c;
}

bool is_uniserial_local(const Algebra& a) {
  Subspace j = radical_split_local(a);
  for (std::size_t layer : loewy_layers(a, j))
    if (layer > 1) return false;
  return true;
}

Algebra change_basis(const Algebra& a, const FpMatrix& new_basis_rows) {
  if (new_basis_rows.rows != a.dim || new_basis_rows.cols != a.dim)
    fail(errc::dimension_mismatch, "change_basis: matrix shape mismatch");
  FpMatrix to_new = mat_transpose(mat_inverse(new_basis_rows));
  std::vector<FpVector> table(a.dim * a.dim);
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = 0; v < a.dim; ++v)
      table[u * a.dim + v] = mat_apply(to_new, a.mul(new_basis_rows.row(u), new_basis_rows.row(v)));
  return Algebra::create(a.dim, a.p, std::move(table), mat_apply(to_new, a.unit), {});
}

}  // namespace blocklab
