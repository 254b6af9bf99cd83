#include "blocklab/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace blocklab {

bool GroupTable::is_abelian() const {
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i + 1; j < order; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::size_t GroupTable::element_order(std::size_t g) const {
  std::size_t x = g, n = 1;
  while (x != identity) {
    x = at(x, g);
    ++n;
    if (n > order) fail(errc::invalid_argument, "element order exceeds group order");
  }
  return n;
}

GroupTable GroupTable::create(std::size_t order, std::vector<std::size_t> mult, std::vector<std::string> labels) {
  GroupTable g;
  g.order = order;
  g.mult = std::move(mult);
  g.labels = std::move(labels);
  if (g.mult.size() != order * order) fail(errc::dimension_mismatch, "group table size mismatch");
  if (g.labels.empty())
    for (std::size_t i = 0; i < order; ++i) g.labels.push_back("g" + std::to_string(i));

  for (std::size_t v : g.mult)
    if (v >= order) fail(errc::invalid_argument, "group table entry out of range");

  // identity
  bool found = false;
  for (std::size_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x) ok = g.at(e, x) == x && g.at(x, e) == x;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) fail(errc::invalid_argument, "group has no identity element");

  // inverses
  g.inverse.assign(order, order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y)
      if (g.at(x, y) == g.identity && g.at(y, x) == g.identity) {
        g.inverse[x] = y;
        break;
      }
    if (g.inverse[x] == order) fail(errc::invalid_argument, "group element without inverse");
  }

  // associativity on all triples
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      for (std::size_t z = 0; z < order; ++z)
        if (g.at(g.at(x, y), z) != g.at(x, g.at(y, z)))
          fail(errc::invalid_argument, "group table is not associative");
  return g;
}

GroupTable cyclic(std::size_t n, const std::string& gen) {
  std::vector<std::size_t> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = (i + j) % n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      labels.push_back("1");
    else if (i == 1)
      labels.push_back(gen);
    else
      labels.push_back(gen + "^" + std::to_string(i));
  }
  return GroupTable::create(n, std::move(mult), std::move(labels));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  std::size_t n = g.order * h.order;
  auto idx = [&](std::size_t a, std::size_t b) { return a * h.order + b; };
  std::vector<std::size_t> mult(n * n);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < h.order; ++b)
      for (std::size_t c = 0; c < g.order; ++c)
        for (std::size_t d = 0; d < h.order; ++d)
          mult[idx(a, b) * n + idx(c, d)] = idx(g.at(a, c), h.at(b, d));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < h.order; ++b) {
      const std::string &la = g.labels[a], &lb = h.labels[b];
      if (la == "1")
        labels.push_back(lb);
      else if (lb == "1")
        labels.push_back(la);
      else
        labels.push_back(la + lb);
    }
  return GroupTable::create(n, std::move(mult), std::move(labels));
}

void validate_action(const GroupTable& acting, const GroupTable& target, const GroupAction& action) {
  if (action.perms.size() != acting.order) fail(errc::invalid_action, "one permutation per acting element required");
  for (const auto& perm : action.perms) {
    if (perm.size() != target.order) fail(errc::invalid_action, "permutation size mismatch");
    std::vector<bool> seen(target.order, false);
    for (std::size_t v : perm) {
      if (v >= target.order || seen[v]) fail(errc::invalid_action, "not a permutation of the target");
      seen[v] = true;
    }
    // automorphism of the target
    for (std::size_t x = 0; x < target.order; ++x)
      for (std::size_t y = 0; y < target.order; ++y)
        if (perm[target.at(x, y)] != target.at(perm[x], perm[y]))
          fail(errc::invalid_action, "permutation is not a group automorphism");
  }
  // homomorphism from the acting group
  for (std::size_t e = 0; e < acting.order; ++e)
    for (std::size_t f = 0; f < acting.order; ++f)
      for (std::size_t x = 0; x < target.order; ++x)
        if (action.perms[acting.at(e, f)][x] != action.perms[e][action.perms[f][x]])
          fail(errc::invalid_action, "assignment of permutations is not a homomorphism");
  if (action.perms[acting.identity] !=
      [&] {
        std::vector<std::size_t> id(target.order);
        std::iota(id.begin(), id.end(), 0);
        return id;
      }())
    fail(errc::invalid_action, "identity must act trivially");
}

GroupTable semidirect(const GroupTable& p, const GroupTable& e, const GroupAction& action) {
  validate_action(e, p, action);
  std::size_t n = p.order * e.order;
  auto idx = [&](std::size_t x, std::size_t a) { return a * p.order + x; };
  std::vector<std::size_t> mult(n * n);
  for (std::size_t x = 0; x < p.order; ++x)
    for (std::size_t a = 0; a < e.order; ++a)
      for (std::size_t y = 0; y < p.order; ++y)
        for (std::size_t b = 0; b < e.order; ++b)
          mult[idx(x, a) * n + idx(y, b)] = idx(p.at(x, action.perms[a][y]), e.at(a, b));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < e.order; ++a)
    for (std::size_t x = 0; x < p.order; ++x) {
      const std::string &lx = p.labels[x], &la = e.labels[a];
      if (la == "1")
        labels.push_back(lx);
      else if (lx == "1")
        labels.push_back(la);
      else
        labels.push_back(lx + la);
    }
  return GroupTable::create(n, std::move(mult), std::move(labels));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(g.order, false);
  for (std::size_t x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t h = 0; h < g.order; ++h) orbit.insert(g.conjugate(h, x));
    std::vector<std::size_t> cls(orbit.begin(), orbit.end());
    for (std::size_t y : cls) seen[y] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

Algebra group_algebra(const GroupTable& g, std::uint32_t p) {
  std::size_t n = g.order;
  std::vector<FpVector> table(n * n, FpVector(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) table[u * n + v][g.at(u, v)] = 1;
  FpVector unit(n, 0);
  unit[g.identity] = 1;
  return Algebra::create(n, p, std::move(table), std::move(unit), g.labels);
}

LinearForm group_form(const GroupTable& g, std::uint32_t p) {
  LinearForm s;
  s.p = p;
  s.coeffs = FpVector(g.order, 0);
  s.coeffs[g.identity] = 1;
  return s;
}

FpVector conjugation_sum(const Algebra& kg, const GroupTable& g, const std::vector<std::size_t>& elements,
                         const FpVector& x) {
  if (kg.dim != g.order || x.size() != g.order) fail(errc::dimension_mismatch, "conjugation_sum: size mismatch");
  FpVector r(g.order, 0);
  for (std::size_t h : elements)
    for (std::size_t u = 0; u < g.order; ++u)
      if (x[u] != 0) {
        std::size_t target = g.conjugate(h, u);
        r[target] = fp_add(r[target], x[u], kg.p);
      }
  return r;
}

SubalgebraResult fixed_subalgebra(const Algebra& a, const std::vector<std::vector<std::size_t>>& perms) {
  // each permutation must be an algebra automorphism
  for (const auto& perm : perms) {
    if (perm.size() != a.dim) fail(errc::not_an_automorphism, "permutation size mismatch");
    FpVector permuted_unit(a.dim, 0);
    for (std::size_t u = 0; u < a.dim; ++u)
      if (a.unit[u] != 0) permuted_unit[perm[u]] = a.unit[u];
    if (permuted_unit != a.unit) fail(errc::not_an_automorphism, "permutation does not fix the unit");
    for (std::size_t u = 0; u < a.dim; ++u)
      for (std::size_t v = 0; v < a.dim; ++v) {
        const FpVector& prod = a.basis_product(u, v);
        FpVector lhs(a.dim, 0);
        for (std::size_t w = 0; w < a.dim; ++w)
          if (prod[w] != 0) lhs[perm[w]] = prod[w];
        if (lhs != a.basis_product(perm[u], perm[v]))
          fail(errc::not_an_automorphism, "permutation does not preserve the structure constants");
      }
  }

  // orbits of the generated permutation group = connected components of the
  // generator graphs
  std::vector<std::size_t> comp(a.dim);
  std::iota(comp.begin(), comp.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& perm : perms)
      for (std::size_t u = 0; u < a.dim; ++u) {
        std::size_t x = std::min(comp[u], comp[perm[u]]);
        if (comp[u] != x || comp[perm[u]] != x) {
          comp[u] = comp[perm[u]] = x;
          changed = true;
        }
      }
  }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t u = 0; u < a.dim; ++u) orbits[comp[u]].push_back(u);

  std::vector<FpVector> sums;
  std::vector<std::string> labels;
  for (auto& [root, members] : orbits) {
    FpVector v(a.dim, 0);
    std::string label;
    for (std::size_t u : members) {
      v[u] = 1;
      if (!label.empty()) label += "+";
      label += a.labels[u];
    }
    sums.push_back(std::move(v));
    labels.push_back(std::move(label));
  }

  // orbit sums span the fixed points of a permutation action, and products of
  // fixed points are fixed, so the span is closed; coords are read off the
  // orbit supports
  std::size_t d = sums.size();
  auto coords = [&](const FpVector& v) {
    FpVector c(d, 0);
    std::size_t k = 0;
    for (auto& [root, members] : orbits) {
      c[k] = v[members.front()];
      for (std::size_t u : members)
        if (v[u] != c[k]) fail(errc::not_an_automorphism, "product of orbit sums is not orbit-constant");
      ++k;
    }
    return c;
  };
  std::vector<FpVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = coords(a.mul(sums[i], sums[j]));

  SubalgebraResult res;
  res.inclusion = FpMatrix::from_columns(sums, a.dim, a.p);
  res.alg = Algebra::create(d, a.p, std::move(table), coords(a.unit), std::move(labels));
  return res;
}

SubalgebraResult fixed_subalgebra(const Algebra& a, const std::vector<FpMatrix>& autos) {
  for (const FpMatrix& m : autos) {
    if (m.rows != a.dim || m.cols != a.dim || m.p != a.p)
      fail(errc::not_an_automorphism, "automorphism matrix shape mismatch");
    if (mat_apply(m, a.unit) != a.unit) fail(errc::not_an_automorphism, "matrix does not fix the unit");
    if (rank(m) != a.dim) fail(errc::not_an_automorphism, "matrix is not invertible");
    for (std::size_t u = 0; u < a.dim; ++u)
      for (std::size_t v = 0; v < a.dim; ++v)
        if (mat_apply(m, a.basis_product(u, v)) !=
            a.mul(mat_apply(m, a.basis_vector(u)), mat_apply(m, a.basis_vector(v))))
          fail(errc::not_an_automorphism, "matrix is not multiplicative");
  }
  // fixed space = intersection of kernels of (m - id)
  std::vector<FpVector> stacked_rows;
  for (const FpMatrix& m : autos)
    for (std::size_t i = 0; i < a.dim; ++i) {
      FpVector row(a.dim);
      for (std::size_t j = 0; j < a.dim; ++j)
        row[j] = fp_sub(m.at(i, j), i == j ? 1u : 0u, a.p);
      stacked_rows.push_back(std::move(row));
    }
  Subspace fixed = autos.empty() ? Subspace::full(a.dim, a.p)
                                 : kernel(FpMatrix::from_rows(stacked_rows, a.dim, a.p));
  return subalgebra(a, fixed);
}

// ---------------------------------------------------------------------------
// GL(2,p) machinery
// ---------------------------------------------------------------------------

namespace {

Mat2 mat2_mul(const Mat2& a, const Mat2& b, std::uint32_t p) {
  return {fp_add(fp_mul(a[0], b[0], p), fp_mul(a[1], b[2], p), p),
          fp_add(fp_mul(a[0], b[1], p), fp_mul(a[1], b[3], p), p),
          fp_add(fp_mul(a[2], b[0], p), fp_mul(a[3], b[2], p), p),
          fp_add(fp_mul(a[2], b[1], p), fp_mul(a[3], b[3], p), p)};
}

std::uint32_t mat2_det(const Mat2& a, std::uint32_t p) {
  return fp_sub(fp_mul(a[0], a[3], p), fp_mul(a[1], a[2], p), p);
}

std::pair<std::uint32_t, std::uint32_t> mat2_apply(const Mat2& m, std::uint32_t x, std::uint32_t y,
                                                   std::uint32_t p) {
  return {fp_add(fp_mul(m[0], x, p), fp_mul(m[1], y, p), p), fp_add(fp_mul(m[2], x, p), fp_mul(m[3], y, p), p)};
}

}  // namespace

MatGroup mat_closure(const std::vector<Mat2>& gens, std::uint32_t p) {
  for (const Mat2& g : gens)
    if (mat2_det(g, p) == 0) fail(errc::singular_generator, "generator is singular over GF(" + std::to_string(p) + ")");
  std::set<Mat2> elems;
  elems.insert(Mat2{1, 0, 0, 1});
  for (const Mat2& g : gens) elems.insert(g);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Mat2> snapshot(elems.begin(), elems.end());
    for (const Mat2& a : snapshot)
      for (const Mat2& b : snapshot)
        if (elems.insert(mat2_mul(a, b, p)).second) changed = true;
  }
  MatGroup g;
  g.p = p;
  g.elements.assign(elems.begin(), elems.end());
  return g;
}

std::size_t orbit_count(const MatGroup& g) {
  std::uint32_t p = g.p;
  std::size_t n = p * p;
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++count;
    for (const Mat2& m : g.elements) {
      auto [x, y] = mat2_apply(m, static_cast<std::uint32_t>(v % p), static_cast<std::uint32_t>(v / p), p);
      seen[x + p * y] = true;
    }
  }
  return count;
}

std::size_t burnside_orbit_count(const MatGroup& g) {
  std::uint32_t p = g.p;
  std::size_t total = 0;
  for (const Mat2& m : g.elements) {
    for (std::uint32_t y = 0; y < p; ++y)
      for (std::uint32_t x = 0; x < p; ++x) {
        auto [fx, fy] = mat2_apply(m, x, y, p);
        if (fx == x && fy == y) ++total;
      }
  }
  if (total % g.elements.size() != 0) fail(errc::invalid_argument, "Burnside count is not integral");
  return total / g.elements.size();
}

GroupTable to_group_table(const MatGroup& g) {
  std::map<Mat2, std::size_t> index;
  for (std::size_t i = 0; i < g.elements.size(); ++i) index[g.elements[i]] = i;
  std::size_t n = g.elements.size();
  std::vector<std::size_t> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(mat2_mul(g.elements[i], g.elements[j], g.p));
      if (it == index.end()) fail(errc::invalid_argument, "matrix set is not closed under multiplication");
      mult[i * n + j] = it->second;
    }
  std::vector<std::string> labels;
  for (const Mat2& m : g.elements)
    labels.push_back("[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) +
                     "," + std::to_string(m[3]) + "]]");
  return GroupTable::create(n, std::move(mult), std::move(labels));
}

std::string to_string(SmallGroupType t) {
  switch (t) {
    case SmallGroupType::trivial: return "1";
    case SmallGroupType::c2: return "C2";
    case SmallGroupType::c2c2: return "C2xC2";
    case SmallGroupType::c4: return "C4";
    case SmallGroupType::c8: return "C8";
    case SmallGroupType::d8: return "D8";
    case SmallGroupType::q8: return "Q8";
    case SmallGroupType::sd16: return "SD16";
    case SmallGroupType::unclassified: return "unclassified";
  }
  return "unclassified";
}

SmallGroupType classify_small_group(const GroupTable& g) {
  std::vector<std::size_t> orders;
  for (std::size_t x = 0; x < g.order; ++x) orders.push_back(g.element_order(x));
  std::sort(orders.begin(), orders.end());
  bool ab = g.is_abelian();

  struct Fingerprint {
    std::size_t order;
    bool abelian;
    std::vector<std::size_t> orders;
    SmallGroupType type;
  };
  static const std::vector<Fingerprint> table = {
      {1, true, {1}, SmallGroupType::trivial},
      {2, true, {1, 2}, SmallGroupType::c2},
      {4, true, {1, 2, 2, 2}, SmallGroupType::c2c2},
      {4, true, {1, 2, 4, 4}, SmallGroupType::c4},
      {8, true, {1, 2, 4, 4, 8, 8, 8, 8}, SmallGroupType::c8},
      {8, false, {1, 2, 2, 2, 2, 2, 4, 4}, SmallGroupType::d8},
      {8, false, {1, 2, 4, 4, 4, 4, 4, 4}, SmallGroupType::q8},
      {16, false, {1, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4, 8, 8, 8, 8}, SmallGroupType::sd16},
  };
  for (const Fingerprint& f : table)
    if (f.order == g.order && f.abelian == ab && f.orders == orders) return f.type;
  return SmallGroupType::unclassified;
}

SmallGroupType classify_small_group(const MatGroup& g) { return classify_small_group(to_group_table(g)); }

std::vector<Mat2> inertial_quotient_generators(const std::string& name, std::uint32_t p) {
  std::uint32_t m1 = p - 1;  // -1 mod p
  if (name == "1" || name == "trivial") return {};
  if (name == "C2free") return {Mat2{m1, 0, 0, m1}};          // -I, fixed-point-free
  if (name == "C2fix") return {Mat2{1, 0, 0, m1}};            // diag(1,-1)
  if (name == "V4") return {Mat2{m1, 0, 0, m1}, Mat2{1, 0, 0, m1}};
  if (name == "C4") return {Mat2{0, m1, 1, 0}};               // rotation of order 4
  if (name == "C8") return {Mat2{0, 1, 1, 1}};                // companion of x^2+2x+2, order 8
  if (name == "D8") return {Mat2{0, m1, 1, 0}, Mat2{1, 0, 0, m1}};
  if (name == "Q8") return {Mat2{0, m1, 1, 0}, Mat2{1, 1, 1, m1}};
  if (name == "SD16") return {Mat2{0, 1, 1, 1}, Mat2{1, 1, 0, m1}};  // order-8 element + field Frobenius
  fail(errc::invalid_argument, "unknown inertial quotient name '" + name + "'");
}

// ---------------------------------------------------------------------------
// brute-force homomorphism searches
// ---------------------------------------------------------------------------

namespace {

// all p^dim coordinate vectors, in base-p order
FpVector decode_element(std::uint64_t code, std::size_t dim, std::uint32_t p) {
  FpVector v(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::uint64_t element_count(std::size_t dim, std::uint32_t p) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= p;
    if (n > 100'000'000) fail(errc::invalid_argument, "hom search space too large");
  }
  return n;
}

struct HomSearch {
  const PresentedAlgebra& src;
  const Algebra& tgt;
  std::uint32_t max_exp = 0;

  explicit HomSearch(const PresentedAlgebra& s, const Algebra& t) : src(s), tgt(t) {
    for (const CommRelation& rel : src.spec.relations)
      for (const CommTerm& term : rel.terms)
        for (std::uint32_t e : term.exps) max_exp = std::max(max_exp, e);
    for (std::size_t k = 0; k < src.alg.dim; ++k)
      for (std::uint32_t e : basis_exps(k)) max_exp = std::max(max_exp, e);
  }

  std::vector<std::uint32_t> basis_exps(std::size_t k) const {
    // exponent tuple of the k-th basis monomial, recovered from its label;
    // the builder guarantees labels of the form "1", "x", "x^2*y", ...
    std::vector<std::uint32_t> exps(src.spec.generators.size(), 0);
    const std::string& label = src.alg.labels[k];
    if (label == "1") return exps;
    std::size_t pos = 0;
    while (pos < label.size()) {
      std::size_t star = label.find('*', pos);
      std::string factor = label.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      pos = star == std::string::npos ? label.size() : star + 1;
      std::string name = factor;
      std::uint32_t exp = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        name = factor.substr(0, caret);
        exp = static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
      }
      for (std::size_t g = 0; g < src.spec.generators.size(); ++g)
        if (src.spec.generators[g] == name) exps[g] += exp;
    }
    return exps;
  }

  // powers[g][e] = image_g^e
  bool relations_hold(const std::vector<std::vector<FpVector>>& powers) const {
    for (const CommRelation& rel : src.spec.relations) {
      FpVector sum(tgt.dim, 0);
      for (const CommTerm& term : rel.terms) {
        FpVector prod = tgt.unit;
        for (std::size_t g = 0; g < term.exps.size(); ++g)
          if (term.exps[g] > 0) prod = tgt.mul(prod, powers[g][term.exps[g]]);
        vec_addmul(sum, term.coeff, prod, tgt.p);
      }
      if (!vec_is_zero(sum)) return false;
    }
    return true;
  }

  FpMatrix map_matrix(const std::vector<std::vector<FpVector>>& powers) const {
    std::vector<FpVector> cols;
    for (std::size_t k = 0; k < src.alg.dim; ++k) {
      std::vector<std::uint32_t> exps = basis_exps(k);
      FpVector img = tgt.unit;
      for (std::size_t g = 0; g < exps.size(); ++g)
        if (exps[g] > 0) img = tgt.mul(img, powers[g][exps[g]]);
      cols.push_back(std::move(img));
    }
    return FpMatrix::from_columns(cols, tgt.dim, tgt.p);
  }
};

}  // namespace

std::vector<AlgebraMap> enumerate_homs(const PresentedAlgebra& source, const Algebra& target) {
  std::size_t ngens = source.spec.generators.size();
  if (ngens > 2) fail(errc::source_not_two_generated, "hom search requires at most two generators");
  if (!target.is_commutative()) fail(errc::invalid_argument, "hom search target must be commutative");

  HomSearch search(source, target);
  std::uint64_t n = element_count(target.dim, target.p);
  std::vector<AlgebraMap> homs;

  std::vector<std::vector<FpVector>> powers(ngens);
  auto fill_powers = [&](std::size_t g, const FpVector& img) {
    powers[g].assign(1, target.unit);
    for (std::uint32_t e = 1; e <= search.max_exp; ++e) powers[g].push_back(target.mul(powers[g].back(), img));
  };

  std::uint64_t outer = (ngens >= 1) ? n : 1;
  std::uint64_t inner = (ngens >= 2) ? n : 1;
  for (std::uint64_t c0 = 0; c0 < outer; ++c0) {
    if (ngens >= 1) fill_powers(0, decode_element(c0, target.dim, target.p));
    for (std::uint64_t c1 = 0; c1 < inner; ++c1) {
      if (ngens >= 2) fill_powers(1, decode_element(c1, target.dim, target.p));
      if (!search.relations_hold(powers)) continue;
      homs.push_back(AlgebraMap{source.alg, target, search.map_matrix(powers)});
    }
  }
  return homs;
}

SplitSurjectionCheck has_split_surjection(const PresentedAlgebra& source, const PresentedAlgebra& target) {
  SplitSurjectionCheck res;
  res.field = "GF(" + std::to_string(target.alg.p) + ")";
  std::vector<AlgebraMap> forward = enumerate_homs(source, target.alg);
  res.hom_count = forward.size();
  std::vector<AlgebraMap> backward = enumerate_homs(target, source.alg);
  FpMatrix id = FpMatrix::identity(target.alg.dim, target.alg.p);
  for (const AlgebraMap& pi : forward) {
    if (rank(pi.matrix) != target.alg.dim) continue;
    ++res.surjection_count;
    for (const AlgebraMap& sigma : backward) {
      if (mat_mul(pi.matrix, sigma.matrix) == id) {
        res.split_found = true;
        if (res.witness.empty()) {
          res.witness = "surjection with matrix section found";
        }
      }
    }
  }
  return res;
}

bool exists_isomorphism_exhaustive(const PresentedAlgebra& source, const Algebra& target) {
  if (source.alg.dim != target.dim) return false;
  for (const AlgebraMap& h : enumerate_homs(source, target))
    if (rank(h.matrix) == target.dim) return true;
  return false;
}

}  // namespace blocklab
