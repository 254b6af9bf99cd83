#include "blocklab/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace blocklab {

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + b) % p; }

std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + p - b % p) % p; }

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return (p - a % p) % p; }

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) fail(errc::singular_generator, "inverse of 0 mod " + std::to_string(p));
  // Fermat: a^(p-2) mod p.
  std::uint32_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = fp_mul(result, base, p);
    base = fp_mul(base, base, p);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpVector vec_add(const FpVector& a, const FpVector& b, std::uint32_t p) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vec_add: size mismatch");
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_add(a[i], b[i], p);
  return r;
}

FpVector vec_sub(const FpVector& a, const FpVector& b, std::uint32_t p) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vec_sub: size mismatch");
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(a[i], b[i], p);
  return r;
}

FpVector vec_scale(std::uint32_t c, const FpVector& a, std::uint32_t p) {
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(c, a[i], p);
  return r;
}

void vec_addmul(FpVector& a, std::uint32_t c, const FpVector& b, std::uint32_t p) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vec_addmul: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + static_cast<std::uint64_t>(c) * b[i]) % p;
}

bool vec_is_zero(const FpVector& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

FpMatrix::FpMatrix(std::size_t r, std::size_t c, std::uint32_t p_) : rows(r), cols(c), p(p_), a(r * c, 0) {
  if (!is_prime(p_)) fail(errc::invalid_argument, "modulus " + std::to_string(p_) + " is not prime");
}

FpVector FpMatrix::row(std::size_t i) const { return FpVector(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

void FpMatrix::set_row(std::size_t i, const FpVector& v) {
  if (v.size() != cols) fail(errc::dimension_mismatch, "set_row: size mismatch");
  std::copy(v.begin(), v.end(), a.begin() + i * cols);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector>& rows, std::size_t ncols, std::uint32_t p) {
  FpMatrix m(rows.size(), ncols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

FpMatrix FpMatrix::from_columns(const std::vector<FpVector>& cols, std::size_t nrows, std::uint32_t p) {
  FpMatrix m(nrows, cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nrows) fail(errc::dimension_mismatch, "from_columns: size mismatch");
    for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i] % p;
  }
  return m;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols != b.rows || a.p != b.p) fail(errc::dimension_mismatch, "mat_mul: shape or modulus mismatch");
  FpMatrix r(a.rows, b.cols, a.p);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      std::uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        r.at(i, j) = (r.at(i, j) + static_cast<std::uint64_t>(aik) * b.at(k, j)) % a.p;
    }
  return r;
}

FpMatrix mat_transpose(const FpMatrix& a) {
  FpMatrix r(a.cols, a.rows, a.p);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

FpVector mat_apply(const FpMatrix& m, const FpVector& x) {
  if (x.size() != m.cols) fail(errc::dimension_mismatch, "mat_apply: size mismatch");
  FpVector r(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += static_cast<std::uint64_t>(m.at(i, j)) * x[j];
    r[i] = static_cast<std::uint32_t>(acc % m.p);
  }
  return r;
}

RrefResult rref(const FpMatrix& m) {
  RrefResult res;
  res.mat = m;
  FpMatrix& r = res.mat;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
    std::size_t piv = lead;
    while (piv < r.rows && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
    std::uint32_t inv = fp_inv(r.at(lead, col), r.p);
    for (std::size_t j = 0; j < r.cols; ++j) r.at(lead, j) = fp_mul(r.at(lead, j), inv, r.p);
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      std::uint32_t f = r.at(i, col);
      if (f == 0) continue;
      std::uint32_t neg = fp_neg(f, r.p);
      for (std::size_t j = 0; j < r.cols; ++j)
        r.at(i, j) = (r.at(i, j) + static_cast<std::uint64_t>(neg) * r.at(lead, j)) % r.p;
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix mat_inverse(const FpMatrix& m) {
  if (m.rows != m.cols) fail(errc::dimension_mismatch, "mat_inverse: not square");
  std::size_t n = m.rows;
  FpMatrix aug(n, 2 * n, m.p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (r.mat.at(i, i) != 1) fail(errc::singular_generator, "mat_inverse: singular matrix");
  FpMatrix inv(n, n, m.p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Subspace Subspace::zero(std::size_t ambient, std::uint32_t p) {
  Subspace s;
  s.ambient = ambient;
  s.basis = FpMatrix(0, ambient, p);
  return s;
}

Subspace Subspace::full(std::size_t ambient, std::uint32_t p) {
  Subspace s;
  s.ambient = ambient;
  s.basis = FpMatrix::identity(ambient, p);
  return s;
}

Subspace span(const FpMatrix& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.ambient = rows.cols;
  s.basis = FpMatrix(r.rank, rows.cols, rows.p);
  for (std::size_t i = 0; i < r.rank; ++i) s.basis.set_row(i, r.mat.row(i));
  return s;
}

Subspace span(const std::vector<FpVector>& vectors, std::size_t ambient, std::uint32_t p) {
  return span(FpMatrix::from_rows(vectors, ambient, p));
}

Subspace kernel(const FpMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = fp_neg(r.mat.at(i, f), m.p);
    basis.push_back(std::move(v));
  }
  return span(basis, m.cols, m.p);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient || u.basis.p != v.basis.p)
    fail(errc::dimension_mismatch, "sum: ambient mismatch");
  FpMatrix stacked(u.dim() + v.dim(), u.ambient, u.basis.p);
  for (std::size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis.row(i));
  for (std::size_t i = 0; i < v.dim(); ++i) stacked.set_row(u.dim() + i, v.basis.row(i));
  return span(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient || u.basis.p != v.basis.p)
    fail(errc::dimension_mismatch, "intersect: ambient mismatch");
  // U cap V is the annihilator of ann(U) + ann(V); ann(W) = kernel of W's basis
  // (the standard dot pairing on GF(p)^n is nondegenerate).
  Subspace au = kernel(u.basis);
  Subspace av = kernel(v.basis);
  Subspace a = sum(au, av);
  if (a.dim() == 0) return Subspace::full(u.ambient, u.basis.p);
  return kernel(a.basis);
}

FpVector reduce_mod(const Subspace& u, const FpVector& v) {
  if (v.size() != u.ambient) fail(errc::dimension_mismatch, "reduce_mod: size mismatch");
  FpVector r = v;
  std::uint32_t p = u.basis.p;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    // pivot column of row i = first nonzero entry
    FpVector row = u.basis.row(i);
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    std::uint32_t f = r[c];
    if (f != 0) vec_addmul(r, fp_neg(f, p), row, p);
  }
  return r;
}

Subspace map_subspace(const FpMatrix& m, const Subspace& u) {
  std::vector<FpVector> images;
  for (std::size_t i = 0; i < u.dim(); ++i) images.push_back(mat_apply(m, u.basis.row(i)));
  return span(images, m.rows, m.p);
}

bool contains(const Subspace& u, const FpVector& v) { return vec_is_zero(reduce_mod(u, v)); }

bool contains(const Subspace& u, const Subspace& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!contains(u, v.basis.row(i))) return false;
  return true;
}

std::size_t quotient_dim(const Subspace& u, const Subspace& v) {
  if (!contains(u, v)) fail(errc::not_contained, "quotient_dim: V is not a subspace of U");
  return u.dim() - v.dim();
}

FpVector coords_in(const Subspace& u, const FpVector& v) {
  if (v.size() != u.ambient) fail(errc::dimension_mismatch, "coords_in: size mismatch");
  FpVector r = v;
  FpVector coords(u.dim(), 0);
  std::uint32_t p = u.basis.p;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    FpVector row = u.basis.row(i);
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    coords[i] = r[c];
    if (r[c] != 0) vec_addmul(r, fp_neg(r[c], p), row, p);
  }
  if (!vec_is_zero(r)) fail(errc::not_contained, "coords_in: vector not in subspace");
  return coords;
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail(errc::dimension_mismatch, "int_mat_mul: shape mismatch");
  IntMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMatrix int_mat_transpose(const IntMatrix& a) {
  IntMatrix r(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

namespace {

bool snf_find_nonzero(const IntMatrix& m, std::size_t k, std::size_t& bi, std::size_t& bj) {
  std::int64_t best = 0;
  bool found = false;
  for (std::size_t i = k; i < m.rows; ++i)
    for (std::size_t j = k; j < m.cols; ++j) {
      std::int64_t v = std::llabs(m.at(i, j));
      if (v != 0 && (!found || v < best)) {
        best = v;
        bi = i;
        bj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  std::size_t n = std::min(m.rows, m.cols);
  std::vector<std::int64_t> divisors;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t bi = k, bj = k;
    if (!snf_find_nonzero(m, k, bi, bj)) break;
    for (;;) {
      // move the smallest entry of the trailing block to (k,k)
      snf_find_nonzero(m, k, bi, bj);
      if (bi != k)
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(k, j), m.at(bi, j));
      if (bj != k)
        for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, k), m.at(i, bj));

      bool reduced = true;
      for (std::size_t i = k + 1; i < m.rows; ++i) {
        std::int64_t q = m.at(i, k) / m.at(k, k);
        if (q != 0)
          for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(k, j);
        if (m.at(i, k) != 0) reduced = false;
      }
      for (std::size_t j = k + 1; j < m.cols; ++j) {
        std::int64_t q = m.at(k, j) / m.at(k, k);
        if (q != 0)
          for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, k);
        if (m.at(k, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // enforce divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = k + 1; i < m.rows && divides; ++i)
        for (std::size_t j = k + 1; j < m.cols && divides; ++j)
          if (m.at(i, j) % m.at(k, k) != 0) {
            for (std::size_t jj = 0; jj < m.cols; ++jj) m.at(k, jj) += m.at(i, jj);
            divides = false;
          }
      if (divides) break;
    }
    divisors.push_back(std::llabs(m.at(k, k)));
  }
  while (divisors.size() < n) divisors.push_back(0);
  return divisors;
}

}  // namespace blocklab
