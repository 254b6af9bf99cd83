#pragma once

#include <cstdint>
#include <vector>

#include "blocklab/error.hpp"

namespace blocklab {

// Exact dense linear algebra over GF(p) plus Smith normal form over Z.
// Everything else in the toolkit sits on top of these kernels.
//
// Conventions: subspace bases are stored as row vectors in canonical reduced
// row echelon form; linear maps act on column vectors.

using FpVector = std::vector<std::uint32_t>;

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t n);

FpVector vec_add(const FpVector& a, const FpVector& b, std::uint32_t p);
FpVector vec_sub(const FpVector& a, const FpVector& b, std::uint32_t p);
FpVector vec_scale(std::uint32_t c, const FpVector& a, std::uint32_t p);
// a += c*b
void vec_addmul(FpVector& a, std::uint32_t c, const FpVector& b, std::uint32_t p);
bool vec_is_zero(const FpVector& a);

struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t p = 3;
  std::vector<std::uint32_t> a;  // row-major

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c, std::uint32_t p_);

  std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  FpVector row(std::size_t i) const;
  void set_row(std::size_t i, const FpVector& v);

  bool operator==(const FpMatrix& o) const = default;

  static FpMatrix identity(std::size_t n, std::uint32_t p);
  static FpMatrix from_rows(const std::vector<FpVector>& rows, std::size_t ncols, std::uint32_t p);
  static FpMatrix from_columns(const std::vector<FpVector>& cols, std::size_t nrows, std::uint32_t p);
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_transpose(const FpMatrix& a);
// m*x with x a column vector.
FpVector mat_apply(const FpMatrix& m, const FpVector& x);

// Canonical reduced row echelon form (leading ones, zeros above and below
// pivots, in-order pivot columns) and the rank.
struct RrefResult {
  FpMatrix mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);
// Inverse of a square matrix, or error(singular_generator) if singular.
FpMatrix mat_inverse(const FpMatrix& m);

// A subspace of GF(p)^ambient, held as an RREF basis with zero rows removed.
// The representation is canonical, so operator== decides subspace equality.
struct Subspace {
  std::size_t ambient = 0;
  FpMatrix basis;  // basis.cols == ambient, rows linearly independent

  std::size_t dim() const { return basis.rows; }
  bool operator==(const Subspace& o) const = default;

  static Subspace zero(std::size_t ambient, std::uint32_t p);
  static Subspace full(std::size_t ambient, std::uint32_t p);
};

// Right kernel {v : m v = 0} as a subspace of GF(p)^cols.
Subspace kernel(const FpMatrix& m);

Subspace span(const std::vector<FpVector>& vectors, std::size_t ambient, std::uint32_t p);
Subspace span(const FpMatrix& rows);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const FpVector& v);
bool contains(const Subspace& u, const Subspace& v);
// dim(U/V) for V contained in U; error(not_contained) otherwise.
std::size_t quotient_dim(const Subspace& u, const Subspace& v);
// Coordinates of v in the RREF basis of u; error(not_contained) if v is outside.
FpVector coords_in(const Subspace& u, const FpVector& v);
// v reduced modulo u (subtract the unique u-component on pivot coordinates).
FpVector reduce_mod(const Subspace& u, const FpVector& v);
// Image subspace {m*v : v in u}.
Subspace map_subspace(const FpMatrix& m, const Subspace& u);

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_mat_transpose(const IntMatrix& a);

// Elementary divisors d1 | d2 | ... (nonnegative, zeros last).
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

}  // namespace blocklab
