#include "blocklab/exactlin.hpp"

#include <cstdint>
#include <numeric>

#include "doctest.h"

using namespace blocklab;

namespace {

// deterministic generator so expected values never drift between runs
struct Rng {
  std::uint64_t state = 0x2545F4914F6CDD1DULL;
  std::uint32_t next(std::uint32_t bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>((state >> 33) % bound);
  }
};

FpMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  FpMatrix m(r, c, p);
  for (auto& v : m.a) v = rng.next(p);
  return m;
}

// cofactor expansion; fine as an oracle for n <= 5
std::int64_t det_oracle(const IntMatrix& m) {
  std::size_t n = m.rows;
  if (n == 1) return m.at(0, 0);
  std::int64_t det = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(0, k) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    det += sign * m.at(0, k) * det_oracle(minor);
  }
  return det;
}

// count vectors of GF(3)^6 lying in a subspace by exhaustive enumeration
std::size_t count_members(const Subspace& u) {
  std::size_t count = 0;
  for (std::uint32_t code = 0; code < 729; ++code) {
    FpVector v(6);
    std::uint32_t c = code;
    for (std::size_t i = 0; i < 6; ++i) {
      v[i] = c % 3;
      c /= 3;
    }
    if (contains(u, v)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("rref basics") {
  FpMatrix id = FpMatrix::identity(3, 3);
  CHECK(rref(id).mat == id);
  CHECK(rref(id).rank == 3);

  FpMatrix zero(2, 4, 3);
  CHECK(rref(zero).mat == zero);
  CHECK(rref(zero).rank == 0);

  // row2 = 2*row1 mod 3
  FpMatrix m(2, 2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 1;
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.mat.at(0, 0) == 1);
  CHECK(r.mat.at(0, 1) == 2);
  CHECK(r.mat.at(1, 0) == 0);
  CHECK(r.mat.at(1, 1) == 0);
}

TEST_CASE("rref is idempotent and entries stay reduced") {
  Rng rng;
  for (std::uint32_t p : {3u, 5u}) {
    for (int iter = 0; iter < 50; ++iter) {
      FpMatrix m = random_matrix(rng, 6, 8, p);
      RrefResult r = rref(m);
      CHECK(rref(r.mat).mat == r.mat);
      for (std::uint32_t v : r.mat.a) CHECK(v < p);
    }
  }
}

TEST_CASE("rref canonicity: two spanning sets of one subspace agree") {
  Rng rng;
  for (int iter = 0; iter < 30; ++iter) {
    FpMatrix m = random_matrix(rng, 4, 6, 3);
    Subspace u = span(m);
    // mix rows: random left-multiplication by an invertible 4x4
    FpMatrix mix(4, 4, 3);
    do {
      mix = random_matrix(rng, 4, 4, 3);
    } while (rank(mix) != 4);
    Subspace v = span(mat_mul(mix, m));
    CHECK(u == v);
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(FpMatrix::identity(4, 3)).dim() == 0);
  CHECK(kernel(FpMatrix(2, 3, 3)).dim() == 3);

  Rng rng;
  for (int iter = 0; iter < 40; ++iter) {
    FpMatrix m = random_matrix(rng, 5, 7, 3);
    Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == m.cols);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(vec_is_zero(mat_apply(m, k.basis.row(i))));
  }
}

TEST_CASE("subspace lattice") {
  Subspace e1 = span({{1, 0}}, 2, 3);
  Subspace e2 = span({{0, 1}}, 2, 3);
  CHECK(sum(e1, e2) == Subspace::full(2, 3));
  CHECK(intersect(e1, e2).dim() == 0);
  CHECK(intersect(e1, e1) == e1);
  CHECK(contains(e1, FpVector{2, 0}));
  CHECK_FALSE(contains(e1, FpVector{1, 1}));
}

TEST_CASE("dimension formula against exhaustive GF(3)^6 enumeration") {
  Rng rng;
  for (int iter = 0; iter < 10; ++iter) {
    Subspace u = span(random_matrix(rng, 3, 6, 3));
    Subspace v = span(random_matrix(rng, 3, 6, 3));
    Subspace s = sum(u, v);
    Subspace i = intersect(u, v);
    CHECK(u.dim() + v.dim() == s.dim() + i.dim());
    // membership counts must match 3^dim exactly
    auto pow3 = [](std::size_t d) { std::size_t n = 1; while (d--) n *= 3; return n; };
    CHECK(count_members(u) == pow3(u.dim()));
    CHECK(count_members(v) == pow3(v.dim()));
    CHECK(count_members(s) == pow3(s.dim()));
    CHECK(count_members(i) == pow3(i.dim()));
  }
}

TEST_CASE("quotient_dim and coords_in error paths") {
  Subspace u = span({{1, 0, 0}, {0, 1, 0}}, 3, 3);
  Subspace v = span({{1, 2, 0}}, 3, 3);
  CHECK(quotient_dim(u, v) == 1);
  Subspace w = span({{0, 0, 1}}, 3, 3);
  CHECK_THROWS_AS(quotient_dim(v, w), error);
  CHECK_THROWS_AS(coords_in(u, FpVector{0, 0, 1}), error);
  FpVector c = coords_in(u, FpVector{2, 1, 0});
  CHECK(c == FpVector{2, 1});
  CHECK_THROWS_AS(sum(u, Subspace::zero(4, 3)), error);
}

TEST_CASE("smith normal form") {
  IntMatrix c(2, 2);
  c.at(0, 0) = 5;
  c.at(0, 1) = 1;
  c.at(1, 0) = 1;
  c.at(1, 1) = 2;
  CHECK(smith_normal_form(c) == std::vector<std::int64_t>{1, 9});

  IntMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(smith_normal_form(id) == std::vector<std::int64_t>{1, 1, 1});

  IntMatrix d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 4;
  CHECK(smith_normal_form(d) == std::vector<std::int64_t>{2, 4});
}

TEST_CASE("smith divisors: chain and determinant, randomized") {
  Rng rng;
  for (int iter = 0; iter < 40; ++iter) {
    IntMatrix m(4, 4);
    for (auto& v : m.a) v = static_cast<std::int64_t>(rng.next(11)) - 5;
    std::int64_t det = det_oracle(m);
    std::vector<std::int64_t> divs = smith_normal_form(m);
    for (std::size_t k = 0; k + 1 < divs.size(); ++k) {
      if (divs[k + 1] != 0) {
        REQUIRE(divs[k] != 0);
        CHECK(divs[k + 1] % divs[k] == 0);
      }
    }
    std::int64_t prod = 1;
    for (std::int64_t v : divs) prod *= v;
    CHECK(prod == std::llabs(det));
  }
}
