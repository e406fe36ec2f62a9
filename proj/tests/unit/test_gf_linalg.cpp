#include <algorithm>
#include <random>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "hopf/gf_linalg.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

FpMatrix random_matrix(std::mt19937& rng, std::uint32_t p, std::size_t rows, std::size_t cols, int zero_bias = 0) {
  FpMatrix m(p, rows, cols);
  std::uniform_int_distribution<int> dist(-zero_bias, static_cast<int>(p) - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, std::max(0, dist(rng)));
  return m;
}

std::size_t log_p(std::size_t n, std::uint32_t p) {
  std::size_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

TEST_SUITE("gf_linalg") {
  TEST_CASE("rank and kernel agree with enumeration of F_p^n") {
    std::mt19937 rng(20240611);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (int trial = 0; trial < 12; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        const FpMatrix m = random_matrix(rng, p, rows, cols, trial % 3);
        std::set<FpVector> images;
        std::size_t kernel_size = 0;
        oracle::for_each_vector(p, cols, [&](const FpVector& v) {
          const FpVector mv = m * v;
          images.insert(mv);
          if (is_zero(mv)) ++kernel_size;
        });
        CHECK(rank(m) == log_p(images.size(), p));
        const Subspace k = kernel(m);
        CHECK(k.dim() == log_p(kernel_size, p));
        for (const auto& v : k.basis_vectors()) CHECK(is_zero(m * v));
        CHECK(image(m).dim() == rank(m));
      }
    }
  }

  TEST_CASE("bit-packed F_2 elimination matches the generic path on wide matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
      const FpMatrix m = random_matrix(rng, 2, 70 + trial, 130, trial);
      const RrefResult r = rref(m);
      // Row space is preserved: every original row reduces to zero.
      const Subspace s = Subspace::row_space(m);
      CHECK(s.dim() == r.rank);
      for (std::size_t i = 0; i < m.rows(); ++i) CHECK(s.contains(m.row(i)));
      for (std::size_t i = 0; i < r.rank; ++i) CHECK(r.form(i, r.pivots[i]) == 1);
    }
  }

  TEST_CASE("solve returns a solution or reports inconsistency") {
    std::mt19937 rng(99);
    for (std::uint32_t p : {2u, 3u, 7u}) {
      for (int trial = 0; trial < 20; ++trial) {
        const FpMatrix m = random_matrix(rng, p, 4, 3, 1);
        FpVector b(4);
        for (auto& x : b) x = static_cast<Residue>(rng() % p);
        bool exists = false;
        oracle::for_each_vector(p, 3, [&](const FpVector& x) { exists = exists || m * x == b; });
        const auto x = solve(m, b);
        CHECK(x.has_value() == exists);
        if (x) CHECK(m * *x == b);
      }
    }
  }

  TEST_CASE("kronecker follows the first-factor-major tensor convention") {
    const FpMatrix a = FpMatrix::from_rows(3, {{1, 2}, {0, 1}});
    const FpMatrix b = FpMatrix::from_rows(3, {{2, 0}, {1, 1}});
    const FpVector x{1, 2}, y{2, 1};
    CHECK(kronecker(a, b) * tensor(x, y, 3) == tensor(a * x, b * y, 3));
    CHECK(tensor(unit_vector(2, 1), unit_vector(2, 0), 3) == unit_vector(4, 2));
  }

  TEST_CASE("subspace operations") {
    const std::uint32_t p = 3;
    const Subspace u = Subspace::span(p, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
    const Subspace v = Subspace::span(p, 4, {{1, 1, 0, 0}, {0, 0, 0, 1}});
    CHECK(sum(u, v).dim() == 3);
    CHECK(intersect(u, v).dim() == 1);
    CHECK(intersect(u, v).contains(FpVector{2, 2, 0, 0}));
    const Subspace ann = annihilator(u);
    CHECK(ann.dim() == 2);
    for (const auto& w : ann.basis_vectors())
      for (const auto& x : u.basis_vectors()) CHECK(dot(w, x, p) == 0);
    const auto extra = quotient_basis(intersect(u, v), u);
    CHECK(extra.size() == 1);
    CHECK_THROWS_AS(quotient_basis(u, v), std::invalid_argument);
    const FpVector c{2, 1};
    CHECK(u.coordinates(u.from_coordinates(c)) == c);
    CHECK_FALSE(u.coordinates(FpVector{1, 0, 0, 0}).has_value());
    CHECK(Subspace::span(p, 4, {{2, 2, 0, 0}, {0, 0, 2, 0}}) == u);
  }

  TEST_CASE("moduli") {
    CHECK(is_prime(251));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_THROWS_AS(require_prime(4), std::invalid_argument);
    CHECK_THROWS_AS(require_prime(257), std::invalid_argument);
    for (std::uint32_t a = 1; a < 251; ++a) CHECK(mul_mod(static_cast<Residue>(a), inv_mod(static_cast<Residue>(a), 251), 251) == 1);
    CHECK(reduce_mod(-1, 5) == 4);
    CHECK(pow_mod(3, 4, 5) == 1);
  }
}
