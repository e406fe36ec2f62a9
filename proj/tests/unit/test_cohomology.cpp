#include <random>

#include "doctest.h"
#include "hopf/cohomology.hpp"
#include "hopf/constructors.hpp"
#include "hopf/errors.hpp"
#include "hopf/groups.hpp"
#include "hopf/invariants.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

FpVector random_vector(std::mt19937& rng, std::size_t n, std::uint32_t p) {
  FpVector v(n);
  for (auto& x : v) x = static_cast<Residue>(rng() % p);
  return v;
}

StructuredAlgebra truncated(std::uint32_t p) { return restricted_enveloping(abelian_lie_data(p, 1)); }

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("differential matrices agree with the defining formulas") {
    std::mt19937 rng(5);
    const std::vector<StructuredAlgebra> algebras{truncated(2), truncated(3), group_dual(2, group_by_name("q8")),
                                                  group_algebra(3, cyclic_group(3)),
                                                  restricted_enveloping(abelian_lie_data(2, 2))};
    for (const auto& h : algebras) {
      const std::size_t n = h.dim();
      const FpMatrix d1 = differential(h, 1), d2 = differential(h, 2);
      for (int t = 0; t < 10; ++t) {
        const FpVector y = random_vector(rng, n, h.p());
        const FpVector u = random_vector(rng, n * n, h.p());
        CHECK(d1 * y == oracle::d1(h, y));
        CHECK(d2 * u == oracle::d2(h, u));
        CHECK(coboundary(h, u, 2) == oracle::d2(h, u));
      }
      CHECK((d2 * d1).is_zero());
      if (n <= 4) CHECK((differential(h, 3) * d2).is_zero());
    }
  }

  TEST_CASE("dim H^2 matches exhaustive enumeration") {
    const std::vector<StructuredAlgebra> algebras{truncated(2), truncated(3), group_dual(2, cyclic_group(2)),
                                                  group_algebra(2, cyclic_group(2)), group_dual(3, cyclic_group(3))};
    for (const auto& h : algebras) {
      const oracle::H2Census census = oracle::h2_census(h);
      CHECK(h2(h).dim() == census.dim);
      CHECK(cohomology_dimension(h, 2) == census.dim);
    }
  }

  TEST_CASE("H^2 of k[x]/x^2 is spanned by the class of x (x) x") {
    const StructuredAlgebra h = truncated(2);
    const CohomologyClasses c = h2(h);
    REQUIRE(c.dim() == 1);
    const FpVector xx = tensor(unit_vector(2, 1), unit_vector(2, 1), 2);
    CHECK_FALSE(oracle::is_coboundary(h, xx));
    CHECK(is_zero(oracle::d2(h, xx)));
    CHECK(oracle::is_coboundary(h, subtract(c.representatives[0], xx, 2)));
  }

  TEST_CASE("H^1 is the primitive space") {
    for (const auto& h : std::vector<StructuredAlgebra>{truncated(3), group_dual(2, group_by_name("c2xc2xc2")), group_algebra(2, cyclic_group(4))})
      CHECK(cohomology_dimension(h, 1) == primitive_space(h).dim());
  }

  TEST_CASE("decompose_cocycle reconstructs its input") {
    std::mt19937 rng(11);
    const StructuredAlgebra h = group_dual(2, group_by_name("c2xc2"));
    const CohomologyClasses c = h2(h);
    CHECK(c.dim() == 3);
    for (int t = 0; t < 10; ++t) {
      FpVector u = c.d1 * random_vector(rng, 4, 2);
      const FpVector alpha = random_vector(rng, c.dim(), 2);
      for (std::size_t i = 0; i < c.dim(); ++i) axpy(u, alpha[i], c.representatives[i], 2);
      const CocycleDecomposition d = decompose_cocycle(c, u);
      CHECK(d.alphas == alpha);
      FpVector back = c.d1 * d.y;
      for (std::size_t i = 0; i < c.dim(); ++i) axpy(back, d.alphas[i], c.representatives[i], 2);
      CHECK(back == u);
    }
    CHECK(message_of([&] { decompose_cocycle(c, unit_vector(16, 1)); }) == "not a cocycle");
  }

  TEST_CASE("group dual cocycles admit Frobenius-fixed representatives") {
    for (const char* name : {"c2", "c4", "c2xc2", "d4", "q8"}) {
      const StructuredAlgebra h = group_dual(2, group_by_name(name));
      CohomologyClasses c = h2(h);
      REQUIRE(make_frobenius_fixed(h, c));
      CHECK(frobenius_fixed_check(h, c));
      for (const auto& u : c.representatives) {
        CHECK(tensor_power(h, u, 2) == u);
        CHECK(is_zero(oracle::d2(h, u)));
      }
      // Still a basis modulo coboundaries.
      CHECK(sum(c.coboundaries, Subspace::span(2, h.dim() * h.dim(), c.representatives)).dim() ==
            c.coboundaries.dim() + c.dim());
    }
  }

  TEST_CASE("find_z over K in (kC8)*") {
    const StructuredAlgebra h = group_dual(2, cyclic_group(8));
    const Subspace k = primitively_generated(h);
    const AdjoinedElement a = find_z(h, k);
    CHECK_FALSE(k.contains(a.z));
    FpVector defect = comultiply(h, a.z);
    defect = subtract(defect, tensor(a.z, h.unit(), 2), 2);
    defect = subtract(defect, tensor(h.unit(), a.z, 2), 2);
    CHECK(defect == a.u);
    CHECK_FALSE(is_zero(a.alphas));
    const StructuredAlgebra kl = restrict_to_subspace(h, k);
    const CohomologyClasses c = h2(kl);
    FpVector combination = zero_vector(kl.dim() * kl.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) axpy(combination, a.alphas[i], c.representatives[i], 2);
    CHECK(combination == a.u_in_l);
  }

  TEST_CASE("find_z preconditions") {
    const StructuredAlgebra h = group_dual(2, cyclic_group(4));
    CHECK(message_of([&] { find_z(h, Subspace::full(2, 4)); }) == "L = H");
    const StructuredAlgebra nc = group_dual(3, cyclic_group(2));
    CHECK(message_of([&] { find_z(nc, Subspace::span(3, 2, {nc.unit()})); }) == "H is not connected");
    CHECK(message_of([&] { find_z(h, Subspace::span(2, 4, {h.unit()})); }) == "L does not contain K");
  }
}
