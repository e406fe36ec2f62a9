#include "doctest.h"
#include "hopf/constructors.hpp"
#include "hopf/errors.hpp"
#include "hopf/groups.hpp"
#include "hopf/structure.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

bool has_violation(const StructuredAlgebra& a, const std::string& axiom) {
  for (const auto& v : validate(a))
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("multiply agrees with a direct transcription of the structure constants") {
    const StructuredAlgebra a = group_algebra(3, group_by_name("c3xc3"));
    oracle::for_each_vector(3, 2, [&](const FpVector& c) {
      FpVector x(9, 0), y(9, 0);
      x[1] = c[0];
      x[4] = c[1];
      y[2] = c[1];
      y[0] = 1;
      CHECK(multiply(a, x, y) == oracle::product(a, x, y));
    });
  }

  TEST_CASE("group algebras and their duals validate") {
    for (const char* name : {"c2", "c4", "c2xc2", "d4", "q8"}) {
      CAPTURE(name);
      CHECK(validate(group_algebra(2, group_by_name(name))).empty());
      CHECK(validate(group_dual(2, group_by_name(name))).empty());
    }
    CHECK(validate(group_dual(3, group_by_name("heis3"))).empty());
  }

  TEST_CASE("the linear dual of kG has the tensors of (kG)*") {
    const GroupTable g = group_by_name("d4");
    const StructuredAlgebra d = dual(group_algebra(2, g));
    const StructuredAlgebra f = group_dual(2, g);
    CHECK(d.mult_table() == f.mult_table());
    CHECK(d.comult_table() == f.comult_table());
    CHECK(d.unit() == f.unit());
    CHECK(d.counit() == f.counit());
    CHECK(d.antipode() == f.antipode());
  }

  TEST_CASE("compute_antipode recovers the stored antipode") {
    for (const char* name : {"c4", "q8", "c2xc2xc2"}) {
      const StructuredAlgebra h = group_dual(2, group_by_name(name));
      CHECK(compute_antipode(h) == h.antipode());
    }
    const StructuredAlgebra u = restricted_enveloping(abelian_lie_data(3, 2));
    CHECK(compute_antipode(u) == u.antipode());
  }

  TEST_CASE("validate names the broken axiom") {
    StructuredAlgebra a = group_algebra(2, cyclic_group(4));
    a.set_product(1, 2, unit_vector(4, 1));
    CHECK(has_violation(a, "associativity"));

    StructuredAlgebra b = group_algebra(3, cyclic_group(3));
    b.set_counit(FpVector{1, 1, 0});
    CHECK(has_violation(b, "counit"));
    CHECK_THROWS_AS(require_valid(b), MathError);

    StructuredAlgebra c = group_algebra(2, cyclic_group(4));
    c.set_antipode(FpMatrix::identity(2, 4));
    CHECK(has_violation(c, "antipode"));
  }

  TEST_CASE("tensor products and the tensor square") {
    const StructuredAlgebra a = group_algebra(2, cyclic_group(2));
    const StructuredAlgebra b = group_algebra(2, cyclic_group(4));
    const StructuredAlgebra ab = tensor_product_algebra(a, b);
    CHECK(ab.dim() == 8);
    const FpVector x = unit_vector(2, 1), y = unit_vector(4, 3);
    CHECK(multiply(ab, tensor(x, y, 2), tensor(x, y, 2)) == tensor(multiply(a, x, x), multiply(b, y, y), 2));
    CHECK(tensor_square_algebra(a).dim() == 4);
  }

  TEST_CASE("restriction to a Hopf subalgebra and quotient by a Hopf ideal") {
    const StructuredAlgebra h = group_algebra(2, cyclic_group(4));
    // span{e, g^2} is the group algebra of the subgroup of order 2.
    const Subspace l = Subspace::span(2, 4, {unit_vector(4, 0), unit_vector(4, 2)});
    const StructuredAlgebra sub = restrict_to_subspace(h, l);
    CHECK(sub.dim() == 2);
    CHECK(validate(sub).empty());
    CHECK_THROWS_AS(restrict_to_subspace(h, Subspace::span(2, 4, {unit_vector(4, 1)})), MathError);

    const StructuredAlgebra q = quotient_by_hopf_ideal(h, augmentation_left_ideal(h, l));
    CHECK(q.dim() == 2);
    CHECK(validate(q).empty());
  }
}
