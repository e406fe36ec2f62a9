#include <set>

#include "doctest.h"
#include "hopf/constructors.hpp"
#include "hopf/errors.hpp"
#include "hopf/groups.hpp"
#include "hopf/invariants.hpp"
#include "hopf/structure.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

std::size_t conjugacy_classes(const GroupTable& g) {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t a = 0; a < g.order; ++a) {
    std::set<std::size_t> c;
    for (std::size_t x = 0; x < g.order; ++x) c.insert(g.mul(g.mul(x, a), g.inverse(x)));
    classes.insert(c);
  }
  return classes.size();
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("radical of commutative algebras equals the set of nilpotent elements") {
    std::vector<StructuredAlgebra> algebras{
        restricted_enveloping(abelian_lie_data(2, 1)), restricted_enveloping(abelian_lie_data(2, 3)),
        restricted_enveloping(abelian_lie_data(3, 2)), group_algebra(2, group_by_name("c4xc2")),
        group_algebra(3, group_by_name("c3xc3")),      group_dual(2, group_by_name("d4")),
        group_algebra(5, cyclic_group(3)),
    };
    for (const auto& a : algebras) {
      REQUIRE(is_commutative(a));
      const auto nil = oracle::nilpotent_elements(a);
      const Subspace j = jacobson_radical(a);
      std::size_t size = 1;
      for (std::size_t i = 0; i < j.dim(); ++i) size *= a.p();
      CHECK(nil.size() == size);
      for (const auto& v : nil) CHECK(j.contains(v));
    }
  }

  TEST_CASE("radical of a p-group algebra is the augmentation ideal") {
    for (const char* name : {"d4", "q8", "c4:c4"}) {
      const StructuredAlgebra a = group_algebra(2, group_by_name(name));
      const Subspace j = jacobson_radical(a);
      CHECK(j.dim() == a.dim() - 1);
      for (std::size_t g = 1; g < a.dim(); ++g) CHECK(j.contains(subtract(unit_vector(a.dim(), g), a.unit(), 2)));
      CHECK(nilpotency_index(a, j).has_value());
    }
    const StructuredAlgebra h = group_algebra(3, group_by_name("heis3"));
    CHECK(jacobson_radical(h).dim() == 26);
  }

  TEST_CASE("radical of a non-commutative restricted enveloping algebra") {
    RestrictedLieData d = abelian_lie_data(3, 2);
    d.brackets[1] = {0, 1};
    d.brackets[2] = {0, 2};
    d.pmap[0] = {1, 0};
    const StructuredAlgebra u = restricted_enveloping(d);
    const Subspace j = jacobson_radical(u);
    CHECK(j.dim() == 6);
    CHECK(is_two_sided_ideal(u, j));
    CHECK(nilpotency_index(u, j).has_value());
    CHECK(is_semisimple(quotient_structure(u, j)));
  }

  TEST_CASE("semisimple cases") {
    CHECK(is_semisimple(group_algebra(2, cyclic_group(3))));
    CHECK(is_semisimple(group_algebra(3, group_by_name("c2xc2"))));
    CHECK_FALSE(is_semisimple(group_algebra(2, cyclic_group(6))));
    CHECK(is_semisimple(group_dual(3, group_by_name("heis3"))));
  }

  TEST_CASE("integrals") {
    const StructuredAlgebra kc4 = group_algebra(2, cyclic_group(4));
    const IntegralSpaces s = integrals(kc4);
    CHECK(s.left_generator == FpVector{1, 1, 1, 1});
    CHECK_FALSE(s.eps_left_nonzero);
    const StructuredAlgebra dual = group_dual(2, cyclic_group(4));
    const IntegralSpaces t = integrals(dual);
    CHECK(t.left_generator == unit_vector(4, 0));
    CHECK(t.eps_left_nonzero);
    CHECK(t.eps_right_nonzero);
    CHECK(integrals(group_algebra(2, cyclic_group(3))).eps_right_nonzero);
  }

  TEST_CASE("center of kG has dimension the number of conjugacy classes") {
    const std::pair<const char*, std::uint32_t> cases[] = {{"d4", 2}, {"q8", 2}, {"c2xc2", 2}, {"heis3", 3}, {"c9:c3", 3}};
    for (const auto& [name, p] : cases) {
      const GroupTable g = group_by_name(name);
      CHECK(center(group_algebra(p, g)).dim() == conjugacy_classes(g));
    }
  }

  TEST_CASE("coradical filtration and connectedness") {
    CHECK(is_connected(group_dual(2, group_by_name("q8"))));
    CHECK_FALSE(is_connected(group_dual(3, cyclic_group(2))));
    CHECK_FALSE(is_connected(group_algebra(2, cyclic_group(2))));
    CHECK(coradical(group_algebra(2, cyclic_group(4))).dim() == 4);

    const StructuredAlgebra u = restricted_enveloping(abelian_lie_data(2, 2));
    const auto f = coradical_filtration(u);
    REQUIRE(f.size() == 3);
    CHECK(f[0].dim() == 1);
    CHECK(f[1].dim() == 3);
    CHECK(f[2].dim() == 4);

    const auto g = coradical_filtration(group_dual(2, cyclic_group(8)));
    CHECK(g.front().dim() == 1);
    CHECK(g.back().dim() == 8);
  }

  TEST_CASE("primitive elements") {
    // In kC2 over F_2, Delta(1 + g) = 1 (x) 1 + g (x) g, which is not
    // (1 + g) (x) 1 + 1 (x) (1 + g).
    CHECK(primitive_space(group_algebra(2, cyclic_group(2))).dim() == 0);
    CHECK(primitive_space(group_dual(2, cyclic_group(8))).dim() == 1);
    CHECK(primitive_space(group_dual(2, group_by_name("c2xc2xc2"))).dim() == 3);
  }

  TEST_CASE("primitively generated part and restricted structure") {
    const StructuredAlgebra h = group_dual(2, cyclic_group(8));
    const Subspace k = primitively_generated(h);
    CHECK(k.dim() == 2);
    const RestrictedStructure r = restricted_structure(h);
    CHECK(r.abelian);
    CHECK(r.pth_power_bijective);

    const StructuredAlgebra u = restricted_enveloping(abelian_lie_data(3, 2));
    CHECK(primitively_generated(u).dim() == 9);
    const RestrictedStructure ru = restricted_structure(u);
    CHECK(ru.abelian);
    CHECK_FALSE(ru.pth_power_bijective);
  }

  TEST_CASE("generated subalgebras") {
    const StructuredAlgebra a = group_algebra(2, cyclic_group(8));
    CHECK(generated_subalgebra(a, Subspace::span(2, 8, {unit_vector(8, 2)})).dim() == 4);
    CHECK(generated_hopf_subalgebra(a, Subspace::span(2, 8, {unit_vector(8, 4)})).dim() == 2);
  }
}
