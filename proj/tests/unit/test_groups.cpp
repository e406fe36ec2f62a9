#include <algorithm>

#include "doctest.h"
#include "hopf/errors.hpp"
#include "hopf/groups.hpp"

using namespace hopf;

namespace {

std::size_t element_order(const GroupTable& g, std::size_t a) {
  std::size_t k = 1, x = a;
  while (x != g.identity) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

std::size_t count_of_order(const GroupTable& g, std::size_t k) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < g.order; ++a) n += element_order(g, a) == k;
  return n;
}

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("every catalog name yields a valid p-group of the advertised order") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (const auto& name : catalog_names(p, p == 2 ? 32 : p == 3 ? 81 : 125)) {
        CAPTURE(name);
        const GroupTable g = group_by_name(name);
        CHECK_NOTHROW(validate_group(g));
        CHECK(is_p_group(g, p));
      }
    }
  }

  TEST_CASE("D4 and Q8 are told apart by their involutions") {
    const GroupTable d4 = group_by_name("d4"), q8 = group_by_name("q8");
    CHECK(d4.order == 8);
    CHECK(q8.order == 8);
    CHECK(count_of_order(d4, 2) == 5);
    CHECK(count_of_order(q8, 2) == 1);
    CHECK_FALSE(is_abelian(d4));
    CHECK_FALSE(is_abelian(q8));
  }

  TEST_CASE("Heisenberg group of order 27 has exponent 3") {
    const GroupTable h = group_by_name("heis3");
    CHECK(h.order == 27);
    CHECK(count_of_order(h, 3) == 26);
    CHECK_FALSE(is_abelian(h));
  }

  TEST_CASE("groups of order 16 in the catalog are pairwise distinguished by order statistics or abelianness") {
    std::vector<std::vector<std::size_t>> signatures;
    for (const auto& name : catalog_names(2, 16)) {
      const GroupTable g = group_by_name(name);
      if (g.order != 16) continue;
      std::vector<std::size_t> sig{is_abelian(g) ? 1u : 0u};
      for (std::size_t k : {1, 2, 4, 8, 16}) sig.push_back(count_of_order(g, k));
      signatures.push_back(sig);
    }
    CHECK(signatures.size() == 14);
    // Order statistics cannot separate every pair of groups of order 16;
    // the count only guards against accidental duplicates of simple cases.
    std::sort(signatures.begin(), signatures.end());
    CHECK(std::unique(signatures.begin(), signatures.end()) - signatures.begin() >= 10);
  }

  TEST_CASE("invalid tables are rejected") {
    GroupTable g = cyclic_group(3);
    g.table[4] = 0;
    CHECK_THROWS_AS(validate_group(g), MathError);
    CHECK_THROWS_AS(group_by_name("nonsense"), std::invalid_argument);
  }
}
