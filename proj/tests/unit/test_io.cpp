#include <filesystem>

#include "doctest.h"
#include "hopf/constructors.hpp"
#include "hopf/errors.hpp"
#include "hopf/groups.hpp"
#include "hopf/io.hpp"
#include "hopf/masuoka.hpp"

using namespace hopf;

namespace {

std::string format_error(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return {};
}

void check_same_tensors(const StructuredAlgebra& a, const StructuredAlgebra& b) {
  CHECK(a.p() == b.p());
  CHECK(a.kind() == b.kind());
  CHECK(a.labels() == b.labels());
  CHECK(a.mult_table() == b.mult_table());
  CHECK(a.unit() == b.unit());
  CHECK(a.has_coalgebra() == b.has_coalgebra());
  CHECK(a.comult_table() == b.comult_table());
  CHECK(a.counit() == b.counit());
  CHECK(a.has_antipode() == b.has_antipode());
  CHECK(a.antipode() == b.antipode());
}

const char* kMinimal = R"({"format": "hopf-algebra/1", "kind": "algebra", "p": 2, "dim": 2,
  "basis": ["1", "x"], "unit": [1, 0],
  "mult": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [1, 0, [[1, 1]]]]})";

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("every well-formed fixture round-trips") {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(HOPF_FIXTURE_DIR)) {
      if (entry.path().extension() != ".alg") continue;
      const std::string text = read_text_file(entry.path());
      StructuredAlgebra a;
      try {
        a = parse_algebra(text);
      } catch (const FormatError&) {
        continue;
      }
      CAPTURE(entry.path().string());
      ++seen;
      const std::string once = format_algebra(a);
      const StructuredAlgebra b = parse_algebra(once);
      check_same_tensors(a, b);
      CHECK(format_algebra(b) == once);
    }
    CHECK(seen >= 6);
  }

  TEST_CASE("generated algebras round-trip") {
    for (const auto& a : {group_dual(3, group_by_name("heis3")), group_algebra(2, group_by_name("q8")),
                          restricted_enveloping(abelian_lie_data(5, 2))}) {
      check_same_tensors(a, parse_algebra(format_algebra(a)));
    }
  }

  TEST_CASE("coefficients are reduced on load") {
    std::string text = kMinimal;
    text.replace(text.find("[[1, 1]]]]"), 8, "[[1, -1]]");
    const StructuredAlgebra a = parse_algebra(text);
    CHECK(a.product(1, 0) == FpVector{0, 1});
    CHECK(a.kind() == AlgebraKind::algebra);
    CHECK_FALSE(a.has_coalgebra());
  }

  TEST_CASE("diagnostics name the offending field") {
    std::string bad_p = kMinimal;
    bad_p.replace(bad_p.find("\"p\": 2"), 6, "\"p\": 4");
    CHECK(format_error(bad_p) == "p: modulus not prime");

    std::string bad_index = kMinimal;
    bad_index.replace(bad_index.find("[1, 0, [[1, 1]]]"), 16, "[1, 0, [[5, 1]]]");
    CHECK(format_error(bad_index).starts_with("mult[2] term 0: index 5 out of range"));

    std::string dup = kMinimal;
    dup.replace(dup.find("[1, 0, [[1, 1]]]"), 16, "[0, 1, [[1, 1]]]");
    CHECK(format_error(dup).starts_with("mult[2]: duplicate entry"));

    std::string wrong_format = kMinimal;
    wrong_format.replace(wrong_format.find("hopf-algebra/1"), 14, "hopf-algebra/9");
    CHECK(format_error(wrong_format).starts_with("format: expected"));

    std::string no_unit = kMinimal;
    no_unit.replace(no_unit.find("\"unit\": [1, 0],"), 15, "");
    CHECK(format_error(no_unit) == "unit: missing field");

    std::string bad_kind = kMinimal;
    bad_kind.replace(bad_kind.find("\"algebra\""), 9, "\"ring\"");
    CHECK(format_error(bad_kind).starts_with("kind: unknown kind"));

    std::string bad_json = kMinimal;
    bad_json.insert(bad_json.find("\"basis\""), "}");
    CHECK(format_error(bad_json) == "parse error at line 2, column 3");
  }

  TEST_CASE("Cayley and restricted Lie documents round-trip") {
    const GroupTable g = group_by_name("q8");
    const GroupTable back = parse_cayley(format_cayley(g));
    CHECK(back.table == g.table);
    CHECK(back.identity == g.identity);
    CHECK(back.labels == g.labels);

    RestrictedLieData d = abelian_lie_data(3, 2);
    d.brackets[1] = {0, 1};
    d.brackets[2] = {0, 2};
    d.pmap[0] = {1, 0};
    const RestrictedLieData e = parse_restricted_lie(format_restricted_lie(d));
    CHECK(e.brackets == d.brackets);
    CHECK(e.pmap == d.pmap);
    CHECK(e.labels == d.labels);
  }

  TEST_CASE("tensor documents and rendering") {
    const StructuredAlgebra u = restricted_enveloping(abelian_lie_data(3, 1));
    FpVector t(9, 0);
    t[4] = 1;
    t[5] = 2;
    CHECK(parse_tensor2(format_tensor2(t, 3), 3, 3) == t);
    CHECK_THROWS_AS(parse_tensor2(format_tensor2(t, 3), 3, 4), FormatError);
    CHECK(render_tensor2(u, t) == u.labels()[1] + "(x)" + u.labels()[1] + " + 2 " + u.labels()[1] + "(x)" +
                                      u.labels()[2]);
    CHECK(render_vector(u, zero_vector(3)) == "0");
  }

  TEST_CASE("report JSON is stable") {
    const MasuokaReport r = masuoka_report(group_dual(2, cyclic_group(4)));
    const std::string a = report_to_json(r);
    CHECK(a == report_to_json(masuoka_report(group_dual(2, cyclic_group(4)))));
    const char* keys[] = {"\"semisimple\"", "\"eps_right_integral\"", "\"eps_left_integral\"",
                          "\"K_semisimple\"", "\"g_abelian_spans\"", "\"eps_right_integral_K\"",
                          "\"eps_left_integral_K\"", "\"agreement\"", "\"commutative\"", "\"connected\"",
                          "\"diagnostics\""};
    std::size_t last = 0;
    for (const char* k : keys) {
      const std::size_t at = a.find(k);
      REQUIRE(at != std::string::npos);
      CHECK(at > last);
      last = at;
    }
  }
}
