// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/cohomology.hpp"
#include "hopf/constructors.hpp"
#include "hopf/errors.hpp"
#include "hopf/groups.hpp"
#include "hopf/invariants.hpp"
#include "hopf/io.hpp"
#include "hopf/masuoka.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Member {
  SuiteInstance instance;
  std::optional<MasuokaReport> report;
  std::string report_error;
};

struct Suites {
  std::vector<Member> members;
  std::vector<std::string> names;
  double seconds = 0;
};

Suites build_suites() {
  const auto start = std::chrono::steady_clock::now();
  Suites s;
  for (const auto& [p, order] : {std::pair<std::uint32_t, std::size_t>{2, 16}, {3, 27}}) {
    SuiteSpec spec;
    spec.p = p;
    spec.max_group_order = order;
    spec.lie_max_dim = 2;
    for (auto& inst : build_suite_instances(spec).instances) {
      Member m{std::move(inst), std::nullopt, {}};
      s.names.push_back(m.instance.name + "@F_" + std::to_string(p));
      if (m.instance.build_error.empty()) {
        try {
          m.report = masuoka_report(m.instance.algebra);
        } catch (const std::exception& e) {
          m.report_error = e.what();
        }
      }
      s.members.push_back(std::move(m));
    }
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

bool contains_name(const Suites& s, const std::string& name) {
  return std::find(s.names.begin(), s.names.end(), name) != s.names.end();
}

Outcome agreement_suite(const Suites& s) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : s.members) {
    if (!m.instance.build_error.empty()) {
      o.fail(m.instance.name + ": " + m.instance.build_error);
      continue;
    }
    if (!m.report) {
      o.fail(m.instance.name + ": " + m.report_error);
      continue;
    }
    if (!m.report->agreement) o.fail(m.instance.name + ": conditions disagree");
    ++checked;
  }
  for (const char* required : {"(kd4)*@F_2", "(kq8)*@F_2", "(kheis3)*@F_3", "(kc3)*@F_3", "(kc3xc3)*@F_3"})
    if (!contains_name(s, required)) o.fail(std::string("missing ") + required);
  if (s.seconds >= 60) o.fail("suite took " + std::to_string(s.seconds) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << checked << " instances agree, " << std::fixed << std::setprecision(1) << s.seconds << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    const MasuokaReport r = masuoka_report(restricted_enveloping(abelian_lie_data(p, 1)));
    const bool any = r.semisimple || r.eps_right_integral || r.eps_left_integral || r.k_semisimple ||
                     r.g_abelian_spans || r.eps_right_integral_k || r.eps_left_integral_k;
    if (any) o.fail("F_" + std::to_string(p) + "[x]/(x^p): some condition holds");
    if (!r.agreement) o.fail("F_" + std::to_string(p) + "[x]/(x^p): no agreement");
  }
  if (o.pass) o.detail = "F_2[x]/(x^2), F_3[x]/(x^3): all seven false, agreement true";
  return o;
}

Outcome cohomology_oracle() {
  Outcome o;
  const StructuredAlgebra h = restricted_enveloping(abelian_lie_data(2, 1));
  const oracle::H2Census census = oracle::h2_census(h);
  const CohomologyClasses c = h2(h);
  if (census.dim != 1) o.fail("enumeration gives dim " + std::to_string(census.dim));
  if (c.dim() != 1) o.fail("library gives dim " + std::to_string(c.dim()));
  const FpVector xx = tensor(unit_vector(2, 1), unit_vector(2, 1), 2);
  const FpMatrix d2 = differential(h, 2);
  std::size_t cocycles = 0;
  oracle::for_each_vector(2, 4, [&](const FpVector& t) {
    if (is_zero(d2 * t) != is_zero(oracle::d2(h, t))) o.fail("d^2 matrix disagrees with the formula");
    cocycles += is_zero(d2 * t);
  });
  if (cocycles != census.cocycles) o.fail("cocycle count mismatch");
  if (!is_zero(d2 * xx) || oracle::is_coboundary(h, xx)) o.fail("x(x)x is not a nontrivial class");
  if (c.dim() == 1 && !oracle::is_coboundary(h, subtract(c.representatives[0], xx, 2)))
    o.fail("representative not cohomologous to x(x)x");
  if (o.pass)
    o.detail = "dim H^2 = 1, class [" + render_tensor2(h, c.representatives[0]) + "], " +
               std::to_string(census.cocycles) + " cocycles / " + std::to_string(census.coboundaries) +
               " coboundaries among 16 tensors";
  return o;
}

Outcome maschke(const Suites& s) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& m : s.members) {
    if (!m.instance.build_error.empty()) continue;
    const StructuredAlgebra& h = m.instance.algebra;
    try {
      const IntegralSpaces i = integrals(h);
      const bool ss = is_semisimple(h);
      if (i.left.dim() != 1 || i.right.dim() != 1) o.fail(m.instance.name + ": integral space not a line");
      if (ss != i.eps_left_nonzero || ss != i.eps_right_nonzero) o.fail(m.instance.name + ": Maschke fails");
      ++n;
    } catch (const std::exception& e) {
      o.fail(m.instance.name + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " Hopf algebras";
  return o;
}

Outcome radical_oracle(const Suites& s) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& m : s.members) {
    const StructuredAlgebra& a = m.instance.algebra;
    if (!m.instance.build_error.empty() || a.p() != 2 || a.dim() > 12 || !is_commutative(a)) continue;
    const auto nil = oracle::nilpotent_elements(a);
    const Subspace j = jacobson_radical(a);
    if (Subspace::span(2, a.dim(), nil) != j || nil.size() != (std::size_t{1} << j.dim()))
      o.fail(m.instance.name + ": radical differs from nilpotent scan");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " commutative algebras over F_2";
  return o;
}

Outcome k_central(const Suites& s) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& m : s.members) {
    if (!m.report || !m.report->k_semisimple) continue;
    const StructuredAlgebra& h = m.instance.algebra;
    if (!center(h).contains(primitively_generated(h))) o.fail(m.instance.name + ": K not central");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " members with K semisimple";
  return o;
}

Outcome frobenius_fixed(const Suites& s) {
  Outcome o;
  std::size_t reps = 0, algebras = 0;
  for (const auto& m : s.members) {
    if (m.instance.family != "group-dual") continue;
    const StructuredAlgebra& h = m.instance.algebra;
    CohomologyClasses c = h2(h);
    const std::size_t before = c.dim();
    if (!make_frobenius_fixed(h, c)) {
      o.fail(m.instance.name + ": some class has no fixed representative");
      continue;
    }
    const Subspace span = Subspace::span(h.p(), h.dim() * h.dim(), c.representatives);
    if (c.dim() != before || sum(c.coboundaries, span).dim() != c.coboundaries.dim() + before)
      o.fail(m.instance.name + ": fixed representatives no longer a basis of H^2");
    for (const auto& u : c.representatives) {
      if (tensor_power(h, u, h.p()) != u) o.fail(m.instance.name + ": u^p != u");
      if (!is_zero(coboundary(h, u, 2))) o.fail(m.instance.name + ": representative not a cocycle");
      ++reps;
    }
    ++algebras;
  }
  if (o.pass) o.detail = std::to_string(reps) + " representatives over " + std::to_string(algebras) + " group duals";
  return o;
}

Outcome adjoin_pipeline() {
  Outcome o;
  const StructuredAlgebra base = group_dual(2, cyclic_group(2));
  CohomologyClasses c = h2(base);
  if (c.dim() == 0 || !make_frobenius_fixed(base, c)) {
    o.fail("no Frobenius-fixed cocycle on (kC2)*");
    return o;
  }
  CocycleExtensionSpec spec;
  spec.base = base;
  spec.u = normalize_cocycle(base, c.representatives[0]);
  spec.coefficients = {1};  // z^2 + z = 0
  spec.constant = zero_vector(2);
  if (is_zero(spec.u) || tensor_power(base, spec.u, 2) != spec.u) o.fail("cocycle is zero or not Frobenius-fixed");
  const StructuredAlgebra h = adjoin_cocycle_element(spec);
  if (h.dim() != 4) o.fail("dimension " + std::to_string(h.dim()));
  if (!is_connected(h)) o.fail("not connected");
  if (!is_semisimple(h)) o.fail("not semisimple");
  std::string match;
  if (find_hopf_isomorphism(h, group_dual(2, cyclic_group(4))))
    match = "(kC4)*";
  else if (find_hopf_isomorphism(h, group_dual(2, group_by_name("c2xc2"))))
    match = "(k(C2xC2))*";
  else
    o.fail("no isomorphism to (kC4)* or (k(C2xC2))*");
  if (o.pass) o.detail = "u = " + render_tensor2(base, spec.u) + ", dim 4, semisimple, isomorphic to " + match;
  return o;
}

Outcome chain_c8() {
  Outcome o;
  const StructuredAlgebra h = group_dual(2, cyclic_group(8));
  const ExtensionChain c = build_extension_chain(h);
  if (c.dims() != std::vector<std::size_t>{2, 4, 8}) o.fail("unexpected dims");
  if (c.layers.empty() || c.layers.front() != primitively_generated(h)) o.fail("F_0 != K");
  for (const auto& step : c.steps) {
    if (step.index != 2) o.fail("index " + std::to_string(step.index));
    if (!step.certificate.certified) o.fail("step not certified: " + step.certificate.reason);
  }
  if (o.pass) o.detail = "2 < 4 < 8, both steps of index 2 certified essential";
  return o;
}

Outcome structural(const Suites& s) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& m : s.members) {
    if (!m.report) continue;
    const StructuredAlgebra& h = m.instance.algebra;
    const MasuokaReport& r = *m.report;
    if (r.connected && !is_power_of(h.dim(), h.p())) o.fail(m.instance.name + ": dimension not a power of p");
    if (r.connected && r.semisimple && !r.commutative) o.fail(m.instance.name + ": semisimple but not commutative");
    if (!(differential(h, 2) * differential(h, 1)).is_zero()) o.fail(m.instance.name + ": d^2 d^1 != 0");
    if (r.commutative && !(h.antipode() * h.antipode() == FpMatrix::identity(h.p(), h.dim())))
      o.fail(m.instance.name + ": S^2 != Id");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " members";
  return o;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(HOPFCHECK_EXE) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism_and_formats() {
  Outcome o;
  const std::string fx = HOPF_FIXTURE_DIR;

  const std::string a = report_to_json(masuoka_report(group_dual(3, group_by_name("heis3"))));
  const std::string b = report_to_json(masuoka_report(group_dual(3, group_by_name("heis3"))));
  if (a != b) o.fail("report JSON differs between runs");
  SuiteSpec small;
  small.max_group_order = 8;
  if (suite_report_to_json(run_suite(small)) != suite_report_to_json(run_suite(small)))
    o.fail("suite JSON differs between runs");

  std::size_t fixtures = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fx)) {
    if (entry.path().extension() != ".alg") continue;
    StructuredAlgebra x;
    try {
      x = parse_algebra(read_text_file(entry.path()));
    } catch (const FormatError&) {
      continue;  // deliberately malformed fixture
    }
    const std::string once = format_algebra(x);
    const StructuredAlgebra y = parse_algebra(once);
    if (y.mult_table() != x.mult_table() || y.comult_table() != x.comult_table() || y.unit() != x.unit() ||
        y.counit() != x.counit() || y.antipode() != x.antipode() || y.labels() != x.labels() ||
        format_algebra(y) != once)
      o.fail("round trip changed " + entry.path().filename().string());
    ++fixtures;
  }

  const Run r1 = run_cli("masuoka " + fx + "/kc4_dual.alg --json");
  const Run r2 = run_cli("masuoka " + fx + "/kc4_dual.alg --json");
  if (r1.status != 0 || r1.out != r2.out || r1.out.find("\"agreement\": true") == std::string::npos)
    o.fail("CLI masuoka --json not reproducible");
  const std::pair<std::string, int> contract[] = {
      {"check " + fx + "/kc4_dual.alg", 0},
      {"check " + fx + "/corrupted.alg", 1},
      {"extend " + fx + "/trunc2.alg --cocycle 0 --relation 1,1,0", 1},
      {"check " + fx + "/bad_modulus.alg", 2},
      {"check " + fx + "/bad_index.alg", 2},
      {"check " + fx + "/no_such_file.alg", 2},
      {"cohomology " + fx + "/trunc2.alg --degree 9", 2},
  };
  for (const auto& [args, expected] : contract) {
    const Run r = run_cli(args);
    if (r.status != expected)
      o.fail("`hopfcheck " + args + "` exited " + std::to_string(r.status) + ", expected " + std::to_string(expected));
  }
  if (o.pass)
    o.detail = std::to_string(fixtures) + " fixtures round-trip, reports reproducible, " +
               std::to_string(std::size(contract)) + " exit codes honored";
  return o;
}

}  // namespace

int main() {
  const Suites suites = build_suites();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"theorem agreement suite", [&] { return agreement_suite(suites); }},
      {"negative controls", negative_controls},
      {"cohomology oracle", cohomology_oracle},
      {"Maschke cross-check", [&] { return maschke(suites); }},
      {"radical oracle", [&] { return radical_oracle(suites); }},
      {"K central when semisimple", [&] { return k_central(suites); }},
      {"Frobenius-fixed cocycles", [&] { return frobenius_fixed(suites); }},
      {"cocycle extension pipeline", adjoin_pipeline},
      {"chain builder", chain_c8},
      {"structural invariants", [&] { return structural(suites); }},
      {"determinism and formats", determinism_and_formats},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
