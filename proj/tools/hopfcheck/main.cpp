// hopfcheck: command line front end to the hopf core library.
//
// Exit codes: 0 success, 1 mathematical failure (axiom violation, failed
// precondition, agreement failure), 2 unreadable input or malformed flags.

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopf/cohomology.hpp"
#include "hopf/constructors.hpp"
#include "hopf/errors.hpp"
#include "hopf/groups.hpp"
#include "hopf/invariants.hpp"
#include "hopf/io.hpp"
#include "hopf/masuoka.hpp"

namespace {

using namespace hopf;

constexpr int kExitMath = 1;
constexpr int kExitFormat = 2;

StructuredAlgebra load(const std::string& path) { return parse_algebra(read_text_file(path)); }

StructuredAlgebra load_valid(const std::string& path) {
  StructuredAlgebra a = load(path);
  require_valid(a);
  return a;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

std::uint32_t checked_modulus(long long p) {
  if (p < 2 || p > static_cast<long long>(kMaxModulus) || !is_prime(static_cast<std::uint32_t>(p)))
    throw FormatError("--p: modulus not prime or larger than " + std::to_string(kMaxModulus));
  return static_cast<std::uint32_t>(p);
}

void print_basis(const StructuredAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) std::cout << "  " << render_vector(a, s.basis().row(i)) << "\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int cmd_check(const std::string& file) {
  const StructuredAlgebra a = load(file);
  const auto violations = validate(a);
  if (violations.empty()) {
    std::cout << "ok: " << to_string(a.kind()) << " of dimension " << a.dim() << " over F_" << a.p() << "\n";
    return 0;
  }
  for (const auto& v : violations) {
    std::cerr << "violation: " << v.axiom << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) std::cerr << (i ? ", " : "") << a.labels()[v.witness[i]];
    std::cerr << ")";
    if (!v.detail.empty()) std::cerr << ": " << v.detail;
    std::cerr << "\n";
  }
  return kExitMath;
}

int cmd_radical(const std::string& file) {
  const StructuredAlgebra a = load_valid(file);
  const Subspace j = jacobson_radical(a);
  std::cout << "dim J = " << j.dim() << "\n";
  print_basis(a, j);
  if (const auto n = nilpotency_index(a, j)) std::cout << "nilpotency index " << *n << "\n";
  std::cout << (j.dim() == 0 ? "semisimple\n" : "not semisimple\n");
  return 0;
}

int cmd_integrals(const std::string& file) {
  const StructuredAlgebra h = load_valid(file);
  const IntegralSpaces s = integrals(h);
  std::cout << "left integral:  " << render_vector(h, s.left_generator)
            << "  eps = " << (s.eps_left_nonzero ? "nonzero" : "0") << "\n";
  std::cout << "right integral: " << render_vector(h, s.right_generator)
            << "  eps = " << (s.eps_right_nonzero ? "nonzero" : "0") << "\n";
  return 0;
}

int cmd_center(const std::string& file) {
  const StructuredAlgebra a = load_valid(file);
  const Subspace z = center(a);
  std::cout << "dim Z = " << z.dim() << "\n";
  print_basis(a, z);
  return 0;
}

int cmd_coradical(const std::string& file) {
  const StructuredAlgebra h = load_valid(file);
  const auto filtration = coradical_filtration(h);
  std::cout << "H_0 (dim " << filtration.front().dim() << "):\n";
  print_basis(h, filtration.front());
  std::cout << "filtration dims:";
  for (const auto& layer : filtration) std::cout << " " << layer.dim();
  std::cout << "\nconnected: " << yes_no(filtration.front().dim() == 1) << "\n";
  return 0;
}

int cmd_primitives(const std::string& file) {
  const StructuredAlgebra h = load_valid(file);
  const RestrictedStructure r = restricted_structure(h);
  std::cout << "dim P(H) = " << r.primitives.dim() << "\n";
  print_basis(h, r.primitives);
  std::cout << "abelian: " << yes_no(r.abelian) << "\n";
  if (r.pth_power) {
    const std::uint32_t p = h.p();
    for (std::size_t i = 0; i < r.primitives.dim(); ++i) {
      const FpVector x = r.primitives.basis_vector(i);
      std::cout << "  (" << render_vector(h, x) << ")^" << p << " = " << render_vector(h, power(h, x, p)) << "\n";
    }
    std::cout << "p-th power map bijective: " << yes_no(r.pth_power_bijective) << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string& file, int degree) {
  const StructuredAlgebra h = load_valid(file);
  if (degree != 2) {
    std::cout << "dim H^" << degree << " = " << cohomology_dimension(h, degree) << "\n";
    return 0;
  }
  const CohomologyClasses classes = h2(h);
  std::cout << "dim H^2 = " << classes.dim() << "\n";
  for (std::size_t i = 0; i < classes.dim(); ++i)
    std::cout << "  u" << i << " = " << render_tensor2(h, classes.representatives[i]) << "\n";
  return 0;
}

int cmd_masuoka(const std::string& file, bool json) {
  const StructuredAlgebra h = load_valid(file);
  const MasuokaReport r = masuoka_report(h);
  if (json) {
    std::cout << report_to_json(r);
  } else {
    std::cout << "dim " << r.dim << " over F_" << r.p << ", commutative " << yes_no(r.commutative) << ", connected "
              << yes_no(r.connected) << "\n";
    const std::pair<const char*, bool> rows[] = {
        {"semisimple", r.semisimple},
        {"eps_right_integral", r.eps_right_integral},
        {"eps_left_integral", r.eps_left_integral},
        {"K_semisimple", r.k_semisimple},
        {"g_abelian_spans", r.g_abelian_spans},
        {"eps_right_integral_K", r.eps_right_integral_k},
        {"eps_left_integral_K", r.eps_left_integral_k},
    };
    for (const auto& [name, value] : rows) std::cout << "  " << std::left << std::setw(22) << name << yes_no(value) << "\n";
    std::cout << "dim J(H) = " << r.radical_dim << ", dim K = " << r.k_dim << ", dim P(H) = " << r.primitive_dim
              << "\n";
    std::cout << "agreement: " << yes_no(r.agreement) << "\n";
    for (const auto& d : r.diagnostics) std::cout << "note: " << d << "\n";
  }
  return r.agreement ? 0 : kExitMath;
}

int cmd_chain(const std::string& file, bool json) {
  const StructuredAlgebra h = load_valid(file);
  const ExtensionChain chain = build_extension_chain(h);
  if (json) {
    std::cout << chain_to_json(h, chain);
    return 0;
  }
  std::cout << "dims:";
  for (auto d : chain.dims()) std::cout << " " << d;
  std::cout << "\n";
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ExtensionStep& s = chain.steps[i];
    std::cout << "step " << i + 1 << ": index " << s.index << ", layer H_" << s.filtration_degree << ", "
              << (s.certificate.certified ? "essential" : "not certified") << " (" << s.certificate.reason << ")\n";
    std::cout << "  z = " << render_vector(h, s.z) << "\n";
    std::cout << "  Delta(z) - z(x)1 - 1(x)z = " << render_tensor2(h, s.u) << "\n";
  }
  return 0;
}

GroupTable resolve_group(const std::string& name, const std::string& cayley) {
  if (name.empty() == cayley.empty()) throw FormatError("exactly one of --group and --cayley is required");
  GroupTable g = cayley.empty() ? group_by_name(name) : parse_cayley(read_text_file(cayley));
  validate_group(g);
  return g;
}

/// "l,c_0,...,c_{l-1},a"
struct Relation {
  std::size_t exponent = 0;
  std::vector<long long> coefficients;
  long long constant = 0;
};

Relation parse_relation(const std::string& text) {
  std::vector<long long> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FormatError("--relation: \"" + item + "\" is not an integer");
    }
  }
  if (values.empty() || values[0] < 1)
    throw FormatError("--relation: expected l >= 1 followed by l coefficients and a constant");
  const auto l = static_cast<std::size_t>(values[0]);
  if (values.size() != l + 2)
    throw FormatError("--relation: expected " + std::to_string(l + 2) + " comma separated integers, found " +
                      std::to_string(values.size()));
  Relation r;
  r.exponent = l;
  r.coefficients.assign(values.begin() + 1, values.end() - 1);
  r.constant = values.back();
  return r;
}

int cmd_extend(const std::string& file, std::optional<std::size_t> index, const std::string& cocycle_file,
               const std::string& relation_text, const std::string& out) {
  if (index.has_value() == !cocycle_file.empty())
    throw FormatError("exactly one of --cocycle and --cocycle-file is required");
  const Relation rel = parse_relation(relation_text);
  const StructuredAlgebra base = load_valid(file);
  const std::uint32_t p = base.p();

  CocycleExtensionSpec spec;
  spec.base = base;
  if (index) {
    CohomologyClasses classes = h2(base);
    if (*index >= classes.dim())
      throw std::invalid_argument("--cocycle " + std::to_string(*index) + ": H^2 has dimension " +
                                  std::to_string(classes.dim()));
    if (is_commutative(base)) make_frobenius_fixed(base, classes);
    spec.u = normalize_cocycle(base, classes.representatives[*index]);
  } else {
    spec.u = parse_tensor2(read_text_file(cocycle_file), p, base.dim());
  }
  spec.exponent = rel.exponent;
  for (auto c : rel.coefficients) spec.coefficients.push_back(reduce_mod(c, p));
  spec.constant = scale(base.unit(), reduce_mod(rel.constant, p), p);

  const StructuredAlgebra h = adjoin_cocycle_element(spec);
  emit(out, format_algebra(h));
  if (!out.empty() && out != "-")
    std::cerr << "wrote " << out << " (dim " << h.dim() << ", u = " << render_tensor2(base, spec.u) << ")\n";
  return 0;
}

int cmd_suite(const SuiteSpec& spec, bool json) {
  const SuiteReport report = run_suite(spec);
  if (json) {
    std::cout << suite_report_to_json(report);
  } else {
    std::size_t failed = 0;
    for (const auto& e : report.entries) {
      std::cout << (e.passed ? "PASS " : "FAIL ") << e.name << " (" << e.family << ", dim " << e.dim << ")";
      if (e.h2_dim) std::cout << " H^2 " << *e.h2_dim;
      if (e.chain_dims) {
        std::cout << " chain";
        for (auto d : *e.chain_dims) std::cout << " " << d;
      }
      std::cout << "\n";
      for (const auto& f : e.failures) std::cout << "    " << f << "\n";
      if (!e.passed) ++failed;
    }
    std::cout << report.entries.size() << " instances, " << failed << " failed, " << report.rejected_lie_candidates
              << " restricted Lie candidates rejected\n";
  }
  return report.passed ? 0 : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras over F_p"};
  app.require_subcommand(1);

  std::string file, out, group, cayley, lie, cocycle_file, relation;
  int degree = 2;
  bool json = false;
  long long p = 2;
  std::size_t cocycle_index = 0;
  SuiteSpec suite_spec;
  long long suite_p = 2;

  auto simple = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "algebra specification")->required();
    return sub;
  };
  CLI::App* check = simple("check", "validate the axioms implied by the declared kind");
  CLI::App* radical = simple("radical", "Jacobson radical");
  CLI::App* integ = simple("integrals", "left and right integrals");
  CLI::App* cent = simple("center", "center of the algebra");
  CLI::App* corad = simple("coradical", "coradical and coradical filtration");
  CLI::App* prims = simple("primitives", "primitive elements and their p-th powers");
  CLI::App* cohom = simple("cohomology", "Hochschild cohomology with trivial coefficients");
  cohom->add_option("--degree", degree, "degree 1, 2 or 3")->required()->check(CLI::Range(1, kMaxCochainDegree));
  CLI::App* mas = simple("masuoka", "semisimplicity criteria side by side");
  mas->add_flag("--json", json, "machine-readable report");
  CLI::App* chain = simple("chain", "chain of Hopf subalgebras from K to H");
  chain->add_flag("--json", json, "machine-readable output");

  CLI::App* build = app.add_subcommand("build", "construct an algebra specification");
  build->require_subcommand(1);
  CLI::App* bdual = build->add_subcommand("group-dual", "(kG)^*");
  CLI::App* balg = build->add_subcommand("group-algebra", "kG");
  for (CLI::App* b : {bdual, balg}) {
    b->add_option("--group", group, "catalog group name");
    b->add_option("--cayley", cayley, "Cayley table file");
    b->add_option("--p", p, "characteristic")->required();
    b->add_option("-o,--output", out, "output file (default stdout)");
  }
  CLI::App* benv = build->add_subcommand("restricted-env", "restricted enveloping algebra u(g)");
  benv->add_option("--lie", lie, "restricted Lie algebra file")->required();
  benv->add_option("-o,--output", out, "output file (default stdout)");

  CLI::App* ext = simple("extend", "adjoin z with Delta(z) = z(x)1 + 1(x)z + u and a p-polynomial relation");
  auto* idx_opt = ext->add_option("--cocycle", cocycle_index, "index of an H^2 representative of the base");
  ext->add_option("--cocycle-file", cocycle_file, "tensor file holding u");
  ext->add_option("--relation", relation, "l,c_0,...,c_{l-1},a for z^{p^l} + ... + c_0 z^{p^0} + a = 0")->required();
  ext->add_option("-o,--output", out, "output file (default stdout)");

  CLI::App* suite = app.add_subcommand("suite", "run the agreement suite over generated families");
  suite->add_option("--max-group-order", suite_spec.max_group_order, "largest group order for group duals");
  suite->add_option("--p", suite_p, "characteristic");
  suite->add_option("--lie-max-dim", suite_spec.lie_max_dim, "largest restricted Lie algebra dimension");
  suite->add_option("--chain-max-dim", suite_spec.chain_max_dim, "largest group dual for which chains are built");
  suite->add_flag("--json", json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFormat;
  }

  try {
    if (*check) return cmd_check(file);
    if (*radical) return cmd_radical(file);
    if (*integ) return cmd_integrals(file);
    if (*cent) return cmd_center(file);
    if (*corad) return cmd_coradical(file);
    if (*prims) return cmd_primitives(file);
    if (*cohom) return cmd_cohomology(file, degree);
    if (*mas) return cmd_masuoka(file, json);
    if (*chain) return cmd_chain(file, json);
    if (*bdual || *balg) {
      const std::uint32_t q = checked_modulus(p);
      const GroupTable g = resolve_group(group, cayley);
      emit(out, format_algebra(*bdual ? group_dual(q, g) : group_algebra(q, g)));
      return 0;
    }
    if (*benv) {
      const RestrictedLieData data = parse_restricted_lie(read_text_file(lie));
      emit(out, format_algebra(restricted_enveloping(data)));
      return 0;
    }
    if (*ext) {
      std::optional<std::size_t> index;
      if (idx_opt->count() > 0) index = cocycle_index;
      return cmd_extend(file, index, cocycle_file, relation, out);
    }
    if (*suite) {
      suite_spec.p = checked_modulus(suite_p);
      return cmd_suite(suite_spec, json);
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitFormat;
}
