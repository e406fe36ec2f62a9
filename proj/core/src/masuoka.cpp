#include "hopf/masuoka.hpp"

#include <stdexcept>

#include "hopf/cohomology.hpp"
#include "hopf/errors.hpp"
#include "hopf/invariants.hpp"

namespace hopf {

bool is_power_of(std::size_t n, std::uint32_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

MasuokaReport masuoka_report(const StructuredAlgebra& h) {
  if (h.kind() != AlgebraKind::hopf) throw MathError("masuoka report needs a Hopf algebra");
  require_valid(h);
  MasuokaReport r;
  r.p = h.p();
  r.dim = h.dim();

  r.radical_dim = jacobson_radical(h).dim();
  r.semisimple = r.radical_dim == 0;
  const IntegralSpaces ih = integrals(h);
  r.eps_right_integral = ih.eps_right_nonzero;
  r.eps_left_integral = ih.eps_left_nonzero;

  const Subspace k = primitively_generated(h);
  r.k_dim = k.dim();
  const StructuredAlgebra k_alg = restrict_to_subspace(h, k);
  r.k_semisimple = is_semisimple(k_alg);
  const IntegralSpaces ik = integrals(k_alg);
  r.eps_right_integral_k = ik.eps_right_nonzero;
  r.eps_left_integral_k = ik.eps_left_nonzero;

  const RestrictedStructure rs = restricted_structure(h);
  r.primitive_dim = rs.primitives.dim();
  r.g_abelian = rs.abelian;
  r.pth_power_bijective = rs.pth_power_bijective;
  r.g_abelian_spans = rs.abelian && rs.pth_powers_span;
  if (rs.abelian && rs.pth_power_bijective != rs.pth_powers_span)
    r.diagnostics.push_back("contract violation: p-th power map bijective but not spanning, or the reverse");

  r.commutative = is_commutative(h);
  r.connected = is_connected(h);
  r.dim_is_p_power = is_power_of(r.dim, r.p);

  const bool c[] = {r.semisimple,      r.eps_right_integral,   r.eps_left_integral,  r.k_semisimple,
                    r.g_abelian_spans, r.eps_right_integral_k, r.eps_left_integral_k};
  r.agreement = true;
  for (bool b : c) r.agreement = r.agreement && b == c[0];

  if (!r.connected) r.diagnostics.push_back("H is not connected: the conditions are only expected to agree for connected H");
  r.diagnostics.push_back(
      "isomorphism forms (K dual to an elementary abelian group algebra, H dual to a p-group algebra) are represented "
      "by the surrogates K_semisimple and g_abelian_spans");
  return r;
}

EssentialCertificate certify_essential_step(std::uint32_t p, const Subspace& l, const Subspace& m) {
  if (!m.contains(l)) throw MathError("L is not contained in M");
  EssentialCertificate out;
  if (l.dim() == m.dim()) {
    out.reason = "uncertified: L = M";
  } else if (m.dim() == l.dim() * p) {
    out.certified = true;
    out.reason = "index p";
  } else {
    out.reason = "uncertified: index " + std::to_string(m.dim()) + "/" + std::to_string(l.dim());
  }
  return out;
}

std::vector<std::size_t> ExtensionChain::dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers) out.push_back(l.dim());
  return out;
}

ExtensionChain build_extension_chain(const StructuredAlgebra& h) {
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  ExtensionChain chain;
  chain.layers.push_back(primitively_generated(h));
  while (chain.layers.back().dim() < n) {
    const Subspace& current = chain.layers.back();
    const AdjoinedElement found = find_z(h, current);
    std::vector<FpVector> gens = current.basis_vectors();
    gens.push_back(found.z);
    Subspace next = generated_hopf_subalgebra(h, Subspace::span(p, n, gens));
    if (next.dim() <= current.dim()) throw MathError("contract violation: adjoining z did not enlarge the subalgebra");
    ExtensionStep step;
    step.z = found.z;
    step.u = found.u;
    step.alphas = found.alphas;
    step.filtration_degree = found.filtration_degree;
    step.index = next.dim() % current.dim() == 0 ? next.dim() / current.dim() : 0;
    step.certificate = certify_essential_step(p, current, next);
    chain.steps.push_back(std::move(step));
    chain.layers.push_back(std::move(next));
  }
  return chain;
}

namespace {

bool is_hopf_map(const StructuredAlgebra& a, const StructuredAlgebra& b, const FpMatrix& phi, const ProductTable& tb) {
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  if (phi * a.unit() != b.unit()) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (dot(b.counit(), phi.column(j), p) != a.counit()[j]) return false;
  std::vector<FpVector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(phi.column(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (phi * a.product_view(i, j) != tb.multiply(images[i], images[j])) return false;
  const FpMatrix phi2 = kronecker(phi, phi);
  for (std::size_t j = 0; j < n; ++j)
    if (phi2 * a.coproduct_view(j) != comultiply(b, images[j])) return false;
  return true;
}

}  // namespace

std::optional<FpMatrix> find_hopf_isomorphism(const StructuredAlgebra& a, const StructuredAlgebra& b) {
  if (a.p() != b.p() || a.dim() != b.dim()) return std::nullopt;
  if (!a.has_coalgebra() || !b.has_coalgebra()) throw std::invalid_argument("isomorphism search needs bialgebras");
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  std::size_t space = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    space *= p;
    if (space > (std::size_t{1} << 20)) throw std::invalid_argument("isomorphism search space too large");
  }
  const ProductTable tb(b);
  FpMatrix phi(p, n, n);
  for (std::size_t code = 0; code < space; ++code) {
    std::size_t rest = code;
    for (std::size_t e = 0; e < n * n; ++e) {
      phi(e / n, e % n) = static_cast<Residue>(rest % p);
      rest /= p;
    }
    if (rank(phi) != n) continue;
    if (is_hopf_map(a, b, phi, tb)) return phi;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

void add_extension_seeds(const SuiteSpec& spec, std::vector<SuiteInstance>& out) {
  const std::uint32_t p = spec.p;
  const std::string ps = std::to_string(p);
  auto add = [&](std::string name, const StructuredAlgebra& base, FpVector u, Residue z_coeff, bool expected) {
    CocycleExtensionSpec e;
    e.base = base;
    e.u = std::move(u);
    e.exponent = 1;
    e.coefficients = {z_coeff};
    e.constant = zero_vector(base.dim());
    SuiteInstance inst{std::move(name), "extension", {}, expected, {}};
    try {
      inst.algebra = adjoin_cocycle_element(e);
    } catch (const MathError& err) {
      inst.build_error = err.what();
    }
    out.push_back(std::move(inst));
  };
  const Residue minus_one = static_cast<Residue>(p - 1);

  const StructuredAlgebra field = group_dual(p, cyclic_group(1));
  add("ext:k:z^" + ps + "=0", field, zero_vector(1), 0, false);
  add("ext:k:z^" + ps + "=z", field, zero_vector(1), minus_one, true);

  const StructuredAlgebra dual_cp = group_dual(p, cyclic_group(p));
  CohomologyClasses classes = h2(dual_cp);
  make_frobenius_fixed(dual_cp, classes);
  for (std::size_t i = 0; i < classes.dim(); ++i)
    add("ext:(kC" + ps + ")*:u" + std::to_string(i) + ":z^" + ps + "=z", dual_cp,
        normalize_cocycle(dual_cp, classes.representatives[i]), minus_one, true);

  const StructuredAlgebra truncated = restricted_enveloping(abelian_lie_data(p, 1));
  const CohomologyClasses tclasses = h2(truncated);
  for (std::size_t i = 0; i < tclasses.dim(); ++i)
    add("ext:k[x]/x^" + ps + ":u" + std::to_string(i) + ":z^" + ps + "=0", truncated,
        normalize_cocycle(truncated, tclasses.representatives[i]), 0, false);
}

std::string digits(std::span<const Residue> v) {
  std::string s;
  for (auto x : v) s += std::to_string(x);
  return s;
}

void add_restricted_envelopes(const SuiteSpec& spec, SuiteInstances& out) {
  const std::uint32_t p = spec.p;
  for (std::size_t d = 0; d <= spec.lie_max_dim; ++d) {
    const std::size_t pairs = d == 0 ? 0 : d * (d - 1) / 2;
    const std::size_t free_entries = pairs * d + d * d;
    std::size_t count = 1;
    for (std::size_t i = 0; i < free_entries; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      RestrictedLieData data = abelian_lie_data(p, d);
      std::size_t rest = code;
      auto next_digit = [&] {
        const auto v = static_cast<Residue>(rest % p);
        rest /= p;
        return v;
      };
      std::string br, pm;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          FpVector v(d);
          for (auto& x : v) x = next_digit();
          data.brackets[i * d + j] = v;
          data.brackets[j * d + i] = scale(v, neg_mod(1, p), p);
          br += digits(v);
        }
      for (std::size_t i = 0; i < d; ++i) {
        for (auto& x : data.pmap[i]) x = next_digit();
        pm += digits(data.pmap[i]);
      }
      std::string name = "u(g):d" + std::to_string(d);
      if (!br.empty()) name += ":br=" + br;
      if (!pm.empty()) name += ":pm=" + pm;
      StructuredAlgebra algebra;
      try {
        algebra = restricted_enveloping(data);
      } catch (const MathError&) {
        ++out.rejected_lie_candidates;
        continue;
      }
      out.instances.push_back({std::move(name), "restricted-envelope", std::move(algebra), std::nullopt, {}});
    }
  }
}

}  // namespace

SuiteInstances build_suite_instances(const SuiteSpec& spec) {
  require_prime(spec.p);
  SuiteInstances out;
  if (spec.group_duals)
    for (const auto& name : catalog_names(spec.p, spec.max_group_order))
      out.instances.push_back({"(k" + name + ")*", "group-dual", group_dual(spec.p, group_by_name(name)), std::nullopt, {}});
  if (spec.restricted_envelopes) add_restricted_envelopes(spec, out);
  if (spec.extensions) add_extension_seeds(spec, out.instances);
  return out;
}

SuiteEntry check_instance(const SuiteInstance& instance, const SuiteSpec& spec) {
  SuiteEntry entry;
  entry.name = instance.name;
  entry.family = instance.family;
  const StructuredAlgebra& h = instance.algebra;
  entry.dim = h.dim();
  auto fail = [&](std::string what) { entry.failures.push_back(std::move(what)); };
  if (!instance.build_error.empty()) {
    fail("construction failed: " + instance.build_error);
    return entry;
  }
  try {
    const auto violations = validate(h);
    if (!violations.empty()) {
      fail("validation failure: " + violations.front().axiom);
      return entry;
    }
    const MasuokaReport r = masuoka_report(h);
    entry.report = r;
    for (const auto& d : r.diagnostics)
      if (d.starts_with("contract violation")) fail(d);
    if (!r.agreement) fail("conditions disagree");
    if (r.semisimple != r.eps_left_integral || r.semisimple != r.eps_right_integral)
      fail("semisimplicity and integral tests disagree");
    if (r.connected && !r.dim_is_p_power) fail("connected but dimension is not a power of p");
    if (r.connected && r.semisimple && !r.commutative) fail("semisimple connected member is not commutative");
    if (r.k_semisimple && !center(h).contains(primitively_generated(h))) fail("K is semisimple but not central");
    if (instance.expected_semisimple && *instance.expected_semisimple != r.semisimple)
      fail("semisimplicity differs from the value predicted for this extension");

    const FpMatrix d1 = differential(h, 1);
    if (!(differential(h, 2) * d1).is_zero()) fail("d2 d1 != 0");
    if (r.commutative && !(h.antipode() * h.antipode() == FpMatrix::identity(h.p(), h.dim())))
      fail("commutative member with S^2 != Id");

    if (instance.family == "group-dual") {
      const CohomologyClasses classes = h2(h);
      entry.h2_dim = classes.dim();
      if (!frobenius_fixed_check(h, classes)) fail("H^2 representative with u^p != u");
      if (r.connected && h.dim() <= spec.chain_max_dim) {
        const ExtensionChain chain = build_extension_chain(h);
        entry.chain_dims = chain.dims();
        if (chain.layers.back().dim() != h.dim()) fail("chain does not end at H");
        for (const auto& step : chain.steps)
          if (step.index == h.p() && !step.certificate.certified) fail("index-p step not certified");
      }
    }
  } catch (const MathError& e) {
    fail(std::string("error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(std::string("error: ") + e.what());
  }
  entry.passed = entry.failures.empty();
  return entry;
}

SuiteReport run_suite(const SuiteSpec& spec) {
  SuiteReport report;
  report.spec = spec;
  SuiteInstances instances = build_suite_instances(spec);
  report.rejected_lie_candidates = instances.rejected_lie_candidates;
  report.passed = true;
  for (const auto& inst : instances.instances) {
    report.entries.push_back(check_instance(inst, spec));
    report.passed = report.passed && report.entries.back().passed;
  }
  return report;
}

}  // namespace hopf
