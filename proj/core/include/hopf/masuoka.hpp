#pragma once

// The semisimplicity criteria for connected Hopf algebras in characteristic
// p, evaluated side by side, plus the chain of Hopf subalgebras from the
// primitively generated part up to H and a batch driver over generated
// families.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopf/constructors.hpp"
#include "hopf/gf_linalg.hpp"
#include "hopf/groups.hpp"
#include "hopf/structure.hpp"

namespace hopf {

struct MasuokaReport {
  std::uint32_t p = 2;
  std::size_t dim = 0;

  bool semisimple = false;            // J(H) = 0
  bool eps_right_integral = false;    // eps of a right integral of H is nonzero
  bool eps_left_integral = false;     // eps of a left integral of H is nonzero
  bool k_semisimple = false;          // J(K) = 0
  bool g_abelian_spans = false;       // g abelian and g = k g^p
  bool eps_right_integral_k = false;  // same tests on K
  bool eps_left_integral_k = false;

  bool agreement = false;
  bool commutative = false;
  bool connected = false;
  bool dim_is_p_power = false;

  std::size_t radical_dim = 0;
  std::size_t k_dim = 0;
  std::size_t primitive_dim = 0;
  bool g_abelian = false;
  bool pth_power_bijective = false;
  std::vector<std::string> diagnostics;
};

/// Requires a validating Hopf algebra (MathError otherwise).
MasuokaReport masuoka_report(const StructuredAlgebra& h);

bool is_power_of(std::size_t n, std::uint32_t p);

struct EssentialCertificate {
  bool certified = false;
  std::string reason;
};

/// Sound but incomplete: an inclusion of Hopf subalgebras of index p has no
/// intermediate Hopf subalgebra (dimensions of Hopf subalgebras divide);
/// larger indices are reported uncertified. Throws MathError if L is not
/// contained in M.
EssentialCertificate certify_essential_step(std::uint32_t p, const Subspace& l, const Subspace& m);

struct ExtensionStep {
  FpVector z;
  FpVector u;       // Delta(z) - z (x) 1 - 1 (x) z
  FpVector alphas;  // class of u in H^2 of the previous layer
  std::size_t filtration_degree = 0;
  std::size_t index = 0;  // dim F_{i+1} / dim F_i
  EssentialCertificate certificate;
};

struct ExtensionChain {
  std::vector<Subspace> layers;  // F_0 = K, ..., F_n = H
  std::vector<ExtensionStep> steps;

  std::vector<std::size_t> dims() const;
};

ExtensionChain build_extension_chain(const StructuredAlgebra& h);

/// A Hopf algebra isomorphism A -> B (column j = image of e_j) found by
/// exhaustive search, or nullopt. Throws std::invalid_argument when the
/// search space p^{dim^2} exceeds 2^20.
std::optional<FpMatrix> find_hopf_isomorphism(const StructuredAlgebra& a, const StructuredAlgebra& b);

struct SuiteSpec {
  std::uint32_t p = 2;
  std::size_t max_group_order = 16;
  std::size_t lie_max_dim = 2;
  bool group_duals = true;
  bool restricted_envelopes = true;
  bool extensions = true;
  /// Chains are built for group duals up to this dimension.
  std::size_t chain_max_dim = 16;
};

struct SuiteInstance {
  std::string name;
  std::string family;  // group-dual, restricted-envelope, extension
  StructuredAlgebra algebra;
  /// Set for extensions whose relation has a nonzero z coefficient over a
  /// semisimple base (expected semisimple) or a nilpotent relation over a
  /// non-semisimple base (expected not semisimple).
  std::optional<bool> expected_semisimple;
  /// Nonempty when the constructor rejected the instance.
  std::string build_error;
};

struct SuiteInstances {
  std::vector<SuiteInstance> instances;
  std::size_t rejected_lie_candidates = 0;
};

SuiteInstances build_suite_instances(const SuiteSpec& spec);

struct SuiteEntry {
  std::string name;
  std::string family;
  std::size_t dim = 0;
  bool passed = false;
  std::optional<MasuokaReport> report;
  std::optional<std::vector<std::size_t>> chain_dims;
  std::optional<std::size_t> h2_dim;
  std::vector<std::string> failures;
};

struct SuiteReport {
  SuiteSpec spec;
  std::vector<SuiteEntry> entries;
  std::size_t rejected_lie_candidates = 0;
  bool passed = false;
};

/// Runs the report and the cross-checks on one instance. Never throws for
/// mathematical failures; they are recorded in the entry.
SuiteEntry check_instance(const SuiteInstance& instance, const SuiteSpec& spec);

SuiteReport run_suite(const SuiteSpec& spec);

}  // namespace hopf
