#pragma once

// Ring- and coalgebra-theoretic invariants of finite-dimensional structures.

#include <cstddef>
#include <optional>
#include <vector>

#include "hopf/gf_linalg.hpp"
#include "hopf/structure.hpp"

namespace hopf {

/// Jacobson radical of a finite-dimensional associative algebra, computed
/// from the trace forms of the left regular representation lifted to
/// Z / p^(i+1) Z. The result is checked to be a nilpotent two-sided ideal
/// with semisimple quotient; a failed check throws MathError.
Subspace jacobson_radical(const StructuredAlgebra& a);
/// Same computation without the verification pass.
Subspace jacobson_radical_unverified(const StructuredAlgebra& a);

bool is_semisimple(const StructuredAlgebra& a);

/// Nilpotency index of the ideal I (smallest k with I^k = 0), or nullopt when
/// I is not nilpotent.
std::optional<std::size_t> nilpotency_index(const StructuredAlgebra& a, const Subspace& ideal);
bool is_two_sided_ideal(const StructuredAlgebra& a, const Subspace& s);

struct IntegralSpaces {
  Subspace left;   // h t = eps(h) t
  Subspace right;  // t h = eps(h) t
  FpVector left_generator;
  FpVector right_generator;
  bool eps_left_nonzero = false;
  bool eps_right_nonzero = false;
};

/// Throws MathError("integral space not one-dimensional") when a space has
/// dimension other than 1.
IntegralSpaces integrals(const StructuredAlgebra& h);

Subspace center(const StructuredAlgebra& a);

/// H_0: the sum of the simple subcoalgebras, i.e. J(H*)^perp.
Subspace coradical(const StructuredAlgebra& h);

/// H_0 in H_1 in ... in H_m = H with
/// H_n = Delta^{-1}(H (x) H_{n-1} + H_0 (x) H).
std::vector<Subspace> coradical_filtration(const StructuredAlgebra& h);

bool is_connected(const StructuredAlgebra& h);

/// {x : Delta(x) = x (x) 1 + 1 (x) x}
Subspace primitive_space(const StructuredAlgebra& h);

/// Subalgebra generated by 1 and S.
Subspace generated_subalgebra(const StructuredAlgebra& a, const Subspace& s);
/// Subalgebra generated by S, required to be stable under Delta and S.
/// Throws MathError otherwise.
Subspace generated_hopf_subalgebra(const StructuredAlgebra& h, const Subspace& s);

/// Hopf subalgebra generated by the primitive elements.
Subspace primitively_generated(const StructuredAlgebra& h);

struct RestrictedStructure {
  Subspace primitives;
  bool abelian = false;
  /// Matrix of x -> x^p on the primitive space in its echelon basis;
  /// present only when the primitive space is abelian (then the map is
  /// additive).
  std::optional<FpMatrix> pth_power;
  bool pth_power_bijective = false;
  /// The p-th powers of the primitives span the primitive space.
  bool pth_powers_span = false;
};

RestrictedStructure restricted_structure(const StructuredAlgebra& h);

}  // namespace hopf
