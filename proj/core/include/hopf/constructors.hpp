#pragma once

// Concrete Hopf algebras: group algebras and their duals, restricted
// enveloping algebras, crossed products, extensions by an adjoined element
// with prescribed comultiplication defect, and quotients by Hopf ideals.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hopf/gf_linalg.hpp"
#include "hopf/groups.hpp"
#include "hopf/structure.hpp"

namespace hopf {

/// kG: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
StructuredAlgebra group_algebra(std::uint32_t p, const GroupTable& g);

/// (kG)^*: basis of point functions f_x with f_x f_y = delta_{x,y} f_x,
/// Delta(f_x) = sum_{uv = x} f_u (x) f_v, eps(f_x) = delta_{x,e},
/// S(f_x) = f_{x^-1}.
StructuredAlgebra group_dual(std::uint32_t p, const GroupTable& g);

struct RestrictedLieData {
  std::uint32_t p = 2;
  std::vector<std::string> labels;  // one per generator
  /// brackets[i * d + j] = [x_i, x_j] as a coefficient vector of length d.
  std::vector<FpVector> brackets;
  /// pmap[i] = x_i^[p].
  std::vector<FpVector> pmap;

  std::size_t dim() const { return labels.size(); }
  const FpVector& bracket(std::size_t i, std::size_t j) const { return brackets[i * dim() + j]; }
};

/// Abelian data with zero brackets and zero p-map on d generators.
RestrictedLieData abelian_lie_data(std::uint32_t p, std::size_t d);

/// Throws MathError("not a Lie algebra: ...") on antisymmetry or Jacobi
/// failure, std::invalid_argument on shape errors.
void validate_lie(const RestrictedLieData& data);

/// u(g) on the PBW monomials x_0^{e_0} ... x_{d-1}^{e_{d-1}}, 0 <= e_i < p;
/// monomial index sum e_i p^i. Generators are primitive. Throws
/// MathError("not a restricted structure: ...") when the straightened
/// product fails an axiom.
StructuredAlgebra restricted_enveloping(const RestrictedLieData& data);

/// action[h * dim A + a] = e_h . a_a in A; sigma[h * dim H + k] = sigma(e_h, e_k) in A.
struct CrossedProductData {
  std::vector<FpVector> action;
  std::vector<FpVector> sigma;
};

/// h . a = eps(h) a and sigma(h, k) = eps(h) eps(k) 1.
CrossedProductData trivial_crossed_data(const StructuredAlgebra& a, const StructuredAlgebra& h);

/// A #_sigma H on A (x) H (coordinate of a_r # h_s is r * dim H + s) with
/// (a # h)(b # k) = sum a (h_1 . b) sigma(h_2, k_1) # h_3 k_2.
/// Throws MathError naming a measuring violation, a non-invertible sigma,
/// or a failed associativity/unit witness.
StructuredAlgebra crossed_product(const StructuredAlgebra& a, const StructuredAlgebra& h, const CrossedProductData& data);

/// z^{p^l} + c_{l-1} z^{p^{l-1}} + ... + c_1 z^p + c_0 z + a = 0, adjoined to a
/// commutative Hopf algebra L with Delta(z) = z (x) 1 + 1 (x) z + u.
struct CocycleExtensionSpec {
  StructuredAlgebra base;
  FpVector u;                 // in L (x) L
  std::size_t exponent = 1;   // l
  FpVector coefficients;      // c_0 .. c_{l-1}; c_i multiplies z^{p^i}
  FpVector constant;          // a, in L
};

/// L[z] / (relation) as a free L-module on 1, z, ..., z^{p^l - 1}; the
/// coordinate of b_r z^s is s * dim L + r, so L sits in the first dim L
/// coordinates. Throws MathError with "L not commutative", "u not a
/// cocycle", "comultiplication incompatible with relation", or a failed
/// axiom.
StructuredAlgebra adjoin_cocycle_element(const CocycleExtensionSpec& spec);

/// L^+ H = span of (L cap ker eps) * H.
Subspace augmentation_left_ideal(const StructuredAlgebra& h, const Subspace& l);

/// H / I after checking that I is a two-sided ideal and coideal with
/// eps(I) = 0 and S(I) in I; otherwise MathError("not a Hopf ideal: ...").
StructuredAlgebra quotient_by_hopf_ideal(const StructuredAlgebra& h, const Subspace& ideal);

}  // namespace hopf
