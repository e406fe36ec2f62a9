#pragma once

// Cohomology of the cobar complex of a coalgebra with trivial coefficients:
//
//   d^n(x) = 1 (x) x + sum_{i=1}^{n} (-1)^i (Id^{i-1} (x) Delta (x) Id^{n-i})(x)
//            + (-1)^{n+1} x (x) 1,      x in H^{(x) n}.
//
// In particular d^1(y) = 1 (x) y - Delta(y) + y (x) 1.

#include <cstddef>
#include <span>
#include <vector>

#include "hopf/gf_linalg.hpp"
#include "hopf/structure.hpp"

namespace hopf {

/// Largest degree for which differential() builds a matrix.
inline constexpr int kMaxCochainDegree = 3;

/// Matrix of d^n : H^{(x) n} -> H^{(x) n+1}, 1 <= n <= 3. Throws
/// std::invalid_argument for other degrees or when the dense matrix would
/// exceed the memory budget.
FpMatrix differential(const StructuredAlgebra& h, int degree);

/// d^n(x) evaluated term by term without building the matrix.
FpVector coboundary(const StructuredAlgebra& h, std::span<const Residue> x, int degree);

struct CohomologyClasses {
  std::uint32_t p = 2;
  std::size_t base_dim = 0;
  FpMatrix d1;                        // n^2 x n
  Subspace cocycles;                  // Ker d^2
  Subspace coboundaries;              // Im d^1
  std::vector<FpVector> representatives;

  std::size_t dim() const { return representatives.size(); }
};

/// H^2 = Ker d^2 / Im d^1 with representatives completing a basis of the
/// coboundaries to a basis of the cocycles.
CohomologyClasses h2(const StructuredAlgebra& h);

/// dim H^n for n in {1, 2, 3}. H^1 = Ker d^1 (there is no d^0 contribution).
std::size_t cohomology_dimension(const StructuredAlgebra& h, int degree);

struct CocycleDecomposition {
  FpVector alphas;  // one per representative
  FpVector y;       // u = sum alpha_i u_i + d^1(y)
};

/// Throws MathError("not a cocycle") when d^2(u) != 0.
CocycleDecomposition decompose_cocycle(const CohomologyClasses& classes, std::span<const Residue> u);

struct AdjoinedElement {
  FpVector z;                  // in H
  FpVector u;                  // Delta(z) - z (x) 1 - 1 (x) z, in H (x) H
  FpVector u_in_l;             // the same tensor in L (x) L, L's echelon basis
  FpVector alphas;             // class of u_in_l in H^2 of L
  std::size_t filtration_degree = 0;
};

/// For a connected Hopf algebra H and a Hopf subalgebra L containing the
/// primitively generated part K, finds z in H \ L with
/// Delta(z) = z (x) 1 + 1 (x) z + sum alpha_i u_i, the alpha_i not all zero,
/// where the u_i are the H^2 representatives of L. z is taken from the
/// lowest coradical layer not contained in L and then corrected by a
/// coboundary. Throws MathError when L = H, when a precondition fails, or
/// ("contract violation: ...") when a computed object breaks an expected
/// identity.
AdjoinedElement find_z(const StructuredAlgebra& h, const Subspace& l);

/// u -> u^p in H (x) H.
FpVector tensor_power(const StructuredAlgebra& h, std::span<const Residue> u, std::uint64_t exponent);

/// True iff every representative satisfies u^p = u in H (x) H.
bool frobenius_fixed_check(const StructuredAlgebra& h, const CohomologyClasses& classes);

/// For commutative H: replaces each representative u by u + d^1(y) with
/// (u + d^1(y))^p = u + d^1(y) when such y exists (u -> u^p is then
/// F_p-linear). Returns false if some class has no fixed representative.
bool make_frobenius_fixed(const StructuredAlgebra& h, CohomologyClasses& classes);

/// Cohomologous representative with (eps (x) eps)(u) = 0, obtained by
/// subtracting a multiple of d^1(1) = 1 (x) 1.
FpVector normalize_cocycle(const StructuredAlgebra& h, FpVector u);

}  // namespace hopf
