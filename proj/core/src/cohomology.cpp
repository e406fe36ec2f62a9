#include "hopf/cohomology.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "hopf/errors.hpp"
#include "hopf/invariants.hpp"

namespace hopf {

namespace {

constexpr std::size_t kMaxDifferentialBytes = std::size_t{1} << 27;

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_degree(int degree) {
  if (degree < 1 || degree > kMaxCochainDegree)
    throw std::invalid_argument("unsupported cochain degree " + std::to_string(degree));
}

void require_coalgebra(const StructuredAlgebra& h) {
  if (!h.has_coalgebra()) throw std::invalid_argument("structure has no comultiplication");
}

const FpVector& insertion_unit(const StructuredAlgebra& h) {
  if (!has_algebra_part(h.kind())) throw std::invalid_argument("cobar differential needs the unit of H");
  return h.unit();
}

}  // namespace

FpMatrix differential(const StructuredAlgebra& h, int degree) {
  require_degree(degree);
  require_coalgebra(h);
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  const std::size_t cols = ipow(n, degree);
  const std::size_t rows = cols * n;
  if (rows != 0 && rows > kMaxDifferentialBytes / cols)
    throw std::invalid_argument("differential of degree " + std::to_string(degree) + " too large for dimension " +
                                std::to_string(n));
  const FpVector& unit = insertion_unit(h);

  FpMatrix d(p, rows, cols);
  auto bump = [&](std::size_t r, std::size_t c, Residue v, bool negative) {
    Residue& cell = d(r, c);
    cell = negative ? sub_mod(cell, v, p) : add_mod(cell, v, p);
  };
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t a = 0; a < n; ++a)
      if (unit[a] != 0) bump(a * cols + c, c, unit[a], false);
    for (int i = 1; i <= degree; ++i) {
      const std::size_t suffix_size = ipow(n, degree - i);
      const std::size_t pre = c / (suffix_size * n);
      const std::size_t mid = (c / suffix_size) % n;
      const std::size_t suf = c % suffix_size;
      const auto delta = h.coproduct_view(mid);
      for (std::size_t jl = 0; jl < n * n; ++jl) {
        if (delta[jl] == 0) continue;
        bump((pre * n * n + jl) * suffix_size + suf, c, delta[jl], i % 2 == 1);
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      if (unit[a] != 0) bump(c * n + a, c, unit[a], degree % 2 == 0);
  }
  return d;
}

FpVector coboundary(const StructuredAlgebra& h, std::span<const Residue> x, int degree) {
  require_degree(degree);
  require_coalgebra(h);
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  const std::size_t cols = ipow(n, degree);
  if (x.size() != cols) throw std::invalid_argument("cochain has the wrong length");
  const FpVector& unit = insertion_unit(h);

  FpVector out(cols * n, 0);
  std::vector<std::size_t> index(static_cast<std::size_t>(degree));
  for (std::size_t c = 0; c < cols; ++c) {
    if (x[c] == 0) continue;
    std::size_t rest = c;
    for (int k = degree - 1; k >= 0; --k) {
      index[static_cast<std::size_t>(k)] = rest % n;
      rest /= n;
    }
    // Term with position `slot` replaced by `middle` (a vector of length n or n^2).
    auto pure = [&](int slot, std::span<const Residue> middle) {
      FpVector acc{1};
      for (int k = 0; k < degree; ++k) {
        const FpVector e = unit_vector(n, index[static_cast<std::size_t>(k)]);
        acc = tensor(acc, k == slot ? middle : std::span<const Residue>(e), p);
      }
      return acc;
    };
    axpy(out, x[c], tensor(unit, pure(-1, {}), p), p);
    for (int i = 1; i <= degree; ++i) {
      const FpVector delta = comultiply(h, unit_vector(n, index[static_cast<std::size_t>(i - 1)]));
      const Residue coeff = i % 2 == 1 ? neg_mod(x[c], p) : x[c];
      axpy(out, coeff, pure(i - 1, delta), p);
    }
    axpy(out, degree % 2 == 0 ? neg_mod(x[c], p) : x[c], tensor(pure(-1, {}), unit, p), p);
  }
  return out;
}

CohomologyClasses h2(const StructuredAlgebra& h) {
  CohomologyClasses out;
  out.p = h.p();
  out.base_dim = h.dim();
  out.d1 = differential(h, 1);
  out.cocycles = kernel(differential(h, 2));
  out.coboundaries = image(out.d1);
  out.representatives = quotient_basis(out.coboundaries, out.cocycles);
  return out;
}

std::size_t cohomology_dimension(const StructuredAlgebra& h, int degree) {
  require_degree(degree);
  switch (degree) {
    case 1: return kernel(differential(h, 1)).dim();
    case 2: return h2(h).dim();
    default: return kernel(differential(h, 3)).dim() - rank(differential(h, 2));
  }
}

CocycleDecomposition decompose_cocycle(const CohomologyClasses& classes, std::span<const Residue> u) {
  const std::uint32_t p = classes.p;
  const std::size_t n = classes.base_dim;
  if (u.size() != n * n) throw std::invalid_argument("cochain has the wrong length");
  if (!classes.cocycles.contains(u)) throw MathError("not a cocycle");
  const std::size_t r = classes.representatives.size();
  FpMatrix system(p, n * n, r + n);
  for (std::size_t i = 0; i < r; ++i) system.set_column(i, classes.representatives[i]);
  for (std::size_t j = 0; j < n; ++j) system.set_column(r + j, classes.d1.column(j));
  const auto x = solve(system, u);
  if (!x) throw MathError("contract violation: cocycle not in the span of representatives and coboundaries");
  CocycleDecomposition out;
  out.alphas.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(r));
  out.y.assign(x->begin() + static_cast<std::ptrdiff_t>(r), x->end());
  FpVector check = classes.d1 * out.y;
  for (std::size_t i = 0; i < r; ++i) axpy(check, out.alphas[i], classes.representatives[i], p);
  if (!std::equal(check.begin(), check.end(), u.begin(), u.end()))
    throw MathError("contract violation: decomposition does not reproduce the cocycle");
  return out;
}

namespace {

FpVector primitive_defect(const StructuredAlgebra& h, std::span<const Residue> z) {
  const std::uint32_t p = h.p();
  FpVector u = comultiply(h, z);
  u = subtract(u, tensor(z, h.unit(), p), p);
  return subtract(u, tensor(h.unit(), z, p), p);
}

/// Tensor t in H (x) H, assumed to lie in L (x) L, in coordinates of L's
/// echelon basis. nullopt when t is outside L (x) L.
std::optional<FpVector> restrict_tensor(const Subspace& l, std::span<const Residue> t) {
  const std::size_t n = l.ambient_dim();
  const std::size_t k = l.dim();
  const auto& piv = l.pivots();
  FpVector c(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) c[a * k + b] = t[piv[a] * n + piv[b]];
  const FpMatrix basis = l.basis();
  if (kronecker(basis.transpose(), basis.transpose()) * c != FpVector(t.begin(), t.end())) return std::nullopt;
  return c;
}

}  // namespace

AdjoinedElement find_z(const StructuredAlgebra& h, const Subspace& l) {
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  if (l.ambient_dim() != n) throw std::invalid_argument("subspace ambient dimension mismatch");
  if (l.dim() == n) throw MathError("L = H");
  if (!is_connected(h)) throw MathError("H is not connected");
  if (!l.contains(h.unit()) || !mult_closed(h, l) || !comult_stable(h, l))
    throw MathError("L is not a Hopf subalgebra of H");
  if (h.has_antipode())
    for (std::size_t r = 0; r < l.dim(); ++r)
      if (!l.contains(apply_antipode(h, l.basis().row(r)))) throw MathError("L is not stable under the antipode");
  if (!l.contains(primitively_generated(h))) throw MathError("L does not contain K");

  const std::vector<Subspace> layers = coradical_filtration(h);
  std::size_t d = 0;
  while (l.contains(layers[d])) ++d;

  AdjoinedElement out;
  out.filtration_degree = d;
  FpVector z = quotient_basis(intersect(l, layers[d]), layers[d]).front();
  axpy(z, neg_mod(counit_of(h, z), p), h.unit(), p);

  const auto u_l = restrict_tensor(l, primitive_defect(h, z));
  if (!u_l) throw MathError("contract violation: Delta(z) - z(x)1 - 1(x)z does not lie in L(x)L");

  const StructuredAlgebra l_alg = restrict_to_subspace(h, l);
  const CohomologyClasses classes = h2(l_alg);
  const CocycleDecomposition dec = decompose_cocycle(classes, *u_l);
  if (is_zero(dec.alphas)) throw MathError("contract violation: the class of Delta(z) - z(x)1 - 1(x)z is zero");

  z = add(z, l.from_coordinates(dec.y), p);
  FpVector target(l.dim() * l.dim(), 0);
  for (std::size_t i = 0; i < classes.dim(); ++i) axpy(target, dec.alphas[i], classes.representatives[i], p);
  out.u = primitive_defect(h, z);
  const auto check = restrict_tensor(l, out.u);
  if (!check || *check != target)
    throw MathError("contract violation: corrected z does not realize sum alpha_i u_i");
  if (l.contains(z)) throw MathError("contract violation: corrected z lies in L");

  out.z = std::move(z);
  out.u_in_l = std::move(target);
  out.alphas = dec.alphas;
  return out;
}

FpVector tensor_power(const StructuredAlgebra& h, std::span<const Residue> u, std::uint64_t exponent) {
  const std::uint32_t p = h.p();
  const ProductTable table(h);
  FpVector result = tensor(h.unit(), h.unit(), p);
  FpVector base(u.begin(), u.end());
  while (exponent > 0) {
    if (exponent & 1U) result = table.multiply_tensor(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = table.multiply_tensor(base, base);
  }
  return result;
}

bool frobenius_fixed_check(const StructuredAlgebra& h, const CohomologyClasses& classes) {
  for (const auto& u : classes.representatives)
    if (tensor_power(h, u, h.p()) != u) return false;
  return true;
}

bool make_frobenius_fixed(const StructuredAlgebra& h, CohomologyClasses& classes) {
  if (!is_commutative(h)) return false;
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  bool all_fixed = true;
  std::optional<FpMatrix> system;
  for (auto& u : classes.representatives) {
    const FpVector fu = tensor_power(h, u, p);
    if (fu == u) continue;
    if (!system) {
      system = FpMatrix(p, n * n, n);
      for (std::size_t j = 0; j < n; ++j) {
        const FpVector w = classes.d1.column(j);
        system->set_column(j, subtract(tensor_power(h, w, p), w, p));
      }
    }
    const auto y = solve(*system, subtract(u, fu, p));
    if (!y) {
      all_fixed = false;
      continue;
    }
    FpVector fixed = add(u, classes.d1 * *y, p);
    if (tensor_power(h, fixed, p) != fixed) throw MathError("contract violation: Frobenius correction failed");
    u = std::move(fixed);
  }
  return all_fixed;
}

FpVector normalize_cocycle(const StructuredAlgebra& h, FpVector u) {
  const std::uint32_t p = h.p();
  const Residue c = dot(tensor(h.counit(), h.counit(), p), u, p);
  axpy(u, neg_mod(c, p), tensor(h.unit(), h.unit(), p), p);
  return u;
}

}  // namespace hopf
