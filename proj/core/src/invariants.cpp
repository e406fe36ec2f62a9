#include "hopf/invariants.hpp"

#include <cstdint>
#include <string>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

using IntMatrix = std::vector<std::int64_t>;  // n x n, row-major

IntMatrix mul_mod_m(const IntMatrix& a, const IntMatrix& b, std::size_t n, std::int64_t m) {
  IntMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      const std::int64_t* brow = &b[k * n];
      std::int64_t* crow = &c[i * n];
      for (std::size_t j = 0; j < n; ++j) crow[j] = (crow[j] + aik * brow[j]) % m;
    }
  return c;
}

IntMatrix pow_mod_m(IntMatrix base, std::uint64_t e, std::size_t n, std::int64_t m) {
  IntMatrix result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1 % m;
  while (e > 0) {
    if (e & 1U) result = mul_mod_m(result, base, n, m);
    e >>= 1U;
    if (e > 0) base = mul_mod_m(base, base, n, m);
  }
  return result;
}

/// L_{e_h}(k, i) = coefficient of e_k in e_h e_i.
std::vector<FpMatrix> left_regular_basis(const StructuredAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<FpMatrix> out;
  out.reserve(n);
  for (std::size_t h = 0; h < n; ++h) {
    FpMatrix m(a.p(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto prod = a.product_view(h, i);
      for (std::size_t k = 0; k < n; ++k) m(k, i) = prod[k];
    }
    out.push_back(std::move(m));
  }
  return out;
}

StructuredAlgebra algebra_part(const StructuredAlgebra& a) {
  StructuredAlgebra out(a.p(), a.labels(), AlgebraKind::algebra);
  out.set_mult_table(a.mult_table());
  out.set_unit(a.unit());
  return out;
}

void require_algebra(const StructuredAlgebra& a) {
  if (!has_algebra_part(a.kind())) throw std::invalid_argument("structure has no multiplication");
}

void require_coalgebra(const StructuredAlgebra& a) {
  if (!a.has_coalgebra()) throw std::invalid_argument("structure has no comultiplication");
}

}  // namespace

Subspace jacobson_radical_unverified(const StructuredAlgebra& a) {
  require_algebra(a);
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  if (n == 0) return Subspace(p, 0);

  std::size_t levels = 0;  // floor(log_p n)
  for (std::size_t q = p; q <= n; q *= p) ++levels;

  const ProductTable table(a);
  const std::vector<FpMatrix> regular = left_regular_basis(a);
  auto regular_of = [&](std::span<const Residue> x) {
    FpMatrix m(p, n, n);
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] != 0) m = m + regular[k].scaled(x[k]);
    return m;
  };

  std::vector<FpVector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));

  std::int64_t p_i = 1;  // p^i
  for (std::size_t level = 0; level <= levels && !basis.empty(); ++level) {
    const std::int64_t modulus = p_i * p;
    FpMatrix g(p, n, basis.size());  // g(r-th basis vector * e_j) at (j, r)
    for (std::size_t r = 0; r < basis.size(); ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        const FpVector x = table.multiply(basis[r], unit_vector(n, j));
        if (is_zero(x)) continue;
        const FpMatrix lx = regular_of(x);
        std::int64_t trace = 0;
        if (level == 0) {
          for (std::size_t d = 0; d < n; ++d) trace += lx(d, d);
          trace %= modulus;
        } else {
          IntMatrix lifted(n * n);
          for (std::size_t e = 0; e < n * n; ++e) lifted[e] = lx.data()[e];
          const IntMatrix powered = pow_mod_m(std::move(lifted), static_cast<std::uint64_t>(p_i), n, modulus);
          for (std::size_t d = 0; d < n; ++d) trace = (trace + powered[d * n + d]) % modulus;
          if (trace % p_i != 0) throw MathError("radical computation: trace of p-power not divisible (non-associative input?)");
        }
        g(j, r) = static_cast<Residue>((trace / p_i) % p);
      }
    }
    const Subspace coeffs = kernel(g);
    std::vector<FpVector> next;
    for (std::size_t c = 0; c < coeffs.dim(); ++c) {
      FpVector v = zero_vector(n);
      const auto row = coeffs.basis().row(c);
      for (std::size_t r = 0; r < basis.size(); ++r)
        if (row[r] != 0) axpy(v, row[r], basis[r], p);
      next.push_back(std::move(v));
    }
    basis = Subspace::span(p, n, next).basis_vectors();
    p_i *= p;
  }
  return Subspace::span(p, n, basis);
}

bool is_two_sided_ideal(const StructuredAlgebra& a, const Subspace& s) {
  require_algebra(a);
  const ProductTable table(a);
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto v = s.basis().row(r);
    for (std::size_t j = 0; j < n; ++j) {
      const FpVector e = unit_vector(n, j);
      if (!s.contains(table.multiply(v, e)) || !s.contains(table.multiply(e, v))) return false;
    }
  }
  return true;
}

std::optional<std::size_t> nilpotency_index(const StructuredAlgebra& a, const Subspace& ideal) {
  require_algebra(a);
  const ProductTable table(a);
  const std::size_t n = a.dim();
  Subspace current = ideal;
  std::size_t k = 1;
  while (current.dim() > 0) {
    std::vector<FpVector> products;
    for (std::size_t r = 0; r < current.dim(); ++r)
      for (std::size_t s = 0; s < ideal.dim(); ++s) {
        FpVector x = table.multiply(current.basis().row(r), ideal.basis().row(s));
        if (!is_zero(x)) products.push_back(std::move(x));
      }
    Subspace next = Subspace::span(a.p(), n, products);
    if (next.dim() == current.dim()) return std::nullopt;
    current = std::move(next);
    ++k;
  }
  return k;
}

Subspace jacobson_radical(const StructuredAlgebra& a) {
  Subspace j = jacobson_radical_unverified(a);
  if (!is_two_sided_ideal(a, j)) throw MathError("radical check failed: result is not a two-sided ideal");
  if (!nilpotency_index(a, j)) throw MathError("radical check failed: result is not nilpotent");
  if (j.dim() > 0) {
    const StructuredAlgebra q = quotient_structure(algebra_part(a), j);
    if (jacobson_radical_unverified(q).dim() != 0)
      throw MathError("radical check failed: quotient is not semisimple");
  }
  return j;
}

bool is_semisimple(const StructuredAlgebra& a) { return jacobson_radical(a).dim() == 0; }

IntegralSpaces integrals(const StructuredAlgebra& h) {
  require_algebra(h);
  require_coalgebra(h);
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  FpMatrix left(p, n * n, n);
  FpMatrix right(p, n * n, n);
  for (std::size_t g = 0; g < n; ++g) {
    const Residue eps = h.counit()[g];
    for (std::size_t i = 0; i < n; ++i) {
      const auto gi = h.product_view(g, i);
      const auto ig = h.product_view(i, g);
      for (std::size_t k = 0; k < n; ++k) {
        left(g * n + k, i) = gi[k];
        right(g * n + k, i) = ig[k];
      }
      left(g * n + i, i) = sub_mod(left(g * n + i, i), eps, p);
      right(g * n + i, i) = sub_mod(right(g * n + i, i), eps, p);
    }
  }
  IntegralSpaces out;
  out.left = kernel(left);
  out.right = kernel(right);
  if (out.left.dim() != 1 || out.right.dim() != 1)
    throw MathError("integral space not one-dimensional (left " + std::to_string(out.left.dim()) + ", right " +
                    std::to_string(out.right.dim()) + ")");
  out.left_generator = out.left.basis_vector(0);
  out.right_generator = out.right.basis_vector(0);
  out.eps_left_nonzero = counit_of(h, out.left_generator) != 0;
  out.eps_right_nonzero = counit_of(h, out.right_generator) != 0;
  return out;
}

Subspace center(const StructuredAlgebra& a) {
  require_algebra(a);
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  FpMatrix m(p, n * n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < n; ++i) {
      const auto gi = a.product_view(g, i);
      const auto ig = a.product_view(i, g);
      for (std::size_t k = 0; k < n; ++k) m(g * n + k, i) = sub_mod(gi[k], ig[k], p);
    }
  return kernel(m);
}

Subspace coradical(const StructuredAlgebra& h) {
  require_coalgebra(h);
  return annihilator(jacobson_radical(dual(h)));
}

std::vector<Subspace> coradical_filtration(const StructuredAlgebra& h) {
  require_coalgebra(h);
  const std::size_t n = h.dim();
  std::vector<Subspace> layers{coradical(h)};
  const FpMatrix delta = comultiplication_map(h);
  const FpMatrix ann0 = annihilator(layers.front()).basis();
  while (layers.back().dim() < n) {
    const FpMatrix ann_prev = annihilator(layers.back()).basis();
    Subspace next = kernel(kronecker(ann0, ann_prev) * delta);
    if (next.dim() <= layers.back().dim()) throw MathError("coradical filtration stalled below the full space");
    layers.push_back(std::move(next));
  }
  return layers;
}

bool is_connected(const StructuredAlgebra& h) { return coradical(h).dim() == 1; }

Subspace primitive_space(const StructuredAlgebra& h) {
  require_algebra(h);
  require_coalgebra(h);
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  const FpMatrix unit = FpMatrix::from_columns(p, n, {h.unit()});
  const FpMatrix id = FpMatrix::identity(p, n);
  return kernel(comultiplication_map(h) - kronecker(id, unit) - kronecker(unit, id));
}

Subspace generated_subalgebra(const StructuredAlgebra& a, const Subspace& s) {
  require_algebra(a);
  const ProductTable table(a);
  std::vector<FpVector> gens = s.basis_vectors();
  gens.push_back(a.unit());
  Subspace v = Subspace::span(a.p(), a.dim(), gens);
  while (true) {
    std::vector<FpVector> all = v.basis_vectors();
    for (std::size_t r = 0; r < v.dim(); ++r)
      for (const auto& g : gens) all.push_back(table.multiply(v.basis().row(r), g));
    Subspace next = Subspace::span(a.p(), a.dim(), all);
    if (next.dim() == v.dim()) return v;
    v = std::move(next);
  }
}

Subspace generated_hopf_subalgebra(const StructuredAlgebra& h, const Subspace& s) {
  require_coalgebra(h);
  Subspace v = generated_subalgebra(h, s);
  if (!comult_stable(h, v)) throw MathError("generated subalgebra is not a subcoalgebra");
  if (h.has_antipode()) {
    for (std::size_t r = 0; r < v.dim(); ++r)
      if (!v.contains(apply_antipode(h, v.basis().row(r))))
        throw MathError("generated subalgebra is not stable under the antipode");
  }
  return v;
}

Subspace primitively_generated(const StructuredAlgebra& h) {
  return generated_hopf_subalgebra(h, primitive_space(h));
}

RestrictedStructure restricted_structure(const StructuredAlgebra& h) {
  RestrictedStructure out;
  out.primitives = primitive_space(h);
  const std::uint32_t p = h.p();
  const std::size_t d = out.primitives.dim();
  const std::vector<FpVector> basis = out.primitives.basis_vectors();

  out.abelian = true;
  for (std::size_t i = 0; i < d && out.abelian; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!is_zero(commutator(h, basis[i], basis[j]))) {
        out.abelian = false;
        break;
      }

  std::vector<FpVector> powers;
  for (const auto& x : basis) {
    FpVector xp = power(h, x, p);
    if (!out.primitives.contains(xp)) throw MathError("p-th power of a primitive element is not primitive");
    powers.push_back(std::move(xp));
  }
  out.pth_powers_span = Subspace::span(p, h.dim(), powers).dim() == d;

  if (out.abelian) {
    FpMatrix m(p, d, d);
    for (std::size_t j = 0; j < d; ++j) m.set_column(j, *out.primitives.coordinates(powers[j]));
    out.pth_power_bijective = rank(m) == d;
    out.pth_power = std::move(m);
  }
  return out;
}

}  // namespace hopf
