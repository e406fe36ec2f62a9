#pragma once

// Finite groups as Cayley tables, plus a catalog of small p-groups.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

struct GroupTable {
  std::size_t order = 0;
  /// table[a * order + b] = ab
  std::vector<std::uint32_t> table;
  std::size_t identity = 0;
  std::vector<std::string> labels;

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order + b]; }
  std::size_t inverse(std::size_t a) const;
};

/// Throws MathError("invalid group table: ...") unless rows and columns are
/// permutations, the identity is neutral and the product is associative.
void validate_group(const GroupTable& g);

bool is_p_group(const GroupTable& g, std::uint32_t p);
bool is_abelian(const GroupTable& g);

GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
/// <a, b | a^m, b^n = a^s, b a b^-1 = a^r>, elements a^i b^j.
GroupTable metacyclic_group(std::size_t m, std::size_t n, std::size_t r, std::size_t s);
/// N x| C_n where the generator of C_n acts by the automorphism `phi`
/// (a permutation of N's elements).
GroupTable semidirect_product(const GroupTable& normal, std::size_t n, const std::vector<std::uint32_t>& phi);
/// Upper unitriangular 3x3 matrices over F_p.
GroupTable heisenberg_group(std::uint32_t p);
/// <X, Z, iI> inside GL_2(C), order 16.
GroupTable pauli_group();

/// Catalog names: c<n>, d<n> (dihedral of order 2n), q<n> (generalized
/// quaternion of order n), sd16, m16, c4:c4, k4:c4, c9:c3, pauli,
/// heis<p>, and direct products joined with 'x' (e.g. c4xc2, q8xc2).
/// Throws std::invalid_argument for unknown names.
GroupTable group_by_name(std::string_view name);

/// Catalog p-groups of order <= max_order, in a fixed order.
std::vector<std::string> catalog_names(std::uint32_t p, std::size_t max_order);

}  // namespace hopf
