#pragma once

// Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras over
// F_p held as structure-constant tensors in a fixed basis e_0 .. e_{n-1}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/gf_linalg.hpp"

namespace hopf {

enum class AlgebraKind { algebra, coalgebra, bialgebra, hopf };

std::string_view to_string(AlgebraKind kind);
std::optional<AlgebraKind> parse_kind(std::string_view name);

bool has_algebra_part(AlgebraKind kind);
bool has_coalgebra_part(AlgebraKind kind);

class StructuredAlgebra {
 public:
  StructuredAlgebra() = default;
  /// All tensors zero; coalgebra data and antipode absent.
  StructuredAlgebra(std::uint32_t p, std::vector<std::string> labels, AlgebraKind kind = AlgebraKind::algebra);

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  AlgebraKind kind() const { return kind_; }
  void set_kind(AlgebraKind kind) { kind_ = kind; }

  /// dim^2 x dim; row i * dim + j holds e_i e_j.
  const FpMatrix& mult_table() const { return mult_; }
  const FpVector& unit() const { return unit_; }
  /// dim x dim^2; row i holds Delta(e_i).
  const FpMatrix& comult_table() const { return comult_; }
  const FpVector& counit() const { return counit_; }
  /// Column j holds S(e_j).
  const FpMatrix& antipode() const { return antipode_; }

  bool has_coalgebra() const { return has_coalgebra_; }
  bool has_antipode() const { return has_antipode_; }

  FpVector product(std::size_t i, std::size_t j) const { return mult_.row_vector(i * dim() + j); }
  std::span<const Residue> product_view(std::size_t i, std::size_t j) const { return mult_.row(i * dim() + j); }
  std::span<const Residue> coproduct_view(std::size_t i) const { return comult_.row(i); }

  void set_product(std::size_t i, std::size_t j, std::span<const Residue> value);
  void set_unit(std::span<const Residue> value);
  void set_coproduct(std::size_t i, std::span<const Residue> value);
  void set_counit(std::span<const Residue> value);
  void set_antipode(FpMatrix s);
  void clear_antipode();
  void set_mult_table(FpMatrix table);
  void set_comult_table(FpMatrix table);
  /// Allocates zero coalgebra tensors if none are present.
  void enable_coalgebra();
  void set_label(std::size_t i, std::string label) { labels_.at(i) = std::move(label); }

 private:
  std::uint32_t p_ = 2;
  std::vector<std::string> labels_;
  AlgebraKind kind_ = AlgebraKind::algebra;
  FpMatrix mult_;
  FpVector unit_;
  bool has_coalgebra_ = false;
  FpMatrix comult_;
  FpVector counit_;
  bool has_antipode_ = false;
  FpMatrix antipode_;
};

/// e_i of A.
FpVector basis_element(const StructuredAlgebra& a, std::size_t i);

FpVector multiply(const StructuredAlgebra& a, std::span<const Residue> x, std::span<const Residue> y);
FpVector power(const StructuredAlgebra& a, std::span<const Residue> x, std::uint64_t exponent);
/// xy - yx
FpVector commutator(const StructuredAlgebra& a, std::span<const Residue> x, std::span<const Residue> y);
FpVector comultiply(const StructuredAlgebra& a, std::span<const Residue> x);
Residue counit_of(const StructuredAlgebra& a, std::span<const Residue> x);
FpVector apply_antipode(const StructuredAlgebra& a, std::span<const Residue> x);

/// Matrix of y -> x y.
FpMatrix left_multiplication(const StructuredAlgebra& a, std::span<const Residue> x);
/// Matrix of y -> y x.
FpMatrix right_multiplication(const StructuredAlgebra& a, std::span<const Residue> x);
/// Linear maps H (x) H -> H and H -> H (x) H as matrices acting on coordinates.
FpMatrix multiplication_map(const StructuredAlgebra& a);
FpMatrix comultiplication_map(const StructuredAlgebra& a);

bool is_commutative(const StructuredAlgebra& a);
bool is_cocommutative(const StructuredAlgebra& a);

/// Sparse view of the multiplication table for hot loops.
class ProductTable {
 public:
  explicit ProductTable(const StructuredAlgebra& a);
  std::size_t dim() const { return dim_; }
  std::uint32_t p() const { return p_; }
  /// Nonzero (index, coefficient) pairs of e_i e_j.
  std::span<const std::pair<std::uint32_t, Residue>> product(std::size_t i, std::size_t j) const {
    return {entries_.data() + offsets_[i * dim_ + j], offsets_[i * dim_ + j + 1] - offsets_[i * dim_ + j]};
  }
  FpVector multiply(std::span<const Residue> x, std::span<const Residue> y) const;
  /// Product in A (x) A: (a (x) b)(c (x) d) = ac (x) bd.
  FpVector multiply_tensor(std::span<const Residue> x, std::span<const Residue> y) const;

 private:
  std::size_t dim_;
  std::uint32_t p_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<std::uint32_t, Residue>> entries_;
};

/// A (x) A with the componentwise product, under the global tensor index convention.
StructuredAlgebra tensor_square_algebra(const StructuredAlgebra& a);
/// A (x) B as algebras; coordinate of a_i (x) b_j is i * dim B + j.
StructuredAlgebra tensor_product_algebra(const StructuredAlgebra& a, const StructuredAlgebra& b);

/// Linear dual: multiplication and comultiplication transposed, unit and
/// counit exchanged, antipode transposed. A coalgebra dualizes to an algebra
/// and vice versa.
StructuredAlgebra dual(const StructuredAlgebra& a);

/// Convolution inverse of the identity, found by a linear solve.
/// Throws MathError("no antipode") when none exists.
FpMatrix compute_antipode(const StructuredAlgebra& a);

struct AxiomViolation {
  std::string axiom;
  std::vector<std::size_t> witness;  // basis indices
  std::string detail;
};

/// Checks every axiom implied by the declared kind on basis tuples.
/// Throws std::invalid_argument on inconsistent tensor shapes.
std::vector<AxiomViolation> validate(const StructuredAlgebra& a);

/// Throws MathError naming the first violation.
void require_valid(const StructuredAlgebra& a);

/// The structure induced on a subspace V closed under whatever the declared
/// kind requires. The basis of the result is V's echelon basis; labels reuse
/// the ambient label when a basis vector is a standard basis vector.
/// Throws MathError if V is not closed.
StructuredAlgebra restrict_to_subspace(const StructuredAlgebra& a, const Subspace& v);

/// Structure induced on H / I using the standard basis vectors outside the
/// pivot columns of I as the quotient basis. No ideal/coideal checks are made.
StructuredAlgebra quotient_structure(const StructuredAlgebra& a, const Subspace& i);

/// Delta(V) inside V (x) V.
bool comult_stable(const StructuredAlgebra& a, const Subspace& v);
/// V V inside V.
bool mult_closed(const StructuredAlgebra& a, const Subspace& v);

}  // namespace hopf
