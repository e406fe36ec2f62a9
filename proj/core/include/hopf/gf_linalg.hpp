#pragma once

// Exact dense linear algebra over prime fields F_p.
//
// Vectors are column vectors; a matrix acts on them from the left. Tensor
// coordinates follow one global convention: the pure tensor e_i (x) e_j of
// an n-dimensional space sits at coordinate i * n + j, and likewise for
// higher tensor powers (first factor most significant). kronecker() uses the
// same convention, so kronecker(A, B) * (x (x) y) == (A x) (x) (B y).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hopf {

using Residue = std::uint8_t;
using FpVector = std::vector<Residue>;

/// Residues are stored in one byte.
inline constexpr std::uint32_t kMaxModulus = 251;

bool is_prime(std::uint32_t n);

/// Throws std::invalid_argument unless 2 <= p <= kMaxModulus and p is prime.
void require_prime(std::uint32_t p);

inline Residue add_mod(Residue a, Residue b, std::uint32_t p) {
  const std::uint32_t s = std::uint32_t{a} + b;
  return static_cast<Residue>(s >= p ? s - p : s);
}
inline Residue sub_mod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>(a >= b ? a - b : a + p - b);
}
inline Residue neg_mod(Residue a, std::uint32_t p) {
  return static_cast<Residue>(a == 0 ? 0 : p - a);
}
inline Residue mul_mod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>((std::uint32_t{a} * b) % p);
}
Residue inv_mod(Residue a, std::uint32_t p);
Residue pow_mod(Residue a, std::uint64_t e, std::uint32_t p);
Residue reduce_mod(long long v, std::uint32_t p);

FpVector zero_vector(std::size_t n);
FpVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Residue> v);
FpVector add(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p);
FpVector subtract(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p);
FpVector scale(std::span<const Residue> a, Residue c, std::uint32_t p);
/// a += c * b
void axpy(std::span<Residue> a, Residue c, std::span<const Residue> b, std::uint32_t p);
Residue dot(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p);
/// Coordinates of x (x) y under the global tensor convention.
FpVector tensor(std::span<const Residue> x, std::span<const Residue> y, std::uint32_t p);

class FpMatrix {
 public:
  FpMatrix() = default;
  /// Zero matrix. Validates that p is prime.
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  /// Entries are reduced mod p; rows must have equal length.
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows);
  static FpMatrix from_vectors(std::uint32_t p, std::size_t cols, const std::vector<FpVector>& rows);
  static FpMatrix from_columns(std::uint32_t p, std::size_t rows, const std::vector<FpVector>& cols);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = reduce_mod(v, p_); }

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  FpVector row_vector(std::size_t r) const;
  FpVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Residue> v);

  std::span<const Residue> data() const { return data_; }

  bool is_zero() const;
  FpMatrix transpose() const;
  /// Rows [first, first + count).
  FpMatrix row_block(std::size_t first, std::size_t count) const;

  FpVector operator*(std::span<const Residue> v) const;
  FpMatrix operator*(const FpMatrix& other) const;
  FpMatrix operator+(const FpMatrix& other) const;
  FpMatrix operator-(const FpMatrix& other) const;
  FpMatrix scaled(Residue c) const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);
FpMatrix hstack(const FpMatrix& left, const FpMatrix& right);
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);

struct RrefResult {
  FpMatrix form;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form. p = 2 runs on bit-packed rows.
RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

class Subspace;

/// {v : m v = 0}
Subspace kernel(const FpMatrix& m);
/// Column space of m.
Subspace image(const FpMatrix& m);
/// Some x with m x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<FpVector> solve(const FpMatrix& m, std::span<const Residue> b);

/// A subspace of F_p^n held as the row space of a matrix in reduced
/// row-echelon form without zero rows. Equal subspaces have equal bases.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of F_p^ambient.
  Subspace(std::uint32_t p, std::size_t ambient);

  static Subspace full(std::uint32_t p, std::size_t ambient);
  static Subspace row_space(const FpMatrix& m);
  static Subspace span(std::uint32_t p, std::size_t ambient, const std::vector<FpVector>& vectors);

  std::uint32_t p() const { return basis_.p(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FpVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<FpVector> basis_vectors() const;

  /// v minus its projection along the pivot columns; zero iff v is in the space.
  FpVector reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(); nullopt when v is outside the space.
  std::optional<FpVector> coordinates(std::span<const Residue> v) const;
  /// Inverse of coordinates().
  FpVector from_coordinates(std::span<const Residue> c) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(FpMatrix basis, std::vector<std::size_t> pivots, std::size_t ambient)
      : basis_(std::move(basis)), pivots_(std::move(pivots)), ambient_(ambient) {}

  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// {w : <u, w> = 0 for all u in U} under the standard dot product.
Subspace annihilator(const Subspace& u);
/// Vectors of V completing a basis of U to a basis of V.
/// Throws std::invalid_argument unless U is contained in V.
std::vector<FpVector> quotient_basis(const Subspace& u, const Subspace& v);

}  // namespace hopf
