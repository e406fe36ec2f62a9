#include "hopf/gf_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hopf {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus not prime: " + std::to_string(p));
  if (p > kMaxModulus) throw std::invalid_argument("modulus too large: " + std::to_string(p));
}

Residue pow_mod(Residue a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t base = a % p;
  std::uint32_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue inv_mod(Residue a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

Residue reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

FpVector zero_vector(std::size_t n) { return FpVector(n, 0); }

FpVector unit_vector(std::size_t n, std::size_t i) {
  FpVector v(n, 0);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

// a[j] -= b[j] for residues below p < 128; written so the loop vectorizes.
void sub_row_small(Residue* a, const Residue* b, std::size_t n, Residue p) {
  for (std::size_t j = 0; j < n; ++j) {
    const Residue t = static_cast<Residue>(a[j] + (p - b[j]));
    const Residue u = static_cast<Residue>(t - p);
    a[j] = std::min(t, u);
  }
}

}  // namespace

FpVector add(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p) {
  require_same_length(a.size(), b.size());
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_mod(a[i], b[i], p);
  return out;
}

FpVector subtract(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p) {
  require_same_length(a.size(), b.size());
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub_mod(a[i], b[i], p);
  return out;
}

FpVector scale(std::span<const Residue> a, Residue c, std::uint32_t p) {
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], c, p);
  return out;
}

void axpy(std::span<Residue> a, Residue c, std::span<const Residue> b, std::uint32_t p) {
  require_same_length(a.size(), b.size());
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) a[i] = add_mod(a[i], mul_mod(c, b[i], p), p);
  }
}

Residue dot(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p) {
  require_same_length(a.size(), b.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint32_t{a[i]} * b[i];
  return static_cast<Residue>(acc % p);
}

FpVector tensor(std::span<const Residue> x, std::span<const Residue> y, std::uint32_t p) {
  FpVector out(x.size() * y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = mul_mod(x[i], y[j], p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime(p);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::from_vectors(std::uint32_t p, std::size_t cols, const std::vector<FpVector>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_length(rows[r].size(), cols);
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

FpMatrix FpMatrix::from_columns(std::uint32_t p, std::size_t rows, const std::vector<FpVector>& cols) {
  FpMatrix m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

FpVector FpMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return FpVector(s.begin(), s.end());
}

FpVector FpMatrix::column(std::size_t c) const {
  FpVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void FpMatrix::set_column(std::size_t c, std::span<const Residue> v) {
  require_same_length(v.size(), rows_);
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool FpMatrix::is_zero() const { return hopf::is_zero(data_); }

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row block");
  FpMatrix b(p_, count, cols_);
  std::copy(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_, b.data_.begin());
  return b;
}

FpVector FpMatrix::operator*(std::span<const Residue> v) const {
  require_same_length(v.size(), cols_);
  FpVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v, p_);
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  if (p_ != other.p_) throw std::invalid_argument("modulus mismatch");
  require_same_length(cols_, other.rows_);
  FpMatrix out(p_, rows_, other.cols_);
  std::vector<std::uint32_t> acc(other.cols_);
  // Accumulate unreduced; flush before the 32-bit accumulator can overflow.
  const std::size_t flush_every = std::max<std::size_t>(1, 0xFFFFFFFFu / ((p_ - 1) * (p_ - 1) + 1) - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    std::size_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = (*this)(r, k);
      if (a == 0) continue;
      const Residue* b = other.data_.data() + k * other.cols_;
      for (std::size_t c = 0; c < other.cols_; ++c) acc[c] += a * b[c];
      if (++pending == flush_every) {
        for (auto& x : acc) x %= p_;
        pending = 0;
      }
    }
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) = static_cast<Residue>(acc[c] % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
  if (p_ != other.p_) throw std::invalid_argument("modulus mismatch");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("dimension mismatch");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = add_mod(data_[i], other.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& other) const {
  if (p_ != other.p_) throw std::invalid_argument("modulus mismatch");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("dimension mismatch");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = sub_mod(data_[i], other.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::scaled(Residue c) const {
  FpMatrix out(*this);
  for (auto& x : out.data_) x = mul_mod(x, c, p_);
  return out;
}

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.p() != bottom.p()) throw std::invalid_argument("modulus mismatch");
  require_same_length(top.cols(), bottom.cols());
  FpMatrix out(top.p(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
  return out;
}

FpMatrix hstack(const FpMatrix& left, const FpMatrix& right) {
  if (left.p() != right.p()) throw std::invalid_argument("modulus mismatch");
  require_same_length(left.rows(), right.rows());
  FpMatrix out(left.p(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::copy(left.row(r).begin(), left.row(r).end(), out.row(r).begin());
    std::copy(right.row(r).begin(), right.row(r).end(), out.row(r).begin() + left.cols());
  }
  return out;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw std::invalid_argument("modulus mismatch");
  const std::uint32_t p = a.p();
  FpMatrix out(p, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Residue x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        Residue* dst = &out(i * b.rows() + k, j * b.cols());
        const auto src = b.row(k);
        for (std::size_t l = 0; l < b.cols(); ++l) dst[l] = mul_mod(x, src[l], p);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Row reduction

namespace {

RrefResult rref_binary(const FpMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto src = m.row(r);
    for (std::size_t c = 0; c < cols; ++c)
      if (src[c]) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  RrefResult result;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows && !(bits[pivot * words + w] & mask)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(bits.begin() + pivot * words, bits.begin() + (pivot + 1) * words,
                       bits.begin() + rank * words);
    const std::uint64_t* prow = bits.data() + rank * words;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || !(bits[r * words + w] & mask)) continue;
      std::uint64_t* dst = bits.data() + r * words;
      for (std::size_t k = w; k < words; ++k) dst[k] ^= prow[k];
    }
    result.pivots.push_back(c);
    ++rank;
  }

  result.form = FpMatrix(2, rows, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    auto dst = result.form.row(r);
    for (std::size_t c = 0; c < cols; ++c) dst[c] = (bits[r * words + c / 64] >> (c % 64)) & 1;
  }
  result.rank = rank;
  return result;
}

RrefResult rref_odd(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  FpMatrix a = m;
  RrefResult result;

  // multiples[c * cols + j] = c * pivot_row[j], filled lazily per pivot.
  std::vector<Residue> multiples(static_cast<std::size_t>(p) * cols, 0);
  std::vector<bool> ready(p, false);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(rank).begin());

    auto prow = a.row(rank);
    const Residue inv = inv_mod(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = mul_mod(prow[j], inv, p);

    std::fill(ready.begin(), ready.end(), false);
    const std::size_t width = cols - c;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Residue f = a(r, c);
      if (f == 0) continue;
      Residue* mult = multiples.data() + static_cast<std::size_t>(f) * cols;
      if (!ready[f]) {
        for (std::size_t j = c; j < cols; ++j) mult[j] = mul_mod(prow[j], f, p);
        ready[f] = true;
      }
      Residue* dst = &a(r, c);
      if (p < 128) {
        sub_row_small(dst, mult + c, width, static_cast<Residue>(p));
      } else {
        for (std::size_t j = 0; j < width; ++j) dst[j] = sub_mod(dst[j], mult[c + j], p);
      }
    }
    result.pivots.push_back(c);
    ++rank;
  }
  result.form = std::move(a);
  result.rank = rank;
  return result;
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return RrefResult{m, 0, {}};
  return m.p() == 2 ? rref_binary(m) : rref_odd(m);
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

Subspace kernel(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = neg_mod(rr.form(r, f), p);
    basis.push_back(std::move(v));
  }
  return Subspace::span(p, m.cols(), basis);
}

Subspace image(const FpMatrix& m) { return Subspace::row_space(m.transpose()); }

std::optional<FpVector> solve(const FpMatrix& m, std::span<const Residue> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
  FpMatrix rhs(m.p(), m.rows(), 1);
  rhs.set_column(0, b);
  const RrefResult rr = rref(hstack(m, rhs));
  FpVector x(m.cols(), 0);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] == m.cols()) return std::nullopt;
    x[rr.pivots[r]] = rr.form(r, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::uint32_t p, std::size_t ambient) : basis_(p, 0, ambient), ambient_(ambient) {}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
  FpMatrix id = FpMatrix::identity(p, ambient);
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(std::move(id), std::move(piv), ambient);
}

Subspace Subspace::row_space(const FpMatrix& m) {
  RrefResult rr = rref(m);
  FpMatrix basis = rr.form.row_block(0, rr.rank);
  return Subspace(std::move(basis), std::move(rr.pivots), m.cols());
}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient, const std::vector<FpVector>& vectors) {
  if (vectors.empty()) return Subspace(p, ambient);
  return row_space(FpMatrix::from_vectors(p, ambient, vectors));
}

std::vector<FpVector> Subspace::basis_vectors() const {
  std::vector<FpVector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

FpVector Subspace::reduce(std::span<const Residue> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("dimension mismatch in subspace reduce");
  FpVector r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Residue c = r[pivots_[i]];
    if (c != 0) axpy(r, neg_mod(c, p()), basis_.row(i), p());
  }
  return r;
}

bool Subspace::contains(std::span<const Residue> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<FpVector> Subspace::coordinates(std::span<const Residue> v) const {
  if (!contains(v)) return std::nullopt;
  FpVector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

FpVector Subspace::from_coordinates(std::span<const Residue> c) const {
  if (c.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
  FpVector v(ambient_, 0);
  for (std::size_t i = 0; i < dim(); ++i) axpy(v, c[i], basis_.row(i), p());
  return v;
}

namespace {
void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (u.p() != v.p()) throw std::invalid_argument("modulus mismatch");
}
}  // namespace

Subspace sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return kernel(vstack(annihilator(u).basis(), annihilator(v).basis()));
}

std::vector<FpVector> quotient_basis(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (!v.contains(u)) throw std::invalid_argument("inclusion violation: U is not contained in V");
  std::vector<FpVector> out;
  Subspace current = u;
  for (std::size_t i = 0; i < v.dim() && current.dim() < v.dim(); ++i) {
    FpVector w = v.basis_vector(i);
    if (current.contains(w)) continue;
    current = sum(current, Subspace::span(u.p(), u.ambient_dim(), {w}));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace hopf
