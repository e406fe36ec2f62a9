#include "hopf/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopf/errors.hpp"

namespace hopf {

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::algebra: return "algebra";
    case AlgebraKind::coalgebra: return "coalgebra";
    case AlgebraKind::bialgebra: return "bialgebra";
    case AlgebraKind::hopf: return "hopf";
  }
  return "algebra";
}

std::optional<AlgebraKind> parse_kind(std::string_view name) {
  if (name == "algebra") return AlgebraKind::algebra;
  if (name == "coalgebra") return AlgebraKind::coalgebra;
  if (name == "bialgebra") return AlgebraKind::bialgebra;
  if (name == "hopf") return AlgebraKind::hopf;
  return std::nullopt;
}

bool has_algebra_part(AlgebraKind kind) { return kind != AlgebraKind::coalgebra; }
bool has_coalgebra_part(AlgebraKind kind) { return kind != AlgebraKind::algebra; }

// ---------------------------------------------------------------------------

StructuredAlgebra::StructuredAlgebra(std::uint32_t p, std::vector<std::string> labels, AlgebraKind kind)
    : p_(p), labels_(std::move(labels)), kind_(kind) {
  require_prime(p);
  if (labels_.empty()) throw std::invalid_argument("algebra dimension must be positive");
  const std::size_t n = labels_.size();
  mult_ = FpMatrix(p, n * n, n);
  unit_ = zero_vector(n);
}

namespace {
void require_length(std::span<const Residue> v, std::size_t n, const char* what) {
  if (v.size() != n) throw std::invalid_argument(std::string("shape mismatch: ") + what);
}
FpVector reduced(std::span<const Residue> v, std::uint32_t p) {
  FpVector out(v.begin(), v.end());
  for (auto& x : out) x %= p;
  return out;
}
}  // namespace

void StructuredAlgebra::set_product(std::size_t i, std::size_t j, std::span<const Residue> value) {
  require_length(value, dim(), "product");
  const FpVector v = reduced(value, p_);
  std::copy(v.begin(), v.end(), mult_.row(i * dim() + j).begin());
}

void StructuredAlgebra::set_unit(std::span<const Residue> value) {
  require_length(value, dim(), "unit");
  unit_ = reduced(value, p_);
}

void StructuredAlgebra::enable_coalgebra() {
  if (has_coalgebra_) return;
  comult_ = FpMatrix(p_, dim(), dim() * dim());
  counit_ = zero_vector(dim());
  has_coalgebra_ = true;
}

void StructuredAlgebra::set_coproduct(std::size_t i, std::span<const Residue> value) {
  require_length(value, dim() * dim(), "coproduct");
  enable_coalgebra();
  const FpVector v = reduced(value, p_);
  std::copy(v.begin(), v.end(), comult_.row(i).begin());
}

void StructuredAlgebra::set_counit(std::span<const Residue> value) {
  require_length(value, dim(), "counit");
  enable_coalgebra();
  counit_ = reduced(value, p_);
}

void StructuredAlgebra::set_antipode(FpMatrix s) {
  if (s.rows() != dim() || s.cols() != dim() || s.p() != p_) throw std::invalid_argument("shape mismatch: antipode");
  antipode_ = std::move(s);
  has_antipode_ = true;
}

void StructuredAlgebra::clear_antipode() {
  antipode_ = FpMatrix();
  has_antipode_ = false;
}

void StructuredAlgebra::set_mult_table(FpMatrix table) {
  if (table.rows() != dim() * dim() || table.cols() != dim() || table.p() != p_)
    throw std::invalid_argument("shape mismatch: multiplication table");
  mult_ = std::move(table);
}

void StructuredAlgebra::set_comult_table(FpMatrix table) {
  if (table.rows() != dim() || table.cols() != dim() * dim() || table.p() != p_)
    throw std::invalid_argument("shape mismatch: comultiplication table");
  comult_ = std::move(table);
  if (!has_coalgebra_) counit_ = zero_vector(dim());
  has_coalgebra_ = true;
}

// ---------------------------------------------------------------------------

FpVector basis_element(const StructuredAlgebra& a, std::size_t i) { return unit_vector(a.dim(), i); }

namespace {

void require_element(const StructuredAlgebra& a, std::span<const Residue> x) {
  if (x.size() != a.dim()) throw std::invalid_argument("element does not belong to this algebra (length mismatch)");
}

void require_coalgebra(const StructuredAlgebra& a) {
  if (!a.has_coalgebra()) throw std::invalid_argument("missing coalgebra data");
}

std::vector<std::pair<std::uint32_t, Residue>> nonzeros(std::span<const Residue> v) {
  std::vector<std::pair<std::uint32_t, Residue>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

}  // namespace

FpVector multiply(const StructuredAlgebra& a, std::span<const Residue> x, std::span<const Residue> y) {
  require_element(a, x);
  require_element(a, y);
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  FpVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      axpy(out, mul_mod(x[i], y[j], p), a.product_view(i, j), p);
    }
  }
  return out;
}

FpVector power(const StructuredAlgebra& a, std::span<const Residue> x, std::uint64_t exponent) {
  require_element(a, x);
  FpVector result = a.unit();
  FpVector base(x.begin(), x.end());
  while (exponent > 0) {
    if (exponent & 1) result = multiply(a, result, base);
    exponent >>= 1;
    if (exponent > 0) base = multiply(a, base, base);
  }
  return result;
}

FpVector commutator(const StructuredAlgebra& a, std::span<const Residue> x, std::span<const Residue> y) {
  return subtract(multiply(a, x, y), multiply(a, y, x), a.p());
}

FpVector comultiply(const StructuredAlgebra& a, std::span<const Residue> x) {
  require_element(a, x);
  require_coalgebra(a);
  const std::size_t n = a.dim();
  FpVector out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) axpy(out, x[i], a.coproduct_view(i), a.p());
  return out;
}

Residue counit_of(const StructuredAlgebra& a, std::span<const Residue> x) {
  require_element(a, x);
  require_coalgebra(a);
  return dot(a.counit(), x, a.p());
}

FpVector apply_antipode(const StructuredAlgebra& a, std::span<const Residue> x) {
  require_element(a, x);
  if (!a.has_antipode()) throw std::invalid_argument("missing antipode");
  return a.antipode() * x;
}

FpMatrix left_multiplication(const StructuredAlgebra& a, std::span<const Residue> x) {
  const std::size_t n = a.dim();
  FpMatrix m(a.p(), n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, multiply(a, x, basis_element(a, j)));
  return m;
}

FpMatrix right_multiplication(const StructuredAlgebra& a, std::span<const Residue> x) {
  const std::size_t n = a.dim();
  FpMatrix m(a.p(), n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, multiply(a, basis_element(a, j), x));
  return m;
}

FpMatrix multiplication_map(const StructuredAlgebra& a) { return a.mult_table().transpose(); }

FpMatrix comultiplication_map(const StructuredAlgebra& a) {
  require_coalgebra(a);
  return a.comult_table().transpose();
}

bool is_commutative(const StructuredAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      auto x = a.product_view(i, j);
      auto y = a.product_view(j, i);
      if (!std::equal(x.begin(), x.end(), y.begin())) return false;
    }
  return true;
}

bool is_cocommutative(const StructuredAlgebra& a) {
  require_coalgebra(a);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    auto d = a.coproduct_view(i);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (d[j * n + k] != d[k * n + j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ProductTable::ProductTable(const StructuredAlgebra& a) : dim_(a.dim()), p_(a.p()) {
  offsets_.reserve(dim_ * dim_ + 1);
  offsets_.push_back(0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      auto row = a.product_view(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k] != 0) entries_.emplace_back(static_cast<std::uint32_t>(k), row[k]);
      offsets_.push_back(entries_.size());
    }
}

FpVector ProductTable::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("element length mismatch");
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t c = std::uint64_t{x[i]} * y[j];
      for (auto [k, v] : product(i, j)) acc[k] += c * v;
    }
  }
  FpVector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Residue>(acc[k] % p_);
  return out;
}

FpVector ProductTable::multiply_tensor(std::span<const Residue> x, std::span<const Residue> y) const {
  const std::size_t n = dim_;
  if (x.size() != n * n || y.size() != n * n) throw std::invalid_argument("tensor length mismatch");
  const auto nx = nonzeros(x);
  const auto ny = nonzeros(y);
  std::vector<std::uint64_t> acc(n * n, 0);
  std::size_t pending = 0;
  for (auto [ix, cx] : nx) {
    const std::size_t a = ix / n, b = ix % n;
    for (auto [iy, cy] : ny) {
      const std::size_t c = iy / n, d = iy % n;
      const std::uint64_t coeff = std::uint64_t{cx} * cy % p_;
      for (auto [k, u] : product(a, c)) {
        const std::uint64_t cu = coeff * u;
        for (auto [l, v] : product(b, d)) acc[k * n + l] += cu * v;
      }
      if (++pending == 1024) {
        for (auto& t : acc) t %= p_;
        pending = 0;
      }
    }
  }
  FpVector out(n * n);
  for (std::size_t i = 0; i < n * n; ++i) out[i] = static_cast<Residue>(acc[i] % p_);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "(x)" + y);
  return out;
}

}  // namespace

StructuredAlgebra tensor_product_algebra(const StructuredAlgebra& a, const StructuredAlgebra& b) {
  if (a.p() != b.p()) throw std::invalid_argument("modulus mismatch");
  const std::size_t na = a.dim(), nb = b.dim();
  StructuredAlgebra t(a.p(), tensor_labels(a.labels(), b.labels()));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          t.set_product(i * nb + j, k * nb + l, tensor(a.product_view(i, k), b.product_view(j, l), a.p()));
  t.set_unit(tensor(a.unit(), b.unit(), a.p()));
  return t;
}

StructuredAlgebra tensor_square_algebra(const StructuredAlgebra& a) { return tensor_product_algebra(a, a); }

StructuredAlgebra dual(const StructuredAlgebra& a) {
  std::vector<std::string> labels;
  labels.reserve(a.dim());
  for (const auto& l : a.labels()) labels.push_back(l + "*");

  AlgebraKind kind = a.kind();
  if (kind == AlgebraKind::algebra) kind = AlgebraKind::coalgebra;
  else if (kind == AlgebraKind::coalgebra) kind = AlgebraKind::algebra;

  StructuredAlgebra d(a.p(), std::move(labels), kind);
  if (a.has_coalgebra()) {
    d.set_mult_table(a.comult_table().transpose());
    d.set_unit(a.counit());
  }
  if (has_algebra_part(a.kind())) {
    d.set_comult_table(a.mult_table().transpose());
    d.set_counit(a.unit());
  }
  if (a.has_antipode()) d.set_antipode(a.antipode().transpose());
  return d;
}

FpMatrix compute_antipode(const StructuredAlgebra& a) {
  require_coalgebra(a);
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  const ProductTable table(a);
  // Unknown (r, j) at r * n + j is the coefficient of e_r in S(e_j).
  FpMatrix system(p, n * n, n * n);
  FpVector rhs(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = a.coproduct_view(i);
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      if (d[jk] == 0) continue;
      const std::size_t j = jk / n, k = jk % n;
      for (std::size_t r = 0; r < n; ++r)
        for (auto [s, v] : table.product(r, k)) {
          Residue& cell = system(i * n + s, r * n + j);
          cell = add_mod(cell, mul_mod(d[jk], v, p), p);
        }
    }
    const Residue e = a.counit()[i];
    for (std::size_t s = 0; s < n; ++s) rhs[i * n + s] = mul_mod(e, a.unit()[s], p);
  }
  const auto x = solve(system, rhs);
  if (!x) throw MathError("no antipode: convolution inverse of the identity does not exist");
  FpMatrix s(p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) s(r, j) = (*x)[r * n + j];

  // The left inverse found above must also be a right inverse.
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = a.coproduct_view(i);
    FpVector acc(n, 0);
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      if (d[jk] == 0) continue;
      const FpVector sk = s.column(jk % n);
      axpy(acc, d[jk], table.multiply(basis_element(a, jk / n), sk), p);
    }
    if (acc != scale(a.unit(), a.counit()[i], p)) throw MathError("no antipode: left convolution inverse is not a right inverse");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

constexpr std::size_t kMaxViolationsPerAxiom = 4;

struct ViolationSink {
  std::vector<AxiomViolation>& out;
  std::size_t count = 0;
  bool add(std::string axiom, std::vector<std::size_t> witness, std::string detail = {}) {
    out.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    return ++count < kMaxViolationsPerAxiom;
  }
};

void check_shapes(const StructuredAlgebra& a) {
  const std::size_t n = a.dim();
  if (a.mult_table().rows() != n * n || a.mult_table().cols() != n || a.unit().size() != n)
    throw std::invalid_argument("shape mismatch: multiplication tensor");
  if (a.has_coalgebra() &&
      (a.comult_table().rows() != n || a.comult_table().cols() != n * n || a.counit().size() != n))
    throw std::invalid_argument("shape mismatch: comultiplication tensor");
  if (a.has_antipode() && (a.antipode().rows() != n || a.antipode().cols() != n))
    throw std::invalid_argument("shape mismatch: antipode");
}

void check_algebra(const StructuredAlgebra& a, const ProductTable& t, std::vector<AxiomViolation>& out) {
  const std::size_t n = a.dim();
  {
    ViolationSink sink{out};
    for (std::size_t i = 0; i < n; ++i) {
      const FpVector ei = basis_element(a, i);
      for (std::size_t j = 0; j < n; ++j) {
        const FpVector ij = a.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          const FpVector lhs = t.multiply(ij, basis_element(a, k));
          const FpVector rhs = t.multiply(ei, a.product(j, k));
          if (lhs != rhs && !sink.add("associativity", {i, j, k})) goto assoc_done;
        }
      }
    }
  assoc_done:;
  }
  ViolationSink sink{out};
  for (std::size_t i = 0; i < n; ++i) {
    const FpVector ei = basis_element(a, i);
    if (t.multiply(a.unit(), ei) != ei && !sink.add("unit", {i}, "1 * e_i != e_i")) break;
    if (t.multiply(ei, a.unit()) != ei && !sink.add("unit", {i}, "e_i * 1 != e_i")) break;
  }
}

// (Delta (x) Id) Delta(e_i) and (Id (x) Delta) Delta(e_i) in H^{(x)3}.
std::pair<FpVector, FpVector> double_coproducts(const StructuredAlgebra& a, std::size_t i) {
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  FpVector left(n * n * n, 0), right(n * n * n, 0);
  const auto d = a.coproduct_view(i);
  for (std::size_t jk = 0; jk < n * n; ++jk) {
    const Residue c = d[jk];
    if (c == 0) continue;
    const std::size_t j = jk / n, k = jk % n;
    const auto dj = a.coproduct_view(j);
    const auto dk = a.coproduct_view(k);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      if (dj[ab] != 0) {
        Residue& cell = left[ab * n + k];
        cell = add_mod(cell, mul_mod(c, dj[ab], p), p);
      }
      if (dk[ab] != 0) {
        Residue& cell = right[j * n * n + ab];
        cell = add_mod(cell, mul_mod(c, dk[ab], p), p);
      }
    }
  }
  return {std::move(left), std::move(right)};
}

void check_coalgebra(const StructuredAlgebra& a, std::vector<AxiomViolation>& out) {
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  {
    ViolationSink sink{out};
    for (std::size_t i = 0; i < n; ++i) {
      auto [l, r] = double_coproducts(a, i);
      if (l != r && !sink.add("coassociativity", {i})) break;
    }
  }
  ViolationSink sink{out};
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = a.coproduct_view(i);
    FpVector left(n, 0), right(n, 0);
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      if (d[jk] == 0) continue;
      const std::size_t j = jk / n, k = jk % n;
      left[k] = add_mod(left[k], mul_mod(a.counit()[j], d[jk], p), p);
      right[j] = add_mod(right[j], mul_mod(a.counit()[k], d[jk], p), p);
    }
    const FpVector ei = basis_element(a, i);
    if (left != ei && !sink.add("counit", {i}, "(eps (x) id) Delta(e_i) != e_i")) break;
    if (right != ei && !sink.add("counit", {i}, "(id (x) eps) Delta(e_i) != e_i")) break;
  }
}

void check_bialgebra(const StructuredAlgebra& a, const ProductTable& t, std::vector<AxiomViolation>& out) {
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  {
    ViolationSink sink{out};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const FpVector lhs = comultiply(a, a.product_view(i, j));
        const FpVector rhs = t.multiply_tensor(a.coproduct_view(i), a.coproduct_view(j));
        if (lhs != rhs && !sink.add("comultiplication multiplicative", {i, j})) goto mult_done;
      }
    }
  mult_done:;
  }
  ViolationSink sink{out};
  if (comultiply(a, a.unit()) != tensor(a.unit(), a.unit(), p)) sink.add("comultiplication unital", {}, "Delta(1) != 1 (x) 1");
  if (counit_of(a, a.unit()) != 1) sink.add("counit unital", {}, "eps(1) != 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (counit_of(a, a.product_view(i, j)) != mul_mod(a.counit()[i], a.counit()[j], p)) {
        if (!sink.add("counit multiplicative", {i, j})) return;
      }
}

void check_antipode(const StructuredAlgebra& a, const ProductTable& t, std::vector<AxiomViolation>& out) {
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  ViolationSink sink{out};
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = a.coproduct_view(i);
    FpVector left(n, 0), right(n, 0);
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      if (d[jk] == 0) continue;
      const std::size_t j = jk / n, k = jk % n;
      axpy(left, d[jk], t.multiply(a.antipode().column(j), basis_element(a, k)), p);
      axpy(right, d[jk], t.multiply(basis_element(a, j), a.antipode().column(k)), p);
    }
    const FpVector expected = scale(a.unit(), a.counit()[i], p);
    if (left != expected && !sink.add("antipode", {i}, "m(S (x) id) Delta(e_i) != eps(e_i) 1")) return;
    if (right != expected && !sink.add("antipode", {i}, "m(id (x) S) Delta(e_i) != eps(e_i) 1")) return;
  }
}

}  // namespace

std::vector<AxiomViolation> validate(const StructuredAlgebra& a) {
  check_shapes(a);
  std::vector<AxiomViolation> out;
  const AlgebraKind kind = a.kind();
  const ProductTable table(a);
  if (has_algebra_part(kind)) check_algebra(a, table, out);
  if (has_coalgebra_part(kind)) {
    if (!a.has_coalgebra()) {
      out.push_back({"coalgebra data present", {}, "declared kind requires comultiplication and counit"});
      return out;
    }
    check_coalgebra(a, out);
  }
  if (kind == AlgebraKind::bialgebra || kind == AlgebraKind::hopf) check_bialgebra(a, table, out);
  if (kind == AlgebraKind::hopf) {
    if (!a.has_antipode()) {
      out.push_back({"antipode present", {}, "declared kind hopf requires an antipode"});
    } else {
      check_antipode(a, table, out);
    }
  }
  return out;
}

void require_valid(const StructuredAlgebra& a) {
  const auto violations = validate(a);
  if (violations.empty()) return;
  const auto& v = violations.front();
  std::string msg = "axiom violated: " + v.axiom;
  if (!v.witness.empty()) {
    msg += " at basis (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) msg += (i ? ", " : "") + a.labels().at(v.witness[i]);
    msg += ")";
  }
  if (!v.detail.empty()) msg += ": " + v.detail;
  throw MathError(msg);
}

// ---------------------------------------------------------------------------
// Subspace restriction

namespace {

std::string combination_label(const StructuredAlgebra& a, std::span<const Residue> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (v[i] != 1) out += std::to_string(v[i]) + "*";
    out += a.labels()[i];
  }
  return out.empty() ? "0" : out;
}

// Reshape a tensor-square vector as an n x n matrix.
FpMatrix as_square(std::span<const Residue> t, std::size_t n, std::uint32_t p) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = t[i * n + j];
  return m;
}

}  // namespace

bool comult_stable(const StructuredAlgebra& a, const Subspace& v) {
  require_coalgebra(a);
  const std::size_t n = a.dim();
  const FpMatrix ann = annihilator(v).basis();
  if (ann.rows() == 0) return true;
  const FpMatrix ann_t = ann.transpose();
  for (std::size_t r = 0; r < v.dim(); ++r) {
    const FpMatrix m = as_square(comultiply(a, v.basis().row(r)), n, a.p());
    if (!(ann * m).is_zero() || !(m * ann_t).is_zero()) return false;
  }
  return true;
}

bool mult_closed(const StructuredAlgebra& a, const Subspace& v) {
  const ProductTable t(a);
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t s = 0; s < v.dim(); ++s)
      if (!v.contains(t.multiply(v.basis().row(r), v.basis().row(s)))) return false;
  return true;
}

StructuredAlgebra restrict_to_subspace(const StructuredAlgebra& a, const Subspace& v) {
  if (v.ambient_dim() != a.dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
  if (v.dim() == 0) throw MathError("cannot restrict to the zero subspace");
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  const std::size_t k = v.dim();

  std::vector<std::string> labels;
  for (std::size_t r = 0; r < k; ++r) labels.push_back(combination_label(a, v.basis().row(r)));
  StructuredAlgebra s(p, std::move(labels), a.kind());

  if (has_algebra_part(a.kind())) {
    const ProductTable t(a);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t q = 0; q < k; ++q) {
        auto c = v.coordinates(t.multiply(v.basis().row(r), v.basis().row(q)));
        if (!c) throw MathError("subspace not closed under multiplication");
        s.set_product(r, q, *c);
      }
    auto u = v.coordinates(a.unit());
    if (!u) throw MathError("subspace does not contain the unit");
    s.set_unit(*u);
  }
  if (has_coalgebra_part(a.kind()) && a.has_coalgebra()) {
    if (!comult_stable(a, v)) throw MathError("subspace not stable under comultiplication");
    const auto& piv = v.pivots();
    FpMatrix comult(p, k, k * k);
    FpVector counit(k);
    for (std::size_t r = 0; r < k; ++r) {
      const FpVector d = comultiply(a, v.basis().row(r));
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) comult(r, x * k + y) = d[piv[x] * n + piv[y]];
      counit[r] = counit_of(a, v.basis().row(r));
    }
    s.set_comult_table(std::move(comult));
    s.set_counit(counit);
  }
  if (a.has_antipode()) {
    FpMatrix anti(p, k, k);
    for (std::size_t r = 0; r < k; ++r) {
      auto c = v.coordinates(a.antipode() * v.basis().row(r));
      if (!c) throw MathError("subspace not stable under the antipode");
      anti.set_column(r, *c);
    }
    s.set_antipode(std::move(anti));
  }
  return s;
}

StructuredAlgebra quotient_structure(const StructuredAlgebra& a, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ideal.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) keep.push_back(j);
  if (keep.empty()) throw MathError("quotient by the whole space");
  const std::size_t q = keep.size();

  auto project = [&](std::span<const Residue> v) {
    const FpVector r = ideal.reduce(v);
    FpVector out(q);
    for (std::size_t t = 0; t < q; ++t) out[t] = r[keep[t]];
    return out;
  };

  std::vector<std::string> labels;
  for (auto j : keep) labels.push_back(a.labels()[j]);
  StructuredAlgebra out(p, std::move(labels), a.kind());
  if (has_algebra_part(a.kind())) {
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = 0; y < q; ++y) out.set_product(x, y, project(a.product_view(keep[x], keep[y])));
    out.set_unit(project(a.unit()));
  }
  if (a.has_coalgebra()) {
    FpMatrix proj(p, q, n);
    for (std::size_t j = 0; j < n; ++j) proj.set_column(j, project(basis_element(a, j)));
    const FpMatrix proj_t = proj.transpose();
    FpMatrix comult(p, q, q * q);
    FpVector counit(q);
    for (std::size_t x = 0; x < q; ++x) {
      const auto d = a.coproduct_view(keep[x]);
      FpMatrix m(p, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d[i * n + j];
      const FpMatrix pm = proj * m * proj_t;
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) comult(x, i * q + j) = pm(i, j);
      counit[x] = a.counit()[keep[x]];
    }
    out.set_comult_table(std::move(comult));
    out.set_counit(counit);
  }
  if (a.has_antipode()) {
    FpMatrix s(p, q, q);
    for (std::size_t x = 0; x < q; ++x) s.set_column(x, project(a.antipode().column(keep[x])));
    out.set_antipode(std::move(s));
  }
  return out;
}

}  // namespace hopf
