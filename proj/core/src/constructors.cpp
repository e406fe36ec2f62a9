#include "hopf/constructors.hpp"

#include <map>
#include <stdexcept>

#include "hopf/cohomology.hpp"
#include "hopf/errors.hpp"

namespace hopf {

StructuredAlgebra group_algebra(std::uint32_t p, const GroupTable& g) {
  require_prime(p);
  validate_group(g);
  const std::size_t n = g.order;
  StructuredAlgebra h(p, g.labels, AlgebraKind::hopf);
  h.enable_coalgebra();
  FpMatrix s(p, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.set_product(a, b, unit_vector(n, g.mul(a, b)));
    h.set_coproduct(a, unit_vector(n * n, a * n + a));
    s(g.inverse(a), a) = 1;
  }
  h.set_unit(unit_vector(n, g.identity));
  h.set_counit(FpVector(n, 1));
  h.set_antipode(std::move(s));
  return h;
}

StructuredAlgebra group_dual(std::uint32_t p, const GroupTable& g) {
  require_prime(p);
  validate_group(g);
  const std::size_t n = g.order;
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("f_" + l);
  StructuredAlgebra h(p, std::move(labels), AlgebraKind::hopf);
  h.enable_coalgebra();
  FpMatrix s(p, n, n);
  for (std::size_t x = 0; x < n; ++x) {
    h.set_product(x, x, unit_vector(n, x));
    FpVector delta(n * n, 0);
    for (std::size_t u = 0; u < n; ++u) delta[u * n + g.mul(g.inverse(u), x)] = 1;
    h.set_coproduct(x, delta);
    s(g.inverse(x), x) = 1;
  }
  h.set_unit(FpVector(n, 1));
  h.set_counit(unit_vector(n, g.identity));
  h.set_antipode(std::move(s));
  return h;
}

// ---------------------------------------------------------------------------
// Restricted enveloping algebras

RestrictedLieData abelian_lie_data(std::uint32_t p, std::size_t d) {
  RestrictedLieData data;
  data.p = p;
  for (std::size_t i = 0; i < d; ++i) data.labels.push_back("x" + std::to_string(i));
  data.brackets.assign(d * d, zero_vector(d));
  data.pmap.assign(d, zero_vector(d));
  return data;
}

namespace {

FpVector lie_bracket(const RestrictedLieData& data, std::span<const Residue> u, std::span<const Residue> v) {
  const std::size_t d = data.dim();
  FpVector out = zero_vector(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < d; ++b)
      if (v[b] != 0) axpy(out, mul_mod(u[a], v[b], data.p), data.bracket(a, b), data.p);
  }
  return out;
}

std::string generator_word(const RestrictedLieData& data, std::size_t i, std::size_t j) {
  return "(" + data.labels[i] + ", " + data.labels[j] + ")";
}

}  // namespace

void validate_lie(const RestrictedLieData& data) {
  require_prime(data.p);
  const std::size_t d = data.dim();
  if (data.brackets.size() != d * d || data.pmap.size() != d)
    throw std::invalid_argument("restricted Lie data: wrong number of brackets or p-map images");
  for (const auto& v : data.brackets)
    if (v.size() != d) throw std::invalid_argument("restricted Lie data: bracket vector of wrong length");
  for (const auto& v : data.pmap)
    if (v.size() != d) throw std::invalid_argument("restricted Lie data: p-map vector of wrong length");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      if (!is_zero(add(data.bracket(i, j), data.bracket(j, i), data.p)))
        throw MathError("not a Lie algebra: bracket not alternating at " + generator_word(data, i, j));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const FpVector xi = unit_vector(d, i), xj = unit_vector(d, j), xk = unit_vector(d, k);
        FpVector sum = lie_bracket(data, xi, data.bracket(j, k));
        sum = add(sum, lie_bracket(data, xj, data.bracket(k, i)), data.p);
        sum = add(sum, lie_bracket(data, xk, data.bracket(i, j)), data.p);
        if (!is_zero(sum))
          throw MathError("not a Lie algebra: Jacobi identity fails on " + data.labels[i] + ", " + data.labels[j] +
                          ", " + data.labels[k]);
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      FpVector iterated = unit_vector(d, j);
      for (std::uint32_t r = 0; r < data.p; ++r) iterated = lie_bracket(data, unit_vector(d, i), iterated);
      if (iterated != lie_bracket(data, data.pmap[i], unit_vector(d, j)))
        throw MathError("not a restricted structure: ad(" + data.labels[i] + ")^p != ad(" + data.labels[i] +
                        "^[p]) on " + data.labels[j]);
    }
}

namespace {

using Word = std::vector<std::uint8_t>;

/// Rewrites words in the generators into PBW normal form. Leftmost
/// violation first: an inversion x_j x_i (j > i) becomes x_i x_j + [x_j, x_i],
/// otherwise a run x_i^p becomes x_i^[p].
class Straightener {
 public:
  explicit Straightener(const RestrictedLieData& data) : data_(data), d_(data.dim()) {
    size_ = 1;
    for (std::size_t i = 0; i < d_; ++i) size_ *= data.p;
  }

  std::size_t size() const { return size_; }

  Word word_of(std::size_t monomial) const {
    Word w;
    for (std::size_t i = 0; i < d_; ++i) {
      const std::size_t e = monomial % data_.p;
      monomial /= data_.p;
      w.insert(w.end(), e, static_cast<std::uint8_t>(i));
    }
    return w;
  }

  const FpVector& normal_form(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    FpVector result = compute(w);
    return memo_.emplace(w, std::move(result)).first->second;
  }

 private:
  FpVector compute(const Word& w) {
    const std::uint32_t p = data_.p;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] <= w[k + 1]) continue;
      Word swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      FpVector out = normal_form(swapped);
      const FpVector& br = data_.bracket(w[k], w[k + 1]);
      for (std::size_t c = 0; c < d_; ++c) {
        if (br[c] == 0) continue;
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        shorter.push_back(static_cast<std::uint8_t>(c));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
        axpy(out, br[c], normal_form(shorter), p);
      }
      return out;
    }
    for (std::size_t k = 0; k + p <= w.size(); ++k) {
      std::size_t run = 1;
      while (run < p && w[k + run] == w[k]) ++run;
      if (run < p) continue;
      FpVector out = zero_vector(size_);
      const FpVector& image = data_.pmap[w[k]];
      for (std::size_t c = 0; c < d_; ++c) {
        if (image[c] == 0) continue;
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        shorter.push_back(static_cast<std::uint8_t>(c));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + p), w.end());
        axpy(out, image[c], normal_form(shorter), p);
      }
      return out;
    }
    std::size_t index = 0, place = 1, pos = 0;
    for (std::size_t i = 0; i < d_; ++i, place *= p) {
      std::size_t e = 0;
      while (pos < w.size() && w[pos] == i) ++e, ++pos;
      index += e * place;
    }
    return unit_vector(size_, index);
  }

  const RestrictedLieData& data_;
  std::size_t d_;
  std::size_t size_;
  std::map<Word, FpVector> memo_;
};

std::string monomial_label(const RestrictedLieData& data, std::size_t monomial) {
  std::string out;
  for (std::size_t i = 0; i < data.dim(); ++i) {
    const std::size_t e = monomial % data.p;
    monomial /= data.p;
    if (e == 0) continue;
    out += data.labels[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string describe(const AxiomViolation& v) {
  std::string msg = v.axiom;
  if (!v.witness.empty()) {
    msg += " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) msg += (i ? ", " : "") + std::to_string(v.witness[i]);
    msg += ")";
  }
  return msg;
}

}  // namespace

StructuredAlgebra restricted_enveloping(const RestrictedLieData& data) {
  validate_lie(data);
  const std::uint32_t p = data.p;
  const std::size_t d = data.dim();
  Straightener st(data);
  const std::size_t n = st.size();

  std::vector<std::string> labels;
  for (std::size_t m = 0; m < n; ++m) labels.push_back(monomial_label(data, m));
  StructuredAlgebra u(p, std::move(labels), AlgebraKind::hopf);
  std::vector<Word> words;
  for (std::size_t m = 0; m < n; ++m) words.push_back(st.word_of(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Word w = words[a];
      w.insert(w.end(), words[b].begin(), words[b].end());
      u.set_product(a, b, st.normal_form(w));
    }
  u.set_unit(unit_vector(n, 0));

  u.enable_coalgebra();
  const ProductTable table(u);
  const FpVector one = unit_vector(n, 0);
  std::vector<FpVector> delta_gen;
  std::size_t place = 1;
  for (std::size_t i = 0; i < d; ++i, place *= p) {
    const FpVector x = unit_vector(n, place);
    delta_gen.push_back(add(tensor(x, one, p), tensor(one, x, p), p));
  }
  FpMatrix antipode(p, n, n);
  for (std::size_t m = 0; m < n; ++m) {
    FpVector delta = tensor(one, one, p);
    for (auto letter : words[m]) delta = table.multiply_tensor(delta, delta_gen[letter]);
    u.set_coproduct(m, delta);
    const Word reversed(words[m].rbegin(), words[m].rend());
    const FpVector& s = st.normal_form(reversed);
    antipode.set_column(m, words[m].size() % 2 == 0 ? s : scale(s, neg_mod(1, p), p));
  }
  u.set_counit(one);
  u.set_antipode(std::move(antipode));

  const auto violations = validate(u);
  if (!violations.empty()) throw MathError("not a restricted structure: " + describe(violations.front()));
  return u;
}

// ---------------------------------------------------------------------------
// Crossed products

CrossedProductData trivial_crossed_data(const StructuredAlgebra& a, const StructuredAlgebra& h) {
  const std::uint32_t p = a.p();
  CrossedProductData data;
  for (std::size_t x = 0; x < h.dim(); ++x)
    for (std::size_t r = 0; r < a.dim(); ++r) data.action.push_back(scale(unit_vector(a.dim(), r), h.counit()[x], p));
  for (std::size_t x = 0; x < h.dim(); ++x)
    for (std::size_t y = 0; y < h.dim(); ++y)
      data.sigma.push_back(scale(a.unit(), mul_mod(h.counit()[x], h.counit()[y], p), p));
  return data;
}

namespace {

struct TensorTerm2 {
  std::size_t i, j;
  Residue c;
};
struct TensorTerm3 {
  std::size_t i, j, k;
  Residue c;
};

std::vector<TensorTerm2> terms2(std::span<const Residue> t, std::size_t n) {
  std::vector<TensorTerm2> out;
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] != 0) out.push_back({x / n, x % n, t[x]});
  return out;
}

}  // namespace

StructuredAlgebra crossed_product(const StructuredAlgebra& a, const StructuredAlgebra& h, const CrossedProductData& data) {
  if (!has_algebra_part(a.kind()) || !has_algebra_part(h.kind()) || !h.has_coalgebra())
    throw std::invalid_argument("crossed product needs an algebra A and a bialgebra H");
  if (a.p() != h.p()) throw std::invalid_argument("modulus mismatch");
  const std::uint32_t p = a.p();
  const std::size_t da = a.dim(), dh = h.dim();
  if (data.action.size() != dh * da || data.sigma.size() != dh * dh)
    throw std::invalid_argument("crossed product data has the wrong shape");
  for (const auto& v : data.action)
    if (v.size() != da) throw std::invalid_argument("action value of wrong length");
  for (const auto& v : data.sigma)
    if (v.size() != da) throw std::invalid_argument("cocycle value of wrong length");

  const ProductTable ta(a);
  auto act = [&](std::size_t x, std::span<const Residue> b) {
    FpVector out = zero_vector(da);
    for (std::size_t r = 0; r < da; ++r)
      if (b[r] != 0) axpy(out, b[r], data.action[x * da + r], p);
    return out;
  };

  std::vector<std::vector<TensorTerm2>> delta(dh);
  for (std::size_t x = 0; x < dh; ++x) delta[x] = terms2(h.coproduct_view(x), dh);

  for (std::size_t x = 0; x < dh; ++x) {
    if (act(x, a.unit()) != scale(a.unit(), h.counit()[x], p))
      throw MathError("measuring violation: h.1 != eps(h)1 for h = " + h.labels()[x]);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t s = 0; s < da; ++s) {
        const FpVector lhs = act(x, ta.multiply(unit_vector(da, r), unit_vector(da, s)));
        FpVector rhs = zero_vector(da);
        for (const auto& t : delta[x])
          axpy(rhs, t.c, ta.multiply(act(t.i, unit_vector(da, r)), act(t.j, unit_vector(da, s))), p);
        if (lhs != rhs)
          throw MathError("measuring violation: h.(ab) != (h_1.a)(h_2.b) for h = " + h.labels()[x] + ", a = " +
                          a.labels()[r] + ", b = " + a.labels()[s]);
      }
  }

  // sigma * tau = eps (x) eps 1 for tau in Hom(H (x) H, A); unknown
  // (x * dh + y) * da + c is the coefficient of a_c in tau(h_x, h_y).
  {
    FpMatrix system(p, dh * dh * da, dh * dh * da);
    FpVector rhs(dh * dh * da, 0);
    for (std::size_t x = 0; x < dh; ++x)
      for (std::size_t y = 0; y < dh; ++y) {
        const std::size_t row = (x * dh + y) * da;
        for (const auto& tx : delta[x])
          for (const auto& ty : delta[y]) {
            const Residue c = mul_mod(tx.c, ty.c, p);
            const FpVector& sig = data.sigma[tx.i * dh + ty.i];
            const std::size_t col = (tx.j * dh + ty.j) * da;
            for (std::size_t q = 0; q < da; ++q) {
              const FpVector prod = ta.multiply(sig, unit_vector(da, q));
              for (std::size_t out = 0; out < da; ++out) {
                Residue& cell = system(row + out, col + q);
                cell = add_mod(cell, mul_mod(c, prod[out], p), p);
              }
            }
          }
        const Residue e = mul_mod(h.counit()[x], h.counit()[y], p);
        for (std::size_t out = 0; out < da; ++out) rhs[row + out] = mul_mod(e, a.unit()[out], p);
      }
    if (!solve(system, rhs)) throw MathError("sigma is not convolution invertible");
  }

  std::vector<std::vector<TensorTerm3>> delta2(dh);
  for (std::size_t x = 0; x < dh; ++x)
    for (const auto& t : delta[x])
      for (const auto& t1 : delta[t.i]) delta2[x].push_back({t1.i, t1.j, t.j, mul_mod(t.c, t1.c, p)});

  const ProductTable th(h);
  std::vector<std::string> labels;
  for (const auto& la : a.labels())
    for (const auto& lh : h.labels()) labels.push_back(la + "#" + lh);
  StructuredAlgebra out(p, std::move(labels), AlgebraKind::algebra);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t s = 0; s < dh; ++s)
      for (std::size_t t = 0; t < da; ++t)
        for (std::size_t u = 0; u < dh; ++u) {
          FpVector value = zero_vector(da * dh);
          const FpVector ar = unit_vector(da, r);
          for (const auto& hs : delta2[s])
            for (const auto& ku : delta[u]) {
              const FpVector left = ta.multiply(ar, act(hs.i, unit_vector(da, t)));
              const FpVector apart = ta.multiply(left, data.sigma[hs.j * dh + ku.i]);
              const FpVector hpart = th.multiply(unit_vector(dh, hs.k), unit_vector(dh, ku.j));
              axpy(value, mul_mod(hs.c, ku.c, p), tensor(apart, hpart, p), p);
            }
          out.set_product(r * dh + s, t * dh + u, value);
        }
  out.set_unit(tensor(a.unit(), h.unit(), p));
  const auto violations = validate(out);
  if (!violations.empty()) throw MathError("crossed product fails " + describe(violations.front()));
  return out;
}

// ---------------------------------------------------------------------------
// Adjoining an element with prescribed comultiplication defect

StructuredAlgebra adjoin_cocycle_element(const CocycleExtensionSpec& spec) {
  const StructuredAlgebra& l = spec.base;
  const std::uint32_t p = l.p();
  const std::size_t m = l.dim();
  if (l.kind() != AlgebraKind::hopf || !l.has_antipode()) throw std::invalid_argument("base must be a Hopf algebra");
  if (spec.u.size() != m * m) throw std::invalid_argument("u must lie in L (x) L");
  if (spec.exponent < 1) throw std::invalid_argument("relation exponent must be at least 1");
  if (spec.coefficients.size() != spec.exponent)
    throw std::invalid_argument("relation needs one coefficient per power z^{p^i}, i < l");
  if (spec.constant.size() != m) throw std::invalid_argument("relation constant must lie in L");
  require_valid(l);
  if (!is_commutative(l)) throw MathError("L not commutative");
  if (!is_zero(coboundary(l, spec.u, 2))) throw MathError("u not a cocycle");

  std::size_t big_n = 1;  // p^l
  std::vector<std::size_t> p_powers;
  for (std::size_t i = 0; i < spec.exponent; ++i) {
    p_powers.push_back(big_n);
    big_n *= p;
  }
  const std::size_t n = m * big_n;
  const ProductTable tl(l);

  // b * v for b in L and v in H = sum_s L z^s.
  auto scale_by_l = [&](std::span<const Residue> b, std::span<const Residue> v) {
    FpVector out = zero_vector(n);
    for (std::size_t s = 0; s < big_n; ++s) {
      const auto block = v.subspan(s * m, m);
      if (is_zero(block)) continue;
      const FpVector prod = tl.multiply(b, block);
      std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(s * m));
    }
    return out;
  };
  auto embed = [&](std::span<const Residue> b, std::size_t s) {
    FpVector out = zero_vector(n);
    std::copy(b.begin(), b.end(), out.begin() + static_cast<std::ptrdiff_t>(s * m));
    return out;
  };

  // z^k for 0 <= k <= 2 p^l - 2.
  std::vector<FpVector> zpow;
  for (std::size_t k = 0; k < big_n; ++k) zpow.push_back(embed(l.unit(), k));
  {
    FpVector top = embed(scale(spec.constant, neg_mod(1, p), p), 0);
    for (std::size_t i = 0; i < spec.exponent; ++i)
      axpy(top, neg_mod(spec.coefficients[i] % p, p), zpow[p_powers[i]], p);
    zpow.push_back(std::move(top));
  }
  while (zpow.size() < 2 * big_n - 1) {
    const FpVector& prev = zpow.back();
    FpVector next = zero_vector(n);
    for (std::size_t s = 0; s + 1 < big_n; ++s)
      std::copy(prev.begin() + static_cast<std::ptrdiff_t>(s * m), prev.begin() + static_cast<std::ptrdiff_t>((s + 1) * m),
                next.begin() + static_cast<std::ptrdiff_t>((s + 1) * m));
    const std::span<const Residue> overflow(prev.data() + (big_n - 1) * m, m);
    next = add(next, scale_by_l(overflow, zpow[big_n]), p);
    zpow.push_back(std::move(next));
  }

  std::vector<std::string> labels(n);
  for (std::size_t s = 0; s < big_n; ++s)
    for (std::size_t r = 0; r < m; ++r) {
      const std::string zs = s == 0 ? "" : s == 1 ? "z" : "z^" + std::to_string(s);
      const std::string& b = l.labels()[r];
      labels[s * m + r] = s == 0 ? b : (b == "1" ? zs : b + zs);
    }
  StructuredAlgebra h(p, std::move(labels), AlgebraKind::hopf);
  for (std::size_t s = 0; s < big_n; ++s)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t q = 0; q < big_n; ++q)
        for (std::size_t t = 0; t < m; ++t)
          h.set_product(s * m + r, q * m + t, scale_by_l(l.product_view(r, t), zpow[s + q]));
  h.set_unit(embed(l.unit(), 0));

  const ProductTable th(h);
  auto embed2 = [&](std::span<const Residue> t) {
    FpVector out = zero_vector(n * n);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) out[x * n + y] = t[x * m + y];
    return out;
  };
  const FpVector one = h.unit();
  const FpVector z = embed(l.unit(), 1);
  const FpVector delta_z = add(add(tensor(z, one, p), tensor(one, z, p), p), embed2(spec.u), p);
  std::vector<FpVector> dz_pow{tensor(one, one, p)};
  for (std::size_t k = 1; k <= big_n; ++k) dz_pow.push_back(th.multiply_tensor(dz_pow.back(), delta_z));

  FpVector expected = embed2(comultiply(l, spec.constant));
  expected = scale(expected, neg_mod(1, p), p);
  for (std::size_t i = 0; i < spec.exponent; ++i)
    axpy(expected, neg_mod(spec.coefficients[i] % p, p), dz_pow[p_powers[i]], p);
  if (dz_pow[big_n] != expected)
    throw MathError("comultiplication incompatible with relation: Delta(z)^{p^l} differs from Delta of the relation");

  h.enable_coalgebra();
  FpVector counit = zero_vector(n);
  for (std::size_t r = 0; r < m; ++r) counit[r] = l.counit()[r];
  h.set_counit(counit);
  for (std::size_t s = 0; s < big_n; ++s)
    for (std::size_t r = 0; r < m; ++r)
      h.set_coproduct(s * m + r, th.multiply_tensor(embed2(l.coproduct_view(r)), dz_pow[s]));

  // 0 = eps(z) 1 = S(z) + z + sum S(u_1) u_2.
  FpVector s_z = scale(z, neg_mod(1, p), p);
  for (const auto& t : terms2(spec.u, m))
    axpy(s_z, neg_mod(t.c, p), embed(tl.multiply(l.antipode().column(t.i), unit_vector(m, t.j)), 0), p);
  FpMatrix antipode(p, n, n);
  FpVector s_z_pow = one;
  for (std::size_t s = 0; s < big_n; ++s) {
    for (std::size_t r = 0; r < m; ++r)
      antipode.set_column(s * m + r, th.multiply(embed(l.antipode().column(r), 0), s_z_pow));
    s_z_pow = th.multiply(s_z_pow, s_z);
  }
  h.set_antipode(std::move(antipode));

  const auto violations = validate(h);
  if (!violations.empty()) {
    const auto& v = violations.front();
    if (v.axiom.find("comultiplication") != std::string::npos)
      throw MathError("comultiplication incompatible with relation: " + describe(v));
    throw MathError("adjoined algebra fails " + describe(v));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Quotients

Subspace augmentation_left_ideal(const StructuredAlgebra& h, const Subspace& l) {
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  const FpMatrix eps = FpMatrix::from_vectors(p, n, {h.counit()});
  const Subspace l_plus = intersect(l, kernel(eps));
  const ProductTable table(h);
  std::vector<FpVector> gens;
  for (std::size_t r = 0; r < l_plus.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) gens.push_back(table.multiply(l_plus.basis().row(r), unit_vector(n, j)));
  return Subspace::span(p, n, gens);
}

StructuredAlgebra quotient_by_hopf_ideal(const StructuredAlgebra& h, const Subspace& ideal) {
  const std::uint32_t p = h.p();
  const std::size_t n = h.dim();
  if (ideal.ambient_dim() != n) throw std::invalid_argument("subspace ambient dimension mismatch");
  if (!h.has_coalgebra() || !has_algebra_part(h.kind())) throw std::invalid_argument("quotient needs a bialgebra");
  const ProductTable table(h);
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const auto v = ideal.basis().row(r);
    for (std::size_t j = 0; j < n; ++j) {
      const FpVector e = unit_vector(n, j);
      if (!ideal.contains(table.multiply(v, e)) || !ideal.contains(table.multiply(e, v)))
        throw MathError("not a Hopf ideal: not a two-sided ideal");
    }
  }
  const FpMatrix ann = annihilator(ideal).basis();
  const FpMatrix ann_t = ann.transpose();
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const FpVector d = comultiply(h, ideal.basis().row(r));
    FpMatrix sq(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sq(i, j) = d[i * n + j];
    if (!(ann * sq * ann_t).is_zero()) throw MathError("not a Hopf ideal: not a coideal");
  }
  for (std::size_t r = 0; r < ideal.dim(); ++r)
    if (counit_of(h, ideal.basis().row(r)) != 0) throw MathError("not a Hopf ideal: counit does not vanish");
  if (h.has_antipode())
    for (std::size_t r = 0; r < ideal.dim(); ++r)
      if (!ideal.contains(apply_antipode(h, ideal.basis().row(r))))
        throw MathError("not a Hopf ideal: not stable under the antipode");
  StructuredAlgebra q = quotient_structure(h, ideal);
  require_valid(q);
  return q;
}

}  // namespace hopf
