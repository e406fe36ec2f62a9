#include "hopf/groups.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopf/errors.hpp"
#include "hopf/gf_linalg.hpp"

namespace hopf {

std::size_t GroupTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order; ++b)
    if (mul(a, b) == identity) return b;
  throw MathError("invalid group table: element without inverse");
}

void validate_group(const GroupTable& g) {
  const std::size_t n = g.order;
  if (n == 0) throw MathError("invalid group table: empty group");
  if (g.table.size() != n * n) throw MathError("invalid group table: table size is not order^2");
  if (g.identity >= n) throw MathError("invalid group table: identity out of range");
  for (auto v : g.table)
    if (v >= n) throw MathError("invalid group table: entry out of range");
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) seen[g.mul(a, b)] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }))
      throw MathError("invalid group table: row " + std::to_string(a) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) seen[g.mul(b, a)] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }))
      throw MathError("invalid group table: column " + std::to_string(a) + " is not a permutation");
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
      throw MathError("invalid group table: identity is not neutral");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw MathError("invalid group table: not associative at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");
}

bool is_p_group(const GroupTable& g, std::uint32_t p) {
  std::size_t n = g.order;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_abelian(const GroupTable& g) {
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

namespace {

std::vector<std::string> default_labels(std::size_t n, std::size_t identity) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == identity ? "e" : "g" + std::to_string(i));
  return labels;
}

template <class Mul>
GroupTable tabulate(std::size_t n, Mul mul) {
  GroupTable g;
  g.order = n;
  g.identity = 0;
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = static_cast<std::uint32_t>(mul(a, b));
  g.labels = default_labels(n, 0);
  return g;
}

std::size_t pow_mod_size(std::size_t base, std::size_t e, std::size_t m) {
  std::size_t r = 1 % m;
  for (std::size_t i = 0; i < e; ++i) r = r * base % m;
  return r;
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  return tabulate(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = h.order;
  GroupTable t = tabulate(g.order * m, [&](std::size_t a, std::size_t b) {
    return g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  });
  t.identity = g.identity * m + h.identity;
  t.labels = default_labels(t.order, t.identity);
  return t;
}

GroupTable metacyclic_group(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
  // Element index j * m + i stands for a^i b^j.
  GroupTable g = tabulate(m * n, [=](std::size_t x, std::size_t y) {
    const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::size_t ai = (i + k * pow_mod_size(r, j, m)) % m;
    std::size_t bj = j + l;
    if (bj >= n) {
      bj -= n;
      ai = (ai + s) % m;
    }
    return bj * m + ai;
  });
  validate_group(g);
  return g;
}

GroupTable semidirect_product(const GroupTable& normal, std::size_t n, const std::vector<std::uint32_t>& phi) {
  const std::size_t m = normal.order;
  if (phi.size() != m) throw std::invalid_argument("automorphism size mismatch");
  if (normal.identity != 0) throw std::invalid_argument("normal subgroup must have identity at index 0");
  std::vector<std::vector<std::uint32_t>> powers{std::vector<std::uint32_t>(m)};
  for (std::size_t x = 0; x < m; ++x) powers[0][x] = static_cast<std::uint32_t>(x);
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<std::uint32_t> next(m);
    for (std::size_t x = 0; x < m; ++x) next[x] = phi[powers[j - 1][x]];
    powers.push_back(std::move(next));
  }
  GroupTable g = tabulate(m * n, [&](std::size_t a, std::size_t b) {
    const std::size_t x = a % m, j = a / m, y = b % m, l = b / m;
    return ((j + l) % n) * m + normal.mul(x, powers[j][y]);
  });
  validate_group(g);
  return g;
}

GroupTable heisenberg_group(std::uint32_t p) {
  const std::size_t q = p;
  return tabulate(q * q * q, [q](std::size_t x, std::size_t y) {
    const std::size_t a = x / (q * q), b = (x / q) % q, c = x % q;
    const std::size_t a2 = y / (q * q), b2 = (y / q) % q, c2 = y % q;
    return ((a + a2) % q) * q * q + ((b + b2) % q) * q + (c + c2 + a * b2) % q;
  });
}

GroupTable pauli_group() {
  // Index k * 4 + a * 2 + b stands for i^k X^a Z^b.
  return tabulate(16, [](std::size_t x, std::size_t y) {
    const std::size_t k1 = x / 4, a1 = (x / 2) % 2, b1 = x % 2;
    const std::size_t k2 = y / 4, a2 = (y / 2) % 2, b2 = y % 2;
    return ((k1 + k2 + 2 * b1 * a2) % 4) * 4 + (a1 ^ a2) * 2 + (b1 ^ b2);
  });
}

namespace {

bool parse_number(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) return false;
  }
  out = v;
  return true;
}

GroupTable factor_by_name(std::string_view name) {
  std::size_t n = 0;
  if (name == "sd16") return metacyclic_group(8, 2, 3, 0);
  if (name == "m16") return metacyclic_group(8, 2, 5, 0);
  if (name == "c4:c4") return metacyclic_group(4, 4, 3, 0);
  if (name == "c9:c3") return metacyclic_group(9, 3, 4, 0);
  if (name == "pauli") return pauli_group();
  if (name == "k4:c4") {
    // C4 acts on C2 x C2 by swapping the factors.
    return semidirect_product(direct_product(cyclic_group(2), cyclic_group(2)), 4, {0, 2, 1, 3});
  }
  if (name.starts_with("heis") && parse_number(name.substr(4), n)) {
    if (!is_prime(static_cast<std::uint32_t>(n))) throw std::invalid_argument("heisenberg group needs a prime");
    return heisenberg_group(static_cast<std::uint32_t>(n));
  }
  if (name.size() > 1 && parse_number(name.substr(1), n) && n > 0) {
    switch (name[0]) {
      case 'c': return cyclic_group(n);
      case 'd':
        if (n >= 2) return metacyclic_group(n, 2, n - 1, 0);
        break;
      case 'q':
        if (n >= 8 && n % 4 == 0) return metacyclic_group(n / 2, 2, n / 2 - 1, n / 4);
        break;
      default: break;
    }
  }
  throw std::invalid_argument("unknown group name: " + std::string(name));
}

}  // namespace

GroupTable group_by_name(std::string_view name) {
  GroupTable result;
  bool first = true;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t end = std::min(name.find('x', start), name.size());
    const GroupTable f = factor_by_name(name.substr(start, end - start));
    result = first ? f : direct_product(result, f);
    first = false;
    start = end + 1;
  }
  return result;
}

std::vector<std::string> catalog_names(std::uint32_t p, std::size_t max_order) {
  std::vector<std::pair<std::size_t, std::string>> all;
  const std::string cp = "c" + std::to_string(p);
  all.emplace_back(1, "c1");
  if (p == 2) {
    for (const char* n : {"c2"}) all.emplace_back(2, n);
    for (const char* n : {"c4", "c2xc2"}) all.emplace_back(4, n);
    for (const char* n : {"c8", "c4xc2", "c2xc2xc2", "d4", "q8"}) all.emplace_back(8, n);
    for (const char* n : {"c16", "c8xc2", "c4xc4", "c4xc2xc2", "c2xc2xc2xc2", "d8", "q16", "sd16", "m16",
                          "c4:c4", "k4:c4", "pauli", "d4xc2", "q8xc2"})
      all.emplace_back(16, n);
    for (const char* n : {"c32", "c2xc2xc2xc2xc2"}) all.emplace_back(32, n);
  } else if (p == 3) {
    all.emplace_back(3, "c3");
    for (const char* n : {"c9", "c3xc3"}) all.emplace_back(9, n);
    for (const char* n : {"c27", "c9xc3", "c3xc3xc3", "heis3", "c9:c3"}) all.emplace_back(27, n);
    for (const char* n : {"c81", "c3xc3xc3xc3"}) all.emplace_back(81, n);
  } else {
    const std::size_t q = p;
    all.emplace_back(q, cp);
    all.emplace_back(q * q, "c" + std::to_string(q * q));
    all.emplace_back(q * q, cp + "x" + cp);
    all.emplace_back(q * q * q, "c" + std::to_string(q * q * q));
    all.emplace_back(q * q * q, "c" + std::to_string(q * q) + "x" + cp);
    all.emplace_back(q * q * q, cp + "x" + cp + "x" + cp);
    all.emplace_back(q * q * q, "heis" + std::to_string(p));
  }
  std::vector<std::string> out;
  for (auto& [order, name] : all)
    if (order <= max_order) out.push_back(name);
  return out;
}

}  // namespace hopf
