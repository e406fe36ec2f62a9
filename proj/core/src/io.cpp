#include "hopf/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hopf/errors.hpp"
#include "json.hpp"

namespace hopf {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text, std::string_view expected_format) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw FormatError("parse error at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  const auto it = doc.find("format");
  if (it == doc.end() || !it->is_string()) throw FormatError("format: missing field");
  if (it->get<std::string>() != expected_format)
    throw FormatError("format: expected \"" + std::string(expected_format) + "\", found \"" + it->get<std::string>() +
                      "\"");
  return doc;
}

const Json& field(const Json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw FormatError(std::string(name) + ": missing field");
  return *it;
}

long long as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<long long>();
}

std::size_t as_index(const Json& j, std::size_t bound, const std::string& where) {
  const long long v = as_integer(j, where);
  if (v < 0 || static_cast<unsigned long long>(v) >= bound)
    throw FormatError(where + ": index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw FormatError(where + ": expected a list");
  if (size && j.size() != *size)
    throw FormatError(where + ": expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::uint32_t parse_modulus(const Json& doc) {
  const long long p = as_integer(field(doc, "p"), "p");
  if (p < 2 || p > static_cast<long long>(kMaxModulus)) {
    if (p > static_cast<long long>(kMaxModulus) && is_prime(static_cast<std::uint32_t>(std::min<long long>(p, 1LL << 31))))
      throw FormatError("p: modulus larger than " + std::to_string(kMaxModulus) + " is not supported");
    throw FormatError("p: modulus not prime");
  }
  if (!is_prime(static_cast<std::uint32_t>(p))) throw FormatError("p: modulus not prime");
  return static_cast<std::uint32_t>(p);
}

std::size_t parse_dim(const Json& doc) {
  const long long d = as_integer(field(doc, "dim"), "dim");
  if (d < 1) throw FormatError("dim: must be positive");
  return static_cast<std::size_t>(d);
}

FpVector parse_coefficients(const Json& j, std::size_t n, std::uint32_t p, const std::string& where) {
  as_array(j, where, n);
  FpVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = reduce_mod(as_integer(j[i], where + "[" + std::to_string(i) + "]"), p);
  return v;
}

std::vector<std::string> parse_labels(const Json& doc, const char* key, std::size_t n) {
  std::vector<std::string> labels;
  const auto it = doc.find(key);
  if (it == doc.end()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
  }
  as_array(*it, key, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(*it)[i].is_string()) throw FormatError(std::string(key) + "[" + std::to_string(i) + "]: expected a string");
    labels.push_back((*it)[i].get<std::string>());
  }
  return labels;
}

Json coefficient_list(std::span<const Residue> v) {
  Json out = Json::array();
  for (auto c : v) out.push_back(static_cast<int>(c));
  return out;
}

/// Top-level keys on their own lines; list-valued keys with one element per line.
std::string layout(const Json& doc) {
  std::ostringstream out;
  out << "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out << "  " << Json(key).dump() << ": ";
    const bool long_list = value.is_array() && !value.empty() && value.front().is_array();
    if (long_list) {
      out << "[\n";
      for (std::size_t i = 0; i < value.size(); ++i)
        out << "    " << value[i].dump() << (i + 1 < value.size() ? ",\n" : "\n");
      out << "  ]";
    } else {
      out << value.dump();
    }
    out << (++k < doc.size() ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

}  // namespace

StructuredAlgebra parse_algebra(std::string_view text) {
  const Json doc = parse_document(text, kAlgebraFormat);
  const Json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) throw FormatError("kind: expected a string");
  const auto kind = parse_kind(kind_field.get<std::string>());
  if (!kind) throw FormatError("kind: unknown kind \"" + kind_field.get<std::string>() + "\"");
  const std::uint32_t p = parse_modulus(doc);
  const std::size_t n = parse_dim(doc);
  StructuredAlgebra a(p, parse_labels(doc, "basis", n), *kind);

  if (has_algebra_part(*kind)) {
    a.set_unit(parse_coefficients(field(doc, "unit"), n, p, "unit"));
    const Json& mult = as_array(field(doc, "mult"), "mult");
    std::vector<bool> seen(n * n, false);
    for (std::size_t e = 0; e < mult.size(); ++e) {
      const std::string where = "mult[" + std::to_string(e) + "]";
      const Json& entry = as_array(mult[e], where, 3);
      const std::size_t i = as_index(entry[0], n, where + " first index");
      const std::size_t j = as_index(entry[1], n, where + " second index");
      if (seen[i * n + j]) throw FormatError(where + ": duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      seen[i * n + j] = true;
      FpVector value(n, 0);
      const Json& terms = as_array(entry[2], where + " terms");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + " term " + std::to_string(t);
        const Json& term = as_array(terms[t], tw, 2);
        const std::size_t k = as_index(term[0], n, tw);
        value[k] = add_mod(value[k], reduce_mod(as_integer(term[1], tw + " coefficient"), p), p);
      }
      a.set_product(i, j, value);
    }
  } else {
    for (const char* key : {"unit", "mult"})
      if (doc.contains(key)) throw FormatError(std::string(key) + ": not allowed for kind coalgebra");
  }

  if (has_coalgebra_part(*kind)) {
    a.enable_coalgebra();
    a.set_counit(parse_coefficients(field(doc, "counit"), n, p, "counit"));
    const Json& comult = as_array(field(doc, "comult"), "comult");
    std::vector<bool> seen(n, false);
    for (std::size_t e = 0; e < comult.size(); ++e) {
      const std::string where = "comult[" + std::to_string(e) + "]";
      const Json& entry = as_array(comult[e], where, 2);
      const std::size_t i = as_index(entry[0], n, where + " index");
      if (seen[i]) throw FormatError(where + ": duplicate entry for " + std::to_string(i));
      seen[i] = true;
      FpVector value(n * n, 0);
      const Json& terms = as_array(entry[1], where + " terms");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + " term " + std::to_string(t);
        const Json& term = as_array(terms[t], tw, 3);
        const std::size_t j = as_index(term[0], n, tw);
        const std::size_t k = as_index(term[1], n, tw);
        value[j * n + k] = add_mod(value[j * n + k], reduce_mod(as_integer(term[2], tw + " coefficient"), p), p);
      }
      a.set_coproduct(i, value);
    }
  } else {
    for (const char* key : {"counit", "comult", "antipode"})
      if (doc.contains(key)) throw FormatError(std::string(key) + ": not allowed for kind algebra");
  }

  if (const auto it = doc.find("antipode"); it != doc.end()) {
    as_array(*it, "antipode", n);
    FpMatrix s(p, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const FpVector row = parse_coefficients((*it)[r], n, p, "antipode[" + std::to_string(r) + "]");
      for (std::size_t c = 0; c < n; ++c) s(r, c) = row[c];
    }
    a.set_antipode(std::move(s));
  }
  return a;
}

std::string format_algebra(const StructuredAlgebra& a) {
  const std::size_t n = a.dim();
  Json doc;
  doc["format"] = kAlgebraFormat;
  doc["kind"] = to_string(a.kind());
  doc["p"] = a.p();
  doc["dim"] = n;
  doc["basis"] = a.labels();
  if (has_algebra_part(a.kind())) {
    doc["unit"] = coefficient_list(a.unit());
    Json mult = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto prod = a.product_view(i, j);
        Json terms = Json::array();
        for (std::size_t k = 0; k < n; ++k)
          if (prod[k] != 0) terms.push_back(Json::array({k, static_cast<int>(prod[k])}));
        if (!terms.empty()) mult.push_back(Json::array({i, j, terms}));
      }
    doc["mult"] = mult;
  }
  if (a.has_coalgebra()) {
    Json comult = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      const auto d = a.coproduct_view(i);
      Json terms = Json::array();
      for (std::size_t jk = 0; jk < n * n; ++jk)
        if (d[jk] != 0) terms.push_back(Json::array({jk / n, jk % n, static_cast<int>(d[jk])}));
      if (!terms.empty()) comult.push_back(Json::array({i, terms}));
    }
    doc["comult"] = comult;
    doc["counit"] = coefficient_list(a.counit());
  }
  if (a.has_antipode()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < n; ++r) rows.push_back(coefficient_list(a.antipode().row(r)));
    doc["antipode"] = rows;
  }
  return layout(doc);
}

GroupTable parse_cayley(std::string_view text) {
  const Json doc = parse_document(text, kCayleyFormat);
  const long long order = as_integer(field(doc, "order"), "order");
  if (order < 1) throw FormatError("order: must be positive");
  const auto n = static_cast<std::size_t>(order);
  GroupTable g;
  g.order = n;
  g.identity = as_index(field(doc, "identity"), n, "identity");
  g.labels = parse_labels(doc, "labels", n);
  if (!doc.contains("labels"))
    for (std::size_t i = 0; i < n; ++i) g.labels[i] = i == g.identity ? "e" : "g" + std::to_string(i);
  const Json& table = as_array(field(doc, "table"), "table", n);
  for (std::size_t a = 0; a < n; ++a) {
    const Json& row = as_array(table[a], "table[" + std::to_string(a) + "]", n);
    for (std::size_t b = 0; b < n; ++b)
      g.table.push_back(static_cast<std::uint32_t>(
          as_index(row[b], n, "table[" + std::to_string(a) + "][" + std::to_string(b) + "]")));
  }
  return g;
}

std::string format_cayley(const GroupTable& g) {
  Json doc;
  doc["format"] = kCayleyFormat;
  doc["order"] = g.order;
  doc["identity"] = g.identity;
  doc["labels"] = g.labels;
  Json rows = Json::array();
  for (std::size_t a = 0; a < g.order; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    rows.push_back(row);
  }
  doc["table"] = rows;
  return layout(doc);
}

RestrictedLieData parse_restricted_lie(std::string_view text) {
  const Json doc = parse_document(text, kLieFormat);
  const std::uint32_t p = parse_modulus(doc);
  const long long dim = as_integer(field(doc, "dim"), "dim");
  if (dim < 0) throw FormatError("dim: must be nonnegative");
  const auto d = static_cast<std::size_t>(dim);
  RestrictedLieData data = abelian_lie_data(p, d);
  if (doc.contains("labels")) data.labels = parse_labels(doc, "labels", d);

  const Json& brackets = as_array(field(doc, "brackets"), "brackets");
  std::vector<bool> seen(d * d, false);
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const Json& entry = as_array(brackets[e], where, 3);
    const std::size_t i = as_index(entry[0], d, where + " first index");
    const std::size_t j = as_index(entry[1], d, where + " second index");
    if (i == j) throw FormatError(where + ": bracket of a generator with itself is zero and may not be given");
    if (seen[i * d + j]) throw FormatError(where + ": duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    seen[i * d + j] = seen[j * d + i] = true;
    FpVector value(d, 0);
    const Json& terms = as_array(entry[2], where + " terms");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + " term " + std::to_string(t);
      const Json& term = as_array(terms[t], tw, 2);
      const std::size_t k = as_index(term[0], d, tw);
      value[k] = add_mod(value[k], reduce_mod(as_integer(term[1], tw + " coefficient"), p), p);
    }
    data.brackets[i * d + j] = value;
    data.brackets[j * d + i] = scale(value, neg_mod(1, p), p);
  }
  const Json& pmap = as_array(field(doc, "pmap"), "pmap", d);
  for (std::size_t i = 0; i < d; ++i) data.pmap[i] = parse_coefficients(pmap[i], d, p, "pmap[" + std::to_string(i) + "]");
  return data;
}

std::string format_restricted_lie(const RestrictedLieData& data) {
  const std::size_t d = data.dim();
  Json doc;
  doc["format"] = kLieFormat;
  doc["p"] = data.p;
  doc["dim"] = d;
  doc["labels"] = data.labels;
  Json brackets = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < d; ++k)
        if (data.bracket(i, j)[k] != 0) terms.push_back(Json::array({k, static_cast<int>(data.bracket(i, j)[k])}));
      if (!terms.empty()) brackets.push_back(Json::array({i, j, terms}));
    }
  doc["brackets"] = brackets;
  Json pmap = Json::array();
  for (const auto& v : data.pmap) pmap.push_back(coefficient_list(v));
  doc["pmap"] = pmap;
  return layout(doc);
}

FpVector parse_tensor2(std::string_view text, std::uint32_t p, std::size_t dim) {
  const Json doc = parse_document(text, kTensorFormat);
  const long long declared = as_integer(field(doc, "dim"), "dim");
  if (declared != static_cast<long long>(dim))
    throw FormatError("dim: tensor is over dimension " + std::to_string(declared) + ", expected " + std::to_string(dim));
  FpVector t(dim * dim, 0);
  const Json& entries = as_array(field(doc, "entries"), "entries");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = "entries[" + std::to_string(e) + "]";
    const Json& entry = as_array(entries[e], where, 3);
    const std::size_t i = as_index(entry[0], dim, where);
    const std::size_t j = as_index(entry[1], dim, where);
    t[i * dim + j] = add_mod(t[i * dim + j], reduce_mod(as_integer(entry[2], where + " coefficient"), p), p);
  }
  return t;
}

std::string format_tensor2(std::span<const Residue> t, std::size_t dim) {
  Json doc;
  doc["format"] = kTensorFormat;
  doc["dim"] = dim;
  Json entries = Json::array();
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] != 0) entries.push_back(Json::array({x / dim, x % dim, static_cast<int>(t[x])}));
  doc["entries"] = entries;
  return layout(doc);
}

namespace {

std::string render_terms(const std::vector<std::pair<std::string, Residue>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [label, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + " ";
    out += label;
  }
  return out;
}

}  // namespace

std::string render_vector(const StructuredAlgebra& a, std::span<const Residue> v) {
  std::vector<std::pair<std::string, Residue>> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.emplace_back(a.labels()[i], v[i]);
  return render_terms(terms);
}

std::string render_tensor2(const StructuredAlgebra& a, std::span<const Residue> t) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::string, Residue>> terms;
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] != 0) terms.emplace_back(a.labels()[x / n] + "(x)" + a.labels()[x % n], t[x]);
  return render_terms(terms);
}

namespace {

Json report_json(const MasuokaReport& r) {
  Json j;
  j["p"] = r.p;
  j["dim"] = r.dim;
  j["semisimple"] = r.semisimple;
  j["eps_right_integral"] = r.eps_right_integral;
  j["eps_left_integral"] = r.eps_left_integral;
  j["K_semisimple"] = r.k_semisimple;
  j["g_abelian_spans"] = r.g_abelian_spans;
  j["eps_right_integral_K"] = r.eps_right_integral_k;
  j["eps_left_integral_K"] = r.eps_left_integral_k;
  j["agreement"] = r.agreement;
  j["commutative"] = r.commutative;
  j["connected"] = r.connected;
  j["dim_is_p_power"] = r.dim_is_p_power;
  j["radical_dim"] = r.radical_dim;
  j["K_dim"] = r.k_dim;
  j["primitive_dim"] = r.primitive_dim;
  j["g_abelian"] = r.g_abelian;
  j["pth_power_bijective"] = r.pth_power_bijective;
  j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace

std::string report_to_json(const MasuokaReport& r) {
  Json j;
  j["format"] = kReportFormat;
  const Json body = report_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j.dump(2) + "\n";
}

std::string suite_report_to_json(const SuiteReport& r) {
  Json j;
  j["format"] = kSuiteFormat;
  j["p"] = r.spec.p;
  j["max_group_order"] = r.spec.max_group_order;
  j["lie_max_dim"] = r.spec.lie_max_dim;
  j["passed"] = r.passed;
  j["instances"] = r.entries.size();
  j["rejected_lie_candidates"] = r.rejected_lie_candidates;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["name"] = e.name;
    x["family"] = e.family;
    x["dim"] = e.dim;
    x["passed"] = e.passed;
    if (e.report) x["report"] = report_json(*e.report);
    if (e.h2_dim) x["h2_dim"] = *e.h2_dim;
    if (e.chain_dims) x["chain_dims"] = *e.chain_dims;
    x["failures"] = e.failures;
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

std::string chain_to_json(const StructuredAlgebra& h, const ExtensionChain& chain) {
  Json j;
  j["format"] = "extension-chain/1";
  j["p"] = h.p();
  j["dim"] = h.dim();
  j["layer_dims"] = chain.dims();
  Json steps = Json::array();
  for (const auto& s : chain.steps) {
    Json x;
    x["z"] = render_vector(h, s.z);
    x["u"] = render_tensor2(h, s.u);
    x["alphas"] = coefficient_list(s.alphas);
    x["filtration_degree"] = s.filtration_degree;
    x["index"] = s.index;
    x["essential_certified"] = s.certificate.certified;
    x["certificate"] = s.certificate.reason;
    steps.push_back(x);
  }
  j["steps"] = steps;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

}  // namespace hopf
