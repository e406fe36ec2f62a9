#pragma once

// Text documents: algebra specifications, Cayley tables, restricted Lie
// data, tensor-square cochains and machine-readable reports. Every document
// is JSON with a leading "format" field naming its schema and version.
//
// Algebra specification (format "hopf-algebra/1"):
//   kind     "algebra" | "coalgebra" | "bialgebra" | "hopf"
//   p, dim   integers
//   basis    list of dim labels
//   unit     coefficient list                  (algebra part)
//   mult     [[i, j, [[k, c], ...]], ...]      e_i e_j = sum c e_k
//   comult   [[i, [[j, k, c], ...]], ...]      Delta(e_i) = sum c e_j (x) e_k
//   counit   coefficient list                  (coalgebra part)
//   antipode optional dim x dim rows; entry [r][c] is the coefficient of
//            e_r in S(e_c)
// Omitted mult/comult entries are zero. Coefficients are reduced mod p.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "hopf/constructors.hpp"
#include "hopf/groups.hpp"
#include "hopf/masuoka.hpp"
#include "hopf/structure.hpp"

namespace hopf {

inline constexpr std::string_view kAlgebraFormat = "hopf-algebra/1";
inline constexpr std::string_view kCayleyFormat = "cayley/1";
inline constexpr std::string_view kLieFormat = "restricted-lie/1";
inline constexpr std::string_view kTensorFormat = "tensor2/1";
inline constexpr std::string_view kReportFormat = "masuoka-report/1";
inline constexpr std::string_view kSuiteFormat = "suite-report/1";

/// All parsers throw FormatError naming the offending line or field.
StructuredAlgebra parse_algebra(std::string_view text);
std::string format_algebra(const StructuredAlgebra& a);

/// {"format": "cayley/1", "order": n, "identity": e, "labels": [...]?,
///  "table": n rows of n indices}. The table is not validated as a group.
GroupTable parse_cayley(std::string_view text);
std::string format_cayley(const GroupTable& g);

/// {"format": "restricted-lie/1", "p": p, "dim": d, "labels": [...],
///  "brackets": [[i, j, [[k, c], ...]], ...], "pmap": d coefficient lists}.
/// A bracket entry for (i, j) also sets (j, i) to its negative.
RestrictedLieData parse_restricted_lie(std::string_view text);
std::string format_restricted_lie(const RestrictedLieData& data);

/// {"format": "tensor2/1", "dim": n, "entries": [[i, j, c], ...]}.
FpVector parse_tensor2(std::string_view text, std::uint32_t p, std::size_t dim);
std::string format_tensor2(std::span<const Residue> t, std::size_t dim);

/// Human-readable rendering such as "x(x)x + 2 1(x)x".
std::string render_vector(const StructuredAlgebra& a, std::span<const Residue> v);
std::string render_tensor2(const StructuredAlgebra& a, std::span<const Residue> t);

std::string report_to_json(const MasuokaReport& r);
std::string suite_report_to_json(const SuiteReport& r);
std::string chain_to_json(const StructuredAlgebra& h, const ExtensionChain& chain);

/// Throws FormatError when the file cannot be read or written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hopf
