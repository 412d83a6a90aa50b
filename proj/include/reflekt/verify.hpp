#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflekt/cyclotomic.hpp"
#include "reflekt/group.hpp"

namespace reflekt {

struct GroupSpec {
  enum class Kind { exceptional, monomial, dihedral };
  Kind kind = Kind::exceptional;
  unsigned index = 0;  // G<k>
  unsigned r = 0;
  unsigned n = 0;
  unsigned m = 0;

  /// "G5", "G(3,1,2)", "G(6,6,2)"; I2(m) normalizes to G(m,m,2).
  std::string canonical() const;
};

/// Whitespace-insensitive: G<k>, G(r,1,n), G(m,m,2), I2(m).
GroupSpec parse_group_spec(std::string_view text);

/// $REFLEKT_DATA_DIR when set, else the shipped data/groups directory.
std::filesystem::path default_group_dir();
std::filesystem::path default_chartable_dir();

GroupDefinition resolve_definition(const GroupSpec& spec, const std::filesystem::path& group_dir);
/// Enumerates the group and attaches n_i when the factorization search fits the budget.
ReflectionGroup build_group(const GroupSpec& spec, const std::filesystem::path& group_dir, double budget = 1e8);

/// One factor (e^{up x} - e^{-down x})^multiplicity of a table row.
struct RowFactor {
  Rational up;
  Rational down;
  std::size_t multiplicity = 0;
  friend bool operator==(const RowFactor&, const RowFactor&) = default;
};
using TableRow = std::vector<RowFactor>;

/// Requires known multiplicities.
TableRow row_from_numerology(const OrbitNumerology& num);
/// "(e^{12x} - e^{-6x})^2 (e^{9y} - e^{-9y})"
std::string render_row(const TableRow& row);
/// Golden row for a canonical group name, if it is one of the table groups.
std::optional<TableRow> expected_row(const GroupSpec& spec);

struct TableLine {
  std::string family;    // row label, e.g. "G(r,1,n)" or "G9"
  std::string instance;  // the group actually enumerated
  std::string symbolic;  // printed form of the row
  std::string expected;
  std::string computed;
  bool match = false;
};
std::vector<TableLine> reproduce_table(const std::filesystem::path& group_dir);

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double seconds = 0;
};

struct VerificationReport {
  std::string group;
  std::string convention;
  OrbitNumerology numerology;
  std::size_t degree = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;

  /// Skipped checks do not fail a report; they never count as passes either.
  bool passed() const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::optional<std::size_t> degree;
  std::optional<std::filesystem::path> chartable;
  double budget = 1e8;
  /// Complete Hurwitz and n_i-constancy checks below this many factorizations.
  std::size_t hurwitz_limit = 5000;
  std::ostream* warnings = nullptr;
};

VerificationReport verify_group(ReflectionGroup& group, const VerifyOptions& options);

struct HurwitzSummary {
  std::size_t factorizations = 0;
  std::size_t closure_size = 0;
  bool transitive = false;
  bool multiplicities_constant = false;
  std::vector<std::size_t> multiplicities;
};
HurwitzSummary hurwitz_summary(const ReflectionGroup& group, double budget = 1e8);

}  // namespace reflekt
