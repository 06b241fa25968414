#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "robinf/matrix.hpp"

namespace robinf::cli {

enum class ReportFormat { Table, KeyValue };

/// Ordered fields of one query result. Every number is an exact Rational and
/// is printed as "p/q" (or "p" for integers); nothing is rounded.
class VerdictReport {
 public:
  using Value = std::variant<std::string, bool, Rational, RatVector, RatMatrix>;

  explicit VerdictReport(std::string query) : query_(std::move(query)) {}

  VerdictReport& add(std::string key, Value value);
  VerdictReport& note(std::string text);
  /// Appends every field of `other` with `prefix` prepended to its key.
  VerdictReport& merge(const std::string& prefix, const VerdictReport& other);

  const std::string& query() const { return query_; }
  const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }
  const std::vector<std::string>& notes() const { return notes_; }

  /// Value of the first field named `key`; throws std::out_of_range.
  const Value& at(std::string_view key) const;

 private:
  std::string query_;
  std::vector<std::pair<std::string, Value>> fields_;
  std::vector<std::string> notes_;
};

/// Aligned, human-oriented layout. Matrices are printed below their key in
/// matrix-file syntax.
std::string render_table(const VerdictReport& report);

/// One "key = value" line per field. Matrices use ';' between rows.
std::string render_kv(const VerdictReport& report);

std::string render(const VerdictReport& report, ReportFormat format);

/// Parses render_kv output back into key -> raw value text (notes excluded).
std::map<std::string, std::string> parse_kv(std::string_view text);

/// Inverse of the kv matrix encoding: "a b ; c d".
RatMatrix parse_kv_matrix(std::string_view text);

}  // namespace robinf::cli
