#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "robinf/errors.hpp"
#include "robinf/experiment.hpp"

namespace robinf::cli {

/// Malformed or invalid input, located by source name and 1-based line and
/// column (token index). line/column are 0 when not applicable.
class InputError : public Error {
 public:
  InputError(std::string source, std::size_t line, std::size_t column, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// Parsed rectangular grid of exact literals plus the source line of each row.
struct MatrixText {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> lines;
};

/// Whitespace-separated rational literals, one row per line. Blank lines and
/// text after '#' are ignored. A first line of two unsigned integers "m n"
/// is a header when the remaining rows are m x n or do not have two entries
/// each; the body must then match it.
MatrixText parse_matrix_text(std::string_view text, const std::string& source);

/// Rows of literals, possibly ragged; used for problem files.
MatrixText parse_rows(std::string_view text, const std::string& source);

std::string read_file(const std::filesystem::path& path);

RatMatrix read_matrix(const std::filesystem::path& path);
Experiment read_experiment(const std::filesystem::path& path);
/// A single row or a single column.
Prior read_prior(const std::filesystem::path& path);
/// First row is the prior, every further row an action.
DecisionProblem read_problem(const std::filesystem::path& path);

/// Same, from in-memory text.
Experiment parse_experiment(std::string_view text, const std::string& source);
DecisionProblem parse_problem(std::string_view text, const std::string& source);

}  // namespace robinf::cli
