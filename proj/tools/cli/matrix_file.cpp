#include "matrix_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace robinf::cli {
namespace {

std::string locate(const std::string& source, std::size_t line, std::size_t column) {
  std::string out = source;
  if (line) out += ":" + std::to_string(line);
  if (column) out += (line ? ":" : ", column ") + std::to_string(column);
  return out;
}

bool is_unsigned_integer(const std::string& token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

struct RawLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<RawLine> tokenize(std::string_view text) {
  std::vector<RawLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream is{std::string(line)};
    RawLine raw{number, {}};
    for (std::string tok; is >> tok;) raw.tokens.push_back(tok);
    if (!raw.tokens.empty()) out.push_back(std::move(raw));
    start = end + 1;
  }
  return out;
}

MatrixText to_rationals(const std::vector<RawLine>& lines, const std::string& source) {
  MatrixText out;
  for (const auto& raw : lines) {
    std::vector<Rational> row;
    for (std::size_t k = 0; k < raw.tokens.size(); ++k) {
      try {
        row.push_back(Rational::parse(raw.tokens[k]));
      } catch (const std::exception& e) {
        throw InputError(source, raw.number, k + 1, e.what());
      }
    }
    out.rows.push_back(std::move(row));
    out.lines.push_back(raw.number);
  }
  return out;
}

// Re-raise a validator error at the file position of the offending entry,
// with 1-based coordinates in the message.
[[noreturn]] void relocate(const ValidationError& e, const MatrixText& text, const std::string& source) {
  const std::size_t line = e.row() ? text.lines.at(*e.row()) : 0;
  const std::size_t column = e.column() ? *e.column() + 1 : 0;
  switch (e.kind()) {
    case ValidationErrorKind::NegativeEntry:
      throw InputError(source, line, column, "negative entry " + text.rows[*e.row()][*e.column()].str());
    case ValidationErrorKind::ColumnSumNotOne: {
      Rational sum;
      for (const auto& row : text.rows) sum += row[*e.column()];
      throw InputError(source, line, column,
                       "column " + std::to_string(column) + " sums to " + sum.str() + ", not 1");
    }
    default:
      throw InputError(source, line, column, e.what());
  }
}

}  // namespace

InputError::InputError(std::string source, std::size_t line, std::size_t column, const std::string& message)
    : Error(locate(source, line, column) + ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

MatrixText parse_rows(std::string_view text, const std::string& source) {
  return to_rationals(tokenize(text), source);
}

MatrixText parse_matrix_text(std::string_view text, const std::string& source) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError(source, 0, 0, "no matrix rows");

  const auto& first = lines.front().tokens;
  if (lines.size() > 1 && first.size() == 2 && is_unsigned_integer(first[0]) && is_unsigned_integer(first[1])) {
    const std::size_t m = std::stoul(first[0]);
    const std::size_t n = std::stoul(first[1]);
    const std::size_t body_rows = lines.size() - 1;
    const bool body_is_mn = body_rows == m && std::all_of(lines.begin() + 1, lines.end(),
                                                          [n](const RawLine& l) { return l.tokens.size() == n; });
    const bool body_not_two_wide = std::any_of(lines.begin() + 1, lines.end(),
                                               [](const RawLine& l) { return l.tokens.size() != 2; });
    if (body_is_mn || body_not_two_wide) {
      const std::size_t header_line = lines.front().number;
      if (m == 0 || n == 0) throw InputError(source, header_line, 0, "header declares an empty matrix");
      if (body_rows != m) {
        throw InputError(source, header_line, 0,
                         "header declares " + std::to_string(m) + " rows, found " + std::to_string(body_rows));
      }
      lines.erase(lines.begin());
      for (const auto& l : lines) {
        if (l.tokens.size() != n) {
          throw InputError(source, l.number, 0,
                           "header declares " + std::to_string(n) + " columns, row has " +
                               std::to_string(l.tokens.size()));
        }
      }
    }
  }

  const std::size_t width = lines.front().tokens.size();
  for (const auto& l : lines) {
    if (l.tokens.size() != width) {
      throw InputError(source, l.number, 0,
                       "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(width));
    }
  }
  return to_rationals(lines, source);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RatMatrix read_matrix(const std::filesystem::path& path) {
  return RatMatrix::from_rows(parse_matrix_text(read_file(path), path.string()).rows);
}

Experiment parse_experiment(std::string_view text, const std::string& source) {
  const MatrixText parsed = parse_matrix_text(text, source);
  try {
    return validate_experiment(parsed.rows);
  } catch (const ValidationError& e) {
    relocate(e, parsed, source);
  }
}

Experiment read_experiment(const std::filesystem::path& path) {
  return parse_experiment(read_file(path), path.string());
}

Prior read_prior(const std::filesystem::path& path) {
  const std::string source = path.string();
  const MatrixText parsed = parse_matrix_text(read_file(path), source);
  std::vector<Rational> weights;
  if (parsed.rows.size() == 1) {
    weights = parsed.rows.front();
  } else if (parsed.rows.front().size() == 1) {
    for (const auto& r : parsed.rows) weights.push_back(r.front());
  } else {
    throw InputError(source, 0, 0, "a prior must be a single row or a single column");
  }
  try {
    return Prior(RatVector(std::move(weights)));
  } catch (const ValidationError& e) {
    throw InputError(source, parsed.lines.front(), e.column() ? *e.column() + 1 : 0, e.what());
  }
}

DecisionProblem parse_problem(std::string_view text, const std::string& source) {
  const MatrixText parsed = parse_rows(text, source);
  if (parsed.rows.size() < 2) throw InputError(source, 0, 0, "need a prior line and at least one action line");
  const std::size_t n = parsed.rows.front().size();
  for (std::size_t r = 1; r < parsed.rows.size(); ++r) {
    if (parsed.rows[r].size() != n) {
      throw InputError(source, parsed.lines[r], 0,
                       "action has " + std::to_string(parsed.rows[r].size()) + " payoffs, prior has " +
                           std::to_string(n) + " states");
    }
  }
  Prior prior = [&] {
    try {
      return Prior(RatVector(parsed.rows.front()));
    } catch (const ValidationError& e) {
      throw InputError(source, parsed.lines.front(), e.column() ? *e.column() + 1 : 0, e.what());
    }
  }();
  std::vector<Action> actions;
  for (std::size_t r = 1; r < parsed.rows.size(); ++r) actions.emplace_back(RatVector(parsed.rows[r]));
  return DecisionProblem(std::move(prior), std::move(actions));
}

DecisionProblem read_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path), path.string());
}

}  // namespace robinf::cli
