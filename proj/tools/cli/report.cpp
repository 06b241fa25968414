#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace robinf::cli {
namespace {

std::string inline_text(const VerdictReport::Value& v) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const Rational& q) const { return q.str(); }
    std::string operator()(const RatVector& x) const { return x.str(); }
    std::string operator()(const RatMatrix& m) const {
      std::string out;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += " ; ";
        out += m.row(r).str();
      }
      return out;
    }
  };
  return std::visit(Visitor{}, v);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

VerdictReport& VerdictReport::add(std::string key, Value value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

VerdictReport& VerdictReport::note(std::string text) {
  notes_.push_back(std::move(text));
  return *this;
}

VerdictReport& VerdictReport::merge(const std::string& prefix, const VerdictReport& other) {
  for (const auto& [k, v] : other.fields_) fields_.emplace_back(prefix + k, v);
  for (const auto& n : other.notes_) notes_.push_back(n);
  return *this;
}

const VerdictReport::Value& VerdictReport::at(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  throw std::out_of_range("report has no field '" + std::string(key) + "'");
}

std::string render_table(const VerdictReport& report) {
  std::size_t width = 0;
  for (const auto& [k, v] : report.fields()) width = std::max(width, k.size());

  std::ostringstream os;
  os << "== " << report.query() << " ==\n";
  for (const auto& [k, v] : report.fields()) {
    os << "  " << k << std::string(width - k.size() + 2, ' ');
    if (const auto* m = std::get_if<RatMatrix>(&v)) {
      os << "[" << m->rows() << "x" << m->cols() << "]\n";
      for (std::size_t r = 0; r < m->rows(); ++r) os << "      " << m->row(r).str() << '\n';
    } else {
      os << inline_text(v) << '\n';
    }
  }
  for (const auto& n : report.notes()) os << "  note: " << n << '\n';
  return os.str();
}

std::string render_kv(const VerdictReport& report) {
  std::ostringstream os;
  os << "query = " << report.query() << '\n';
  for (const auto& [k, v] : report.fields()) os << k << " = " << inline_text(v) << '\n';
  for (const auto& n : report.notes()) os << "# note: " << n << '\n';
  return os.str();
}

std::string render(const VerdictReport& report, ReportFormat format) {
  return format == ReportFormat::Table ? render_table(report) : render_kv(report);
}

std::map<std::string, std::string> parse_kv(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    out.emplace(trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 3)));
  }
  return out;
}

RatMatrix parse_kv_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::istringstream is{std::string(text.substr(start, end - start))};
    std::vector<Rational> row;
    for (std::string tok; is >> tok;) row.push_back(Rational::parse(tok));
    rows.push_back(std::move(row));
    start = end + 1;
  }
  return RatMatrix::from_rows(rows);
}

}  // namespace robinf::cli
