#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "barbridge/error.hpp"

namespace barbridge::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Table parse_csv(const std::string& text, const std::string& name) {
  Table t;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split(line);
    std::vector<double> row(cells.size());
    bool numeric = true;
    for (std::size_t i = 0; i < cells.size() && numeric; ++i)
      numeric = parse_number(cells[i], row[i]);
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw InputError(name + ":" + std::to_string(line_no) + ": non-numeric cell");
    }
    first = false;
    for (double v : row)
      if (!std::isfinite(v))
        throw InputError(name + ":" + std::to_string(line_no) + ": non-finite value");
    if (t.rows.empty()) t.cols = row.size();
    else if (row.size() != t.cols)
      throw InputError(name + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(t.cols) + " columns, found " + std::to_string(row.size()));
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) throw InputError(name + ": no data rows");
  return t;
}

Table read_csv(const std::string& path) { return parse_csv(slurp(path), path); }

DissimilarityMatrix to_dissimilarity(const Table& t, const std::string& name) {
  if (t.rows.size() != t.cols)
    throw InputError(name + ": dissimilarity matrix must be square, got " +
                     std::to_string(t.rows.size()) + "x" + std::to_string(t.cols));
  std::vector<double> entries;
  for (const auto& r : t.rows) entries.insert(entries.end(), r.begin(), r.end());
  return DissimilarityMatrix(t.cols, std::move(entries));
}

CrossDissimilarityMatrix to_cross(const Table& t, const std::string&) {
  std::vector<double> entries;
  for (const auto& r : t.rows) entries.insert(entries.end(), r.begin(), r.end());
  return CrossDissimilarityMatrix(t.rows.size(), t.cols, std::move(entries));
}

PointCloud to_points(const Table& t) { return t.rows; }

std::string write_csv(const std::vector<std::vector<double>>& rows) {
  std::string out;
  char buf[32];
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", r[i]);
      if (i) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Chain read_chain(const std::string& path, const FieldSpec& field) {
  std::istringstream in(slurp(path));
  std::string line;
  Chain c;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split(line);
    if (cells.size() < 2)
      throw InputError(path + ":" + std::to_string(line_no) + ": need a coefficient and vertices");
    double coef;
    std::vector<Vertex> vs;
    bool ok = parse_number(cells[0], coef) && coef == std::floor(coef);
    for (std::size_t i = 1; i < cells.size() && ok; ++i) {
      double v;
      ok = parse_number(cells[i], v) && v >= 0 && v == std::floor(v);
      vs.push_back(static_cast<Vertex>(v));
    }
    if (!ok) throw InputError(path + ":" + std::to_string(line_no) + ": malformed simplex");
    const auto p = static_cast<long long>(field.characteristic());
    const long long reduced = ((static_cast<long long>(coef) % p) + p) % p;
    c.add(Simplex(std::move(vs)), static_cast<Scalar>(reduced), field);
  }
  if (c.empty()) throw InputError(path + ": empty cycle");
  return c;
}

}  // namespace barbridge::cli
