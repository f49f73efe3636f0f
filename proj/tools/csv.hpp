#pragma once

#include <string>
#include <vector>

#include "barbridge/complex.hpp"

namespace barbridge::cli {

// Numeric CSV table. A first row holding any non-numeric field is taken as a
// header and skipped. Throws InputError on empty input, ragged rows or
// unparsable cells.
struct Table {
  std::vector<std::vector<double>> rows;
  std::size_t cols = 0;
};

Table parse_csv(const std::string& text, const std::string& name);
Table read_csv(const std::string& path);

DissimilarityMatrix to_dissimilarity(const Table& t, const std::string& name);
CrossDissimilarityMatrix to_cross(const Table& t, const std::string& name);
PointCloud to_points(const Table& t);

std::string write_csv(const std::vector<std::vector<double>>& rows);

// One simplex per line: integer coefficient, then increasing vertex ids.
Chain read_chain(const std::string& path, const FieldSpec& field);

}  // namespace barbridge::cli
