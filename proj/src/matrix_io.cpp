#include "tsallis/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tsallis/format.hpp"

namespace tsallis {

using nlohmann::json;

namespace {

Complex parse_cell(const json& cell, int i, int j) {
  const std::string at = " at entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  if (cell.is_number()) return Complex(cell.get<double>(), 0.0);
  if (cell.is_array()) {
    if (cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
      throw std::runtime_error("matrix json: cell must be [re, im]" + at);
    return Complex(cell[0].get<double>(), cell[1].get<double>());
  }
  throw std::runtime_error("matrix json: cell must be a number or [re, im]" + at);
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("matrix json: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("matrix json: top level must be an object");
  if (!doc.contains("d") || !doc["d"].is_number_integer())
    throw std::runtime_error("matrix json: missing integer field \"d\"");
  const int d = doc["d"].get<int>();
  if (d < 1) throw std::runtime_error("matrix json: \"d\" must be >= 1");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw std::runtime_error("matrix json: missing array field \"entries\"");
  const json& rows = doc["entries"];
  if (static_cast<int>(rows.size()) != d)
    throw std::runtime_error("matrix json: expected " + std::to_string(d) + " rows, got " +
                             std::to_string(rows.size()));
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw std::runtime_error("matrix json: row " + std::to_string(i) + " must have " +
                               std::to_string(d) + " cells");
    for (int j = 0; j < d; ++j) m(i, j) = parse_cell(row[static_cast<std::size_t>(j)], i, j);
  }
  return m;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::ostringstream out;
  out << "{\"d\": " << m.dim() << ", \"entries\": [";
  for (int i = 0; i < m.dim(); ++i) {
    out << (i == 0 ? "\n  [" : ",\n  [");
    for (int j = 0; j < m.dim(); ++j) {
      if (j > 0) out << ", ";
      out << '[' << format_num(m(i, j).real()) << ", " << format_num(m(i, j).imag()) << ']';
    }
    out << ']';
  }
  out << "\n]}\n";
  return out.str();
}

ComplexMatrix load_matrix_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

void save_matrix_json(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << matrix_to_json(m);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tsallis
