#pragma once

#include <string>

#include "tsallis/matrix.hpp"

namespace tsallis {

// Matrix files are JSON objects
//   {"d": 2, "entries": [[[re, im], ...], ...]}
// with `entries` row-major, d rows of d cells; a bare number is shorthand
// for [re, 0]. Parse errors throw std::runtime_error naming the problem.
ComplexMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const ComplexMatrix& m);

ComplexMatrix load_matrix_json(const std::string& path);
void save_matrix_json(const std::string& path, const ComplexMatrix& m);

}  // namespace tsallis
