#pragma once

#include <optional>
#include <string>

#include "lcplab/classes.hpp"
#include "lcplab/linalg.hpp"

namespace lcplab {

// On-disk instance: {"n": N, "A": [[...]], "q": [...]} with entries given
// as JSON integers, rational strings ("3/4", "-0.25"), or JSON floats
// (converted at their exact binary value). q is optional.
struct MatrixDocument {
  RationalMatrix a;
  std::optional<RationalVector> q;
};

// Throws std::runtime_error with a line/column diagnostic on bad input.
MatrixDocument parse_matrix_document(const std::string& text);
MatrixDocument read_matrix_document(const std::string& path);

// Entries that fit a 64-bit integer (denominator 1) are emitted as JSON
// numbers, everything else as "p/q" strings; reading back reproduces the
// exact rationals.
std::string matrix_document_to_json(const MatrixDocument& doc);
void write_matrix_document(const std::string& path, const MatrixDocument& doc);

// Human-readable verdict table with witnesses.
std::string render_class_report(const ClassReport& r);

// Machine-readable report; 1-based indices, rationals as strings.
std::string class_report_to_json(const ClassReport& r);

}  // namespace lcplab
