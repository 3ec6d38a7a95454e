#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kantorkit/algebra.hpp"
#include "kantorkit/classify.hpp"
#include "kantorkit/un_algebra.hpp"

namespace kantorkit {

/// Reads the JSON algebra format: name, dim, basis, params, constraints and
/// either "table" or "slots": [{name, table}], with table entries
/// {i, j, k, coeff} indexed from 1. Omitted entries are zero.
/// Throws ParseError, UndeclaredParam or IndexOutOfRange.
Algebra parse_algebra(std::string_view text);

/// Canonical JSON text (entries sorted by i, j, k; two-space indent).
std::string render_algebra(const Algebra& a);

/// One "e1 * e2 = ..." line per nonzero product, "(zero product)" otherwise.
std::string render_table(const Multiplication& m, const std::vector<std::string>& labels, std::string_view op = "*");

/// "u=(1,0,1)", "(1,0,1)", "u=e3", "e3" or "symbolic". An empty string or
/// "symbolic" gives u1*e1 + ... + un*en.
Element parse_vector(std::string_view spec, std::size_t dim);

std::string render_family_json(const SolutionFamily& f, const std::vector<std::string>& labels);
SolutionFamily parse_family_json(std::string_view text);
std::string render_classification_json(const Classification& c, const Algebra& a);
std::string render_classification_text(const Classification& c, const Algebra& a);

/// Bracket table of U(n) as text, one "[[x, y]] = z" line per pair.
std::string render_un_table(const std::vector<UnTableEntry>& table);
std::string render_un_table_json(const std::vector<UnTableEntry>& table);

}  // namespace kantorkit
