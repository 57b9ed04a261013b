#pragma once

#include <string>

#include "locc/linalg.hpp"
#include "locc/weyl.hpp"

namespace locc {

/// Parse the one-member-per-line text format: per factor `X^s Z^t`, factors
/// separated by `|`. All members must use the same factor count; factor
/// orders are supplied by the structure.
MesSet parse_set_text(const std::string& text, const WeylStructure& st);

/// JSON set description {"factors":[d1,...], "members":[[[s,t],...],...]}
/// for label-backed sets, or {"dim":D, "members":[matrix,...]} with the
/// matrix JSON format for matrix-backed sets.
MesSet parse_set_json(const std::string& json_text);
std::string set_to_json(const MesSet& set);

/// Matrix JSON format {"rows":r, "cols":c, "entries":[[re,im],...]} row-major.
Matrix parse_matrix_json(const std::string& json_text);
std::string matrix_to_json(const Matrix& m);

MesSet load_set_file(const std::string& path);

}  // namespace locc
