#pragma once

// JSON file formats for matrices, minor tables and sign witnesses. Entries
// use the text encoding of FieldElement::to_string / FieldElement::parse.
//
// Matrix:
//   {"field": {"kind": "rational"} | {"kind": "prime", "p": 7},
//    "labels": ["1", ...], "skew": true, "rows": [["0", "1/2", ...], ...]}
//   "skew" is optional; when true the reader enforces skew-symmetry.
// Minor table:
//   {"labels": [...], "max_order": 4,
//    "minors": [{"subset": ["1", "2"], "value": "1"}, ...]}
//   subsets in enumeration order (size, then lexicographic).
// Witness:
//   {"transposed": false, "signs": {"1": 1, "2": -1, ...}}

#include <string>
#include <string_view>
#include <vector>

#include "skewminor/generators.hpp"
#include "skewminor/matrix.hpp"
#include "skewminor/minors.hpp"

namespace skewminor {

/// "rational" (or "Q"), "prime:<p>", "gf(<p>)" or a bare prime "<p>".
FieldSpec parse_field_spec(std::string_view text);

/// Throws FormatError on malformed JSON, a non-square grid, or a declared
/// skew matrix that is not skew-symmetric.
LabeledMatrix read_matrix_json(std::string_view text);
/// Emits "skew": true when the matrix is skew-symmetric.
std::string write_matrix_json(const LabeledMatrix& a);

MinorTable read_minor_table_json(std::string_view text, const FieldSpec& spec);
std::string write_minor_table_json(const MinorTable& table);

/// `labels` fixes the sign order; every label must appear exactly once.
Witness read_witness_json(std::string_view text, const std::vector<std::string>& labels);
std::string write_witness_json(const Witness& w, const std::vector<std::string>& labels);

}  // namespace skewminor
