#ifndef DETDECOMP_IO_HPP
#define DETDECOMP_IO_HPP

#include <string>

#include <detdecomp/evaluate.hpp>
#include <detdecomp/poly_forms.hpp>

namespace detdecomp {

// detdecomp format, version 1. Line-oriented, UTF-8, LF endings, no
// trailing whitespace, every line newline-terminated:
//
//   detdecomp 1 n=<n> field=<Q|Fp:p> terms=<t> provenance=<tag>
//   <coeff> | <factor> | ... | <factor>        (t body lines, n factors)
//
// A factor lists its entries sorted by basis index, "+e3 -e5" for +-1
// coefficients and "<scalar>*e3" otherwise. Writing the same decomposition
// twice yields byte-identical text.
std::string write_decomposition(const Decomposition& d);

// Inverse of write on the mathematical content; the result always carries
// provenance File. ParseError (with line numbers) on malformed input,
// CountMismatch when the body length contradicts terms=<t>, field errors
// propagate from the header (field=Fp:2 raises CharTwoError).
Decomposition read_decomposition(const std::string& text);

void write_decomposition_file(const Decomposition& d, const std::string& path);
Decomposition read_decomposition_file(const std::string& path);

// Matrix text: first line n, then n rows of n whitespace-separated scalars.
Matrix read_matrix(const std::string& text, const FieldSpec& field);
Matrix read_matrix_file(const std::string& path, const FieldSpec& field);
std::string write_matrix(const Matrix& a);

// One product per line: <coeff> * (<form>) * ... * (<form>), forms as
// signed variable lists like "+x[1,2] -x[3,2]".
std::string write_chow(const ChowDecomposition& c);

// One summand per line: <coeff> * (<form>)^<power>.
std::string write_waring(const WaringDecomposition& w);

}  // namespace detdecomp

#endif
