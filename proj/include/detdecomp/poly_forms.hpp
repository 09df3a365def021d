#ifndef DETDECOMP_POLY_FORMS_HPP
#define DETDECOMP_POLY_FORMS_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include <detdecomp/formulas.hpp>

namespace detdecomp {

// Variable x[i,j] of the generic n x n matrix: i = basis (row) index,
// j = tensor slot (column). Both 1-based.
struct VarId {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Linear form sum of c * x[i,j], sparse over its nonzero coefficients.
class LinearForm {
public:
  LinearForm() = default;

  void add(VarId v, const Scalar& c);  // coeff += c, pruned at zero
  void add_scaled(const LinearForm& other, const Scalar& s);

  const std::map<VarId, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
  std::map<VarId, Scalar> coeffs_;
};

// coeff * l_1 * ... * l_n, a product of linear forms.
struct ChowTerm {
  Scalar coeff;
  std::vector<LinearForm> forms;

  friend bool operator==(const ChowTerm&, const ChowTerm&) = default;
};

// Sum of products of linear forms in the n^2 matrix variables.
class ChowDecomposition {
public:
  ChowDecomposition(int order, FieldSpec field, std::vector<ChowTerm> terms);

  int order() const { return order_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<ChowTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

private:
  int order_;
  FieldSpec field_;
  std::vector<ChowTerm> terms_;
};

// coeff * (linear form)^power.
struct WaringSummand {
  Scalar coeff;
  LinearForm form;
  int power = 0;

  friend bool operator==(const WaringSummand&, const WaringSummand&) = default;
};

class WaringDecomposition {
public:
  WaringDecomposition(int order, FieldSpec field, std::vector<WaringSummand> summands);

  int order() const { return order_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<WaringSummand>& summands() const { return summands_; }
  std::size_t summand_count() const { return summands_.size(); }

private:
  int order_;
  FieldSpec field_;
  std::vector<WaringSummand> summands_;
};

// Polynomial in the n^2 variables x[i,j], keyed by dense exponent vectors
// in row-major variable order: position (i-1)*n + (j-1). Zero coefficients
// are pruned; iteration is lexicographic in the exponent vector.
class Polynomial {
public:
  Polynomial(int order, FieldSpec field);

  int order() const { return order_; }
  const FieldSpec& field() const { return field_; }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
  std::size_t monomial_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t var_slot(VarId v) const;  // row-major position, IndexOutOfRange

  void add_term(const std::vector<int>& exponents, const Scalar& c);

  // this * f, distributing over every monomial. The workhorse for both
  // Chow products and Waring powers.
  Polynomial times_linear(const LinearForm& f) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.order_ == b.order_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

private:
  int order_;
  FieldSpec field_;
  std::map<std::vector<int>, Scalar> terms_;
};

// Reads factor slot s as a linear form in the column-s variables:
// sum c_i e_i at slot s becomes sum c_i x[i,s].
ChowDecomposition to_chow(const Decomposition& d);

// Multiplies every Chow term out into a single polynomial.
Polynomial expand_poly(const ChowDecomposition& c);

// Rewrites each product of n forms as +-(1/(2^(n-1) n!))-weighted n-th
// powers of the signed sums l_1 + e_2 l_2 + ... + e_n l_n over all sign
// patterns e in {+1,-1}^(n-1). Needs n! invertible: the rationals or a
// prime field with p > n; otherwise CharTooSmall. Zero combined forms are
// dropped, so the count is at most 2^(n-1) per term.
WaringDecomposition chow_to_waring(const ChowDecomposition& c);

// Expands every power multinomially (by repeated linear multiplication).
Polynomial expand_waring(const WaringDecomposition& w);

// sum over permutations of sign(p) * prod_i x[i, p(i)].
Polynomial det_polynomial(int n, const FieldSpec& field);

// p equals the order-n determinant polynomial over p's own field.
bool poly_equal_det(const Polynomial& p, int n);

}  // namespace detdecomp

#endif
