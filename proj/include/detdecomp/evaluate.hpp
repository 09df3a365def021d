#ifndef DETDECOMP_EVALUATE_HPP
#define DETDECOMP_EVALUATE_HPP

#include <cstdint>

#include <detdecomp/formulas.hpp>

namespace detdecomp {

// Square matrix of exact scalars, row-major storage, 1-based accessors.
class Matrix {
public:
  Matrix(int order, FieldSpec field);  // zero matrix
  Matrix(int order, FieldSpec field, std::vector<Scalar> entries);
  static Matrix identity(int order, const FieldSpec& field);

  int order() const { return order_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(int row, int col) const;
  void set(int row, int col, Scalar v);

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t offset(int row, int col) const;

  int order_;
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

// Pairs slot s of every term with column s of a:
//   sum over terms of coeff * prod_s <factor_s, a(., s)>.
// For a decomposition of the determinant tensor this returns det(a).
Scalar eval_decomposition(const Decomposition& d, const Matrix& a);

// Exact Gaussian elimination, pivoting on the first nonzero entry of each
// column; singular input gives 0. Shares nothing with the decomposition
// path, so the two sides cross-check each other.
Scalar det_oracle(const Matrix& a);

// Scalar multiplications eval_decomposition spends on this term set:
// n - 1 per term for the slot-value product, plus one per term coefficient
// or covector entry that is not +1 or -1 (+-1 are sign flips, not products).
// Additions are not counted.
std::uint64_t eval_count_mults(const Decomposition& d);

// Matrix with integer entries drawn uniformly from [-9, 9], embedded into
// the field. The stream is a pure function of (seed, order, field).
Matrix random_int_matrix(int order, const FieldSpec& field, std::uint64_t seed);

}  // namespace detdecomp

#endif
