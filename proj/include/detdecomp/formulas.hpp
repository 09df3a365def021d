#ifndef DETDECOMP_FORMULAS_HPP
#define DETDECOMP_FORMULAS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <detdecomp/tensor.hpp>

namespace detdecomp {

// Covector c_1 e_1 + ... + c_n e_n, sparse over its nonzero coefficients.
class LinearVector {
public:
  LinearVector() = default;

  static LinearVector basis(int i, const FieldSpec& field);              // e_i
  static LinearVector difference(int i, int j, const FieldSpec& field);  // e_i - e_j
  static LinearVector sum(int i, int j, const FieldSpec& field);         // e_i + e_j

  // coeff(i) += c, pruned when the sum vanishes. i must be >= 1.
  void add(int i, const Scalar& c);

  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }
  int max_index() const;  // 0 for the zero covector

  friend bool operator==(const LinearVector&, const LinearVector&) = default;

private:
  std::map<int, Scalar> coeffs_;
};

// coeff * factor_1 (x) ... (x) factor_n, one rank-one summand.
struct DecomposableTerm {
  Scalar coeff;
  std::vector<LinearVector> factors;

  friend bool operator==(const DecomposableTerm&, const DecomposableTerm&) = default;
};

// How a decomposition was constructed. Pure bookkeeping: it is written to
// file headers and never participates in equality.
enum class Provenance { leibniz, derksen3, det4, even_general, laplace_lift, file };

std::string provenance_tag(Provenance p);
Provenance provenance_from_tag(const std::string& tag);  // ParseError

// Finite sum of decomposable order-n tensors over one field. Terms keep
// their construction order; equality compares order, field and terms.
class Decomposition {
public:
  Decomposition(int order, FieldSpec field, Provenance provenance,
                std::vector<DecomposableTerm> terms);

  int order() const { return order_; }
  const FieldSpec& field() const { return field_; }
  Provenance provenance() const { return provenance_; }
  const std::vector<DecomposableTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.order_ == b.order_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

private:
  int order_;
  FieldSpec field_;
  Provenance provenance_;
  std::vector<DecomposableTerm> terms_;
};

// Sequence of k disjoint pairs (i_p, j_p), i_p < j_p, covering [1, 2k].
class PairIndex {
public:
  explicit PairIndex(std::vector<std::pair<int, int>> pairs);

  int k() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  // (i_1, j_1, i_2, j_2, ..., i_k, j_k): a bijection of [1, 2k].
  std::vector<int> flattened() const;

  // Parity of flattened() read as a permutation image row.
  int parity() const;

  friend bool operator==(const PairIndex&, const PairIndex&) = default;

private:
  std::vector<std::pair<int, int>> pairs_;
};

// All pair sequences for a given k, lexicographic in the flattened tuple.
// There are (2k)!/2^k of them.
std::vector<PairIndex> enumerate_pair_indices(int k);

// The n!-term expansion sum_p sign(p) e_{p(1)} (x) ... (x) e_{p(n)},
// terms in lexicographic image-row order. Works over every field,
// characteristic 2 included.
Decomposition leibniz(int n, const FieldSpec& field);

// Five-term decomposition of the order-3 determinant tensor. Needs 1/2.
Decomposition derksen3(const FieldSpec& field);

// Twelve-term decomposition of the order-4 determinant tensor, written out
// literally as an independent cross-check of even_general(2). Needs 1/2.
Decomposition det4(const FieldSpec& field);

// General even-order construction: for n = 2k, both blocks run over
// enumerate_pair_indices(k). Block one takes coeff (1/2)S and factors
//   (e_{i_1}-e_{j_1}) ... (e_{i_k}-e_{j_k}) (e_{i_k}+e_{j_k}) ... (e_{i_1}+e_{j_1}),
// block two swaps every - and + and takes coeff (1/2)(-1)^k S, where S is
// the parity of the flattened pair sequence. 2 (2k)!/2^k terms. Needs 1/2.
Decomposition even_general(int k, const FieldSpec& field);

// Cofactor expansion along the first slot: order n-1 -> order n with n
// times the terms. Slot 1 of each new term is e_i with sign (-1)^(i+1);
// the old factors shift right with basis indices relabelled around i.
Decomposition laplace_lift(const Decomposition& d);

// Fewest-terms construction this library knows: leibniz(1) for n = 1,
// even_general(n/2) for even n, laplace_lift of best_known(n-1) for odd n.
// Term count for n >= 2 is n!/2^floor((n-2)/2).
Decomposition best_known(int n, const FieldSpec& field);

}  // namespace detdecomp

#endif
