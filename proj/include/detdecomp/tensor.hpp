#ifndef DETDECOMP_TENSOR_HPP
#define DETDECOMP_TENSOR_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <detdecomp/scalar.hpp>

namespace detdecomp {

// Position in an order-n tensor: one 1-based basis index per slot.
// Ordering is lexicographic, which fixes the canonical iteration order.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t order() const { return entries_.size(); }
  int at(std::size_t slot) const { return entries_[slot]; }  // slot is 0-based
  const std::vector<int>& entries() const { return entries_; }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;  // "(1,2,4,1)"

private:
  std::vector<int> entries_;
};

// Permutation of [1, n] stored as its image row a_1 ... a_n.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);  // InvalidPermutation
  static Permutation identity(int n);

  int order() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  // (this . other)(i) = this(other(i)); both must have the same order.
  Permutation compose(const Permutation& other) const;

  // +1 or -1, from the inversion count of the image row (mergesort).
  int parity() const;

private:
  std::vector<int> images_;
};

// Inversion count of an integer sequence, O(m log m).
std::size_t count_inversions(std::vector<int> values);

// parity() as an element of the given field.
Scalar sign(const Permutation& p, const FieldSpec& field);

// Order-n tensor with sparse exact entries. Zero entries are pruned on
// every update; entries() iterates in lexicographic multi-index order.
class SparseTensor {
public:
  SparseTensor(int order, FieldSpec field);

  int order() const { return order_; }
  const FieldSpec& field() const { return field_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::map<MultiIndex, Scalar>& entries() const { return entries_; }

  // entry(idx) += c; the entry is erased when the sum vanishes.
  // IndexOutOfRange unless idx has the right order with entries in [1, n].
  void add_term(const MultiIndex& idx, const Scalar& c);

  // nullptr when the entry is absent (i.e. zero).
  const Scalar* find(const MultiIndex& idx) const;

  // Entrywise sum; other must match in order and field.
  void merge(const SparseTensor& other);

private:
  int order_;
  FieldSpec field_;
  std::map<MultiIndex, Scalar> entries_;
};

// Exact entrywise equality. OrderMismatch / FieldMismatch on shape clash,
// so a silent false never hides a usage bug.
bool tensor_equal(const SparseTensor& a, const SparseTensor& b);

}  // namespace detdecomp

#endif
