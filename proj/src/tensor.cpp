#include <detdecomp/tensor.hpp>

#include <algorithm>
#include <utility>

namespace detdecomp {

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t s = 0; s < entries_.size(); ++s) {
    if (s) out += ',';
    out += std::to_string(entries_[s]);
  }
  out += ')';
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidPermutation("image row is not a bijection of [1, " +
                               std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (order() != other.order()) {
    throw OrderMismatch("compose: orders differ");
  }
  std::vector<int> images(images_.size());
  for (int i = 1; i <= order(); ++i) {
    images[static_cast<std::size_t>(i) - 1] = image(other.image(i));
  }
  return Permutation(std::move(images));
}

namespace {

std::size_t merge_count(std::vector<int>& v, std::vector<int>& tmp,
                        std::size_t lo, std::size_t hi) {
  if (hi - lo <= 1) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t count = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      tmp[k++] = v[j++];
    } else {
      tmp[k++] = v[i++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
            tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace

std::size_t count_inversions(std::vector<int> values) {
  std::vector<int> tmp(values.size());
  return merge_count(values, tmp, 0, values.size());
}

int Permutation::parity() const {
  return count_inversions(images_) % 2 == 0 ? 1 : -1;
}

Scalar sign(const Permutation& p, const FieldSpec& field) {
  const Scalar one = Scalar::one(field);
  return p.parity() > 0 ? one : -one;
}

SparseTensor::SparseTensor(int order, FieldSpec field)
    : order_(order), field_(field) {
  if (order < 1) throw IndexOutOfRange("tensor order must be >= 1");
}

void SparseTensor::add_term(const MultiIndex& idx, const Scalar& c) {
  if (static_cast<int>(idx.order()) != order_) {
    throw IndexOutOfRange("multi-index order " + std::to_string(idx.order()) +
                          " does not match tensor order " + std::to_string(order_));
  }
  for (int v : idx.entries()) {
    if (v < 1 || v > order_) {
      throw IndexOutOfRange("basis index " + std::to_string(v) +
                            " outside [1, " + std::to_string(order_) + "]");
    }
  }
  if (c.field() != field_) {
    throw FieldMismatch("add_term: scalar field " + c.field().to_string() +
                        " does not match tensor field " + field_.to_string());
  }
  if (c.is_zero()) return;
  auto it = entries_.lower_bound(idx);
  if (it != entries_.end() && it->first == idx) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.emplace_hint(it, idx, c);
  }
}

const Scalar* SparseTensor::find(const MultiIndex& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? nullptr : &it->second;
}

void SparseTensor::merge(const SparseTensor& other) {
  if (other.order_ != order_) throw OrderMismatch("merge: orders differ");
  if (other.field_ != field_) throw FieldMismatch("merge: fields differ");
  for (const auto& [idx, c] : other.entries_) add_term(idx, c);
}

bool tensor_equal(const SparseTensor& a, const SparseTensor& b) {
  if (a.order() != b.order()) throw OrderMismatch("tensor_equal: orders differ");
  if (a.field() != b.field()) throw FieldMismatch("tensor_equal: fields differ");
  return a.entries() == b.entries();
}

}  // namespace detdecomp
