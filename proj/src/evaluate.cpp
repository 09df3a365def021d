#include <detdecomp/evaluate.hpp>

#include <random>
#include <utility>

namespace detdecomp {

Matrix::Matrix(int order, FieldSpec field)
    : order_(order), field_(field),
      entries_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order),
               Scalar::zero(field)) {
  if (order < 1) throw IndexOutOfRange("matrix order must be >= 1");
}

Matrix::Matrix(int order, FieldSpec field, std::vector<Scalar> entries)
    : order_(order), field_(field), entries_(std::move(entries)) {
  if (order < 1) throw IndexOutOfRange("matrix order must be >= 1");
  const std::size_t want =
      static_cast<std::size_t>(order) * static_cast<std::size_t>(order);
  if (entries_.size() != want) {
    throw OrderMismatch("matrix needs " + std::to_string(want) + " entries, got " +
                        std::to_string(entries_.size()));
  }
  for (const Scalar& s : entries_) {
    if (s.field() != field_) throw FieldMismatch("matrix entry field mismatch");
  }
}

Matrix Matrix::identity(int order, const FieldSpec& field) {
  Matrix m(order, field);
  for (int i = 1; i <= order; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

std::size_t Matrix::offset(int row, int col) const {
  if (row < 1 || row > order_ || col < 1 || col > order_) {
    throw IndexOutOfRange("matrix index (" + std::to_string(row) + ", " +
                          std::to_string(col) + ") outside [1, " +
                          std::to_string(order_) + "]^2");
  }
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(order_) +
         static_cast<std::size_t>(col - 1);
}

const Scalar& Matrix::at(int row, int col) const { return entries_[offset(row, col)]; }

void Matrix::set(int row, int col, Scalar v) {
  if (v.field() != field_) throw FieldMismatch("matrix entry field mismatch");
  entries_[offset(row, col)] = std::move(v);
}

Scalar eval_decomposition(const Decomposition& d, const Matrix& a) {
  if (d.order() != a.order()) {
    throw OrderMismatch("eval: decomposition order " + std::to_string(d.order()) +
                        " vs matrix order " + std::to_string(a.order()));
  }
  if (d.field() != a.field()) {
    throw FieldMismatch("eval: decomposition field " + d.field().to_string() +
                        " vs matrix field " + a.field().to_string());
  }
  const int n = d.order();
  Scalar total = Scalar::zero(d.field());
  for (const DecomposableTerm& t : d.terms()) {
    Scalar prod = t.coeff;
    for (int s = 1; s <= n && !prod.is_zero(); ++s) {
      Scalar dot = Scalar::zero(d.field());
      for (const auto& [i, c] : t.factors[static_cast<std::size_t>(s) - 1].coeffs()) {
        dot += c * a.at(i, s);
      }
      prod *= dot;
    }
    total += prod;
  }
  return total;
}

Scalar det_oracle(const Matrix& a) {
  const int n = a.order();
  const FieldSpec& field = a.field();
  // mutable working copy
  std::vector<Scalar> w;
  w.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) w.push_back(a.at(r, c));
  }
  auto at = [&](int r, int c) -> Scalar& {
    return w[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(c)];
  };

  Scalar det = Scalar::one(field);
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Scalar::zero(field);
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(at(pivot, c), at(col, c));
      negate = !negate;
    }
    det *= at(col, col);
    const Scalar inv = at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (at(r, col).is_zero()) continue;
      const Scalar f = at(r, col) * inv;
      for (int c = col; c < n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  return negate ? -det : det;
}

std::uint64_t eval_count_mults(const Decomposition& d) {
  const auto is_sign = [](const Scalar& s) { return s.is_one() || s.is_minus_one(); };
  std::uint64_t total = 0;
  for (const DecomposableTerm& t : d.terms()) {
    total += static_cast<std::uint64_t>(d.order() - 1);
    if (!is_sign(t.coeff)) ++total;
    for (const LinearVector& f : t.factors) {
      for (const auto& [i, c] : f.coeffs()) {
        if (!is_sign(c)) ++total;
      }
    }
  }
  return total;
}

Matrix random_int_matrix(int order, const FieldSpec& field, std::uint64_t seed) {
  // seed_seq folds in order and modulus so each (seed, n, field) triple
  // gets its own reproducible stream
  std::seed_seq seq{static_cast<unsigned>(seed & 0xffffffffu),
                    static_cast<unsigned>(seed >> 32),
                    static_cast<unsigned>(order),
                    static_cast<unsigned>(field.modulus())};
  std::mt19937_64 rng(seq);
  Matrix m(order, field);
  for (int r = 1; r <= order; ++r) {
    for (int c = 1; c <= order; ++c) {
      const int v = static_cast<int>(rng() % 19) - 9;
      m.set(r, c, Scalar::of(v, field));
    }
  }
  return m;
}

}  // namespace detdecomp
