#include <detdecomp/formulas.hpp>

#include <algorithm>
#include <initializer_list>
#include <utility>

namespace detdecomp {

LinearVector LinearVector::basis(int i, const FieldSpec& field) {
  LinearVector v;
  v.add(i, Scalar::one(field));
  return v;
}

LinearVector LinearVector::difference(int i, int j, const FieldSpec& field) {
  LinearVector v;
  v.add(i, Scalar::one(field));
  v.add(j, -Scalar::one(field));
  return v;
}

LinearVector LinearVector::sum(int i, int j, const FieldSpec& field) {
  LinearVector v;
  v.add(i, Scalar::one(field));
  v.add(j, Scalar::one(field));
  return v;
}

void LinearVector::add(int i, const Scalar& c) {
  if (i < 1) throw IndexOutOfRange("covector index must be >= 1");
  if (c.is_zero()) return;
  auto it = coeffs_.lower_bound(i);
  if (it != coeffs_.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  } else {
    coeffs_.emplace_hint(it, i, c);
  }
}

int LinearVector::max_index() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

std::string provenance_tag(Provenance p) {
  switch (p) {
    case Provenance::leibniz: return "Leibniz";
    case Provenance::derksen3: return "Derksen3";
    case Provenance::det4: return "Det4";
    case Provenance::even_general: return "EvenGeneral";
    case Provenance::laplace_lift: return "LaplaceLift";
    case Provenance::file: return "File";
  }
  throw Error("unreachable provenance");
}

Provenance provenance_from_tag(const std::string& tag) {
  if (tag == "Leibniz") return Provenance::leibniz;
  if (tag == "Derksen3") return Provenance::derksen3;
  if (tag == "Det4") return Provenance::det4;
  if (tag == "EvenGeneral") return Provenance::even_general;
  if (tag == "LaplaceLift") return Provenance::laplace_lift;
  if (tag == "File") return Provenance::file;
  throw ParseError("unknown provenance tag '" + tag + "'");
}

Decomposition::Decomposition(int order, FieldSpec field, Provenance provenance,
                             std::vector<DecomposableTerm> terms)
    : order_(order), field_(field), provenance_(provenance), terms_(std::move(terms)) {
  if (order < 1) throw IndexOutOfRange("decomposition order must be >= 1");
  for (const DecomposableTerm& t : terms_) {
    if (t.coeff.field() != field_) {
      throw FieldMismatch("term coefficient field does not match decomposition");
    }
    if (t.coeff.is_zero()) throw Error("decomposition term with zero coefficient");
    if (static_cast<int>(t.factors.size()) != order_) {
      throw OrderMismatch("term has " + std::to_string(t.factors.size()) +
                          " factors, expected " + std::to_string(order_));
    }
    for (const LinearVector& f : t.factors) {
      if (f.max_index() > order_) {
        throw IndexOutOfRange("covector index " + std::to_string(f.max_index()) +
                              " outside [1, " + std::to_string(order_) + "]");
      }
      for (const auto& [i, c] : f.coeffs()) {
        if (c.field() != field_) {
          throw FieldMismatch("covector coefficient field does not match decomposition");
        }
      }
    }
  }
}

PairIndex::PairIndex(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  const int n = 2 * k();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [i, j] : pairs_) {
    if (i < 1 || j < 1 || i > n || j > n) {
      throw IndexOutOfRange("pair entry outside [1, " + std::to_string(n) + "]");
    }
    if (i >= j) throw Error("pair (i, j) must have i < j");
    if (seen[static_cast<std::size_t>(i)] || seen[static_cast<std::size_t>(j)]) {
      throw Error("pair sequence reuses an index");
    }
    seen[static_cast<std::size_t>(i)] = seen[static_cast<std::size_t>(j)] = true;
  }
}

std::vector<int> PairIndex::flattened() const {
  std::vector<int> flat;
  flat.reserve(pairs_.size() * 2);
  for (const auto& [i, j] : pairs_) {
    flat.push_back(i);
    flat.push_back(j);
  }
  return flat;
}

int PairIndex::parity() const { return Permutation(flattened()).parity(); }

namespace {

void enumerate_pairs_rec(int k, std::vector<int>& remaining,
                         std::vector<std::pair<int, int>>& acc,
                         std::vector<PairIndex>& out) {
  if (static_cast<int>(acc.size()) == k) {
    out.emplace_back(acc);
    return;
  }
  // remaining stays sorted, so scanning (i, j) in order of the two loops
  // yields lexicographic order on the flattened tuple.
  for (std::size_t a = 0; a < remaining.size(); ++a) {
    for (std::size_t b = a + 1; b < remaining.size(); ++b) {
      const int i = remaining[a];
      const int j = remaining[b];
      std::vector<int> rest;
      rest.reserve(remaining.size() - 2);
      for (std::size_t c = 0; c < remaining.size(); ++c) {
        if (c != a && c != b) rest.push_back(remaining[c]);
      }
      acc.emplace_back(i, j);
      enumerate_pairs_rec(k, rest, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<PairIndex> enumerate_pair_indices(int k) {
  if (k < 1) throw IndexOutOfRange("enumerate_pair_indices: k must be >= 1");
  std::vector<int> remaining(static_cast<std::size_t>(2 * k));
  for (int v = 1; v <= 2 * k; ++v) remaining[static_cast<std::size_t>(v) - 1] = v;
  std::vector<PairIndex> out;
  std::vector<std::pair<int, int>> acc;
  enumerate_pairs_rec(k, remaining, acc, out);
  return out;
}

Decomposition leibniz(int n, const FieldSpec& field) {
  if (n < 1) throw IndexOutOfRange("leibniz: n must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<DecomposableTerm> terms;
  do {
    Permutation p(images);
    DecomposableTerm t;
    t.coeff = sign(p, field);
    t.factors.reserve(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s) {
      t.factors.push_back(LinearVector::basis(p.image(s), field));
    }
    terms.push_back(std::move(t));
  } while (std::next_permutation(images.begin(), images.end()));
  return Decomposition(n, field, Provenance::leibniz, std::move(terms));
}

Decomposition derksen3(const FieldSpec& field) {
  field_validate(field);
  const Scalar half = scalar_half(field);
  const Scalar one = Scalar::one(field);
  // covector from (index, +1/-1) entries
  auto cv = [&](std::initializer_list<std::pair<int, int>> entries) {
    LinearVector v;
    for (const auto& [i, s] : entries) v.add(i, s > 0 ? one : -one);
    return v;
  };
  std::vector<DecomposableTerm> terms(5);
  // 1/2 (e2+e3)(e1-e2)(e1+e2)
  terms[0] = {half, {cv({{2, 1}, {3, 1}}), cv({{1, 1}, {2, -1}}), cv({{1, 1}, {2, 1}})}};
  // 1/2 (e1+e2)(e2-e3)(e2+e3)
  terms[1] = {half, {cv({{1, 1}, {2, 1}}), cv({{2, 1}, {3, -1}}), cv({{2, 1}, {3, 1}})}};
  // e2 (e3-e1)(e3+e1)
  terms[2] = {one, {cv({{2, 1}}), cv({{1, -1}, {3, 1}}), cv({{1, 1}, {3, 1}})}};
  // 1/2 (e3-e2)(e2+e1)(e2-e1)
  terms[3] = {half, {cv({{2, -1}, {3, 1}}), cv({{1, 1}, {2, 1}}), cv({{1, -1}, {2, 1}})}};
  // 1/2 (e1-e2)(e3+e2)(e3-e2)
  terms[4] = {half, {cv({{1, 1}, {2, -1}}), cv({{2, 1}, {3, 1}}), cv({{2, -1}, {3, 1}})}};
  return Decomposition(3, field, Provenance::derksen3, std::move(terms));
}

namespace {

DecomposableTerm pair_block_term(const PairIndex& idx, bool minus_first,
                                 const Scalar& coeff, const FieldSpec& field) {
  const int k = idx.k();
  DecomposableTerm t;
  t.coeff = coeff;
  t.factors.reserve(static_cast<std::size_t>(2 * k));
  for (int p = 0; p < k; ++p) {
    const auto& [i, j] = idx.pairs()[static_cast<std::size_t>(p)];
    t.factors.push_back(minus_first ? LinearVector::difference(i, j, field)
                                    : LinearVector::sum(i, j, field));
  }
  for (int p = k - 1; p >= 0; --p) {
    const auto& [i, j] = idx.pairs()[static_cast<std::size_t>(p)];
    t.factors.push_back(minus_first ? LinearVector::sum(i, j, field)
                                    : LinearVector::difference(i, j, field));
  }
  return t;
}

}  // namespace

Decomposition even_general(int k, const FieldSpec& field) {
  if (k < 1) throw IndexOutOfRange("even_general: k must be >= 1");
  field_validate(field);
  const Scalar half = scalar_half(field);
  const std::vector<PairIndex> indices = enumerate_pair_indices(k);
  std::vector<DecomposableTerm> terms;
  terms.reserve(2 * indices.size());
  // difference-first block, then the mirrored sum-first block, each in
  // lexicographic pair-sequence order
  for (const PairIndex& idx : indices) {
    const Scalar c = idx.parity() > 0 ? half : -half;
    terms.push_back(pair_block_term(idx, true, c, field));
  }
  const bool k_odd = k % 2 != 0;
  for (const PairIndex& idx : indices) {
    Scalar c = idx.parity() > 0 ? half : -half;
    if (k_odd) c = -c;
    terms.push_back(pair_block_term(idx, false, c, field));
  }
  return Decomposition(2 * k, field, Provenance::even_general, std::move(terms));
}

Decomposition det4(const FieldSpec& field) {
  field_validate(field);
  const Scalar half = scalar_half(field);
  const Scalar mhalf = -half;
  std::vector<DecomposableTerm> terms;
  struct Row {
    Scalar c;
    int a1, b1, a2, b2;  // pairs (a1, b1), (a2, b2)
    bool minus_first;
  };
  const std::vector<Row> rows = {
      {half, 1, 2, 3, 4, true},  {mhalf, 1, 3, 2, 4, true},
      {half, 1, 4, 2, 3, true},  {half, 2, 3, 1, 4, true},
      {mhalf, 2, 4, 1, 3, true}, {half, 3, 4, 1, 2, true},
      {half, 1, 2, 3, 4, false}, {mhalf, 1, 3, 2, 4, false},
      {half, 1, 4, 2, 3, false}, {half, 2, 3, 1, 4, false},
      {mhalf, 2, 4, 1, 3, false}, {half, 3, 4, 1, 2, false},
  };
  for (const Row& r : rows) {
    PairIndex idx({{r.a1, r.b1}, {r.a2, r.b2}});
    terms.push_back(pair_block_term(idx, r.minus_first, r.c, field));
  }
  return Decomposition(4, field, Provenance::det4, std::move(terms));
}

Decomposition laplace_lift(const Decomposition& d) {
  const int n = d.order() + 1;
  const FieldSpec& field = d.field();
  std::vector<DecomposableTerm> terms;
  terms.reserve(static_cast<std::size_t>(n) * d.term_count());
  for (int i = 1; i <= n; ++i) {
    const bool flip = i % 2 == 0;  // (-1)^(i+1)
    for (const DecomposableTerm& t : d.terms()) {
      DecomposableTerm lifted;
      lifted.coeff = flip ? -t.coeff : t.coeff;
      lifted.factors.reserve(static_cast<std::size_t>(n));
      lifted.factors.push_back(LinearVector::basis(i, field));
      for (const LinearVector& f : t.factors) {
        LinearVector shifted;
        for (const auto& [b, c] : f.coeffs()) {
          shifted.add(b < i ? b : b + 1, c);
        }
        lifted.factors.push_back(std::move(shifted));
      }
      terms.push_back(std::move(lifted));
    }
  }
  return Decomposition(n, field, Provenance::laplace_lift, std::move(terms));
}

Decomposition best_known(int n, const FieldSpec& field) {
  if (n < 1) throw IndexOutOfRange("best_known: n must be >= 1");
  if (n == 1) return leibniz(1, field);
  if (n % 2 == 0) return even_general(n / 2, field);
  return laplace_lift(best_known(n - 1, field));
}

}  // namespace detdecomp
