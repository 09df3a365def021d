#include <detdecomp/poly_forms.hpp>

#include <algorithm>
#include <utility>

namespace detdecomp {

void LinearForm::add(VarId v, const Scalar& c) {
  if (v.i < 1 || v.j < 1) throw IndexOutOfRange("variable indices must be >= 1");
  if (c.is_zero()) return;
  auto it = coeffs_.lower_bound(v);
  if (it != coeffs_.end() && it->first == v) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  } else {
    coeffs_.emplace_hint(it, v, c);
  }
}

void LinearForm::add_scaled(const LinearForm& other, const Scalar& s) {
  for (const auto& [v, c] : other.coeffs_) add(v, c * s);
}

namespace {

void check_chow_shape(int order, const FieldSpec& field,
                      const std::vector<ChowTerm>& terms) {
  for (const ChowTerm& t : terms) {
    if (t.coeff.field() != field) throw FieldMismatch("chow coefficient field mismatch");
    if (static_cast<int>(t.forms.size()) != order) {
      throw OrderMismatch("chow term has " + std::to_string(t.forms.size()) +
                          " forms, expected " + std::to_string(order));
    }
    for (const LinearForm& f : t.forms) {
      for (const auto& [v, c] : f.coeffs()) {
        if (v.i > order || v.j > order) {
          throw IndexOutOfRange("variable x[" + std::to_string(v.i) + "," +
                                std::to_string(v.j) + "] outside order " +
                                std::to_string(order));
        }
        if (c.field() != field) throw FieldMismatch("chow form field mismatch");
      }
    }
  }
}

}  // namespace

ChowDecomposition::ChowDecomposition(int order, FieldSpec field,
                                     std::vector<ChowTerm> terms)
    : order_(order), field_(field), terms_(std::move(terms)) {
  if (order < 1) throw IndexOutOfRange("chow order must be >= 1");
  check_chow_shape(order_, field_, terms_);
}

WaringDecomposition::WaringDecomposition(int order, FieldSpec field,
                                         std::vector<WaringSummand> summands)
    : order_(order), field_(field), summands_(std::move(summands)) {
  if (order < 1) throw IndexOutOfRange("waring order must be >= 1");
  for (const WaringSummand& s : summands_) {
    if (s.coeff.field() != field_) throw FieldMismatch("waring coefficient field mismatch");
    if (s.power < 1) throw IndexOutOfRange("waring power must be >= 1");
    for (const auto& [v, c] : s.form.coeffs()) {
      if (v.i > order_ || v.j > order_) {
        throw IndexOutOfRange("variable outside order " + std::to_string(order_));
      }
      if (c.field() != field_) throw FieldMismatch("waring form field mismatch");
    }
  }
}

Polynomial::Polynomial(int order, FieldSpec field) : order_(order), field_(field) {
  if (order < 1) throw IndexOutOfRange("polynomial order must be >= 1");
}

std::size_t Polynomial::var_slot(VarId v) const {
  if (v.i < 1 || v.i > order_ || v.j < 1 || v.j > order_) {
    throw IndexOutOfRange("variable x[" + std::to_string(v.i) + "," +
                          std::to_string(v.j) + "] outside order " +
                          std::to_string(order_));
  }
  return static_cast<std::size_t>(v.i - 1) * static_cast<std::size_t>(order_) +
         static_cast<std::size_t>(v.j - 1);
}

void Polynomial::add_term(const std::vector<int>& exponents, const Scalar& c) {
  const std::size_t want =
      static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_);
  if (exponents.size() != want) {
    throw OrderMismatch("exponent vector length " + std::to_string(exponents.size()) +
                        ", expected " + std::to_string(want));
  }
  if (c.field() != field_) throw FieldMismatch("polynomial coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = terms_.lower_bound(exponents);
  if (it != terms_.end() && it->first == exponents) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace_hint(it, exponents, c);
  }
}

Polynomial Polynomial::times_linear(const LinearForm& f) const {
  Polynomial out(order_, field_);
  for (const auto& [exps, c] : terms_) {
    for (const auto& [v, fc] : f.coeffs()) {
      std::vector<int> bumped = exps;
      bumped[var_slot(v)] += 1;
      out.add_term(bumped, c * fc);
    }
  }
  return out;
}

ChowDecomposition to_chow(const Decomposition& d) {
  std::vector<ChowTerm> terms;
  terms.reserve(d.term_count());
  for (const DecomposableTerm& t : d.terms()) {
    ChowTerm ct;
    ct.coeff = t.coeff;
    ct.forms.reserve(t.factors.size());
    for (int s = 1; s <= d.order(); ++s) {
      LinearForm f;
      for (const auto& [i, c] : t.factors[static_cast<std::size_t>(s) - 1].coeffs()) {
        f.add(VarId{i, s}, c);
      }
      ct.forms.push_back(std::move(f));
    }
    terms.push_back(std::move(ct));
  }
  return ChowDecomposition(d.order(), d.field(), std::move(terms));
}

Polynomial expand_poly(const ChowDecomposition& c) {
  const int n = c.order();
  const std::size_t nvars =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  Polynomial out(n, c.field());
  for (const ChowTerm& t : c.terms()) {
    Polynomial prod(n, c.field());
    prod.add_term(std::vector<int>(nvars, 0), t.coeff);
    for (const LinearForm& f : t.forms) prod = prod.times_linear(f);
    for (const auto& [exps, coeff] : prod.terms()) out.add_term(exps, coeff);
  }
  return out;
}

WaringDecomposition chow_to_waring(const ChowDecomposition& c) {
  const int n = c.order();
  const FieldSpec& field = c.field();
  if (!field.is_rationals() &&
      field.modulus() <= static_cast<std::uint64_t>(n)) {
    throw CharTooSmall("chow_to_waring: needs " + std::to_string(n) +
                       "! invertible, but the characteristic is " +
                       std::to_string(field.modulus()));
  }
  // 1 / (2^(n-1) n!)
  Scalar denom = Scalar::one(field);
  const Scalar two = Scalar::of(2, field);
  for (int r = 1; r < n; ++r) denom *= two;
  for (int r = 2; r <= n; ++r) denom *= Scalar::of(r, field);
  const Scalar weight = denom.inverse();

  std::vector<WaringSummand> summands;
  for (const ChowTerm& t : c.terms()) {
    const std::size_t patterns = static_cast<std::size_t>(1)
                                 << static_cast<std::size_t>(n - 1);
    for (std::size_t bits = 0; bits < patterns; ++bits) {
      LinearForm g = t.forms[0];
      int sign_product = 1;
      for (int s = 1; s < n; ++s) {
        const bool negative = (bits >> (s - 1)) & 1u;
        const Scalar eps = negative ? -Scalar::one(field) : Scalar::one(field);
        if (negative) sign_product = -sign_product;
        g.add_scaled(t.forms[static_cast<std::size_t>(s)], eps);
      }
      if (g.is_zero()) continue;  // 0^n contributes nothing
      WaringSummand summand;
      summand.coeff = t.coeff * weight;
      if (sign_product < 0) summand.coeff = -summand.coeff;
      summand.form = std::move(g);
      summand.power = n;
      summands.push_back(std::move(summand));
    }
  }
  return WaringDecomposition(n, field, std::move(summands));
}

Polynomial expand_waring(const WaringDecomposition& w) {
  const int n = w.order();
  const std::size_t nvars =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  Polynomial out(n, w.field());
  for (const WaringSummand& s : w.summands()) {
    Polynomial prod(n, w.field());
    prod.add_term(std::vector<int>(nvars, 0), s.coeff);
    for (int r = 0; r < s.power; ++r) prod = prod.times_linear(s.form);
    for (const auto& [exps, coeff] : prod.terms()) out.add_term(exps, coeff);
  }
  return out;
}

Polynomial det_polynomial(int n, const FieldSpec& field) {
  Polynomial out(n, field);
  const std::size_t nvars =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  do {
    const Permutation p(images);
    std::vector<int> exps(nvars, 0);
    for (int i = 1; i <= n; ++i) {
      exps[out.var_slot(VarId{i, p.image(i)})] += 1;
    }
    out.add_term(exps, sign(p, field));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool poly_equal_det(const Polynomial& p, int n) {
  if (p.order() != n) return false;
  return p == det_polynomial(n, p.field());
}

}  // namespace detdecomp
