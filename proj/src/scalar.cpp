#include <detdecomp/scalar.hpp>

#include <cctype>

namespace detdecomp {

namespace {

bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d <= m / d; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t modulus) {
  if (!is_prime_u64(modulus)) {
    throw NotPrimeError("prime_field: modulus " + std::to_string(modulus) +
                        " is not prime");
  }
  FieldSpec spec;
  spec.kind_ = FieldKind::prime_field;
  spec.modulus_ = modulus;
  return spec;
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "Fp:" + std::to_string(modulus_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty()) throw ParseError("field: missing modulus in '" + text + "'");
    std::uint64_t m = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError("field: bad modulus in '" + text + "'");
      }
      if (m > (UINT64_MAX - 9) / 10) throw ParseError("field: modulus overflow");
      m = m * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return prime_field(m);
  }
  throw ParseError("field: expected 'Q' or 'Fp:<p>', got '" + text + "'");
}

void field_validate(const FieldSpec& spec) {
  if (spec.is_rationals()) return;
  if (!is_prime_u64(spec.modulus())) {
    throw NotPrimeError("field_validate: modulus " +
                        std::to_string(spec.modulus()) + " is not prime");
  }
  if (spec.modulus() == 2) {
    throw CharTwoError(
        "field of characteristic 2: the coefficient 1/2 does not exist there, "
        "so constructions that halve are unavailable");
  }
}

void Scalar::reduce() {
  if (field_.is_rationals()) return;
  mpz_class p(static_cast<unsigned long>(field_.modulus()));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
  v_ = mpq_class(r);
}

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(field, mpq_class(0)); }

Scalar Scalar::one(const FieldSpec& field) { return of(1, field); }

Scalar Scalar::of(long long value, const FieldSpec& field) {
  Scalar s(field, mpq_class(mpz_class(std::to_string(value))));
  s.reduce();
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero("rational: zero denominator");
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(q));
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
  std::size_t i = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) i = 1;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw ParseError("scalar: expected digits in '" + text + "'");

  std::string num = text.substr(0, i);
  std::string den;
  if (i < text.size() && text[i] == '/') {
    if (!field.is_rationals()) {
      throw ParseError("scalar: fraction syntax is not valid in " + field.to_string());
    }
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    den = text.substr(den_start, i - den_start);
    if (den.empty()) throw ParseError("scalar: missing denominator in '" + text + "'");
  }
  if (i != text.size()) throw ParseError("scalar: trailing junk in '" + text + "'");

  mpz_class n(num);
  if (den.empty()) {
    Scalar s(field, mpq_class(n));
    s.reduce();
    return s;
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("scalar: zero denominator in '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(field, std::move(q));
}

bool Scalar::is_minus_one() const {
  if (field_.is_rationals()) return v_ == -1;
  return v_ == mpz_class(static_cast<unsigned long>(field_.modulus())) - 1;
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) return Scalar(field_, -v_);
  Scalar s(field_, -v_);
  s.reduce();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_.is_rationals()) return Scalar(field_, 1 / v_);
  mpz_class p(static_cast<unsigned long>(field_.modulus()));
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0) {
    throw DivisionByZero("inverse: no inverse mod " + std::to_string(field_.modulus()));
  }
  return Scalar(field_, mpq_class(r));
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldMismatch("scalar fields differ: " + field_.to_string() + " vs " +
                        rhs.field_.to_string());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  v_ += rhs.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  v_ -= rhs.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  v_ *= rhs.v_;
  reduce();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.v_ == b.v_;
}

std::string Scalar::to_string() const { return v_.get_str(); }

Scalar scalar_half(const FieldSpec& spec) {
  field_validate(spec);
  if (spec.is_rationals()) return Scalar::rational(1, 2);
  return Scalar::of(2, spec).inverse();
}

}  // namespace detdecomp
