#ifndef DETDECOMP_SCALAR_HPP
#define DETDECOMP_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include <detdecomp/errors.hpp>

namespace detdecomp {

enum class FieldKind { rationals, prime_field };

// Coefficient domain: the rationals, or the prime field F_p named by its
// modulus. Construction rejects composite moduli. The characteristic-2
// exclusion is a separate check (field_validate) applied by every operation
// that divides by 2, so F_2 stays expressible for the ones that do not.
class FieldSpec {
public:
  FieldSpec() : kind_(FieldKind::rationals), modulus_(0) {}

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime_field(std::uint64_t modulus);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::rationals; }

  // 0 for the rationals, p for F_p. Doubles as the characteristic.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  // "Q" or "Fp:<p>", the spelling used in file headers.
  std::string to_string() const;
  static FieldSpec parse(const std::string& text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  FieldKind kind_;
  std::uint64_t modulus_;
};

// Throws CharTwoError when the characteristic is 2, NotPrimeError when the
// modulus is not prime.
void field_validate(const FieldSpec& spec);

// One exact field element. Rationals are kept in lowest terms with positive
// denominator; prime-field values are the canonical residue in [0, p).
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()), v_(0) {}

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar of(long long value, const FieldSpec& field);
  static Scalar rational(long long num, long long den);

  // Textual syntax: optional leading '-', digits, and for the rationals an
  // optional '/denominator' with a positive denominator. Prime-field input
  // is an integer, reduced mod p.
  static Scalar parse(const std::string& text, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_minus_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on 0

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }

  // Comparing elements of different fields is a usage bug; throws
  // FieldMismatch rather than answering false.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

  // Backing value; for prime fields the residue with denominator 1.
  const mpq_class& value() const { return v_; }

private:
  Scalar(FieldSpec field, mpq_class v) : field_(field), v_(std::move(v)) {}

  void check_same_field(const Scalar& rhs) const;
  void reduce();  // prime fields: bring the integer value into [0, p)

  FieldSpec field_;
  mpq_class v_;
};

// The element 1/2. Validates the field first, so F_2 raises CharTwoError.
Scalar scalar_half(const FieldSpec& spec);

}  // namespace detdecomp

#endif
