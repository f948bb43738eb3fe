#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "supchar/errors.hpp"

namespace supchar {

// GMP rationals are kept canonical by every arithmetic operation; values built
// from a raw numerator/denominator pair must go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// Dense integer polynomial, coefficient of x^i at index i.
using IntPolynomial = std::vector<BigInt>;

IntPolynomial cyclotomic_polynomial(int n);

int euler_phi(int n);

/// The N-th cyclotomic field Q(zeta_N) with the power basis
/// 1, zeta, ..., zeta^(phi(N)-1). Holds the reduction of every zeta^e,
/// 0 <= e < N, into that basis so products reduce in one pass.
class CyclotomicField {
 public:
  explicit CyclotomicField(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  const IntPolynomial& modulus() const noexcept { return modulus_; }
  // Power-basis coordinates of zeta^e for 0 <= e < order.
  const std::vector<BigInt>& power(int e) const { return powers_[static_cast<std::size_t>(e)]; }

  static std::shared_ptr<const CyclotomicField> make(int order);

 private:
  int order_;
  int degree_;
  IntPolynomial modulus_;
  std::vector<std::vector<BigInt>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Exact element of Q(zeta_N), stored sparsely in the reduced power basis.
/// Only nonzero coefficients are kept, ordered by exponent, so equal values
/// have identical encodings.
class Cyclotomic {
 public:
  struct Term {
    int exponent;
    Rational coeff;

    bool operator==(const Term&) const = default;
  };

  // Zero in Q(zeta_1) = Q.
  Cyclotomic();
  Cyclotomic(FieldPtr field, const Rational& value);
  Cyclotomic(FieldPtr field, long value) : Cyclotomic(std::move(field), Rational(value)) {}

  // Sum of coeff * zeta^exponent with arbitrary exponents, reduced.
  static Cyclotomic from_terms(FieldPtr field, const std::vector<Term>& terms);
  static Cyclotomic root(FieldPtr field, long k);

  int order() const noexcept { return field_->order(); }
  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  // Coefficient on zeta^0 when is_rational(), else throws ArgumentError.
  Rational as_rational() const;
  // Dense coordinates in the power basis, length field()->degree().
  std::vector<Rational> coordinates() const;

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
  Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

  Cyclotomic scale(const Rational& r) const;
  // Image under zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const;

  // Throws OrderMismatch when orders differ.
  bool equals(const Cyclotomic& other) const;
  bool operator==(const Cyclotomic& other) const { return equals(other); }

  // Injective byte encoding of the value, including the field order.
  std::string canonical_key() const;

  // Human-readable form such as "1-2*z7^3+1/2*z7^5".
  std::string to_string() const;

 private:
  Cyclotomic(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)), terms_(std::move(terms)) {}

  void require_same_field(const Cyclotomic& other) const;
  // Reduces a dense vector indexed by exponent modulo N.
  static Cyclotomic reduce_dense(FieldPtr field, std::vector<Rational>& acc);

  FieldPtr field_;
  std::vector<Term> terms_;
};

inline Cyclotomic root_of_unity(const FieldPtr& field, long k) { return Cyclotomic::root(field, k); }
Cyclotomic root_of_unity(int order, long k);

Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic scale(const Cyclotomic& a, const Rational& r);
Cyclotomic negate(const Cyclotomic& a);
Cyclotomic conjugate(const Cyclotomic& a);
bool equals(const Cyclotomic& a, const Cyclotomic& b);
std::string canonical_key(const Cyclotomic& a);

// [[num, den, exp], ...]; num/den are JSON integers when they fit in 64 bits,
// decimal strings otherwise. The root order travels with the enclosing document.
nlohmann::ordered_json to_json(const Cyclotomic& value);
Cyclotomic cyclotomic_from_json(const FieldPtr& field, const nlohmann::json& doc);

std::string to_string(const Rational& r);

}  // namespace supchar
