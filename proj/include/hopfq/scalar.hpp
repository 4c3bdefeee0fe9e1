#ifndef HOPFQ_SCALAR_HPP
#define HOPFQ_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

#include "hopfq/error.hpp"

namespace hopfq {

/// Ground field tag: the rationals, or a prime field GF(p) with p < 2^31.
/// Carried on every scalar; there is no global field state.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }

  bool operator==(const Field& other) const = default;

  std::string to_string() const;

 private:
  explicit Field(std::uint32_t m) : modulus_(m) {}
  std::uint32_t modulus_;  // 0 = rationals
};

/// An element of an exact field: an arbitrary-precision rational in lowest
/// terms with positive denominator, or a residue in [0, p). All arithmetic
/// is exact; operands of different fields raise FieldMismatch.
///
/// Rationals with numerator and denominator below 2^31 are held in machine
/// words; larger values promote to GMP transparently.
class Scalar {
 public:
  static Scalar zero(const Field& f) { return of_int(f, 0); }
  static Scalar one(const Field& f) { return of_int(f, 1); }
  static Scalar of_int(const Field& f, long v);
  static Scalar rational(long num, long den);
  static Scalar of_mpq(mpq_class v);

  /// Accepts "a" and "a/b" with optional leading sign, digits only.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);

  /// Multiplicative inverse; raises DivisionByZero on zero.
  Scalar inv() const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  /// Display form: "a/b" for rationals, "r mod p" for prime fields.
  std::string to_string() const;
  /// Bare literal used in files: "a/b" or "r" (field known from context).
  std::string to_literal() const;

  /// The value as a GMP rational (rational field only).
  mpq_class rational_value() const;
  std::uint32_t residue() const { return static_cast<std::uint32_t>(num_); }

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void require_same_field(const Scalar& rhs) const;
  static Scalar make_small(const Field& f, std::int64_t num, std::int64_t den);
  static Scalar from_int64_quotient(std::int64_t num, std::int64_t den);

  Field field_ = Field::rationals();
  std::int64_t num_ = 0;  // small numerator, or the prime-field residue
  std::int64_t den_ = 1;  // small positive denominator
  bool small_ = true;
  std::shared_ptr<const mpq_class> big_;  // set iff !small_; immutable payload
};

}  // namespace hopfq

#endif
