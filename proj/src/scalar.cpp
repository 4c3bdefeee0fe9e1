#include "hopfq/scalar.hpp"

#include <cctype>
#include <numeric>

namespace hopfq {

namespace {

constexpr std::int64_t kSmallBound = std::int64_t{1} << 31;

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p); p prime, 0 < a < p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw Error("field modulus must be a prime below 2^31, got " +
                std::to_string(p));
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "QQ" : "GF " + std::to_string(modulus_);
}

Scalar Scalar::make_small(const Field& f, std::int64_t num, std::int64_t den) {
  Scalar s(f);
  s.num_ = num;
  s.den_ = den;
  return s;
}

/// Reduce an int64 quotient; the operands must individually be products of
/// values below 2^31 so no intermediate overflow is possible.
Scalar Scalar::from_int64_quotient(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (num > -kSmallBound && num < kSmallBound && den < kSmallBound)
    return make_small(Field::rationals(), num, den);
  Scalar s(Field::rationals());
  s.small_ = false;
  s.big_ = std::make_shared<const mpq_class>(mpz_class(num), mpz_class(den));
  return s;
}

Scalar Scalar::of_int(const Field& f, long v) {
  if (f.is_rational()) return from_int64_quotient(v, 1);
  long m = static_cast<long>(f.modulus());
  long r = v % m;
  if (r < 0) r += m;
  return make_small(f, r, 1);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  return from_int64_quotient(num, den);
}

Scalar Scalar::of_mpq(mpq_class v) {
  v.canonicalize();
  if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p()) {
    std::int64_t num = v.get_num().get_si(), den = v.get_den().get_si();
    if (num > -kSmallBound && num < kSmallBound && den < kSmallBound)
      return make_small(Field::rationals(), num, den);
  }
  Scalar s(Field::rationals());
  s.small_ = false;
  s.big_ = std::make_shared<const mpq_class>(std::move(v));
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto is_integer_literal = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  std::string num = text, den;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_integer_literal(den, false) ||
        den.find_first_not_of('0') == std::string::npos)
      throw ParseError("denominator must be a positive integer: '" + text + "'");
  }
  if (!is_integer_literal(num, true))
    throw ParseError("not a scalar literal: '" + text + "'");
  if (num[0] == '+') num = num.substr(1);

  mpq_class q(den.empty() ? num : num + "/" + den);
  q.canonicalize();
  if (f.is_rational()) return of_mpq(std::move(q));

  if (!den.empty() && mpz_class(den) % f.modulus() == 0)
    throw ParseError("denominator not invertible in " + f.to_string() + ": '" +
                     text + "'");
  mpz_class m(f.modulus());
  mpz_class r = q.get_num() % m;
  if (r < 0) r += m;
  Scalar s = of_int(f, r.get_si());
  mpz_class d = q.get_den() % m;
  if (d != 1) s = s * of_int(f, d.get_si()).inv();
  return s;
}

bool Scalar::is_zero() const { return small_ ? num_ == 0 : *big_ == 0; }

bool Scalar::is_one() const { return small_ ? num_ == 1 && den_ == 1 : *big_ == 1; }

mpq_class Scalar::rational_value() const {
  if (!field_.is_rational()) throw FieldMismatch("not a rational scalar");
  if (!small_) return *big_;
  return mpq_class(mpz_class(num_), mpz_class(den_));
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_))
    throw FieldMismatch("operands live in " + field_.to_string() + " and " +
                        rhs.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  if (!field_.is_rational()) {
    std::int64_t r = num_ + rhs.num_;
    if (r >= field_.modulus()) r -= field_.modulus();
    return make_small(field_, r, 1);
  }
  if (small_ && rhs.small_)
    return from_int64_quotient(num_ * rhs.den_ + rhs.num_ * den_,
                               den_ * rhs.den_);
  return of_mpq(rational_value() + rhs.rational_value());
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  if (!field_.is_rational()) {
    std::uint64_t r = std::uint64_t(num_) * std::uint64_t(rhs.num_);
    return make_small(field_, static_cast<std::int64_t>(r % field_.modulus()), 1);
  }
  if (small_ && rhs.small_)
    return from_int64_quotient(num_ * rhs.num_, den_ * rhs.den_);
  return of_mpq(rational_value() * rhs.rational_value());
}

Scalar Scalar::operator-() const {
  if (!field_.is_rational())
    return make_small(field_, num_ == 0 ? 0 : field_.modulus() - num_, 1);
  if (small_) return make_small(field_, -num_, den_);
  return of_mpq(-*big_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  *this = *this + rhs;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.to_string());
  if (!field_.is_rational())
    return make_small(
        field_,
        mod_inverse(static_cast<std::uint32_t>(num_), field_.modulus()), 1);
  if (small_)
    return num_ < 0 ? make_small(field_, -den_, -num_)
                    : make_small(field_, den_, num_);
  return of_mpq(1 / *big_);
}

bool Scalar::operator==(const Scalar& rhs) const {
  require_same_field(rhs);
  if (small_ && rhs.small_) return num_ == rhs.num_ && den_ == rhs.den_;
  if (!field_.is_rational()) return num_ == rhs.num_;
  return rational_value() == rhs.rational_value();
}

std::string Scalar::to_string() const {
  if (!field_.is_rational())
    return std::to_string(num_) + " mod " + std::to_string(field_.modulus());
  return to_literal();
}

std::string Scalar::to_literal() const {
  if (!field_.is_rational()) return std::to_string(num_);
  if (!small_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hopfq
