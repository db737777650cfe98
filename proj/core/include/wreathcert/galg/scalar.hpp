#pragma once

#include <gmpxx.h>

#include <string>

namespace wreathcert::galg {

// Exact field element: a rational when the characteristic is 0, otherwise a
// residue mod a prime p. Mixed-characteristic arithmetic is refused.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  static Scalar rational(const mpq_class& value);
  static Scalar rational(long value);
  static Scalar residue(const mpz_class& value, unsigned long p);
  static Scalar zero(long characteristic);
  static Scalar one(long characteristic);
  // Canonical image of an integer in the field of the given characteristic.
  static Scalar from_integer(const mpz_class& value, long characteristic);

  long characteristic() const { return char_; }
  bool is_zero() const;
  const mpq_class& rational_value() const;
  unsigned long residue_value() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar inverse() const;  // fails with ZeroElement on zero

  friend bool operator==(const Scalar& a, const Scalar& b);

  // "num/den" (characteristic 0) or "r mod p".
  std::string to_string() const;
  static Scalar parse(const std::string& text, long characteristic);

 private:
  long char_ = 0;
  mpq_class rat_ = 0;
  unsigned long res_ = 0;
};

void check_characteristic(long characteristic);  // 0 or a prime

}  // namespace wreathcert::galg
