#include "wreathcert/galg/scalar.hpp"

#include <stdexcept>

#include "wreathcert/error.hpp"
#include "wreathcert/util.hpp"

namespace wreathcert::galg {

void check_characteristic(long characteristic) {
  if (characteristic == 0) return;
  if (characteristic > 1 && is_prime(static_cast<unsigned long>(characteristic))) return;
  fail("BadCharacteristic", "characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
}

Scalar Scalar::rational(const mpq_class& value) {
  Scalar s;
  s.char_ = 0;
  s.rat_ = value;
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::rational(long value) { return rational(mpq_class(value)); }

Scalar Scalar::residue(const mpz_class& value, unsigned long p) {
  check_characteristic(static_cast<long>(p));
  Scalar s;
  s.char_ = static_cast<long>(p);
  mpz_class r = value % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  s.res_ = r.get_ui();
  return s;
}

Scalar Scalar::zero(long characteristic) {
  check_characteristic(characteristic);
  if (characteristic == 0) return rational(0L);
  return residue(0, static_cast<unsigned long>(characteristic));
}

Scalar Scalar::one(long characteristic) {
  check_characteristic(characteristic);
  if (characteristic == 0) return rational(1L);
  return residue(1, static_cast<unsigned long>(characteristic));
}

Scalar Scalar::from_integer(const mpz_class& value, long characteristic) {
  check_characteristic(characteristic);
  if (characteristic == 0) return rational(mpq_class(value));
  return residue(value, static_cast<unsigned long>(characteristic));
}

bool Scalar::is_zero() const {
  if (char_ == 0) return rat_ == 0;
  return res_ == 0;
}

const mpq_class& Scalar::rational_value() const {
  if (char_ != 0) fail("CharacteristicMismatch", "rational_value on mod-p scalar");
  return rat_;
}

unsigned long Scalar::residue_value() const {
  if (char_ == 0) fail("CharacteristicMismatch", "residue_value on rational scalar");
  return res_;
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.characteristic() != b.characteristic())
    fail("CharacteristicMismatch",
         "scalar characteristics differ: " + std::to_string(a.characteristic()) + " vs " +
             std::to_string(b.characteristic()));
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

Scalar Scalar::operator-() const {
  if (char_ == 0) return rational(-rat_);
  unsigned long p = static_cast<unsigned long>(char_);
  return residue(res_ == 0 ? 0 : mpz_class(p - res_), p);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.char_ == 0) return Scalar::rational(a.rat_ + b.rat_);
  unsigned long p = static_cast<unsigned long>(a.char_);
  unsigned long s = a.res_ + b.res_;
  if (s >= p) s -= p;
  Scalar r;
  r.char_ = a.char_;
  r.res_ = s;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.char_ == 0) return Scalar::rational(a.rat_ * b.rat_);
  Scalar r;
  r.char_ = a.char_;
  r.res_ = mulmod(a.res_, b.res_, static_cast<unsigned long>(a.char_));
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail("ZeroElement", "inverse of zero scalar");
  if (char_ == 0) return rational(1 / rat_);
  // Fermat: p is prime, res_ != 0.
  unsigned long p = static_cast<unsigned long>(char_);
  unsigned long result = 1, base = res_, e = p - 2;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  Scalar r;
  r.char_ = char_;
  r.res_ = result;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.char_ != b.char_) return false;
  if (a.char_ == 0) return a.rat_ == b.rat_;
  return a.res_ == b.res_;
}

std::string Scalar::to_string() const {
  if (char_ == 0) {
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
  }
  return std::to_string(res_) + " mod " + std::to_string(char_);
}

Scalar Scalar::parse(const std::string& text, long characteristic) {
  check_characteristic(characteristic);
  if (characteristic == 0) {
    auto slash = text.find('/');
    try {
      mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
      mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(text.substr(slash + 1));
      if (den == 0) fail("ParseError", "zero denominator in scalar: " + text);
      mpq_class q(num, den);
      q.canonicalize();
      return rational(q);
    } catch (const std::invalid_argument&) {
      fail("ParseError", "bad rational scalar: " + text);
    }
  }
  auto mod = text.find(" mod ");
  std::string head = mod == std::string::npos ? text : text.substr(0, mod);
  if (mod != std::string::npos) {
    long p = 0;
    try {
      p = std::stol(text.substr(mod + 5));
    } catch (const std::exception&) {
      fail("ParseError", "bad modulus in scalar: " + text);
    }
    if (p != characteristic)
      fail("CharacteristicMismatch", "scalar modulus " + std::to_string(p) +
                                         " does not match characteristic " +
                                         std::to_string(characteristic));
  }
  try {
    mpz_class r(head);
    return residue(r, static_cast<unsigned long>(characteristic));
  } catch (const std::invalid_argument&) {
    fail("ParseError", "bad residue scalar: " + text);
  }
}

}  // namespace wreathcert::galg
