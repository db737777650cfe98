#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "wreathcert/tower/spec.hpp"

namespace wreathcert::tower {

// Symbolic integer built from literals, powers, and products. Tower orders
// grow far beyond any dense representation, so they are kept as expressions
// and only evaluated on demand under a digit cap.
class OrderExpr;
using OrderExprPtr = std::shared_ptr<const OrderExpr>;

class OrderExpr {
 public:
  enum class Kind { Int, Pow, Mul };

  Kind kind() const { return kind_; }
  const mpz_class& value() const { return value_; }          // Int only
  const OrderExprPtr& base() const { return base_; }         // Pow only
  const OrderExprPtr& exponent() const { return exponent_; }  // Pow only
  const std::vector<OrderExprPtr>& factors() const { return factors_; }  // Mul only

  std::string to_string() const;

  friend OrderExprPtr oe_int(const mpz_class& value);
  friend OrderExprPtr oe_pow(const OrderExprPtr& base, const OrderExprPtr& exponent);
  friend OrderExprPtr oe_mul(const OrderExprPtr& a, const OrderExprPtr& b);

 private:
  OrderExpr() = default;
  Kind kind_ = Kind::Int;
  mpz_class value_ = 0;
  OrderExprPtr base_, exponent_;
  std::vector<OrderExprPtr> factors_;
};

OrderExprPtr oe_int(const mpz_class& value);
// Collapses exponent 1 and merges a power of a power with integer exponents.
OrderExprPtr oe_pow(const OrderExprPtr& base, const OrderExprPtr& exponent);
// Flattens nested products and combines equal-base powers whose exponents are
// both integer literals (a bare factor counts as exponent 1).
OrderExprPtr oe_mul(const OrderExprPtr& a, const OrderExprPtr& b);

bool oe_equal(const OrderExprPtr& a, const OrderExprPtr& b);

// Exact value; fails with OrderTooLarge when any intermediate would exceed
// max_digits decimal digits.
mpz_class oe_evaluate(const OrderExprPtr& expr, unsigned long max_digits);

inline constexpr unsigned long kDefaultOrderDigitCap = 10000;

// |G_level| for the tower; level 0 is the trivial group.
OrderExprPtr group_order(const TowerSpec& spec, int level);
// |M_i| = |S_{i+1}|^{|G_i|}, the order of the i-th base factor.
OrderExprPtr base_factor_order(const TowerSpec& spec, int i);

}  // namespace wreathcert::tower
