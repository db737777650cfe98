#include "wreathcert/tower/order_expr.hpp"

#include <utility>

#include "wreathcert/error.hpp"

namespace wreathcert::tower {

OrderExprPtr oe_int(const mpz_class& value) {
  if (value < 0) fail("Internal", "negative order expression literal");
  auto e = std::shared_ptr<OrderExpr>(new OrderExpr());
  e->kind_ = OrderExpr::Kind::Int;
  e->value_ = value;
  return e;
}

OrderExprPtr oe_pow(const OrderExprPtr& base, const OrderExprPtr& exponent) {
  if (exponent->kind() == OrderExpr::Kind::Int) {
    if (exponent->value() == 0) return oe_int(1);
    if (exponent->value() == 1) return base;
  }
  if (base->kind() == OrderExpr::Kind::Int && base->value() == 1) return oe_int(1);
  if (base->kind() == OrderExpr::Kind::Pow && base->exponent()->kind() == OrderExpr::Kind::Int &&
      exponent->kind() == OrderExpr::Kind::Int) {
    return oe_pow(base->base(), oe_int(base->exponent()->value() * exponent->value()));
  }
  auto e = std::shared_ptr<OrderExpr>(new OrderExpr());
  e->kind_ = OrderExpr::Kind::Pow;
  e->base_ = base;
  e->exponent_ = exponent;
  return e;
}

namespace {

void flatten(const OrderExprPtr& e, std::vector<OrderExprPtr>& out) {
  if (e->kind() == OrderExpr::Kind::Mul) {
    for (const auto& f : e->factors()) flatten(f, out);
  } else {
    out.push_back(e);
  }
}

// A factor is combinable when it reads as base^k with k an integer literal.
bool split_factor(const OrderExprPtr& f, OrderExprPtr& base, mpz_class& exp) {
  if (f->kind() == OrderExpr::Kind::Int) {
    base = f;
    exp = 1;
    return true;
  }
  if (f->kind() == OrderExpr::Kind::Pow && f->exponent()->kind() == OrderExpr::Kind::Int) {
    base = f->base();
    exp = f->exponent()->value();
    return true;
  }
  return false;
}

}  // namespace

OrderExprPtr oe_mul(const OrderExprPtr& a, const OrderExprPtr& b) {
  std::vector<OrderExprPtr> flat;
  flatten(a, flat);
  flatten(b, flat);

  // Slots preserve first-occurrence order; equal-base integer-exponent powers
  // merge into the slot of their first occurrence.
  struct Slot {
    OrderExprPtr atom;  // set when the factor cannot be combined
    OrderExprPtr base;
    mpz_class exp = 0;
    std::string base_key;
  };
  std::vector<Slot> slots;
  for (const auto& f : flat) {
    if (f->kind() == OrderExpr::Kind::Int && f->value() == 1) continue;
    OrderExprPtr base;
    mpz_class exp;
    if (!split_factor(f, base, exp)) {
      slots.push_back({f, nullptr, 0, ""});
      continue;
    }
    std::string key = base->to_string();
    bool merged = false;
    for (auto& s : slots) {
      if (!s.atom && s.base_key == key) {
        s.exp += exp;
        merged = true;
        break;
      }
    }
    if (!merged) slots.push_back({nullptr, base, exp, key});
  }

  std::vector<OrderExprPtr> factors;
  for (const auto& s : slots) {
    if (s.atom) {
      factors.push_back(s.atom);
    } else {
      factors.push_back(oe_pow(s.base, oe_int(s.exp)));
    }
  }
  if (factors.empty()) return oe_int(1);
  if (factors.size() == 1) return factors.front();
  auto e = std::shared_ptr<OrderExpr>(new OrderExpr());
  e->kind_ = OrderExpr::Kind::Mul;
  e->factors_ = std::move(factors);
  return e;
}

std::string OrderExpr::to_string() const {
  switch (kind_) {
    case Kind::Int:
      return value_.get_str();
    case Kind::Pow: {
      std::string b = base_->to_string();
      if (base_->kind() != Kind::Int) b = "(" + b + ")";
      std::string x = exponent_->to_string();
      if (exponent_->kind() != Kind::Int) x = "(" + x + ")";
      return b + "^" + x;
    }
    case Kind::Mul: {
      std::string out;
      for (const auto& f : factors_) {
        if (!out.empty()) out += " * ";
        std::string s = f->to_string();
        if (f->kind() == Kind::Mul) s = "(" + s + ")";
        out += s;
      }
      return out;
    }
  }
  fail("Internal", "unknown order expression kind");
}

bool oe_equal(const OrderExprPtr& a, const OrderExprPtr& b) {
  return a->to_string() == b->to_string();
}

namespace {

void check_digits(const mpz_class& v, unsigned long max_digits) {
  if (mpz_sizeinbase(v.get_mpz_t(), 10) > max_digits)
    fail("OrderTooLarge", "value exceeds " + std::to_string(max_digits) + " decimal digits");
}

}  // namespace

mpz_class oe_evaluate(const OrderExprPtr& expr, unsigned long max_digits) {
  switch (expr->kind()) {
    case OrderExpr::Kind::Int: {
      check_digits(expr->value(), max_digits);
      return expr->value();
    }
    case OrderExpr::Kind::Pow: {
      mpz_class b = oe_evaluate(expr->base(), max_digits);
      mpz_class e = oe_evaluate(expr->exponent(), max_digits);
      if (b == 0) return e == 0 ? mpz_class(1) : mpz_class(0);
      if (b == 1) return 1;
      if (!e.fits_ulong_p())
        fail("OrderTooLarge", "exponent too large to evaluate: " + e.get_str());
      mpz_class estimate = e * static_cast<unsigned long>(mpz_sizeinbase(b.get_mpz_t(), 10));
      if (estimate > static_cast<long>(max_digits))
        fail("OrderTooLarge",
             "power would exceed " + std::to_string(max_digits) + " decimal digits");
      mpz_class out;
      mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e.get_ui());
      check_digits(out, max_digits);
      return out;
    }
    case OrderExpr::Kind::Mul: {
      mpz_class out = 1;
      for (const auto& f : expr->factors()) {
        out *= oe_evaluate(f, max_digits);
        check_digits(out, max_digits);
      }
      return out;
    }
  }
  fail("Internal", "unknown order expression kind");
}

OrderExprPtr group_order(const TowerSpec& spec, int level) {
  if (level < 0) fail("BadLevel", "group order at negative level");
  if (level == 0) return oe_int(1);
  OrderExprPtr g = oe_int(mpz_class(spec.group_at(1).order));
  for (int i = 2; i <= level; ++i) {
    OrderExprPtr s = oe_int(mpz_class(spec.group_at(i).order));
    g = oe_mul(oe_pow(s, g), g);
  }
  return g;
}

OrderExprPtr base_factor_order(const TowerSpec& spec, int i) {
  if (i < 1) fail("BadLevel", "base factor index must be at least 1");
  return oe_pow(oe_int(mpz_class(spec.group_at(i + 1).order)), group_order(spec, i));
}

}  // namespace wreathcert::tower
