#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wreathcert/galg/scalar.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/spec.hpp"

namespace wreathcert::galg {

// Sparse element of the group algebra K[G] over a tower group, with exact
// coefficients. Terms are kept in canonical (byte-lexicographic) order of
// their group elements and zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement(const tower::TowerSpec& spec, long characteristic);

  static AlgebraElement unit(const tower::TowerSpec& spec, long characteristic);
  static AlgebraElement term(const tower::TowerSpec& spec, long characteristic,
                             const Scalar& coeff, const tower::Element& g);

  const tower::TowerSpec& spec() const { return spec_; }
  long characteristic() const { return char_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<tower::Element, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const tower::Element& g) const;
  std::vector<tower::Element> support() const;
  int support_level() const;  // max tree level over the support; fails on zero

  void add_term(const tower::Element& g, const Scalar& coeff);

  std::string to_string() const;
  static AlgebraElement parse(const std::string& text, const tower::TowerSpec& spec,
                              long characteristic);

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& k, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  tower::TowerSpec spec_;
  long char_ = 0;
  std::map<tower::Element, Scalar> terms_;
};

AlgebraElement ga_conjugate(const AlgebraElement& a, const tower::Element& t);
Scalar augmentation(const AlgebraElement& a);

// Writes a nonzero input as k_0*1 + k_1*x_1^-1 + ... + k_n*x_n^-1 after a
// right translation that moves the canonically smallest support element to
// the identity. Idempotent when the identity is already in the support.
struct NormalizedInput {
  AlgebraElement alpha;       // translated element, identity coefficient k_0 != 0
  tower::Element translator;  // alpha = input * translator
  std::vector<tower::Element> xs;  // xs[0] = 1; xs[i] is the inverse of a support element
  std::vector<Scalar> ks;          // ks[i] = coefficient of xs[i]^-1 in alpha
  int support_level = 0;           // max tree level over the support of alpha
};

NormalizedInput normalize_input(const AlgebraElement& input);

}  // namespace wreathcert::galg
