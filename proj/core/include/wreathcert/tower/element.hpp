#pragma once

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wreathcert/fingrp/perm.hpp"
#include "wreathcert/fingrp/subgroup.hpp"
#include "wreathcert/tower/spec.hpp"

namespace wreathcert::tower {

// Element of the direct limit of the tower G_1 <= G_2 <= ..., where
// G_{i+1} = S_{i+1} wr G_i with base coordinates indexed by G_i acting on
// itself by right translation. Multiplication follows
//   (f,g)(f',g') = (c -> f(c)*f'(c*g), g*g')
// and conjugating a base entry at coordinate c by an embedded g moves it
// to c*g.
//
// Canonical form: immutable, stored at minimal level (a node with an empty
// base collapses to its act), base keys ascending by serialization with
// identity values omitted. Equality and ordering are byte-lexicographic on
// the canonical serialization
//   level 1:  p[i0,i1,...]
//   level L:  wL{act=<elem>;base=[(<key>:<perm>),...]}
// The explicit level distinguishes base-only elements of M_{L-1} from the
// byte-identical trees one level down in constant towers.
class Element {
 public:
  using BaseEntry = std::pair<Element, fingrp::Perm>;

  static Element leaf(fingrp::Perm p);
  // Canonicalizing: drops identity values, sorts keys, strips empty layers.
  // Requires level >= 2, act.level() < level, key.level() < level.
  static Element wreath(int level, Element act, std::vector<BaseEntry> base);
  static Element parse(const std::string& text);

  int level() const;
  bool is_leaf() const { return level() == 1; }
  const fingrp::Perm& leaf_perm() const;
  const Element& act() const;                  // level() >= 2
  const std::vector<BaseEntry>& base() const;  // level() >= 2
  bool is_identity() const;
  // Degree of the level-1 layer, recovered from the leftmost leaf.
  int leaf_degree() const;

  const std::string& to_string() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.node_ == b.node_ || a.to_string() == b.to_string();
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  struct Node;
  explicit Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Element mul(const Element& x, const Element& y);
Element inv(const Element& x);
// x^g = g^-1 x g.
Element conj(const Element& x, const Element& g);
Element commutator(const Element& x, const Element& y);

// Identity of the whole tower (equivalently of G_1).
Element identity(const TowerSpec& spec);

// Inclusion G_i <= G_j for j >= level(x); the identity map on canonical forms.
Element embed(const Element& x, int level);

// Image of x under G -> G_j (forgetting all layers above j); j = 0 gives the
// identity. project is a group homomorphism for each j.
Element project(const Element& x, int j);

// x = mul(n, g) with g = project(x, k) and project(n, k) trivial.
std::pair<Element, Element> decompose(const Element& x, int k);

// Membership in T_i = <M_j ; j >= i>; T_0 is the whole group.
bool in_T(const Element& x, int i);
// Largest i with x in T_i; fails with IdentityElement for the identity.
int max_T_level(const Element& x);

// Layer-degree consistency against the spec.
void validate_element(const TowerSpec& spec, const Element& x);

long element_order(const Element& x);

}  // namespace wreathcert::tower

namespace wreathcert::fingrp {
template <>
struct GroupOps<tower::Element> {
  static tower::Element mul(const tower::Element& a, const tower::Element& b) {
    return tower::mul(a, b);
  }
  static tower::Element inv(const tower::Element& a) { return tower::inv(a); }
};
}  // namespace wreathcert::fingrp
