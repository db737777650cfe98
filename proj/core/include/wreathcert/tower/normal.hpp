#pragma once

#include <string>
#include <vector>

#include "wreathcert/tower/element.hpp"

namespace wreathcert::tower {

// Symbolic handle on a normal subgroup of the tower: either T(i) (everything
// vanishing under projection to level i, with T(0) the whole group) or the
// finite kernel prod_{j=k}^{i} M_j inside G_{i+1}.
struct SymbolicNormal {
  enum class Kind { T, FiniteProduct };
  Kind kind = Kind::T;
  int i = 0;  // T(i), or the top index of the product
  int k = 0;  // first index of the product (1 <= k <= i)

  static SymbolicNormal T(int i);
  static SymbolicNormal finite_product(int k, int i);

  bool contains(const Element& x) const;
  std::string to_string() const;  // "T(3)" or "M_1M_2M_3"

  friend bool operator==(const SymbolicNormal& a, const SymbolicNormal& b) = default;
};

// Which simple factors of M_j does x centralize? Fixed-point-free whenever
// the level-j projection of x is nontrivial; for x in M_j exactly the factors
// off the support; everything for the identity.
struct CentralizedFactorsReport {
  int j = 0;
  enum class Verdict { Empty, SomeCentralized, AllCentralized };
  Verdict verdict = Verdict::Empty;
  // Support coordinates (factors NOT centralized) when x lies in M_j.
  std::vector<Element> support;
  std::string reason;
};

// Requires level(x) <= j+1.
CentralizedFactorsReport centralized_factors(const Element& x, int j);

// Evidence that the normal closure of x is exactly T(max_T_level(x)):
// projection boundary checks plus fixed-point-freeness at each level from
// level(x) to the horizon, for x and a few deterministic conjugates.
struct ClosureCertificate {
  Element element;
  int max_t_level = 0;
  int element_level = 0;
  int horizon = 0;
  struct LevelCheck {
    int j = 0;
    std::string conjugate;  // serialized element the check ran on
    bool empty = false;
  };
  std::vector<LevelCheck> checks;
  bool boundary_in = false;   // project(x, i) trivial
  bool boundary_out = false;  // project(x, i+1) nontrivial
  bool ok() const;
};

struct ClosureResult {
  SymbolicNormal closure;
  ClosureCertificate certificate;
};

// Closure of the conjugacy class of x in the whole tower. Fails with
// IdentityElement on the identity.
ClosureResult normal_closure_symbolic(const TowerSpec& spec, const Element& x,
                                      int horizon_slack = 3);

// The i proper nontrivial normal subgroups of G_{i+1}, smallest first:
// M_i, M_{i-1}M_i, ..., M_1...M_i.
std::vector<SymbolicNormal> lattice(const TowerSpec& spec, int i);

// Minimal s with x in E_s = prod_{j=i}^{i+s-1} M_j, for nontrivial x in T_i,
// with the level checks justifying T_{i+s} <= <x^{T_i}>.
struct HereditaryResult {
  int s = 0;
  ClosureCertificate certificate;
};
HereditaryResult hereditary_bound(const TowerSpec& spec, int i, const Element& x,
                                  int horizon_slack = 3);

}  // namespace wreathcert::tower
