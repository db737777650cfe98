#pragma once

#include <string>
#include <vector>

#include "wreathcert/fingrp/perm.hpp"
#include "wreathcert/galg/element.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/spec.hpp"
#include "wreathcert/witness/config.hpp"

namespace wreathcert::witness {

// Working levels for the ideal argument: q is the witness prime, u the
// support level of the normalized input, t the first level above u whose
// next layer group has order divisible by q, and v the first such level
// at or above t+1.
struct LevelPlan {
  long q = 0;
  int u = 0;
  int t = 0;
  int v = 0;
};

LevelPlan pick_levels(const tower::TowerSpec& spec, long characteristic, int u);

// Elementary abelian frame A inside the t-th base layer: one order-q seed at
// the identity coordinate, conjugated to every coordinate x_i * x_j reachable
// from the normalized support.
struct FrameA {
  long q = 0;
  int t = 0;
  fingrp::Perm y_perm;                     // canonical order-q seed in S_{t+1}
  tower::Element y;                        // seed at the identity coordinate
  std::vector<tower::Element> coords;      // sorted distinct products x_i * x_j
  std::vector<tower::Element> a_gens;      // seed placed at each coordinate
  std::vector<tower::Element> ys;          // ys[i] = y ^ xs[i]
  std::vector<tower::Element> zs;          // zs[i] = [ys[i], xs[i]], zs[0] = 1
  std::vector<std::vector<int>> z_exponents;  // coordinate exponents of zs[1..]
  int z_rank = 0;                          // rank of those rows over F_q
  bool direct = false;                     // z_rank == n
  std::vector<tower::Element> a_elements;  // all of A, odometer order, [0] = 1
  std::vector<fingrp::Perm> y_powers;      // y_perm^0 .. y_perm^{q-1}
  std::vector<std::pair<std::string, int>> ser_index;  // sorted, for index_of

  // Coordinate exponents of an element of A; fails with NotInFrame otherwise.
  std::vector<int> exponents_of(const tower::Element& x) const;
  tower::Element element_for(const std::vector<int>& exponents) const;
  int index_of(const tower::Element& a) const;  // position in a_elements
};

FrameA build_frame_a(const tower::TowerSpec& spec, const galg::NormalizedInput& norm,
                     const LevelPlan& plan, const RunConfig& config);

// Frame B one layer up: the same seed pattern at level v, conjugated over all
// of A, with the diagonal product z and one commutator witness per support
// conjugator.
struct FrameBEntry {
  tower::Element a;                // nontrivial support conjugator a_i
  int orbit_count = 0;             // orbits of right translation by a_i on A
  std::string centralizer_order;   // always q^{orbit_count}, as text
  tower::Element witness;          // w with w^-1 * w^a_i == z
  bool witness_ok = false;         // exact element-level check
  bool spot_ok = false;            // seeded conjugation spot samples
  bool enumerative_ok = false;     // full sum identity over B (enumerative mode)
  std::string verdict;             // "enumerative" or "structural"
};

struct FrameB {
  long q = 0;
  int v = 0;
  fingrp::Perm b_perm;                 // canonical order-q seed in S_{v+1}
  tower::Element b;                    // seed at the identity coordinate
  tower::Element z;                    // product of b^a over all a in A
  bool enumerative = false;
  std::string b_order;                 // |B| = q^{|A|}, as text
  galg::Scalar b_order_scalar;         // |B| in the coefficient field
  std::vector<FrameBEntry> entries;    // one per nontrivial support conjugator
  std::vector<tower::Element> b_elements;  // all of B (enumerative mode only)
};

// The support conjugators are the nontrivial a_i of the reduced input; all
// must lie in A.
FrameB build_frame_b(const tower::TowerSpec& spec, const FrameA& frame_a,
                     const std::vector<tower::Element>& support_conjugators,
                     long characteristic, const LevelPlan& plan, const RunConfig& config);

// q^e in the coefficient field.
galg::Scalar prime_power_scalar(long q, unsigned long e, long characteristic);

// Exponents of an element of B over the coordinates a_elements of frame A;
// fails with NotInFrame otherwise.
std::vector<int> b_exponents_of(const FrameB& fb, const FrameA& fa, const tower::Element& x);

}  // namespace wreathcert::witness
