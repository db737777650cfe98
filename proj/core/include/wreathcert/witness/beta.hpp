#pragma once

#include <vector>

#include "wreathcert/galg/element.hpp"
#include "wreathcert/witness/frames.hpp"

namespace wreathcert::witness {

// Downward elimination: beta_n is the normalized input and each step
// beta_{s-1} = z_s * beta_s - y_s^-1 * beta_s * y_s removes the support
// element x_s. The closed form k_0 * (z_n - 1) * ... * (z_1 - 1) is computed
// independently and compared against the final step.
struct BetaChain {
  std::vector<galg::AlgebraElement> betas;  // betas[s], s = 0..n
  galg::AlgebraElement beta0_closed;
  bool matches_closed = false;
};

BetaChain run_beta_chain(const galg::NormalizedInput& norm, const FrameA& fa);

// Right translation of beta_0 so the identity coefficient is nonzero, with
// the support written as l_0 * 1 + sum l_i * a_i^-1 over conjugators in A.
// Fails with BetaZero when beta_0 vanished.
struct ReducedInput {
  galg::AlgebraElement alpha0;
  tower::Element shift;  // alpha0 = beta_0 * shift
  galg::Scalar l0;
  std::vector<tower::Element> as;  // as[0] = 1; all lie in A
  std::vector<galg::Scalar> ls;
};

ReducedInput reduce_to_frame(const galg::AlgebraElement& beta0, const FrameA& fa);

}  // namespace wreathcert::witness
