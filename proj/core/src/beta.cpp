#include "wreathcert/witness/beta.hpp"

#include "wreathcert/error.hpp"

namespace wreathcert::witness {

BetaChain run_beta_chain(const galg::NormalizedInput& norm, const FrameA& fa) {
  const auto& spec = norm.alpha.spec();
  long ch = norm.alpha.characteristic();
  std::size_t n = norm.xs.size() - 1;
  auto one = [&](const tower::Element& g) {
    return galg::AlgebraElement::term(spec, ch, galg::Scalar::one(ch), g);
  };

  std::vector<galg::AlgebraElement> downward;
  downward.push_back(norm.alpha);  // beta_n
  for (std::size_t s = n; s >= 1; --s) {
    const galg::AlgebraElement& cur = downward.back();
    galg::AlgebraElement next =
        one(fa.zs[s]) * cur - one(tower::inv(fa.ys[s])) * cur * one(fa.ys[s]);
    downward.push_back(std::move(next));
  }

  BetaChain chain{{}, galg::AlgebraElement(spec, ch), false};
  chain.betas.assign(downward.rbegin(), downward.rend());

  galg::AlgebraElement closed =
      galg::AlgebraElement::term(spec, ch, norm.ks[0], tower::identity(spec));
  galg::AlgebraElement unit = galg::AlgebraElement::unit(spec, ch);
  for (std::size_t s = n; s >= 1; --s) closed = closed * (one(fa.zs[s]) - unit);
  chain.beta0_closed = closed;
  chain.matches_closed = chain.betas.front() == chain.beta0_closed;
  return chain;
}

ReducedInput reduce_to_frame(const galg::AlgebraElement& beta0, const FrameA& fa) {
  if (beta0.is_zero())
    fail("BetaZero",
         "the elimination chain annihilated the input; no witness frame exists for "
         "this support pattern");
  for (const auto& g : beta0.support()) fa.exponents_of(g);  // all support lies in A
  galg::NormalizedInput norm = galg::normalize_input(beta0);
  fa.exponents_of(norm.translator);
  for (const auto& a : norm.xs) fa.exponents_of(a);
  return ReducedInput{norm.alpha, norm.translator, norm.ks[0], norm.xs, norm.ks};
}

}  // namespace wreathcert::witness
