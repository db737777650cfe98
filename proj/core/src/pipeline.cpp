#include "wreathcert/witness/pipeline.hpp"

#include "wreathcert/error.hpp"
#include "wreathcert/tower/normal.hpp"
#include "wreathcert/tower/order_expr.hpp"
#include "wreathcert/witness/beta.hpp"
#include "wreathcert/witness/frames.hpp"

namespace wreathcert::witness {

WitnessCertificate extract_witness(const galg::AlgebraElement& input, const RunConfig& config) {
  if (input.is_zero()) fail("ZeroElement", "cannot extract a witness from the zero element");
  const tower::TowerSpec& spec = input.spec();
  tower::validate_spec(spec);
  long ch = input.characteristic();

  galg::NormalizedInput norm = galg::normalize_input(input);
  LevelPlan plan = pick_levels(spec, ch, norm.support_level);
  FrameA fa = build_frame_a(spec, norm, plan, config);
  BetaChain beta = run_beta_chain(norm, fa);
  if (!beta.matches_closed)
    fail("Internal", "elimination chain disagrees with its closed form");
  ReducedInput red = reduce_to_frame(beta.betas.front(), fa);

  std::vector<tower::Element> conjugators(red.as.begin() + 1, red.as.end());
  FrameB fb = build_frame_b(spec, fa, conjugators, ch, plan, config);
  for (const auto& e : fb.entries) {
    if (!e.witness_ok)
      fail("Internal", "commutator witness failed for conjugator " + e.a.to_string());
    if (!e.spot_ok)
      fail("Internal", "conjugation spot samples failed for " + e.a.to_string());
    if (fb.enumerative && !e.enumerative_ok)
      fail("Internal", "enumerative sum identity failed for " + e.a.to_string());
  }

  auto one = [&](const tower::Element& g) {
    return galg::AlgebraElement::term(spec, ch, galg::Scalar::one(ch), g);
  };
  tower::Element id = tower::identity(spec);
  galg::AlgebraElement unit = galg::AlgebraElement::unit(spec, ch);
  galg::AlgebraElement z_minus_one = one(fb.z) - unit;
  galg::Scalar scale = (red.l0 * fb.b_order_scalar).inverse();

  galg::AlgebraElement average(spec, ch);
  if (fb.enumerative) {
    for (const auto& bb : fb.b_elements)
      average = average + one(tower::inv(bb)) * red.alpha0 * one(bb);
    galg::AlgebraElement lhs = z_minus_one * average;
    galg::AlgebraElement rhs = (red.l0 * fb.b_order_scalar) * z_minus_one;
    if (!(lhs == rhs)) fail("Internal", "averaged annihilation identity failed");
    if (!(scale * lhs == z_minus_one)) fail("Internal", "final rescaling failed");
  }

  // Assemble the certificate.
  WitnessCertificate cert;
  cert.spec = spec;
  cert.characteristic = ch;
  cert.seed = config.seed;
  cert.input = input.to_string();
  cert.q = plan.q;
  cert.u = plan.u;
  cert.t = plan.t;
  cert.v = plan.v;
  cert.translator = norm.translator.to_string();
  for (const auto& x : norm.xs) cert.xs.push_back(x.to_string());
  for (const auto& k : norm.ks) cert.ks.push_back(k.to_string());
  cert.y_perm = fa.y_perm.to_string();
  for (const auto& c : fa.coords) cert.coords.push_back(c.to_string());
  for (const auto& y : fa.ys) cert.ys.push_back(y.to_string());
  for (std::size_t s = 1; s < fa.zs.size(); ++s) cert.zs.push_back(fa.zs[s].to_string());
  cert.z_exponents = fa.z_exponents;
  cert.z_rank = fa.z_rank;
  cert.direct = fa.direct;
  cert.a_order = fa.a_elements.size();
  for (const auto& b : beta.betas) cert.betas.push_back(b.to_string());
  cert.beta0_closed = beta.beta0_closed.to_string();
  cert.shift = red.shift.to_string();
  cert.alpha0 = red.alpha0.to_string();
  cert.l0 = red.l0.to_string();
  for (const auto& a : red.as) cert.as.push_back(a.to_string());
  for (const auto& l : red.ls) cert.ls.push_back(l.to_string());
  cert.b_perm = fb.b_perm.to_string();
  cert.z = fb.z.to_string();
  cert.mode = fb.enumerative ? "enumerative" : "structural";
  cert.b_order = fb.b_order;
  for (const auto& e : fb.entries) {
    WitnessCertificate::Entry entry;
    entry.a = e.a.to_string();
    entry.orbit_count = e.orbit_count;
    entry.centralizer_order = e.centralizer_order;
    entry.witness = e.witness.to_string();
    entry.verdict = e.verdict;
    cert.entries.push_back(std::move(entry));
  }

  tower::ClosureResult closure =
      tower::normal_closure_symbolic(spec, fb.z, config.closure_horizon);
  if (!closure.certificate.ok()) fail("Internal", "closure certificate failed");
  if (!(closure.closure == tower::SymbolicNormal::T(plan.v)))
    fail("Internal", "witness closure is not the expected layer tail");
  cert.closure = closure.closure.to_string();
  cert.codim_bound = tower::group_order(spec, plan.v)->to_string();
  cert.bound_level = plan.v;

  // Membership chain.
  std::string one_coeff = galg::Scalar::one(ch).to_string();
  std::string minus_one = (-galg::Scalar::one(ch)).to_string();
  std::string id_ser = id.to_string();
  std::size_t n = norm.xs.size() - 1;

  cert.chain.push_back({"input", "input", {}, cert.input, 0});
  int prev = 0;
  cert.chain.push_back({"normalize",
                        "explicit",
                        {{one_coeff, id_ser, cert.translator, prev}},
                        norm.alpha.to_string(),
                        prev});
  prev = 1;
  for (std::size_t s = n; s >= 1; --s) {
    WitnessCertificate::ChainStep step;
    step.label = "beta" + std::to_string(s - 1);
    step.kind = "explicit";
    step.terms.push_back({one_coeff, fa.zs[s].to_string(), id_ser, prev});
    step.terms.push_back(
        {minus_one, tower::inv(fa.ys[s]).to_string(), fa.ys[s].to_string(), prev});
    step.value = beta.betas[s - 1].to_string();
    step.source = prev;
    cert.chain.push_back(std::move(step));
    prev = static_cast<int>(cert.chain.size()) - 1;
  }
  cert.chain.push_back({"reduce",
                        "explicit",
                        {{one_coeff, id_ser, cert.shift, prev}},
                        red.alpha0.to_string(),
                        prev});
  prev = static_cast<int>(cert.chain.size()) - 1;

  if (fb.enumerative) {
    WitnessCertificate::ChainStep avg;
    avg.label = "average";
    avg.kind = "explicit";
    for (const auto& bb : fb.b_elements)
      avg.terms.push_back({one_coeff, tower::inv(bb).to_string(), bb.to_string(), prev});
    avg.value = average.to_string();
    avg.source = prev;
    cert.chain.push_back(std::move(avg));
    prev = static_cast<int>(cert.chain.size()) - 1;

    WitnessCertificate::ChainStep fin;
    fin.label = "final";
    fin.kind = "explicit";
    fin.terms.push_back({scale.to_string(), fb.z.to_string(), id_ser, prev});
    fin.terms.push_back({(-scale).to_string(), id_ser, id_ser, prev});
    fin.value = z_minus_one.to_string();
    fin.source = prev;
    cert.chain.push_back(std::move(fin));
  } else {
    cert.chain.push_back({"average", "structural_average", {}, "", prev});
    prev = static_cast<int>(cert.chain.size()) - 1;
    cert.chain.push_back({"final", "structural_final", {}, z_minus_one.to_string(), prev});
  }

  cert.enum_a_max = config.enum_a_max;
  cert.enum_b_max = config.enum_b_max;
  cert.hard_a_cap = config.hard_a_cap;
  cert.spot_samples = config.spot_samples;
  return cert;
}

}  // namespace wreathcert::witness
