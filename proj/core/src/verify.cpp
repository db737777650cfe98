#include "wreathcert/witness/verify.hpp"

#include <optional>

#include "wreathcert/error.hpp"
#include "wreathcert/tower/normal.hpp"
#include "wreathcert/tower/order_expr.hpp"
#include "wreathcert/witness/beta.hpp"
#include "wreathcert/witness/frames.hpp"
#include "wreathcert/witness/pipeline.hpp"

namespace wreathcert::witness {

namespace {

struct Context {
  const WitnessCertificate& cert;
  VerifyReport& report;
  RunConfig replay;

  std::optional<galg::AlgebraElement> input;
  std::optional<galg::NormalizedInput> norm;
  std::optional<LevelPlan> plan;
  std::optional<FrameA> fa;
  std::optional<BetaChain> beta;
  std::optional<ReducedInput> red;
  std::optional<FrameB> fb;
  std::optional<tower::Element> z;

  bool expect(bool cond, const std::string& what) {
    if (cond) {
      report.checks.push_back("ok: " + what);
    } else {
      report.failures.push_back("mismatch: " + what);
      report.ok = false;
    }
    return cond;
  }
};

bool run_stage(Context& ctx, const std::string& name, bool (*fn)(Context&)) {
  try {
    return fn(ctx);
  } catch (const Error& e) {
    ctx.report.failures.push_back("stage " + name + " failed: " + e.what());
    ctx.report.ok = false;
    return false;
  }
}

bool stage_input(Context& ctx) {
  tower::validate_spec(ctx.cert.spec);
  galg::check_characteristic(ctx.cert.characteristic);
  ctx.input = galg::AlgebraElement::parse(ctx.cert.input, ctx.cert.spec,
                                          ctx.cert.characteristic);
  bool ok = ctx.expect(!ctx.input->is_zero(), "input is nonzero");
  ok &= ctx.expect(ctx.input->to_string() == ctx.cert.input, "input text is canonical");
  return ok;
}

bool stage_normalization(Context& ctx) {
  ctx.norm = galg::normalize_input(*ctx.input);
  bool ok = ctx.expect(ctx.norm->translator.to_string() == ctx.cert.translator, "translator");
  ok &= ctx.expect(ctx.norm->xs.size() == ctx.cert.xs.size() &&
                       ctx.norm->ks.size() == ctx.cert.ks.size(),
                   "support size");
  if (!ok) return false;
  for (std::size_t i = 0; i < ctx.norm->xs.size(); ++i) {
    ok &= ctx.expect(ctx.norm->xs[i].to_string() == ctx.cert.xs[i],
                     "x" + std::to_string(i));
    ok &= ctx.expect(ctx.norm->ks[i].to_string() == ctx.cert.ks[i],
                     "k" + std::to_string(i));
  }
  return ok;
}

bool stage_levels(Context& ctx) {
  ctx.plan = pick_levels(ctx.cert.spec, ctx.cert.characteristic, ctx.norm->support_level);
  bool ok = ctx.expect(ctx.plan->q == ctx.cert.q, "witness prime q");
  ok &= ctx.expect(ctx.plan->u == ctx.cert.u, "support level u");
  ok &= ctx.expect(ctx.plan->t == ctx.cert.t, "frame level t");
  ok &= ctx.expect(ctx.plan->v == ctx.cert.v, "frame level v");
  return ok;
}

bool stage_frame_a(Context& ctx) {
  ctx.fa = build_frame_a(ctx.cert.spec, *ctx.norm, *ctx.plan, ctx.replay);
  const FrameA& fa = *ctx.fa;
  bool ok = ctx.expect(fa.y_perm.to_string() == ctx.cert.y_perm, "seed y");
  ok &= ctx.expect(fa.coords.size() == ctx.cert.coords.size(), "coordinate count");
  if (ok)
    for (std::size_t i = 0; i < fa.coords.size(); ++i)
      ok &= ctx.expect(fa.coords[i].to_string() == ctx.cert.coords[i],
                       "coordinate " + std::to_string(i));
  ok &= ctx.expect(fa.ys.size() == ctx.cert.ys.size(), "conjugate count");
  if (ok)
    for (std::size_t i = 0; i < fa.ys.size(); ++i)
      ok &= ctx.expect(fa.ys[i].to_string() == ctx.cert.ys[i], "y" + std::to_string(i));
  ok &= ctx.expect(fa.zs.size() == ctx.cert.zs.size() + 1, "commutator count");
  if (ok)
    for (std::size_t s = 1; s < fa.zs.size(); ++s)
      ok &= ctx.expect(fa.zs[s].to_string() == ctx.cert.zs[s - 1],
                       "z" + std::to_string(s));
  ok &= ctx.expect(fa.z_exponents == ctx.cert.z_exponents, "commutator exponents");
  ok &= ctx.expect(fa.z_rank == ctx.cert.z_rank, "commutator rank");
  ok &= ctx.expect(fa.direct == ctx.cert.direct, "directness flag");
  ok &= ctx.expect(fa.a_elements.size() == ctx.cert.a_order, "frame order |A|");
  return ok;
}

bool stage_elimination(Context& ctx) {
  ctx.beta = run_beta_chain(*ctx.norm, *ctx.fa);
  bool ok = ctx.expect(ctx.beta->matches_closed, "chain matches closed form");
  ok &= ctx.expect(ctx.beta->betas.size() == ctx.cert.betas.size(), "chain length");
  if (ok)
    for (std::size_t s = 0; s < ctx.beta->betas.size(); ++s)
      ok &= ctx.expect(ctx.beta->betas[s].to_string() == ctx.cert.betas[s],
                       "beta" + std::to_string(s));
  ok &= ctx.expect(ctx.beta->beta0_closed.to_string() == ctx.cert.beta0_closed,
                   "closed form");
  return ok;
}

bool stage_reduction(Context& ctx) {
  ctx.red = reduce_to_frame(ctx.beta->betas.front(), *ctx.fa);
  bool ok = ctx.expect(ctx.red->shift.to_string() == ctx.cert.shift, "reduction shift");
  ok &= ctx.expect(ctx.red->alpha0.to_string() == ctx.cert.alpha0, "reduced element");
  ok &= ctx.expect(ctx.red->l0.to_string() == ctx.cert.l0, "leading coefficient");
  ok &= ctx.expect(ctx.red->as.size() == ctx.cert.as.size() &&
                       ctx.red->ls.size() == ctx.cert.ls.size(),
                   "reduced support size");
  if (ok)
    for (std::size_t i = 0; i < ctx.red->as.size(); ++i) {
      ok &= ctx.expect(ctx.red->as[i].to_string() == ctx.cert.as[i],
                       "a" + std::to_string(i));
      ok &= ctx.expect(ctx.red->ls[i].to_string() == ctx.cert.ls[i],
                       "l" + std::to_string(i));
    }
  return ok;
}

bool stage_frame_b(Context& ctx) {
  std::vector<tower::Element> conjugators(ctx.red->as.begin() + 1, ctx.red->as.end());
  ctx.fb = build_frame_b(ctx.cert.spec, *ctx.fa, conjugators, ctx.cert.characteristic,
                         *ctx.plan, ctx.replay);
  const FrameB& fb = *ctx.fb;
  bool ok = ctx.expect(fb.b_perm.to_string() == ctx.cert.b_perm, "seed b");
  ok &= ctx.expect(fb.z.to_string() == ctx.cert.z, "witness element z");
  ok &= ctx.expect((fb.enumerative ? "enumerative" : "structural") == ctx.cert.mode,
                   "verification mode");
  ok &= ctx.expect(fb.b_order == ctx.cert.b_order, "|B| text");
  ok &= ctx.expect(fb.entries.size() == ctx.cert.entries.size(), "entry count");
  if (!ok) return false;
  for (std::size_t i = 0; i < fb.entries.size(); ++i) {
    const auto& live = fb.entries[i];
    const auto& stored = ctx.cert.entries[i];
    std::string tag = "entry " + std::to_string(i) + " ";
    ok &= ctx.expect(live.a.to_string() == stored.a, tag + "conjugator");
    ok &= ctx.expect(live.orbit_count == stored.orbit_count, tag + "orbit count");
    ok &= ctx.expect(live.centralizer_order == stored.centralizer_order,
                     tag + "centralizer order");
    ok &= ctx.expect(live.witness.to_string() == stored.witness, tag + "witness text");
    ok &= ctx.expect(live.witness_ok, tag + "witness identity");
    ok &= ctx.expect(live.spot_ok, tag + "spot samples");
    if (fb.enumerative) ok &= ctx.expect(live.enumerative_ok, tag + "enumerative sum");
    ok &= ctx.expect(live.verdict == stored.verdict, tag + "verdict");
    // Independent replay of the stored witness text, not just the rebuilt one.
    tower::Element w = tower::Element::parse(stored.witness);
    tower::Element a = tower::Element::parse(stored.a);
    ok &= ctx.expect(tower::mul(tower::inv(w), tower::conj(w, a)) == fb.z,
                     tag + "stored witness replay");
  }
  ctx.z = fb.z;
  return ok;
}

bool stage_chain(Context& ctx) {
  const auto& spec = ctx.cert.spec;
  long ch = ctx.cert.characteristic;
  auto one = [&](const tower::Element& g) {
    return galg::AlgebraElement::term(spec, ch, galg::Scalar::one(ch), g);
  };
  std::vector<std::optional<galg::AlgebraElement>> values(ctx.cert.chain.size());
  bool saw_structural_average = false;
  bool ok = ctx.expect(!ctx.cert.chain.empty(), "chain present");
  if (!ok) return false;
  for (std::size_t idx = 0; idx < ctx.cert.chain.size(); ++idx) {
    const auto& step = ctx.cert.chain[idx];
    std::string tag = "chain step " + std::to_string(idx) + " (" + step.label + ") ";
    if (step.kind == "input") {
      ok &= ctx.expect(idx == 0 && step.value == ctx.cert.input, tag + "is the input");
      values[idx] = *ctx.input;
      continue;
    }
    if (step.kind == "explicit") {
      galg::AlgebraElement acc(spec, ch);
      bool sources_ok = true;
      for (const auto& term : step.terms) {
        if (term.source < 0 || static_cast<std::size_t>(term.source) >= idx ||
            !values[static_cast<std::size_t>(term.source)]) {
          sources_ok = false;
          break;
        }
        galg::Scalar coeff = galg::Scalar::parse(term.coeff, ch);
        tower::Element left = tower::Element::parse(term.left);
        tower::Element right = tower::Element::parse(term.right);
        acc = acc + coeff * (one(left) * *values[static_cast<std::size_t>(term.source)] *
                             one(right));
      }
      ok &= ctx.expect(sources_ok, tag + "sources resolved");
      if (!sources_ok) return false;
      ok &= ctx.expect(acc.to_string() == step.value, tag + "replayed value");
      values[idx] = std::move(acc);
      continue;
    }
    if (step.kind == "structural_average") {
      ok &= ctx.expect(ctx.cert.mode == "structural", tag + "mode is structural");
      ok &= ctx.expect(step.source >= 0 &&
                           static_cast<std::size_t>(step.source) < idx &&
                           values[static_cast<std::size_t>(step.source)].has_value(),
                       tag + "source resolved");
      if (ok) {
        // The averaged element is not materialized; its support frame is the
        // reduced element, whose text must match the reduction stage.
        ok &= ctx.expect(
            values[static_cast<std::size_t>(step.source)]->to_string() == ctx.cert.alpha0,
            tag + "source is the reduced element");
      }
      saw_structural_average = true;
      continue;
    }
    if (step.kind == "structural_final") {
      ok &= ctx.expect(saw_structural_average, tag + "follows a structural average");
      galg::Scalar b_order_scalar =
          prime_power_scalar(ctx.cert.q, static_cast<unsigned long>(ctx.cert.a_order), ch);
      galg::Scalar l0 = galg::Scalar::parse(ctx.cert.l0, ch);
      ok &= ctx.expect(!(l0 * b_order_scalar).is_zero(), tag + "scale is invertible");
      galg::AlgebraElement claimed = galg::AlgebraElement::parse(step.value, spec, ch);
      galg::AlgebraElement expected =
          one(*ctx.z) - galg::AlgebraElement::unit(spec, ch);
      ok &= ctx.expect(claimed == expected, tag + "is the witness difference");
      values[idx] = std::move(claimed);
      continue;
    }
    ok &= ctx.expect(false, tag + "has a known kind");
  }
  const auto& last = ctx.cert.chain.back();
  galg::AlgebraElement expected = one(*ctx.z) - galg::AlgebraElement::unit(spec, ch);
  ok &= ctx.expect(last.value == expected.to_string(), "chain ends at the witness difference");
  return ok;
}

bool stage_closure(Context& ctx) {
  bool ok = ctx.expect(tower::max_T_level(*ctx.z) == ctx.cert.v, "witness layer level");
  tower::ClosureResult closure =
      tower::normal_closure_symbolic(ctx.cert.spec, *ctx.z, ctx.replay.closure_horizon);
  ok &= ctx.expect(closure.certificate.ok(), "closure certificate");
  ok &= ctx.expect(closure.closure.to_string() == ctx.cert.closure, "closure label");
  ok &= ctx.expect(ctx.cert.bound_level == ctx.cert.v, "bound level");
  ok &= ctx.expect(
      tower::group_order(ctx.cert.spec, ctx.cert.bound_level)->to_string() ==
          ctx.cert.codim_bound,
      "codimension bound");
  return ok;
}

}  // namespace

VerifyReport verify_certificate(const WitnessCertificate& cert, const RunConfig& config) {
  VerifyReport report;
  Context ctx{cert, report, config, {}, {}, {}, {}, {}, {}, {}, {}};
  ctx.replay.seed = cert.seed;
  ctx.replay.enum_a_max = static_cast<std::size_t>(cert.enum_a_max);
  ctx.replay.enum_b_max = static_cast<std::size_t>(cert.enum_b_max);
  ctx.replay.hard_a_cap = static_cast<std::size_t>(cert.hard_a_cap);
  ctx.replay.spot_samples = cert.spot_samples;
  if (cert.mode == "enumerative") {
    ctx.replay.mode = FrameMode::Enumerative;
  } else if (cert.mode == "structural") {
    ctx.replay.mode = FrameMode::Structural;
  } else {
    report.failures.push_back("unknown verification mode: " + cert.mode);
    report.ok = false;
    return report;
  }

  struct Stage {
    const char* name;
    bool (*fn)(Context&);
  };
  const Stage stages[] = {
      {"input", stage_input},         {"normalization", stage_normalization},
      {"levels", stage_levels},       {"frame_a", stage_frame_a},
      {"elimination", stage_elimination}, {"reduction", stage_reduction},
      {"frame_b", stage_frame_b},     {"chain", stage_chain},
      {"closure", stage_closure},
  };
  for (const auto& stage : stages) {
    if (!run_stage(ctx, stage.name, stage.fn)) {
      report.failures.push_back(std::string("stopped after stage ") + stage.name);
      report.ok = false;
      break;
    }
  }
  return report;
}

}  // namespace wreathcert::witness
