#include "wreathcert/tower/normal.hpp"

#include "wreathcert/error.hpp"

namespace wreathcert::tower {

SymbolicNormal SymbolicNormal::T(int i) {
  if (i < 0) fail("LevelMismatch", "T(i) needs i >= 0");
  SymbolicNormal n;
  n.kind = Kind::T;
  n.i = i;
  return n;
}

SymbolicNormal SymbolicNormal::finite_product(int k, int i) {
  if (k < 1 || k > i) fail("LevelMismatch", "finite product needs 1 <= k <= i");
  SymbolicNormal n;
  n.kind = Kind::FiniteProduct;
  n.k = k;
  n.i = i;
  return n;
}

bool SymbolicNormal::contains(const Element& x) const {
  if (kind == Kind::T) return in_T(x, i);
  return x.level() <= i + 1 && in_T(x, k);
}

std::string SymbolicNormal::to_string() const {
  if (kind == Kind::T) return "T(" + std::to_string(i) + ")";
  std::string out;
  for (int j = k; j <= i; ++j) out += "M_" + std::to_string(j);
  return out;
}

CentralizedFactorsReport centralized_factors(const Element& x, int j) {
  if (j < 1) fail("LevelMismatch", "M_j needs j >= 1");
  if (x.level() > j + 1)
    fail("LevelMismatch", "element does not lie in G_" + std::to_string(j + 1));
  CentralizedFactorsReport report;
  report.j = j;
  if (x.is_identity()) {
    report.verdict = CentralizedFactorsReport::Verdict::AllCentralized;
    report.reason = "identity centralizes every factor";
    return report;
  }
  if (!project(x, j).is_identity()) {
    report.verdict = CentralizedFactorsReport::Verdict::Empty;
    report.reason =
        "nontrivial level-" + std::to_string(j) +
        " projection translates the coordinates fixed-point-freely";
    return report;
  }
  // x in T_j and x in G_{j+1}, so x lies in M_j; factors touch only on the
  // support (simple factors have trivial centers).
  report.verdict = CentralizedFactorsReport::Verdict::SomeCentralized;
  report.reason = "element of M_" + std::to_string(j) +
                  " centralizes exactly the factors off its support";
  if (x.level() == j + 1)
    for (const auto& [c, p] : x.base()) {
      (void)p;
      report.support.push_back(c);
    }
  return report;
}

bool ClosureCertificate::ok() const {
  if (!boundary_in || !boundary_out) return false;
  for (const auto& check : checks)
    if (!check.empty) return false;
  return true;
}

namespace {

// Deterministic conjugating elements: tower identity plus embedded S_1
// generators; enough to witness that the argument is conjugation-stable.
std::vector<Element> probe_conjugators(const TowerSpec& spec) {
  std::vector<Element> out{identity(spec)};
  for (const auto& g : spec.group_at(1).generators) out.push_back(Element::leaf(g));
  return out;
}

ClosureCertificate build_certificate(const TowerSpec& spec, const Element& x, int i,
                                     int from_level, int horizon_slack) {
  ClosureCertificate cert{x};
  cert.max_t_level = i;
  cert.element_level = x.level();
  cert.horizon = from_level + horizon_slack;
  cert.boundary_in = in_T(x, i);
  cert.boundary_out = !in_T(x, i + 1);
  for (const Element& g : probe_conjugators(spec)) {
    Element xc = conj(x, g);
    for (int j = from_level; j <= cert.horizon; ++j) {
      CentralizedFactorsReport r = centralized_factors(xc, j);
      cert.checks.push_back(
          {j, xc.to_string(),
           r.verdict == CentralizedFactorsReport::Verdict::Empty});
    }
  }
  return cert;
}

}  // namespace

ClosureResult normal_closure_symbolic(const TowerSpec& spec, const Element& x,
                                      int horizon_slack) {
  const int i = max_T_level(x);  // fails with IdentityElement on the identity
  ClosureResult result{SymbolicNormal::T(i),
                       build_certificate(spec, x, i, x.level(), horizon_slack)};
  if (!result.certificate.ok())
    fail("NotNormal", "closure certificate failed; the tower invariants are broken");
  return result;
}

std::vector<SymbolicNormal> lattice(const TowerSpec& spec, int i) {
  (void)spec;
  if (i < 1) fail("LevelMismatch", "lattice is reported for G_{i+1} with i >= 1");
  std::vector<SymbolicNormal> out;
  for (int k = i; k >= 1; --k) out.push_back(SymbolicNormal::finite_product(k, i));
  return out;
}

HereditaryResult hereditary_bound(const TowerSpec& spec, int i, const Element& x,
                                  int horizon_slack) {
  if (i < 1) fail("LevelMismatch", "T_i with i >= 1 expected");
  if (x.is_identity()) fail("IdentityElement", "need a nontrivial element of T_i");
  if (!in_T(x, i)) fail("NotInTi", "element lies outside T_" + std::to_string(i));
  const int s = x.level() - i;  // level(x) >= i+1 for nontrivial x in T_i
  HereditaryResult result{s, build_certificate(spec, x, i, i + s, horizon_slack)};
  // For the hereditary argument only the level checks matter; reuse the
  // boundary slots for "x in E_s" and "x not in E_{s-1}".
  result.certificate.boundary_in = x.level() <= i + s;
  result.certificate.boundary_out = s == 1 || x.level() > i + s - 1;
  if (!result.certificate.ok())
    fail("NotNormal", "hereditary certificate failed; the tower invariants are broken");
  return result;
}

}  // namespace wreathcert::tower
