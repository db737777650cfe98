#include "wreathcert/witness/frames.hpp"

#include <algorithm>
#include <set>

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/catalog.hpp"
#include "wreathcert/oracle/dense.hpp"
#include "wreathcert/util.hpp"

namespace wreathcert::witness {

namespace {

// acc = q^e if it stays within cap, otherwise false.
bool pow_within(long q, std::size_t e, std::size_t cap, std::size_t& acc) {
  acc = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (acc > cap / static_cast<std::size_t>(q)) return false;
    acc *= static_cast<std::size_t>(q);
  }
  return true;
}

int lookup_sorted(const std::vector<std::pair<std::string, int>>& index, const std::string& key,
                  const char* what) {
  auto it = std::lower_bound(index.begin(), index.end(), key,
                             [](const auto& a, const std::string& b) { return a.first < b; });
  if (it == index.end() || it->first != key)
    fail("NotInFrame", std::string(what) + " is not a frame element: " + key);
  return it->second;
}

}  // namespace

LevelPlan pick_levels(const tower::TowerSpec& spec, long characteristic, int u) {
  LevelPlan plan;
  plan.u = u;
  plan.q = static_cast<long>(fingrp::choose_q(characteristic, spec.recurring()));
  int scan_limit = u + static_cast<int>(spec.preamble.size()) +
                   2 * static_cast<int>(spec.cycle.size()) + 2;
  for (int level = u + 1; level <= scan_limit; ++level) {
    if (spec.group_at(level + 1).order % static_cast<unsigned long>(plan.q) == 0) {
      plan.t = level;
      break;
    }
  }
  if (plan.t == 0) fail("Internal", "no layer above the support level admits the witness prime");
  for (int level = plan.t + 1; level <= plan.t + scan_limit; ++level) {
    if (spec.group_at(level + 1).order % static_cast<unsigned long>(plan.q) == 0) {
      plan.v = level;
      break;
    }
  }
  if (plan.v == 0) fail("Internal", "no second layer admits the witness prime");
  return plan;
}

std::vector<int> FrameA::exponents_of(const tower::Element& x) const {
  std::vector<int> e(coords.size(), 0);
  if (x.is_identity()) return e;
  if (x.level() != t + 1) fail("NotInFrame", "element level does not match the frame layer");
  if (!x.act().is_identity()) fail("NotInFrame", "element does not lie in the base layer");
  for (const auto& [key, value] : x.base()) {
    auto kit = std::lower_bound(coords.begin(), coords.end(), key);
    if (kit == coords.end() || !(*kit == key))
      fail("NotInFrame", "coordinate outside the frame: " + key.to_string());
    int power = -1;
    for (long k = 0; k < q; ++k)
      if (y_powers[static_cast<std::size_t>(k)] == value) {
        power = static_cast<int>(k);
        break;
      }
    if (power < 0) fail("NotInFrame", "entry is not a power of the frame seed");
    e[static_cast<std::size_t>(kit - coords.begin())] = power;
  }
  return e;
}

tower::Element FrameA::element_for(const std::vector<int>& exponents) const {
  std::vector<tower::Element::BaseEntry> entries;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    int e = exponents[c] % static_cast<int>(q);
    if (e < 0) e += static_cast<int>(q);
    if (e != 0) entries.emplace_back(coords[c], y_powers[static_cast<std::size_t>(e)]);
  }
  return tower::Element::wreath(t + 1, y.act(), entries);
}

int FrameA::index_of(const tower::Element& a) const {
  return lookup_sorted(ser_index, a.to_string(), "conjugator");
}

FrameA build_frame_a(const tower::TowerSpec& spec, const galg::NormalizedInput& norm,
                     const LevelPlan& plan, const RunConfig& config) {
  const auto& layer = spec.group_at(plan.t + 1);
  auto seed = fingrp::element_of_order(layer.element_list, plan.q);
  if (!seed) fail("Internal", "layer group has no element of the witness order");
  tower::Element id = tower::identity(spec);
  FrameA fa{.q = plan.q,
            .t = plan.t,
            .y_perm = *seed,
            .y = tower::Element::wreath(plan.t + 1, id, {{id, *seed}})};

  fa.y_powers.reserve(static_cast<std::size_t>(plan.q));
  fingrp::Perm acc = fingrp::Perm::identity(layer.degree);
  for (long k = 0; k < plan.q; ++k) {
    fa.y_powers.push_back(acc);
    acc = fingrp::compose(acc, fa.y_perm);
  }
  if (!acc.is_identity()) fail("Internal", "frame seed order mismatch");

  std::set<tower::Element> coord_set;
  for (const auto& xi : norm.xs)
    for (const auto& xj : norm.xs) coord_set.insert(tower::mul(xi, xj));
  fa.coords.assign(coord_set.begin(), coord_set.end());
  for (const auto& c : fa.coords) {
    if (c.level() > plan.t)
      fail("Internal", "support product reaches above the frame layer");
    fa.a_gens.push_back(tower::Element::wreath(plan.t + 1, id, {{c, fa.y_perm}}));
    if (!(tower::conj(fa.y, c) == fa.a_gens.back()))
      fail("Internal", "conjugation model mismatch at coordinate " + c.to_string());
  }

  std::size_t n = norm.xs.size() - 1;
  for (std::size_t i = 0; i < norm.xs.size(); ++i) {
    fa.ys.push_back(tower::conj(fa.y, norm.xs[i]));
    if (i == 0) {
      fa.zs.push_back(id);
      continue;
    }
    fa.zs.push_back(tower::commutator(fa.ys.back(), norm.xs[i]));
  }

  oracle::Subspace rank_space(static_cast<int>(fa.coords.size()), plan.q);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<int> e = fa.exponents_of(fa.zs[i]);
    // Model: z_i carries -1 at coordinate x_i and +1 at x_i * x_i.
    std::vector<int> expected(fa.coords.size(), 0);
    auto place = [&](const tower::Element& c, int delta) {
      auto it = std::lower_bound(fa.coords.begin(), fa.coords.end(), c);
      std::size_t idx = static_cast<std::size_t>(it - fa.coords.begin());
      expected[idx] = ((expected[idx] + delta) % static_cast<int>(plan.q) +
                       static_cast<int>(plan.q)) %
                      static_cast<int>(plan.q);
    };
    place(norm.xs[i], -1);
    place(tower::mul(norm.xs[i], norm.xs[i]), 1);
    if (e != expected) fail("Internal", "commutator exponent model mismatch");
    fa.z_exponents.push_back(e);
    oracle::Subspace::Vec row;
    row.reserve(e.size());
    for (int v : e) row.push_back(galg::Scalar::residue(v, static_cast<unsigned long>(plan.q)));
    rank_space.insert(row);
  }
  fa.z_rank = rank_space.dimension();
  fa.direct = fa.z_rank == static_cast<int>(n);

  std::size_t a_size = 0;
  if (!pow_within(plan.q, fa.coords.size(), config.hard_a_cap, a_size))
    fail("FrameTooLarge", "|A| = " + std::to_string(plan.q) + "^" +
                              std::to_string(fa.coords.size()) + " exceeds the cap " +
                              std::to_string(config.hard_a_cap));
  fa.a_elements.reserve(a_size);
  std::vector<int> digits(fa.coords.size(), 0);
  for (std::size_t count = 0; count < a_size; ++count) {
    fa.a_elements.push_back(fa.element_for(digits));
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
      if (++digits[pos] < static_cast<int>(plan.q)) break;
      digits[pos] = 0;
    }
  }
  if (!fa.a_elements.empty() && !fa.a_elements.front().is_identity())
    fail("Internal", "frame enumeration must start at the identity");
  fa.ser_index.reserve(fa.a_elements.size());
  for (std::size_t i = 0; i < fa.a_elements.size(); ++i)
    fa.ser_index.emplace_back(fa.a_elements[i].to_string(), static_cast<int>(i));
  std::sort(fa.ser_index.begin(), fa.ser_index.end());
  return fa;
}

galg::Scalar prime_power_scalar(long q, unsigned long e, long characteristic) {
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q), e);
  return galg::Scalar::from_integer(power, characteristic);
}

std::vector<int> b_exponents_of(const FrameB& fb, const FrameA& fa, const tower::Element& x) {
  std::vector<int> e(fa.a_elements.size(), 0);
  if (x.is_identity()) return e;
  if (x.level() != fb.v + 1) fail("NotInFrame", "element level does not match the frame layer");
  if (!x.act().is_identity()) fail("NotInFrame", "element does not lie in the base layer");
  std::vector<fingrp::Perm> powers;
  fingrp::Perm acc = fingrp::Perm::identity(fb.b_perm.degree());
  for (long k = 0; k < fb.q; ++k) {
    powers.push_back(acc);
    acc = fingrp::compose(acc, fb.b_perm);
  }
  for (const auto& [key, value] : x.base()) {
    int idx = fa.index_of(key);
    int power = -1;
    for (long k = 0; k < fb.q; ++k)
      if (powers[static_cast<std::size_t>(k)] == value) {
        power = static_cast<int>(k);
        break;
      }
    if (power < 0) fail("NotInFrame", "entry is not a power of the frame seed");
    e[static_cast<std::size_t>(idx)] = power;
  }
  return e;
}

namespace {

tower::Element b_element_for(const FrameA& fa, int v, const std::vector<fingrp::Perm>& b_powers,
                             long q, const std::vector<int>& exponents,
                             const tower::Element& id) {
  std::vector<tower::Element::BaseEntry> entries;
  for (std::size_t c = 0; c < fa.a_elements.size(); ++c) {
    int e = exponents[c] % static_cast<int>(q);
    if (e < 0) e += static_cast<int>(q);
    if (e != 0) entries.emplace_back(fa.a_elements[c], b_powers[static_cast<std::size_t>(e)]);
  }
  return tower::Element::wreath(v + 1, id, entries);
}

}  // namespace

FrameB build_frame_b(const tower::TowerSpec& spec, const FrameA& fa,
                     const std::vector<tower::Element>& support_conjugators,
                     long characteristic, const LevelPlan& plan, const RunConfig& config) {
  const auto& layer = spec.group_at(plan.v + 1);
  auto seed = fingrp::element_of_order(layer.element_list, plan.q);
  if (!seed) fail("Internal", "layer group has no element of the witness order");
  tower::Element id = tower::identity(spec);
  tower::Element b = tower::Element::wreath(plan.v + 1, id, {{id, *seed}});

  std::size_t a_size = fa.a_elements.size();
  // z = prod over a in A of b^a: one entry at every coordinate of A.
  std::vector<tower::Element::BaseEntry> z_entries;
  z_entries.reserve(a_size);
  for (const auto& a : fa.a_elements) {
    tower::Element single = tower::Element::wreath(plan.v + 1, id, {{a, *seed}});
    if (!(tower::conj(b, a) == single))
      fail("Internal", "conjugation model mismatch at coordinate " + a.to_string());
    z_entries.emplace_back(a, *seed);
  }
  FrameB fb{.q = plan.q,
            .v = plan.v,
            .b_perm = *seed,
            .b = b,
            .z = tower::Element::wreath(plan.v + 1, id, z_entries)};
  if (a_size <= 256) {
    tower::Element folded = id;
    for (const auto& a : fa.a_elements) folded = tower::mul(folded, tower::conj(fb.b, a));
    if (!(folded == fb.z)) fail("Internal", "diagonal product mismatch");
  }

  std::vector<fingrp::Perm> b_powers;
  fingrp::Perm acc = fingrp::Perm::identity(layer.degree);
  for (long k = 0; k < plan.q; ++k) {
    b_powers.push_back(acc);
    acc = fingrp::compose(acc, fb.b_perm);
  }

  fb.b_order = std::to_string(plan.q) + "^" + std::to_string(a_size);
  fb.b_order_scalar = prime_power_scalar(plan.q, a_size, characteristic);

  std::size_t b_size = 0;
  bool b_fits = pow_within(plan.q, a_size, config.enum_b_max, b_size);
  switch (config.mode) {
    case FrameMode::Enumerative:
      if (!(a_size <= config.enum_a_max && b_fits))
        fail("FrameTooLarge", "enumerative mode requested but |B| = " + fb.b_order +
                                  " exceeds the enumeration caps");
      fb.enumerative = true;
      break;
    case FrameMode::Structural:
      fb.enumerative = false;
      break;
    case FrameMode::Auto:
      fb.enumerative = a_size <= config.enum_a_max && b_fits;
      break;
  }

  if (fb.enumerative) {
    fb.b_elements.reserve(b_size);
    std::vector<int> digits(a_size, 0);
    for (std::size_t count = 0; count < b_size; ++count) {
      fb.b_elements.push_back(b_element_for(fa, plan.v, b_powers, plan.q, digits, id));
      for (std::size_t pos = 0; pos < digits.size(); ++pos) {
        if (++digits[pos] < static_cast<int>(plan.q)) break;
        digits[pos] = 0;
      }
    }
  }

  Rng rng(config.seed);
  for (const auto& a : support_conjugators) {
    // Right translation by a on the coordinates of A; orbits all have size q.
    std::vector<int> step_to(a_size);
    for (std::size_t d = 0; d < a_size; ++d)
      step_to[d] = fa.index_of(tower::mul(fa.a_elements[d], a));
    int orbit_count = 0;
    std::vector<int> witness_exp(a_size, 0);
    std::vector<char> visited(a_size, 0);
    for (std::size_t start = 0; start < a_size; ++start) {
      if (visited[start]) continue;
      ++orbit_count;
      std::size_t d = start;
      int k = 0;
      do {
        visited[d] = 1;
        witness_exp[d] =
            static_cast<int>((static_cast<long>(plan.q) - k % plan.q) % plan.q);
        d = static_cast<std::size_t>(step_to[d]);
        ++k;
      } while (d != start);
      if (k != static_cast<int>(plan.q))
        fail("Internal", "translation orbit of unexpected size " + std::to_string(k));
    }
    FrameBEntry entry{
        .a = a,
        .orbit_count = orbit_count,
        .centralizer_order = std::to_string(plan.q) + "^" + std::to_string(orbit_count),
        .witness = b_element_for(fa, plan.v, b_powers, plan.q, witness_exp, id)};
    entry.witness_ok =
        tower::mul(tower::inv(entry.witness), tower::conj(entry.witness, a)) == fb.z;

    // Seeded spot samples: the conjugation-by-b factorization and the
    // translation model both hold for random elements of B.
    entry.spot_ok = true;
    tower::Element a_inv = tower::inv(a);
    for (int s = 0; s < config.spot_samples; ++s) {
      std::vector<int> e(a_size);
      for (auto& d : e) d = static_cast<int>(rng.below(static_cast<std::uint64_t>(plan.q)));
      tower::Element bs = b_element_for(fa, plan.v, b_powers, plan.q, e, id);
      tower::Element kappa = tower::mul(tower::inv(tower::conj(bs, a_inv)), bs);
      if (!(tower::conj(a_inv, bs) == tower::mul(a_inv, kappa))) {
        entry.spot_ok = false;
        break;
      }
      std::vector<int> ke = b_exponents_of(fb, fa, kappa);
      for (std::size_t d = 0; d < a_size; ++d) {
        int expected = e[d] - e[static_cast<std::size_t>(step_to[d])];
        expected = (expected % static_cast<int>(plan.q) + static_cast<int>(plan.q)) %
                   static_cast<int>(plan.q);
        if (ke[d] != expected) {
          entry.spot_ok = false;
          break;
        }
      }
      if (!entry.spot_ok) break;
    }

    if (fb.enumerative) {
      std::set<tower::Element> image;
      std::size_t kernel = 0;
      for (const auto& bb : fb.b_elements) {
        tower::Element kappa = tower::mul(tower::inv(bb), tower::conj(bb, a));
        if (kappa.is_identity()) ++kernel;
        image.insert(kappa);
      }
      std::size_t expected_kernel = 1;
      for (int i = 0; i < entry.orbit_count; ++i)
        expected_kernel *= static_cast<std::size_t>(plan.q);
      bool counts_ok =
          kernel == expected_kernel && image.size() * kernel == fb.b_elements.size();
      bool z_in_image = image.count(fb.z) > 0;
      galg::AlgebraElement lhs(spec, characteristic);
      for (const auto& bb : fb.b_elements)
        lhs.add_term(tower::conj(a_inv, bb), galg::Scalar::one(characteristic));
      galg::AlgebraElement hat(spec, characteristic);
      for (const auto& c : image) hat.add_term(c, galg::Scalar::one(characteristic));
      galg::AlgebraElement rhs =
          prime_power_scalar(plan.q, static_cast<unsigned long>(entry.orbit_count),
                             characteristic) *
          (hat * galg::AlgebraElement::term(spec, characteristic,
                                            galg::Scalar::one(characteristic), a_inv));
      entry.enumerative_ok = counts_ok && z_in_image && lhs == rhs;
      entry.verdict = "enumerative";
    } else {
      entry.verdict = "structural";
    }
    fb.entries.push_back(std::move(entry));
  }
  return fb;
}

}  // namespace wreathcert::witness
