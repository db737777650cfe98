#pragma once

#include <set>
#include <string>
#include <vector>

#include "wreathcert/fingrp/subgroup.hpp"

namespace wreathcert::fingrp {

template <class T>
struct ProductLemmaReport {
  bool holds = false;
  size_t group_order = 0;
  size_t commutator_order = 0;
};

// For H a product of simple factors none of which a centralizes, [H,a] must
// be all of H. The commutator subgroup is built exhaustively.
template <class T>
ProductLemmaReport<T> check_product_lemma(const std::vector<T>& h_sorted, const T& a,
                                          const T& id,
                                          size_t cap = kDefaultClosureCap) {
  std::vector<T> sub = commutator_with_aut(h_sorted, a, id, cap);
  ProductLemmaReport<T> report;
  report.group_order = h_sorted.size();
  report.commutator_order = sub.size();
  report.holds = sub == h_sorted;
  return report;
}

template <class T>
struct MetabelianReport {
  bool b_abelian = false;
  bool contains_derived = false;
  size_t checked = 0;       // elements a with [B,a] confirmed normal
  bool all_normal = false;
  std::string first_failure;
};

// B abelian with H' <= B forces every [B,a] normal in H. Checked literally
// for every a in H; generators of H and B are supplied to keep the loop
// affordable at frame scale.
template <class T>
MetabelianReport<T> check_metabelian_lemma(const std::vector<T>& h_sorted,
                                           const std::vector<T>& h_gens,
                                           const std::vector<T>& b_sorted,
                                           const std::vector<T>& b_gens, const T& id,
                                           size_t cap = kDefaultClosureCap) {
  MetabelianReport<T> report;
  report.b_abelian = is_abelian(b_gens);
  std::vector<T> comms;
  for (const T& x : h_gens)
    for (const T& y : h_gens) comms.push_back(commutator_of(x, y));
  std::vector<T> derived = normal_closure(h_gens, comms, id, cap);
  report.contains_derived = true;
  for (const T& d : derived)
    if (!set_contains(b_sorted, d)) report.contains_derived = false;
  if (!report.b_abelian || !report.contains_derived) return report;

  report.all_normal = true;
  for (const T& a : h_sorted) {
    for (const T& b : b_gens)
      if (!set_contains(b_sorted, conj_of(b, a)))
        fail("NotInvariant", "conjugation does not preserve B");
    std::set<T> gens;
    for (const T& b : b_sorted)
      gens.insert(GroupOps<T>::mul(conj_of(GroupOps<T>::inv(b), a), b));
    std::vector<T> sub =
        generated_subgroup(std::vector<T>(gens.begin(), gens.end()), id, cap);
    if (!is_normal_under(sub, h_gens)) {
      report.all_normal = false;
      report.first_failure = "[B,a] not normal";
      return report;
    }
    ++report.checked;
  }
  return report;
}

}  // namespace wreathcert::fingrp
