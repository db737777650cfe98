#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/subgroup.hpp"
#include "wreathcert/galg/scalar.hpp"

namespace wreathcert::oracle {

inline constexpr std::size_t kDenseOrderCap = 2000;

// Row-echelon subspace of K^n with exact arithmetic; rows are stored sparse.
class Subspace {
 public:
  using Vec = std::vector<galg::Scalar>;

  Subspace(int ambient_dim, long characteristic);

  int ambient_dim() const { return dim_; }
  long characteristic() const { return char_; }
  int dimension() const { return static_cast<int>(rows_.size()); }

  bool contains(const Vec& v) const;
  // Adds v to the span; returns true when the dimension grew.
  bool insert(const Vec& v);

 private:
  using SparseRow = std::map<int, galg::Scalar>;
  SparseRow reduce(const Vec& v) const;

  int dim_;
  long char_ = 0;
  std::map<int, SparseRow> rows_;  // pivot column -> row with pivot coefficient 1
};

// Multiplication-table model of K[G] for a small group given as its full
// sorted element list. Serves as an independent check of the sparse algebra
// bookkeeping and as the ground truth for ideal dimensions.
template <typename T>
class DenseAlgebra {
 public:
  using Vec = Subspace::Vec;

  DenseAlgebra(std::vector<T> sorted_elements, long characteristic)
      : elements_(std::move(sorted_elements)), char_(characteristic) {
    galg::check_characteristic(characteristic);
    if (elements_.empty()) fail("BadElementList", "empty element list");
    if (elements_.size() > kDenseOrderCap)
      fail("GroupTooLarge", "dense algebra capped at order " + std::to_string(kDenseOrderCap) +
                                ", got " + std::to_string(elements_.size()));
    if (!std::is_sorted(elements_.begin(), elements_.end()))
      fail("BadElementList", "element list is not in canonical order");
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      fail("BadElementList", "element list has duplicates");
    if (!elements_.front().is_identity())
      fail("BadElementList", "canonical order must place the identity first");
    int n = order();
    mul_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    inv_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int k = index_of(fingrp::GroupOps<T>::mul(element(i), element(j)));
        mul_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
        if (k == 0) inv_[static_cast<std::size_t>(i)] = j;
      }
    for (int i = 0; i < n; ++i)
      if (inv_[static_cast<std::size_t>(i)] < 0) fail("BadElementList", "element has no inverse");
  }

  int order() const { return static_cast<int>(elements_.size()); }
  long characteristic() const { return char_; }
  const T& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

  int index_of(const T& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x))
      fail("NotClosed", "product leaves the element list");
    return static_cast<int>(it - elements_.begin());
  }

  int mul(int i, int j) const {
    return mul_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  int inv(int i) const { return inv_[static_cast<std::size_t>(i)]; }

  Vec zero_vec() const {
    return Vec(static_cast<std::size_t>(order()), galg::Scalar::zero(char_));
  }

  Vec unit_vec(int i) const {
    Vec v = zero_vec();
    v[static_cast<std::size_t>(i)] = galg::Scalar::one(char_);
    return v;
  }

  Vec from_terms(const std::vector<std::pair<T, galg::Scalar>>& terms) const {
    Vec v = zero_vec();
    for (const auto& [g, k] : terms) {
      auto i = static_cast<std::size_t>(index_of(g));
      v[i] = v[i] + k;
    }
    return v;
  }

  Vec mul_vec(const Vec& a, const Vec& b) const {
    Vec out = zero_vec();
    for (int i = 0; i < order(); ++i) {
      if (a[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < order(); ++j) {
        if (b[static_cast<std::size_t>(j)].is_zero()) continue;
        auto k = static_cast<std::size_t>(mul(i, j));
        out[k] = out[k] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }

  Vec left_mul(int g, const Vec& v) const {
    Vec out = zero_vec();
    for (int j = 0; j < order(); ++j)
      if (!v[static_cast<std::size_t>(j)].is_zero())
        out[static_cast<std::size_t>(mul(g, j))] = v[static_cast<std::size_t>(j)];
    return out;
  }

  Vec right_mul(const Vec& v, int g) const {
    Vec out = zero_vec();
    for (int i = 0; i < order(); ++i)
      if (!v[static_cast<std::size_t>(i)].is_zero())
        out[static_cast<std::size_t>(mul(i, g))] = v[static_cast<std::size_t>(i)];
    return out;
  }

 private:
  std::vector<T> elements_;
  long char_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

// Two-sided ideal generated by the seeds: fixpoint of the row space under
// left and right multiplication by the group generators.
template <typename T>
Subspace ideal_span(const DenseAlgebra<T>& algebra, const std::vector<T>& group_gens,
                    const std::vector<typename DenseAlgebra<T>::Vec>& seeds) {
  std::vector<int> gen_idx;
  gen_idx.reserve(group_gens.size());
  for (const T& g : group_gens) gen_idx.push_back(algebra.index_of(g));
  Subspace span(algebra.order(), algebra.characteristic());
  std::queue<typename DenseAlgebra<T>::Vec> todo;
  for (const auto& s : seeds)
    if (span.insert(s)) todo.push(s);
  while (!todo.empty()) {
    auto v = std::move(todo.front());
    todo.pop();
    for (int g : gen_idx) {
      for (auto next : {algebra.left_mul(g, v), algebra.right_mul(v, g)}) {
        if (span.insert(next)) todo.push(std::move(next));
      }
    }
  }
  return span;
}

template <typename T>
Subspace principal_ideal(const DenseAlgebra<T>& algebra, const std::vector<T>& group_gens,
                         const typename DenseAlgebra<T>::Vec& seed) {
  return ideal_span(algebra, group_gens, {seed});
}

// Span of {g - 1 : g in G}; always an ideal of codimension 1.
template <typename T>
Subspace augmentation_ideal(const DenseAlgebra<T>& algebra) {
  Subspace span(algebra.order(), algebra.characteristic());
  for (int i = 1; i < algebra.order(); ++i) {
    auto v = algebra.unit_vec(i);
    v[0] = -galg::Scalar::one(algebra.characteristic());
    span.insert(v);
  }
  return span;
}

inline int codimension(int order, const Subspace& span) { return order - span.dimension(); }

// Every normal subgroup, as a sorted element list, via joins of cyclic normal
// closures. Exhaustive and slow; intended for small oracle groups only.
template <typename T>
std::vector<std::vector<T>> all_normal_subgroups(const std::vector<T>& sorted_elements,
                                                 const std::vector<T>& gens, const T& id,
                                                 std::size_t cap = fingrp::kDefaultClosureCap) {
  std::set<std::vector<T>> subs;
  subs.insert(std::vector<T>{id});
  for (const T& x : sorted_elements)
    subs.insert(fingrp::normal_closure(gens, {x}, id, cap));
  for (;;) {
    std::vector<std::vector<T>> current(subs.begin(), subs.end());
    bool grew = false;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<T> join_gens = current[i];
        join_gens.insert(join_gens.end(), current[j].begin(), current[j].end());
        auto join = fingrp::generated_subgroup(join_gens, id, cap);
        if (subs.insert(join).second) grew = true;
      }
    if (!grew) break;
  }
  std::vector<std::vector<T>> out(subs.begin(), subs.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace wreathcert::oracle
