#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/perm.hpp"

namespace wreathcert::fingrp {

inline constexpr size_t kDefaultClosureCap = 100000;

// Group operations used by the closure machinery. Specialized for Perm here
// and for tower elements in tower/element.hpp.
template <class T>
struct GroupOps;

template <>
struct GroupOps<Perm> {
  static Perm mul(const Perm& a, const Perm& b) { return compose(a, b); }
  static Perm inv(const Perm& a) { return inverse(a); }
};

template <class T>
T conj_of(const T& x, const T& g) {
  return GroupOps<T>::mul(GroupOps<T>::mul(GroupOps<T>::inv(g), x), g);
}

template <class T>
T commutator_of(const T& x, const T& y) {
  return GroupOps<T>::mul(GroupOps<T>::mul(GroupOps<T>::inv(x), GroupOps<T>::inv(y)),
                          GroupOps<T>::mul(x, y));
}

// Sorted canonical element list; membership by binary search.
template <class T>
bool set_contains(const std::vector<T>& sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Breadth-first closure of <gens> starting from the identity. Exhaustiveness
// beats sophistication at catalog scale; throws CapExceeded past the cap.
template <class T>
std::vector<T> generated_subgroup(const std::vector<T>& gens, const T& id,
                                  size_t cap = kDefaultClosureCap) {
  std::set<T> seen;
  std::queue<T> todo;
  seen.insert(id);
  todo.push(id);
  while (!todo.empty()) {
    T cur = todo.front();
    todo.pop();
    for (const T& g : gens) {
      for (T next : {GroupOps<T>::mul(cur, g), GroupOps<T>::mul(g, cur)}) {
        if (seen.insert(next).second) {
          if (seen.size() > cap)
            fail("CapExceeded", "subgroup closure exceeded cap " + std::to_string(cap));
          todo.push(std::move(next));
        }
      }
    }
  }
  return std::vector<T>(seen.begin(), seen.end());
}

// Smallest subgroup containing the seeds and closed under conjugation by the
// ambient generators.
template <class T>
std::vector<T> normal_closure(const std::vector<T>& ambient_gens,
                              const std::vector<T>& seeds, const T& id,
                              size_t cap = kDefaultClosureCap) {
  std::vector<T> gens = seeds;
  std::vector<T> sub = generated_subgroup(gens, id, cap);
  for (;;) {
    std::vector<T> fresh;
    for (const T& s : sub)
      for (const T& g : ambient_gens) {
        T c = conj_of(s, g);
        if (!set_contains(sub, c)) fresh.push_back(std::move(c));
      }
    if (fresh.empty()) return sub;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
    sub = generated_subgroup(gens, id, cap);
  }
}

// Greedy generating subset, scanning in canonical order.
template <class T>
std::vector<T> find_generators(const std::vector<T>& sorted_elements, const T& id,
                               size_t cap = kDefaultClosureCap) {
  std::vector<T> gens;
  std::vector<T> span{id};
  for (const T& x : sorted_elements) {
    if (set_contains(span, x)) continue;
    gens.push_back(x);
    span = generated_subgroup(gens, id, cap);
    if (span.size() == sorted_elements.size()) break;
  }
  return gens;
}

// Derived subgroup via the normal closure of generator commutators.
template <class T>
std::vector<T> derived_subgroup(const std::vector<T>& sorted_elements, const T& id,
                                size_t cap = kDefaultClosureCap) {
  std::vector<T> gens = find_generators(sorted_elements, id, cap);
  std::vector<T> comms;
  for (const T& a : gens)
    for (const T& b : gens) comms.push_back(commutator_of(a, b));
  return normal_closure(gens, comms, id, cap);
}

// [H,a] = <h^{-a} h ; h in H> for an element a normalizing H. The generating
// set is taken over all of H, exhaustively.
template <class T>
std::vector<T> commutator_with_aut(const std::vector<T>& sorted_elements, const T& a,
                                   const T& id, size_t cap = kDefaultClosureCap) {
  for (const T& g : find_generators(sorted_elements, id, cap))
    if (!set_contains(sorted_elements, conj_of(g, a)))
      fail("NotInvariant", "conjugation does not preserve the subgroup");
  std::set<T> gens;
  for (const T& h : sorted_elements)
    gens.insert(GroupOps<T>::mul(conj_of(GroupOps<T>::inv(h), a), h));
  return generated_subgroup(std::vector<T>(gens.begin(), gens.end()), id, cap);
}

template <class T>
std::vector<T> centralizer_in(const std::vector<T>& sorted_elements, const T& a) {
  std::vector<T> fixed;
  for (const T& h : sorted_elements)
    if (conj_of(h, a) == h) fixed.push_back(h);
  return fixed;
}

template <class T>
bool is_normal_under(const std::vector<T>& sorted_sub, const std::vector<T>& ambient_gens) {
  for (const T& s : sorted_sub)
    for (const T& g : ambient_gens)
      if (!set_contains(sorted_sub, conj_of(s, g))) return false;
  return true;
}

template <class T>
bool is_abelian(const std::vector<T>& elements) {
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      if (GroupOps<T>::mul(elements[i], elements[j]) !=
          GroupOps<T>::mul(elements[j], elements[i]))
        return false;
  return true;
}

// Conjugacy classes as sorted orbits under conjugation by the given
// generators; class representatives are the canonical minima.
template <class T>
std::vector<std::vector<T>> conjugacy_classes(const std::vector<T>& sorted_elements,
                                              const std::vector<T>& gens) {
  std::vector<std::vector<T>> classes;
  std::set<T> assigned;
  for (const T& x : sorted_elements) {
    if (assigned.count(x)) continue;
    std::set<T> orbit;
    std::queue<T> todo;
    orbit.insert(x);
    todo.push(x);
    while (!todo.empty()) {
      T cur = todo.front();
      todo.pop();
      for (const T& g : gens) {
        T c = conj_of(cur, g);
        if (orbit.insert(c).second) todo.push(std::move(c));
      }
    }
    assigned.insert(orbit.begin(), orbit.end());
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

}  // namespace wreathcert::fingrp
