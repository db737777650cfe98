#include "wreathcert/tower/imprimitive.hpp"

#include <algorithm>

#include "wreathcert/error.hpp"

namespace wreathcert::tower {

namespace {

int index_of(const std::vector<fingrp::Perm>& sorted_elements, const fingrp::Perm& p) {
  auto it = std::lower_bound(sorted_elements.begin(), sorted_elements.end(), p);
  if (it == sorted_elements.end() || !(*it == p))
    fail("UnknownElement", "permutation not in the level-1 group: " + p.to_string());
  return static_cast<int>(it - sorted_elements.begin());
}

}  // namespace

int imprimitive_degree(const TowerSpec& spec) {
  const auto& s1 = spec.group_at(1);
  const auto& s2 = spec.group_at(2);
  return static_cast<int>(s1.element_list.size()) * s2.degree;
}

fingrp::Perm to_imprimitive_perm(const Element& x, const TowerSpec& spec) {
  if (x.level() > 2)
    fail("BadLevel", "imprimitive image defined only for levels 1 and 2, got level " +
                         std::to_string(x.level()));
  const auto& s1 = spec.group_at(1);
  const auto& s2 = spec.group_at(2);
  const auto& cells = s1.element_list;
  int deg = s2.degree;

  fingrp::Perm act = project(x, 1).leaf_perm();
  std::vector<int> images(cells.size() * static_cast<std::size_t>(deg));
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const fingrp::Perm& c = cells[ci];
    int target = index_of(cells, fingrp::compose(c, act));
    fingrp::Perm cell_perm = fingrp::Perm::identity(deg);
    if (x.level() == 2) {
      for (const auto& [key, value] : x.base()) {
        if (key.leaf_perm() == c) {
          cell_perm = value;
          break;
        }
      }
    }
    for (int pt = 0; pt < deg; ++pt)
      images[ci * static_cast<std::size_t>(deg) + static_cast<std::size_t>(pt)] =
          target * deg + cell_perm[pt];
  }
  return fingrp::Perm(std::move(images));
}

}  // namespace wreathcert::tower
