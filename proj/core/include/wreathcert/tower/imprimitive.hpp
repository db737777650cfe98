#pragma once

#include "wreathcert/fingrp/perm.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/spec.hpp"

namespace wreathcert::tower {

// Faithful permutation image of a level <= 2 element on |G_1| * deg(S_2)
// points: block c (a G_1 element in canonical order) holds the S_2 domain,
// and (c, pt) maps to (c * g, pt ^ f(c)) for the element (f, g).
// Used as an independent oracle for the sparse tree arithmetic.
fingrp::Perm to_imprimitive_perm(const Element& x, const TowerSpec& spec);

int imprimitive_degree(const TowerSpec& spec);

}  // namespace wreathcert::tower
