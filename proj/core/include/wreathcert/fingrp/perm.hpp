#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace wreathcert::fingrp {

// Permutation of {0,...,degree-1}, stored as the image vector.
// Composition is left-to-right: (p*q)(x) = q(p(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  // Byte-lexicographic order of the canonical serialization.
  std::strong_ordering operator<=>(const Perm& other) const;

  // Canonical text form: p[i0,i1,...], 0-based, no spaces.
  std::string to_string() const;
  static Perm parse(const std::string& text);

 private:
  std::vector<int> images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// x^g = g^-1 x g.
Perm conjugate(const Perm& x, const Perm& g);
// [x,y] = x^-1 y^-1 x y.
Perm commutator(const Perm& x, const Perm& y);
long element_order(const Perm& p);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace wreathcert::fingrp
