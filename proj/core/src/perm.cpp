#include "wreathcert/fingrp/perm.hpp"

#include <numeric>

#include "wreathcert/error.hpp"

namespace wreathcert::fingrp {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
      fail("ParseError", "image vector is not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

std::strong_ordering Perm::operator<=>(const Perm& other) const {
  return to_string() <=> other.to_string();
}

std::string Perm::to_string() const {
  std::string out = "p[";
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

Perm Perm::parse(const std::string& text) {
  if (text.size() < 3 || text.substr(0, 2) != "p[" || text.back() != ']')
    fail("ParseError", "bad permutation literal: " + text);
  std::vector<int> images;
  size_t i = 2;
  while (i < text.size() - 1) {
    size_t j = i;
    while (j < text.size() - 1 && text[j] != ',') ++j;
    const std::string num = text.substr(i, j - i);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      fail("ParseError", "bad permutation image in: " + text);
    images.push_back(std::stoi(num));
    i = j + (j < text.size() - 1 ? 1 : 0);
  }
  return Perm(std::move(images));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) fail("DegreeMismatch", "compose of unequal degrees");
  std::vector<int> images(static_cast<size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<size_t>(x)] = q[p[x]];
  return Perm(std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<int> images(static_cast<size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<size_t>(p[x])] = x;
  return Perm(std::move(images));
}

Perm conjugate(const Perm& x, const Perm& g) {
  return compose(compose(inverse(g), x), g);
}

Perm commutator(const Perm& x, const Perm& y) {
  return compose(compose(inverse(x), inverse(y)), compose(x, y));
}

long element_order(const Perm& p) {
  Perm acc = p;
  long order = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, p);
    ++order;
  }
  return order;
}

size_t PermHash::operator()(const Perm& p) const {
  size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wreathcert::fingrp
