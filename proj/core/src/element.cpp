#include "wreathcert/tower/element.hpp"

#include <algorithm>
#include <map>

#include "wreathcert/error.hpp"

namespace wreathcert::tower {

using fingrp::Perm;

struct Element::Node {
  int level = 1;
  Perm leaf;                    // level == 1
  Element act;                  // level >= 2
  std::vector<BaseEntry> base;  // level >= 2, nonempty, keys ascending
  std::string ser;

  Node(Perm p, std::string s) : leaf(std::move(p)), act(nullptr), ser(std::move(s)) {}
  Node(int lvl, Element a, std::vector<BaseEntry> b, std::string s)
      : level(lvl), act(std::move(a)), base(std::move(b)), ser(std::move(s)) {}
};

Element Element::leaf(Perm p) {
  std::string ser = p.to_string();
  return Element(std::make_shared<const Node>(std::move(p), std::move(ser)));
}

Element Element::wreath(int level, Element act, std::vector<BaseEntry> base) {
  if (level < 2) fail("LevelMismatch", "wreath layers start at level 2");
  if (act.level() >= level)
    fail("LevelMismatch", "act part must live strictly below its layer");
  std::erase_if(base, [](const BaseEntry& e) { return e.second.is_identity(); });
  if (base.empty()) return act;
  std::sort(base.begin(), base.end(),
            [](const BaseEntry& a, const BaseEntry& b) { return a.first < b.first; });
  const int value_degree = base.front().second.degree();
  for (size_t i = 0; i < base.size(); ++i) {
    if (base[i].first.level() >= level)
      fail("LevelMismatch", "base coordinate must live strictly below its layer");
    if (base[i].second.degree() != value_degree)
      fail("DegreeMismatch", "base values of one layer must share a degree");
    if (i && !(base[i - 1].first < base[i].first))
      fail("ParseError", "duplicate base coordinate");
  }
  std::string ser = "w" + std::to_string(level) + "{act=" + act.to_string() + ";base=[";
  for (size_t i = 0; i < base.size(); ++i) {
    if (i) ser += ',';
    ser += '(' + base[i].first.to_string() + ':' + base[i].second.to_string() + ')';
  }
  ser += "]}";
  return Element(std::make_shared<const Node>(level, std::move(act), std::move(base),
                                              std::move(ser)));
}

int Element::level() const { return node_->level; }

const Perm& Element::leaf_perm() const {
  if (level() != 1) fail("LevelMismatch", "leaf_perm on a wreath node");
  return node_->leaf;
}

const Element& Element::act() const {
  if (level() == 1) fail("LevelMismatch", "act of a level-1 element");
  return node_->act;
}

const std::vector<Element::BaseEntry>& Element::base() const {
  if (level() == 1) fail("LevelMismatch", "base of a level-1 element");
  return node_->base;
}

bool Element::is_identity() const { return level() == 1 && node_->leaf.is_identity(); }

int Element::leaf_degree() const {
  const Element* cur = this;
  while (cur->level() > 1) cur = &cur->act();
  return cur->leaf_perm().degree();
}

const std::string& Element::to_string() const { return node_->ser; }

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  char peek() const {
    if (pos >= text.size()) fail("ParseError", "truncated element literal");
    return text[pos];
  }
  void expect(const std::string& token) {
    if (text.compare(pos, token.size(), token) != 0)
      fail("ParseError", "expected '" + token + "' at offset " + std::to_string(pos) +
                             " in: " + text);
    pos += token.size();
  }
  int parse_int() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("ParseError", "expected a number in: " + text);
    return std::stoi(text.substr(start, pos - start));
  }

  Perm parse_perm() {
    expect("p[");
    std::vector<int> images;
    if (peek() != ']') {
      images.push_back(parse_int());
      while (peek() == ',') {
        ++pos;
        images.push_back(parse_int());
      }
    }
    expect("]");
    return Perm(std::move(images));
  }

  Element parse_element() {
    if (peek() == 'p') return Element::leaf(parse_perm());
    expect("w");
    const int level = parse_int();
    expect("{act=");
    Element act = parse_element();
    expect(";base=[");
    std::vector<Element::BaseEntry> base;
    if (peek() != ']') {
      for (;;) {
        expect("(");
        Element key = parse_element();
        expect(":");
        Perm value = parse_perm();
        expect(")");
        base.emplace_back(std::move(key), std::move(value));
        if (peek() != ',') break;
        ++pos;
      }
    }
    expect("]}");
    return Element::wreath(level, std::move(act), std::move(base));
  }
};

// View of x as (base, act) at the given layer; lower-level elements act
// purely through the act slot.
struct LayerView {
  const std::vector<Element::BaseEntry>* base;
  Element act;
};

const std::vector<Element::BaseEntry>& empty_base() {
  static const std::vector<Element::BaseEntry> empty;
  return empty;
}

LayerView view_at(const Element& x, int level) {
  if (x.level() == level) return {&x.base(), x.act()};
  return {&empty_base(), x};
}

}  // namespace

Element Element::parse(const std::string& text) {
  Parser p{text};
  Element e = p.parse_element();
  if (p.pos != text.size()) fail("ParseError", "trailing bytes in element literal: " + text);
  return e;
}

Element mul(const Element& x, const Element& y) {
  const int level = std::max(x.level(), y.level());
  if (level == 1) return Element::leaf(fingrp::compose(x.leaf_perm(), y.leaf_perm()));
  LayerView xv = view_at(x, level);
  LayerView yv = view_at(y, level);
  std::map<Element, Perm> merged(xv.base->begin(), xv.base->end());
  if (!yv.base->empty()) {
    const Element g_inv = inv(xv.act);
    for (const auto& [d, p] : *yv.base) {
      Element c = mul(d, g_inv);
      auto it = merged.find(c);
      if (it == merged.end())
        merged.emplace(std::move(c), p);
      else
        it->second = fingrp::compose(it->second, p);
    }
  }
  return Element::wreath(level, mul(xv.act, yv.act),
                         std::vector<Element::BaseEntry>(merged.begin(), merged.end()));
}

Element inv(const Element& x) {
  if (x.level() == 1) return Element::leaf(fingrp::inverse(x.leaf_perm()));
  std::vector<Element::BaseEntry> base;
  base.reserve(x.base().size());
  for (const auto& [c, p] : x.base())
    base.emplace_back(mul(c, x.act()), fingrp::inverse(p));
  return Element::wreath(x.level(), inv(x.act()), std::move(base));
}

Element conj(const Element& x, const Element& g) { return mul(mul(inv(g), x), g); }

Element commutator(const Element& x, const Element& y) {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

Element identity(const TowerSpec& spec) {
  return Element::leaf(Perm::identity(spec.group_at(1).degree));
}

Element embed(const Element& x, int level) {
  if (level < x.level())
    fail("LevelMismatch", "cannot embed level " + std::to_string(x.level()) +
                              " into level " + std::to_string(level));
  return x;
}

Element project(const Element& x, int j) {
  if (j < 0) fail("LevelMismatch", "projection level must be nonnegative");
  Element cur = x;
  while (cur.level() > std::max(j, 1)) cur = cur.act();
  if (j == 0) return Element::leaf(Perm::identity(cur.leaf_degree()));
  return cur;
}

std::pair<Element, Element> decompose(const Element& x, int k) {
  Element g = project(x, k);
  Element n = mul(x, inv(g));
  return {std::move(n), std::move(g)};
}

bool in_T(const Element& x, int i) { return project(x, i).is_identity(); }

int max_T_level(const Element& x) {
  if (x.is_identity())
    fail("IdentityElement", "the identity lies in every T_i");
  // Walk the act chain; the identity can only appear as the final leaf.
  Element cur = x;
  int last_nontrivial_level = cur.level();
  while (cur.level() > 1) {
    cur = cur.act();
    if (!cur.is_identity()) last_nontrivial_level = cur.level();
  }
  if (!cur.is_identity()) return 0;
  return last_nontrivial_level - 1;
}

void validate_element(const TowerSpec& spec, const Element& x) {
  if (x.level() == 1) {
    if (x.leaf_perm().degree() != spec.group_at(1).degree)
      fail("SpecMismatch", "level-1 degree does not match S_1");
    return;
  }
  validate_element(spec, x.act());
  const int value_degree = spec.group_at(x.level()).degree;
  for (const auto& [c, p] : x.base()) {
    validate_element(spec, c);
    if (p.degree() != value_degree)
      fail("SpecMismatch", "base value degree does not match S_" +
                               std::to_string(x.level()));
  }
}

long element_order(const Element& x) {
  Element acc = x;
  long order = 1;
  while (!acc.is_identity()) {
    acc = mul(acc, x);
    ++order;
  }
  return order;
}

}  // namespace wreathcert::tower
