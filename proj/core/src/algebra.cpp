#include "wreathcert/galg/element.hpp"

#include <algorithm>

#include "wreathcert/error.hpp"

namespace wreathcert::galg {

namespace {

void require_compatible(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.spec().name != b.spec().name)
    fail("SpecMismatch", "algebra elements belong to different towers: " + a.spec().name +
                             " vs " + b.spec().name);
  if (a.characteristic() != b.characteristic())
    fail("CharacteristicMismatch",
         "algebra elements have different coefficient fields: " +
             std::to_string(a.characteristic()) + " vs " + std::to_string(b.characteristic()));
}

}  // namespace

AlgebraElement::AlgebraElement(const tower::TowerSpec& spec, long characteristic)
    : spec_(spec), char_(characteristic) {
  check_characteristic(characteristic);
}

AlgebraElement AlgebraElement::unit(const tower::TowerSpec& spec, long characteristic) {
  AlgebraElement a(spec, characteristic);
  a.add_term(tower::identity(spec), Scalar::one(characteristic));
  return a;
}

AlgebraElement AlgebraElement::term(const tower::TowerSpec& spec, long characteristic,
                                    const Scalar& coeff, const tower::Element& g) {
  AlgebraElement a(spec, characteristic);
  a.add_term(g, coeff);
  return a;
}

Scalar AlgebraElement::coefficient(const tower::Element& g) const {
  auto it = terms_.find(g);
  if (it == terms_.end()) return Scalar::zero(char_);
  return it->second;
}

std::vector<tower::Element> AlgebraElement::support() const {
  std::vector<tower::Element> out;
  out.reserve(terms_.size());
  for (const auto& [g, k] : terms_) out.push_back(g);
  return out;
}

int AlgebraElement::support_level() const {
  if (terms_.empty()) fail("ZeroElement", "support_level of the zero algebra element");
  int level = 0;
  for (const auto& [g, k] : terms_) level = std::max(level, g.level());
  return level;
}

void AlgebraElement::add_term(const tower::Element& g, const Scalar& coeff) {
  if (coeff.characteristic() != char_)
    fail("CharacteristicMismatch", "term coefficient field does not match algebra");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(g, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, k] : terms_) {
    if (!out.empty()) out += " + ";
    out += k.to_string() + "*" + g.to_string();
  }
  return out;
}

AlgebraElement AlgebraElement::parse(const std::string& text, const tower::TowerSpec& spec,
                                     long characteristic) {
  AlgebraElement out(spec, characteristic);
  if (text == "0") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string part =
        next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
    auto star = part.find('*');
    if (star == std::string::npos)
      fail("ParseError", "algebra term has no '*': " + part);
    Scalar k = Scalar::parse(part.substr(0, star), characteristic);
    tower::Element g = tower::Element::parse(part.substr(star + 1));
    tower::validate_element(spec, g);
    out.add_term(g, k);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b);
  AlgebraElement out = a;
  for (const auto& [g, k] : b.terms_) out.add_term(g, k);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b);
  AlgebraElement out = a;
  for (const auto& [g, k] : b.terms_) out.add_term(g, -k);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b);
  AlgebraElement out(a.spec_, a.char_);
  for (const auto& [g, kg] : a.terms_)
    for (const auto& [h, kh] : b.terms_) out.add_term(tower::mul(g, h), kg * kh);
  return out;
}

AlgebraElement operator*(const Scalar& k, const AlgebraElement& a) {
  if (k.characteristic() != a.char_)
    fail("CharacteristicMismatch", "scalar field does not match algebra");
  AlgebraElement out(a.spec_, a.char_);
  for (const auto& [g, kg] : a.terms_) out.add_term(g, k * kg);
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.spec_.name == b.spec_.name && a.char_ == b.char_ && a.terms_ == b.terms_;
}

AlgebraElement ga_conjugate(const AlgebraElement& a, const tower::Element& t) {
  AlgebraElement out(a.spec(), a.characteristic());
  for (const auto& [g, k] : a.terms()) out.add_term(tower::conj(g, t), k);
  return out;
}

Scalar augmentation(const AlgebraElement& a) {
  Scalar s = Scalar::zero(a.characteristic());
  for (const auto& [g, k] : a.terms()) s = s + k;
  return s;
}

NormalizedInput normalize_input(const AlgebraElement& input) {
  if (input.is_zero()) fail("ZeroElement", "cannot normalize the zero algebra element");
  tower::Element smallest = input.support().front();  // map order is canonical
  NormalizedInput out{input, smallest, {}, {}, 0};
  if (!smallest.is_identity()) {
    AlgebraElement shifted(input.spec(), input.characteristic());
    tower::Element shift = tower::inv(smallest);
    for (const auto& [g, k] : input.terms()) shifted.add_term(tower::mul(g, shift), k);
    out.alpha = shifted;
    out.translator = shift;
  } else {
    out.translator = tower::identity(input.spec());
  }
  out.xs.push_back(tower::identity(input.spec()));
  out.ks.push_back(out.alpha.coefficient(out.xs.front()));
  if (out.ks.front().is_zero()) fail("Internal", "identity coefficient vanished after translation");
  for (const auto& [g, k] : out.alpha.terms()) {
    if (g.is_identity()) continue;
    out.xs.push_back(tower::inv(g));
    out.ks.push_back(k);
  }
  out.support_level = out.alpha.support_level();
  return out;
}

}  // namespace wreathcert::galg
