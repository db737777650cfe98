#include "wreathcert/tower/spec.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "wreathcert/error.hpp"

namespace wreathcert::tower {

const fingrp::SimpleGroupDesc& TowerSpec::group_at(int level) const {
  if (level < 1) fail("LevelMismatch", "tower levels are 1-based");
  std::string id;
  const size_t idx = static_cast<size_t>(level - 1);
  if (idx < preamble.size()) {
    id = preamble[idx];
  } else {
    if (cycle.empty()) fail("ParseError", "tower spec has an empty cycle");
    id = cycle[(idx - preamble.size()) % cycle.size()];
  }
  const fingrp::SimpleGroupDesc* g = fingrp::find_catalog_group(id);
  if (!g) fail("UnknownGroup", "tower spec references unknown group " + id);
  return *g;
}

std::vector<const fingrp::SimpleGroupDesc*> TowerSpec::recurring() const {
  std::vector<const fingrp::SimpleGroupDesc*> out;
  for (const std::string& id : cycle) {
    const fingrp::SimpleGroupDesc* g = fingrp::find_catalog_group(id);
    if (!g) fail("UnknownGroup", "tower spec references unknown group " + id);
    bool seen = false;
    for (const auto* h : out) seen = seen || h == g;
    if (!seen) out.push_back(g);
  }
  return out;
}

std::string TowerSpec::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["preamble"] = preamble;
  j["cycle"] = cycle;
  return j.dump(2) + "\n";
}

TowerSpec TowerSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail("ParseError", "tower spec is not a JSON object");
  TowerSpec spec;
  spec.name = j.value("name", std::string("tower"));
  for (const auto& v : j.value("preamble", nlohmann::json::array()))
    spec.preamble.push_back(v.get<std::string>());
  if (!j.contains("cycle")) fail("ParseError", "tower spec lacks a cycle");
  for (const auto& v : j["cycle"]) spec.cycle.push_back(v.get<std::string>());
  return spec;
}

TowerSpec TowerSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("UsageError", "cannot open tower spec file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void validate_spec(const TowerSpec& spec) {
  if (spec.cycle.empty()) fail("ParseError", "tower spec needs a nonempty cycle");
  static std::map<std::string, bool> audited;
  auto check = [&](const std::string& id) {
    const fingrp::SimpleGroupDesc* g = fingrp::find_catalog_group(id);
    if (!g) fail("UnknownGroup", "tower spec references unknown group " + id);
    if (g->metadata_only)
      fail("Unsupported", "group " + g->id + " has no materialized elements");
    auto it = audited.find(g->id);
    if (it == audited.end())
      it = audited.emplace(g->id, fingrp::verify_simplicity(*g).simple).first;
    if (!it->second) fail("NotSimple", "group " + g->id + " failed the simplicity audit");
  };
  for (const auto& id : spec.preamble) check(id);
  for (const auto& id : spec.cycle) check(id);
}

}  // namespace wreathcert::tower
