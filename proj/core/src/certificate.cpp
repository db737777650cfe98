#include "wreathcert/witness/certificate.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wreathcert/error.hpp"

namespace wreathcert::witness {

using Json = nlohmann::ordered_json;

std::string WitnessCertificate::to_json() const {
  Json j;
  j["format_version"] = format_version;
  j["tower"] = {{"name", spec.name}, {"preamble", spec.preamble}, {"cycle", spec.cycle}};
  j["characteristic"] = characteristic;
  j["seed"] = seed;
  j["input"] = input;
  j["levels"] = {{"q", q}, {"u", u}, {"t", t}, {"v", v}};
  j["normalization"] = {{"translator", translator}, {"xs", xs}, {"ks", ks}};
  Json fa;
  fa["y_perm"] = y_perm;
  fa["coords"] = coords;
  fa["ys"] = ys;
  fa["zs"] = zs;
  fa["z_exponents"] = z_exponents;
  fa["z_rank"] = z_rank;
  fa["direct"] = direct;
  fa["a_order"] = a_order;
  j["frame_a"] = fa;
  j["elimination"] = {{"betas", betas}, {"beta0_closed", beta0_closed}};
  j["reduction"] = {{"shift", shift}, {"alpha0", alpha0}, {"l0", l0}, {"as", as}, {"ls", ls}};
  Json fb;
  fb["b_perm"] = b_perm;
  fb["z"] = z;
  fb["mode"] = mode;
  fb["b_order"] = b_order;
  fb["entries"] = Json::array();
  for (const auto& e : entries)
    fb["entries"].push_back({{"a", e.a},
                             {"orbit_count", e.orbit_count},
                             {"centralizer_order", e.centralizer_order},
                             {"witness", e.witness},
                             {"verdict", e.verdict}});
  j["frame_b"] = fb;
  j["result"] = {{"z", z}, {"closure", closure}, {"codim_bound", codim_bound},
                 {"bound_level", bound_level}};
  j["chain"] = Json::array();
  for (const auto& s : chain) {
    Json js;
    js["label"] = s.label;
    js["kind"] = s.kind;
    js["source"] = s.source;
    js["terms"] = Json::array();
    for (const auto& t : s.terms)
      js["terms"].push_back(
          {{"coeff", t.coeff}, {"left", t.left}, {"right", t.right}, {"source", t.source}});
    js["value"] = s.value;
    j["chain"].push_back(std::move(js));
  }
  j["config"] = {{"enum_a_max", enum_a_max},
                 {"enum_b_max", enum_b_max},
                 {"hard_a_cap", hard_a_cap},
                 {"spot_samples", spot_samples}};
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace

WitnessCertificate WitnessCertificate::from_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("ParseError", "certificate is not valid JSON");
  WitnessCertificate c;
  try {
    c.format_version = j.at("format_version").get<int>();
    if (c.format_version != 1)
      fail("UnsupportedVersion",
           "certificate format_version " + std::to_string(c.format_version));
    const auto& tw = j.at("tower");
    c.spec.name = tw.at("name").get<std::string>();
    c.spec.preamble = string_list(tw.at("preamble"));
    c.spec.cycle = string_list(tw.at("cycle"));
    c.characteristic = j.at("characteristic").get<long>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.input = j.at("input").get<std::string>();
    const auto& lv = j.at("levels");
    c.q = lv.at("q").get<long>();
    c.u = lv.at("u").get<int>();
    c.t = lv.at("t").get<int>();
    c.v = lv.at("v").get<int>();
    const auto& nm = j.at("normalization");
    c.translator = nm.at("translator").get<std::string>();
    c.xs = string_list(nm.at("xs"));
    c.ks = string_list(nm.at("ks"));
    const auto& fa = j.at("frame_a");
    c.y_perm = fa.at("y_perm").get<std::string>();
    c.coords = string_list(fa.at("coords"));
    c.ys = string_list(fa.at("ys"));
    c.zs = string_list(fa.at("zs"));
    for (const auto& row : fa.at("z_exponents")) c.z_exponents.push_back(row.get<std::vector<int>>());
    c.z_rank = fa.at("z_rank").get<int>();
    c.direct = fa.at("direct").get<bool>();
    c.a_order = fa.at("a_order").get<std::uint64_t>();
    const auto& el = j.at("elimination");
    c.betas = string_list(el.at("betas"));
    c.beta0_closed = el.at("beta0_closed").get<std::string>();
    const auto& rd = j.at("reduction");
    c.shift = rd.at("shift").get<std::string>();
    c.alpha0 = rd.at("alpha0").get<std::string>();
    c.l0 = rd.at("l0").get<std::string>();
    c.as = string_list(rd.at("as"));
    c.ls = string_list(rd.at("ls"));
    const auto& fb = j.at("frame_b");
    c.b_perm = fb.at("b_perm").get<std::string>();
    c.z = fb.at("z").get<std::string>();
    c.mode = fb.at("mode").get<std::string>();
    c.b_order = fb.at("b_order").get<std::string>();
    for (const auto& je : fb.at("entries")) {
      Entry e;
      e.a = je.at("a").get<std::string>();
      e.orbit_count = je.at("orbit_count").get<int>();
      e.centralizer_order = je.at("centralizer_order").get<std::string>();
      e.witness = je.at("witness").get<std::string>();
      e.verdict = je.at("verdict").get<std::string>();
      c.entries.push_back(std::move(e));
    }
    const auto& rs = j.at("result");
    if (rs.at("z").get<std::string>() != c.z)
      fail("ParseError", "certificate result element differs from the frame element");
    c.closure = rs.at("closure").get<std::string>();
    c.codim_bound = rs.at("codim_bound").get<std::string>();
    c.bound_level = rs.at("bound_level").get<int>();
    for (const auto& js : j.at("chain")) {
      ChainStep s;
      s.label = js.at("label").get<std::string>();
      s.kind = js.at("kind").get<std::string>();
      s.source = js.at("source").get<int>();
      for (const auto& jt : js.at("terms")) {
        ChainTerm t;
        t.coeff = jt.at("coeff").get<std::string>();
        t.left = jt.at("left").get<std::string>();
        t.right = jt.at("right").get<std::string>();
        t.source = jt.at("source").get<int>();
        s.terms.push_back(std::move(t));
      }
      s.value = js.at("value").get<std::string>();
      c.chain.push_back(std::move(s));
    }
    const auto& cf = j.at("config");
    c.enum_a_max = cf.at("enum_a_max").get<std::uint64_t>();
    c.enum_b_max = cf.at("enum_b_max").get<std::uint64_t>();
    c.hard_a_cap = cf.at("hard_a_cap").get<std::uint64_t>();
    c.spot_samples = cf.at("spot_samples").get<int>();
  } catch (const Json::exception& e) {
    fail("ParseError", std::string("malformed certificate: ") + e.what());
  }
  return c;
}

WitnessCertificate WitnessCertificate::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace wreathcert::witness
