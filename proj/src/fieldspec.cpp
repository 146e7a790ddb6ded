#include "weilzeta/fieldspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weilzeta/error.hpp"

namespace weilzeta {

using nlohmann::json;

const char* g2_case_name(G2Case c) {
  switch (c) {
    case G2Case::C4: return "C4";
    case G2Case::Klein: return "Klein";
    case G2Case::D4: return "D4";
  }
  return "?";
}

G2Case g2_case_from_name(const std::string& name) {
  if (name == "C4") return G2Case::C4;
  if (name == "Klein") return G2Case::Klein;
  if (name == "D4") return G2Case::D4;
  fail(ErrorCode::BadFieldSpec, "unknown g2 case '" + name + "'");
}

namespace {

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  fail(ErrorCode::BadFieldSpec, "expected integer");
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Rat rat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    fail(ErrorCode::BadFieldSpec, "rationals are [\"num\",\"den\"] string pairs");
  return rat_from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

json rat_to_json(const Rat& q) {
  return json::array({q.get_num().get_str(), q.get_den().get_str()});
}

FieldSpec spec_from_json_value(const json& j);

json spec_to_json_value(const FieldSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["g"] = spec.g;
  j["minpoly"] = json::array();
  for (const auto& c : spec.minpoly) j["minpoly"].push_back(int_to_json(c));
  j["basis"] = json::array();
  for (const auto& row : spec.basis) {
    json r = json::array();
    for (const auto& q : row) r.push_back(rat_to_json(q));
    j["basis"].push_back(r);
  }
  j["conj_theta"] = json::array();
  for (const auto& q : spec.conj_theta) j["conj_theta"].push_back(rat_to_json(q));
  if (spec.field_disc) j["field_disc"] = int_to_json(*spec.field_disc);

  const SpecFlags& f = spec.flags;
  if (f.trivial_cw || f.expected_rho || f.g2 || !f.provenance.empty()) {
    json flags;
    if (f.trivial_cw) flags["trivial_cw"] = true;
    if (f.expected_rho) flags["expected_rho"] = *f.expected_rho;
    if (f.g2) {
      json g2;
      g2["case"] = g2_case_name(f.g2->galois_case);
      if (f.g2->galois_case == G2Case::Klein) {
        g2["discs"] = json::array();
        for (const auto& d : f.g2->discs) g2["discs"].push_back(int_to_json(d));
      } else {
        g2["reflex"] = f.g2->reflex ? spec_to_json_value(*f.g2->reflex) : json("self");
        g2["quad_disc"] = int_to_json(f.g2->quad_disc);
      }
      flags["g2"] = g2;
    }
    if (!f.provenance.empty()) flags["provenance"] = f.provenance;
    j["flags"] = flags;
  }
  return j;
}

FieldSpec spec_from_json_value(const json& j) {
  FieldSpec spec;
  try {
    spec.name = j.at("name").get<std::string>();
    spec.g = j.at("g").get<int>();
    for (const auto& c : j.at("minpoly")) spec.minpoly.push_back(int_from_json(c));
    for (const auto& row : j.at("basis")) {
      std::vector<Rat> r;
      for (const auto& q : row) r.push_back(rat_from_json(q));
      spec.basis.push_back(std::move(r));
    }
    for (const auto& q : j.at("conj_theta")) spec.conj_theta.push_back(rat_from_json(q));
    if (j.contains("field_disc")) spec.field_disc = int_from_json(j.at("field_disc"));
    if (j.contains("flags")) {
      const json& flags = j.at("flags");
      spec.flags.trivial_cw = flags.value("trivial_cw", false);
      if (flags.contains("expected_rho")) spec.flags.expected_rho = flags.at("expected_rho").get<int>();
      if (flags.contains("g2")) {
        const json& g2 = flags.at("g2");
        G2Data data;
        data.galois_case = g2_case_from_name(g2.at("case").get<std::string>());
        if (data.galois_case == G2Case::Klein) {
          for (const auto& d : g2.at("discs")) data.discs.push_back(int_from_json(d));
        } else {
          data.quad_disc = int_from_json(g2.at("quad_disc"));
          const json& reflex = g2.at("reflex");
          if (!(reflex.is_string() && reflex.get<std::string>() == "self"))
            data.reflex = std::make_shared<FieldSpec>(spec_from_json_value(reflex));
        }
        spec.flags.g2 = std::move(data);
      }
      if (flags.contains("provenance"))
        spec.flags.provenance = flags.at("provenance").get<std::map<std::string, std::string>>();
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::BadFieldSpec, e.what());
  }
  return spec;
}

}  // namespace

FieldSpec field_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::BadFieldSpec, std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json_value(j);
}

FieldSpec load_field_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadFieldSpec, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return field_spec_from_json(buffer.str());
}

std::string field_spec_to_json(const FieldSpec& spec) {
  return spec_to_json_value(spec).dump(2) + "\n";
}

}  // namespace weilzeta
