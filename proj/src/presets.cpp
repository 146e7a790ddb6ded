#include "weilzeta/presets.hpp"

#include <fstream>
#include <memory>

#include "weilzeta/error.hpp"
#include "weilzeta/types.hpp"

namespace weilzeta {

namespace {

std::vector<Rat> rat_row(std::initializer_list<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

FieldSpec gauss_spec() {
  FieldSpec spec;
  spec.name = "gauss";
  spec.g = 1;
  spec.minpoly = {1, 0, 1};  // x^2 + 1
  spec.basis = {rat_row({1, 0}), rat_row({0, 1})};
  spec.conj_theta = rat_row({0, -1});
  spec.field_disc = Int(-4);
  spec.flags.trivial_cw = true;
  spec.flags.expected_rho = 1;
  spec.flags.provenance["trivial_cw"] =
      "class number one; every ideal with rational conjugate norm has a generator of rational norm";
  spec.flags.provenance["expected_rho"] = "imaginary quadratic: one conjugate pair of embeddings";
  return spec;
}

FieldSpec eisenstein_spec() {
  FieldSpec spec;
  spec.name = "eisenstein";
  spec.g = 1;
  spec.minpoly = {1, 1, 1};  // x^2 + x + 1, theta a primitive cube root of unity
  spec.basis = {rat_row({1, 0}), rat_row({0, 1})};
  spec.conj_theta = rat_row({-1, -1});  // conj(theta) = theta^2 = -1 - theta
  spec.field_disc = Int(-3);
  spec.flags.trivial_cw = true;
  spec.flags.expected_rho = 1;
  spec.flags.provenance["trivial_cw"] = "class number one imaginary quadratic field";
  return spec;
}

FieldSpec zeta5_spec() {
  FieldSpec spec;
  spec.name = "zeta5";
  spec.g = 2;
  spec.minpoly = {1, 1, 1, 1, 1};  // x^4 + x^3 + x^2 + x + 1
  // omega = (1, theta + theta^4, theta, theta^2); theta^4 = -1-theta-theta^2-theta^3
  spec.basis = {rat_row({1, 0, 0, 0}), rat_row({-1, 0, -1, -1}), rat_row({0, 1, 0, 0}),
                rat_row({0, 0, 1, 0})};
  spec.conj_theta = rat_row({-1, -1, -1, -1});  // theta^4 = theta^{-1}
  spec.field_disc = Int(125);
  spec.flags.trivial_cw = true;
  spec.flags.expected_rho = 1;
  spec.flags.provenance["trivial_cw"] =
      "class number one; the fundamental totally positive unit (3+sqrt5)/2 equals "
      "(1+theta)(1+theta^4), a relative norm";
  spec.flags.provenance["expected_rho"] = "cyclic quartic: Galois group acts transitively on the CM types";
  G2Data g2;
  g2.galois_case = G2Case::C4;
  g2.reflex = nullptr;  // the field is its own reflex
  g2.quad_disc = Int(5);
  spec.flags.g2 = g2;
  spec.flags.provenance["g2"] = "cyclic shape; reflex field is the field itself; real subfield Q(sqrt5)";
  return spec;
}

FieldSpec zeta8_spec() {
  FieldSpec spec;
  spec.name = "zeta8";
  spec.g = 2;
  spec.minpoly = {1, 0, 0, 0, 1};  // x^4 + 1
  // omega = (1, theta - theta^3, theta, theta^2); theta - theta^3 = sqrt2
  spec.basis = {rat_row({1, 0, 0, 0}), rat_row({0, 1, 0, -1}), rat_row({0, 1, 0, 0}),
                rat_row({0, 0, 1, 0})};
  spec.conj_theta = rat_row({0, 0, 0, -1});  // theta^{-1} = -theta^3
  spec.field_disc = Int(256);
  spec.flags.expected_rho = 2;
  spec.flags.provenance["expected_rho"] = "biquadratic Galois group: two orbits on the CM types";
  G2Data g2;
  g2.galois_case = G2Case::Klein;
  g2.discs = {Int(-4), Int(-8)};
  spec.flags.g2 = g2;
  spec.flags.provenance["g2"] = "imaginary quadratic subfields Q(i) and Q(sqrt-2)";
  return spec;
}

FieldSpec zeta12_spec() {
  FieldSpec spec;
  spec.name = "zeta12";
  spec.g = 2;
  spec.minpoly = {1, 0, -1, 0, 1};  // x^4 - x^2 + 1
  // omega = (1, 2 theta - theta^3, theta, theta^2); 2 theta - theta^3 = sqrt3
  spec.basis = {rat_row({1, 0, 0, 0}), rat_row({0, 2, 0, -1}), rat_row({0, 1, 0, 0}),
                rat_row({0, 0, 1, 0})};
  spec.conj_theta = rat_row({0, 1, 0, -1});  // theta^{-1} = theta - theta^3
  spec.field_disc = Int(144);
  spec.flags.expected_rho = 2;
  spec.flags.provenance["expected_rho"] = "biquadratic Galois group: two orbits on the CM types";
  G2Data g2;
  g2.galois_case = G2Case::Klein;
  g2.discs = {Int(-4), Int(-3)};
  spec.flags.g2 = g2;
  spec.flags.provenance["g2"] = "imaginary quadratic subfields Q(i) and Q(sqrt-3)";
  return spec;
}

FieldSpec d4_spec() {
  FieldSpec spec;
  spec.name = "d4";
  spec.g = 2;
  spec.minpoly = {2, 0, 4, 0, 1};  // x^4 + 4x^2 + 2, Eisenstein at 2
  // omega = (1, theta^2 + 2, theta, theta^3); theta^2 + 2 = sqrt2
  spec.basis = {rat_row({1, 0, 0, 0}), rat_row({2, 0, 1, 0}), rat_row({0, 1, 0, 0}),
                rat_row({0, 0, 0, 1})};
  spec.conj_theta = rat_row({0, -1, 0, 0});  // theta is totally imaginary
  spec.field_disc = Int(2048);
  spec.flags.expected_rho = 1;
  spec.flags.provenance["expected_rho"] = "Galois group acts transitively on the CM types";
  G2Data g2;
  g2.galois_case = G2Case::D4;
  g2.reflex = nullptr;
  g2.quad_disc = Int(8);
  spec.flags.g2 = g2;
  spec.flags.provenance["g2"] =
      "the resolvent q(p^2-4q) = 16 of x^4+px^2+q is square, so the group is cyclic and the "
      "field is its own reflex; quadratic subfield Q(sqrt2), discriminant 8; the identity has "
      "the same reflex-zeta shape either way";
  return spec;
}

}  // namespace

FieldSpec make_quad_spec(std::int64_t d) {
  if (d < 1 || !is_squarefree(Int(static_cast<long>(d))))
    fail(ErrorCode::BadFieldSpec, "quad preset needs squarefree d >= 1");
  FieldSpec spec;
  spec.name = "quad" + std::to_string(d);
  spec.g = 1;
  spec.minpoly = {Int(static_cast<long>(d)), 0, 1};  // x^2 + d
  if (d % 4 == 3) {
    // -d = 1 mod 4: maximal order Z[(1+theta)/2], discriminant -d.
    spec.basis = {rat_row({1, 0}), {Rat(1, 2), Rat(1, 2)}};
    spec.field_disc = Int(static_cast<long>(-d));
  } else {
    spec.basis = {rat_row({1, 0}), rat_row({0, 1})};
    spec.field_disc = Int(static_cast<long>(-4 * d));
  }
  spec.conj_theta = rat_row({0, -1});
  spec.flags.expected_rho = 1;
  static const std::int64_t kClassNumberOne[] = {1, 2, 3, 7, 11, 19, 43, 67, 163};
  for (std::int64_t h1 : kClassNumberOne)
    if (d == h1) {
      spec.flags.trivial_cw = true;
      spec.flags.provenance["trivial_cw"] = "imaginary quadratic field of class number one";
    }
  return spec;
}

std::vector<std::string> preset_names() {
  return {"gauss", "eisenstein", "quad2", "quad7", "zeta5", "zeta8", "zeta12", "d4"};
}

FieldSpec builtin_preset(const std::string& name) {
  if (name == "gauss") return gauss_spec();
  if (name == "eisenstein") return eisenstein_spec();
  if (name == "quad2") return make_quad_spec(2);
  if (name == "quad7") return make_quad_spec(7);
  if (name == "zeta5") return zeta5_spec();
  if (name == "zeta8") return zeta8_spec();
  if (name == "zeta12") return zeta12_spec();
  if (name == "d4") return d4_spec();
  fail(ErrorCode::BadFieldSpec, "unknown preset '" + name + "'");
}

std::vector<std::string> write_presets(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& name : preset_names()) {
    std::string path = dir + "/" + name + ".json";
    std::ofstream out(path);
    if (!out) fail(ErrorCode::BadFieldSpec, "cannot write " + path);
    out << field_spec_to_json(builtin_preset(name));
    files.push_back(path);
  }
  return files;
}

}  // namespace weilzeta
