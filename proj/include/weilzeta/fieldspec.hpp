// Concrete CM field descriptions and their JSON serialization.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weilzeta/types.hpp"

namespace weilzeta {

enum class G2Case { C4, Klein, D4 };

const char* g2_case_name(G2Case c);
G2Case g2_case_from_name(const std::string& name);

struct FieldSpec;

// Reflex data used by the degree-4 L-function identities.  For the C4 and D4
// shapes the right-hand side needs one quartic field (often the field itself)
// plus the discriminant of its quadratic subfield; for the Klein shape it
// needs the discriminants of the two imaginary quadratic subfields.
struct G2Data {
  G2Case galois_case = G2Case::C4;
  std::shared_ptr<FieldSpec> reflex;  // null means "the field itself"
  Int quad_disc = 0;                  // C4 / D4
  std::vector<Int> discs;             // Klein: two imaginary quadratic discriminants
};

struct SpecFlags {
  // Certifies that every ideal class with rational conjugate norm is
  // principal with a norm-rational generator; required by the a = w*b checks.
  bool trivial_cw = false;
  std::optional<int> expected_rho;
  std::optional<G2Data> g2;
  std::map<std::string, std::string> provenance;  // flag name -> justification
};

struct FieldSpec {
  std::string name;
  int g = 0;
  std::vector<Int> minpoly;             // ascending degree, monic, degree 2g
  std::vector<std::vector<Rat>> basis;  // row i: omega_i in the power basis of theta
  std::vector<Rat> conj_theta;          // c(theta) in the power basis, degree < 2g
  std::optional<Int> field_disc;
  SpecFlags flags;
};

FieldSpec field_spec_from_json(const std::string& text);
FieldSpec load_field_spec_file(const std::string& path);
std::string field_spec_to_json(const FieldSpec& spec);

}  // namespace weilzeta
