#pragma once

// nlohmann/json bindings. Integers and rationals travel as decimal strings
// so magnitudes are unbounded.

#include <json.hpp>

#include "thue/abssolver.hpp"
#include "thue/oracle.hpp"
#include "thue/reducer.hpp"
#include "thue/rootbounds.hpp"
#include "thue/theorem.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& z) { j = z.get_str(); }
  static void from_json(const json& j, mpz_class& z) { z = thue::parse_integer(j.get<std::string>()); }
};

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = q.get_str(); }
  static void from_json(const json& j, mpq_class& q) { q = thue::parse_rational(j.get<std::string>()); }
};

}  // namespace nlohmann

namespace thue {

using json = nlohmann::json;

inline void to_json(json& j, const RingElement& z) { j = json::array({z.u1, z.u2}); }
inline void from_json(const json& j, RingElement& z) {
  z.u1 = j.at(0).get<Integer>();
  z.u2 = j.at(1).get<Integer>();
}

inline void to_json(json& j, const IntegerPair& p) { j = json::array({p.a, p.b}); }
inline void from_json(const json& j, IntegerPair& p) {
  p.a = j.at(0).get<Integer>();
  p.b = j.at(1).get<Integer>();
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ValueCheck, pass, value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Implication, applicable, holds)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TheoremReport, ineq_a_real, ineq_a_imag, ineq_aa, x12, I1, I2)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RelativeSolution, x, y, norm_value, report)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ZeroFamily, root, base_x, base_y, step_x, step_y)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RelativeSolutionSet, solutions, search_height, families, notes, integral_fast_path)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AbsSolution, pair, value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AbsSolutionSet, bound, height, solutions, complete_within_height)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleSolution, x, y, norm_value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleResult, height, solutions)

inline json enclosure_json(const Rational& lo, const Rational& hi) {
  return {{"lower", lo}, {"upper", hi}, {"lower_decimal", to_decimal(lo)}, {"upper_decimal", to_decimal(hi)}};
}

inline json upper_json(const Rational& hi) { return {{"upper", hi}, {"upper_decimal", to_decimal(hi)}}; }

inline json constants_json(const CertifiedConstants& cc) {
  json roots = json::array();
  for (const auto& iv : cc.roots.intervals) roots.push_back(enclosure_json(iv.lo, iv.hi));
  return {
      {"bits", cc.roots.bits},
      {"K", cc.constants.K},
      {"epsilon", cc.constants.epsilon},
      {"roots", roots},
      {"A", enclosure_json(cc.roots.A_lower, cc.roots.A_upper)},
      {"B", enclosure_json(cc.roots.B_lower, cc.roots.B_upper)},
      {"C", enclosure_json(cc.constants.C_lower, cc.constants.C_upper)},
      {"G", enclosure_json(cc.constants.G_lower, cc.constants.G_upper)},
      {"T_x12", upper_json(cc.thresholds.x12)},
      {"T_I1", upper_json(cc.thresholds.I1)},
      {"T_I2", upper_json(cc.thresholds.I2)},
  };
}

}  // namespace thue
