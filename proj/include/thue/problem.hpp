#pragma once

// Problem files: UTF-8 `key = value` lines, `#` starts a comment.
//
//   coeffs = 0 -4 0 1     # c_0 ... c_n, ascending powers of x
//   m = 3
//   K = 1                 # integer, p/q or finite decimal
//   epsilon = 1/2         # optional
//   ymax = 100            # optional
//   oracle_height = 4     # optional

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thue/forms.hpp"
#include "thue/numeric.hpp"
#include "thue/quadfield.hpp"

namespace thue {

struct ProblemSpec {
  std::vector<Integer> coeffs;
  Integer m;
  Rational K;
  Rational epsilon{1, 2};
  std::int64_t ymax = 100;
  std::int64_t oracle_height = 4;
};

/// A validated problem: the form is admissible and the field well defined.
struct Problem {
  BinaryForm form;
  QuadraticField field;
  Rational K;
  Rational epsilon;
  std::int64_t ymax;
  std::int64_t oracle_height;
};

namespace detail {

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Error field_error(const std::string& key, const std::string& what) {
  return Error("field '" + key + "': " + what);
}

inline std::int64_t parse_height(const std::string& key, const std::string& value) {
  Integer v = parse_integer(value);
  if (v < 0 || !v.fits_slong_p()) throw field_error(key, "must be a nonnegative machine-size integer");
  return v.get_si();
}

inline std::vector<Integer> parse_coeffs(const std::string& value) {
  std::vector<Integer> out;
  std::istringstream in(value);
  std::string tok;
  while (in >> tok) out.push_back(parse_integer(tok));
  return out;
}

}  // namespace detail

inline ProblemSpec parse_problem(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = detail::strip(line.substr(0, eq));
    std::string value = detail::strip(line.substr(eq + 1));
    if (key == "height") key = "oracle_height";
    if (kv.count(key)) throw detail::field_error(key, "given more than once");
    kv[key] = value;
  }

  ProblemSpec spec;
  for (const auto& [key, value] : kv) {
    try {
      if (key == "coeffs")
        spec.coeffs = detail::parse_coeffs(value);
      else if (key == "m")
        spec.m = parse_integer(value);
      else if (key == "K")
        spec.K = parse_rational(value);
      else if (key == "epsilon")
        spec.epsilon = parse_rational(value);
      else if (key == "ymax")
        spec.ymax = detail::parse_height(key, value);
      else if (key == "oracle_height")
        spec.oracle_height = detail::parse_height(key, value);
      else
        throw Error("unknown key");
    } catch (const Error& e) {
      std::string msg = e.what();
      if (msg.rfind("field '", 0) == 0) throw;
      throw detail::field_error(key, msg);
    }
  }
  for (const char* required : {"coeffs", "m", "K"})
    if (!kv.count(required)) throw detail::field_error(required, "missing");
  return spec;
}

inline Problem validate(const ProblemSpec& spec) {
  if (spec.coeffs.size() < 2) throw detail::field_error("coeffs", "need at least two coefficients");
  BinaryForm form(spec.coeffs);
  if (auto adm = check_admissible(form); !adm) throw detail::field_error("coeffs", adm.reason);
  std::optional<QuadraticField> field;
  try {
    field.emplace(spec.m);
  } catch (const Error& e) {
    throw detail::field_error("m", e.what());
  }
  if (spec.K < 1) throw detail::field_error("K", "must be at least 1");
  if (sgn(spec.epsilon) <= 0 || spec.epsilon >= 1) throw detail::field_error("epsilon", "must lie in (0, 1)");
  return {form, *field, spec.K, spec.epsilon, spec.ymax, spec.oracle_height};
}

inline Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return validate(parse_problem(buf.str()));
}

}  // namespace thue
