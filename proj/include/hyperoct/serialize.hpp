#pragma once

// JSON forms of compositions, scalars, group algebra elements and class
// functions (nlohmann::ordered_json, so key order is stable).

#include <hyperoct/algebra_element.hpp>
#include <hyperoct/class_function.hpp>
#include <hyperoct/combinatorics.hpp>
#include <hyperoct/cyclotomic.hpp>
#include <hyperoct/rational.hpp>
#include <hyperoct/signed_permutation.hpp>
#include <hyperoct/verify.hpp>

#include <json.hpp>

#include <string>

namespace hyperoct {

using Json = nlohmann::ordered_json;

inline Json integer_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

/// [num, den]
inline Json to_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

/// {"conductor": N, "coeffs": [[num, den], ...]}
inline Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coefficients()) coeffs.push_back(to_json(q));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Json to_json(const SignedComposition& p) { return Json(p.parts()); }
inline Json to_json(const SignedPermutation& w) { return Json(w.image()); }

/// {"n": n, "terms": [{"perm": [...], "coeff": ...}, ...]}
template <class Coeff>
Json to_json(const AlgebraElement<Coeff>& u) {
  Json terms = Json::array();
  for (const auto& [idx, c] : u.terms()) {
    terms.push_back(Json{{"perm", to_json(u.group().element(idx))}, {"coeff", to_json(c)}});
  }
  return Json{{"n", u.n()}, {"terms", terms}};
}

/// {"n": n, "values": {"<label>": ...}}
inline Json to_json(const ClassFunction& f) {
  Json values = Json::object();
  for (std::size_t c = 0; c < f.values().size(); ++c) values[f.labels()[c].label()] = to_json(f[c]);
  return Json{{"n", f.n()}, {"values", values}};
}

inline Json to_json(const KeyValues& kv) {
  Json out = Json::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

/// {"n", "passed", "tasks", "failures", "results": [{"check", "parameters", "passed", "witness"?}]}
inline Json to_json(const VerifyReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json entry{{"check", r.check}, {"parameters", to_json(r.parameters)}, {"passed", r.passed}};
    if (!r.passed) entry["witness"] = to_json(r.witness);
    results.push_back(entry);
  }
  return Json{{"n", report.n},
              {"passed", report.all_passed()},
              {"tasks", report.results.size()},
              {"failures", report.failures()},
              {"results", results}};
}

}  // namespace hyperoct
