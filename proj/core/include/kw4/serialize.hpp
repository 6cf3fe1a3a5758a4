#ifndef KW4_SERIALIZE_HPP
#define KW4_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "kw4/realize.hpp"

namespace kw4 {

using nlohmann::json;

// ---- scalars ----------------------------------------------------------------
// Rational: "p/q". GaussianRational: {"re":"p/q","im":"p/q"}.
// double: number. FloatComplex: {"re":f,"im":f}.

inline json scalar_to_json(const Rational& q) { return rational_to_string(q); }
inline json scalar_to_json(const GaussianRational& z) {
  return json{{"re", rational_to_string(z.re)}, {"im", rational_to_string(z.im)}};
}
inline json scalar_to_json(double x) { return x; }
inline json scalar_to_json(const FloatComplex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

template <typename S>
S scalar_from_json(const json& j);

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string \"p/q\"");
}
template <>
inline GaussianRational scalar_from_json<GaussianRational>(const json& j) {
  if (j.is_object())
    return GaussianRational(scalar_from_json<Rational>(j.at("re")),
                            j.contains("im") ? scalar_from_json<Rational>(j.at("im"))
                                             : Rational(0));
  return GaussianRational(scalar_from_json<Rational>(j), Rational(0));
}
template <>
inline double scalar_from_json<double>(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const Rational q = rational_from_string(j.get<std::string>());
    return rational_to_double(q);
  }
  throw std::invalid_argument("expected a number");
}
template <>
inline FloatComplex scalar_from_json<FloatComplex>(const json& j) {
  if (j.is_object())
    return FloatComplex(scalar_from_json<double>(j.at("re")),
                        j.contains("im") ? scalar_from_json<double>(j.at("im")) : 0.0);
  return FloatComplex(scalar_from_json<double>(j), 0.0);
}

// ---- k-forms ---------------------------------------------------------------
// {"degree":k,"coeffs":{"13":scalar,...}}, keys are concatenated ascending
// 1-based indices; zero coefficients omitted.

inline std::string monomial_key(const std::vector<int>& idx) {
  std::string key;
  for (int i : idx) key += static_cast<char>('1' + i);
  return key;
}

inline std::vector<int> monomial_from_key(const std::string& key) {
  std::vector<int> idx;
  for (char c : key) {
    if (c < '1' || c > '4') throw std::invalid_argument("bad index key: " + key);
    idx.push_back(c - '1');
  }
  return idx;
}

template <typename S>
json kform_to_json(const KForm<S>& f) {
  json coeffs = json::object();
  const auto& mons = basis4::monomials(f.degree());
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!is_zero(f[static_cast<int>(i)]))
      coeffs[monomial_key(mons[i])] = scalar_to_json(f[static_cast<int>(i)]);
  return json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

template <typename S>
KForm<S> kform_from_json(const json& j, int expected_degree = -1) {
  int degree = expected_degree;
  if (j.contains("degree")) degree = j.at("degree").get<int>();
  if (degree < 0) throw std::invalid_argument("missing degree");
  KForm<S> out(degree);
  if (!j.contains("coeffs")) return out;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    const auto idx = monomial_from_key(key);
    if (static_cast<int>(idx.size()) != degree)
      throw std::invalid_argument("index key degree mismatch: " + key);
    out.set(idx, scalar_from_json<S>(val));
  }
  return out;
}

// ---- 2-form targets --------------------------------------------------------
// Either raw coefficients {"coeffs":{...}} or theta coordinates
// {"theta":[c1..c5]} over the given model's theta basis.

template <typename S>
KForm<S> target_from_json(const json& j, const ModelSpace<S>& m) {
  if (j.contains("theta")) {
    const auto& arr = j.at("theta");
    if (!arr.is_array() || arr.size() != 5)
      throw std::invalid_argument("theta coordinates must be an array of 5 scalars");
    KForm<S> out(2);
    for (int k = 0; k < 5; ++k) out += scalar_from_json<S>(arr[k]) * m.theta(k + 1);
    return out;
  }
  return kform_from_json<S>(j, 2);
}

// ---- Lie algebras ----------------------------------------------------------
// {"basis":"para"|"hermitian-Z","c":{"12":{"1":scalar,...},...},"label":...}

inline std::string basis_name(ModelKind kind) {
  return kind == ModelKind::Para ? "para" : "hermitian-Z";
}

template <typename S>
json lie_to_json(const LieAlgebra4<S>& L, ModelKind kind) {
  json c = json::object();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      json entry = json::object();
      for (int k = 0; k < 4; ++k)
        if (!is_zero(L.bracket_basis(i, j)[k]))
          entry[std::string(1, static_cast<char>('1' + k))] =
              scalar_to_json(L.bracket_basis(i, j)[k]);
      if (!entry.empty()) c[monomial_key({i, j})] = entry;
    }
  json out{{"basis", basis_name(kind)}, {"c", c}};
  if (!L.label().empty()) out["label"] = L.label();
  return out;
}

template <typename S>
LieAlgebra4<S> lie_from_json(const json& j) {
  LieAlgebra4<S> out;
  if (j.contains("c"))
    for (const auto& [pair_key, entry] : j.at("c").items()) {
      const auto ij = monomial_from_key(pair_key);
      if (ij.size() != 2 || ij[0] >= ij[1])
        throw std::invalid_argument("bracket key must be ascending pair: " + pair_key);
      for (const auto& [k_key, val] : entry.items()) {
        const auto kk = monomial_from_key(k_key);
        if (kk.size() != 1) throw std::invalid_argument("bad component key: " + k_key);
        out.set(ij[0], ij[1], kk[0], scalar_from_json<S>(val));
      }
    }
  if (j.contains("label")) out.set_label(j.at("label").get<std::string>());
  return out;
}

// ---- matrices --------------------------------------------------------------

template <typename S>
json mat_to_json(const Mat4<S>& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(scalar_to_json(m[i][j]));
    rows.push_back(row);
  }
  return rows;
}

template <typename S>
Mat4<S> mat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected 4 rows");
  Mat4<S> out = mat_zero<S>();
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4)
      throw std::invalid_argument("expected 4 columns");
    for (int k = 0; k < 4; ++k) out[i][k] = scalar_from_json<S>(j[i][k]);
  }
  return out;
}

// ---- reports ---------------------------------------------------------------

inline json report_to_json(const VerificationReport& r, double tol) {
  json residuals = json::object();
  for (const auto& e : r.residuals) {
    json entry{{"max_abs", e.max_abs},
               {"exact", e.exact_mode},
               {"ok", e.ok(tol)}};
    if (e.exact_mode) entry["exactly_zero"] = e.exactly_zero;
    if (!e.detail.empty()) entry["detail"] = e.detail;
    residuals[e.name] = entry;
  }
  return json{{"residuals", residuals},
              {"trivial_weyl", r.trivial_weyl},
              {"pass", r.pass(tol)}};
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport out;
  out.trivial_weyl = j.value("trivial_weyl", false);
  if (j.contains("residuals"))
    for (const auto& [name, entry] : j.at("residuals").items()) {
      ResidualEntry e;
      e.name = name;
      e.max_abs = entry.value("max_abs", 0.0);
      e.exact_mode = entry.value("exact", false);
      e.exactly_zero = entry.value("exactly_zero", false);
      e.detail = entry.value("detail", std::string());
      out.residuals.push_back(e);
    }
  return out;
}

template <typename S>
json realization_to_json(const RealizationResult<S>& r, ModelKind kind, double tol) {
  return json{{"algebra", lie_to_json(r.algebra, kind)},
              {"conjugation", mat_to_json(r.conjugation.T)},
              {"predicted_rho_a", kform_to_json(r.predicted_rho_a)},
              {"target", kform_to_json(r.target)},
              {"report", report_to_json(r.report, tol)},
              {"orbit_note", r.orbit_note},
              {"residual", r.residual}};
}

template <typename S>
RealizationResult<S> realization_from_json(const json& j) {
  RealizationResult<S> out;
  out.algebra = lie_from_json<S>(j.at("algebra"));
  out.conjugation = UnitaryElement<S>{mat_from_json<S>(j.at("conjugation"))};
  out.predicted_rho_a = kform_from_json<S>(j.at("predicted_rho_a"), 2);
  out.target = kform_from_json<S>(j.at("target"), 2);
  out.report = report_from_json(j.at("report"));
  out.orbit_note = j.value("orbit_note", std::string());
  out.residual = j.value("residual", 0.0);
  return out;
}

}  // namespace kw4

#endif
