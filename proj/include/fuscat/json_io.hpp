// JSON serialisation for datums, reports, and modular data.
//
// Scalar values are written as decimal strings (45 significant digits) so a
// round trip preserves far more precision than IEEE doubles; the reader
// accepts plain JSON numbers as well.
#pragma once

#include "fuscat/catalog.hpp"
#include "fuscat/hidatum.hpp"
#include "fuscat/modular.hpp"
#include "fuscat/report.hpp"

#include <json.hpp>

#include <string>

namespace fuscat {

using json = nlohmann::json;

namespace detail {

constexpr unsigned kJsonDigits = 45;

inline json complex_to_json(const Complex& z) {
  return json::array({z.re.str(kJsonDigits), z.im.str(kJsonDigits)});
}

inline Real real_from_json(const json& v) {
  if (v.is_string()) return Real(v.get<std::string>());
  return Real(v.dump());
}

inline Complex complex_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2) {
    throw std::invalid_argument("expected [re, im] pair");
  }
  return Complex{real_from_json(v[0]), real_from_json(v[1])};
}

}  // namespace detail

inline json datum_to_json(const HIDatum& d) {
  json out;
  out["group"] = d.group.cyclic_factors;
  out["sign"] = d.sign > 0 ? "+" : "-";
  out["omega"] = d.omega == Omega::One ? "1" : (d.omega == Omega::W ? "w" : "wbar");
  out["b"] = detail::complex_to_json(d.b);
  json rows = json::array();
  for (int g = 0; g < d.nu(); ++g) {
    json row = json::array();
    for (int h = 0; h < d.nu(); ++h) row.push_back(detail::complex_to_json(d.a(g, h)));
    rows.push_back(std::move(row));
  }
  out["A"] = std::move(rows);
  json meta;
  meta["source"] = d.id.empty() ? "unlabelled" : d.id;
  meta["classification"] = classify(d);
  out["meta"] = std::move(meta);
  return out;
}

inline HIDatum datum_from_json(const json& v) {
  HIDatum d;
  d.group = GroupSpec(v.at("group").get<std::vector<int>>());
  std::string sign = v.at("sign").get<std::string>();
  if (sign != "+" && sign != "-") {
    throw std::invalid_argument("sign must be '+' or '-'");
  }
  d.sign = sign == "+" ? +1 : -1;
  std::string om = v.value("omega", "1");
  d.omega = om == "1" ? Omega::One : (om == "w" ? Omega::W : Omega::Wbar);
  if (v.contains("b")) {
    d.b = detail::complex_from_json(v.at("b"));
  } else {
    d.b = branch_b(d.nu(), d.sign, d.omega);
  }
  const auto& rows = v.at("A");
  const int nu = d.nu();
  if (static_cast<int>(rows.size()) != nu) {
    throw std::invalid_argument("A has wrong row count");
  }
  d.A = CMatrix(nu, nu);
  for (int g = 0; g < nu; ++g) {
    if (static_cast<int>(rows[g].size()) != nu) {
      throw std::invalid_argument("A has wrong column count");
    }
    for (int h = 0; h < nu; ++h) d.A(g, h) = detail::complex_from_json(rows[g][h]);
  }
  if (v.contains("meta") && v["meta"].contains("source")) {
    d.id = v["meta"]["source"].get<std::string>();
  }
  return d;
}

inline json report_to_json(const Report& rep) {
  json out;
  out["name"] = rep.name;
  out["pass"] = rep.pass();
  out["worst_residual"] = to_double(rep.worst());
  json items = json::array();
  for (const auto& it : rep.items) {
    json e;
    e["check"] = it.check;
    if (!it.indices.empty()) e["indices"] = it.indices;
    e["residual"] = to_double(it.residual);
    e["pass"] = it.pass;
    items.push_back(std::move(e));
  }
  out["items"] = std::move(items);
  return out;
}

inline json modular_to_json(const ModularData& md, bool include_matrices = true) {
  json out;
  json labels = json::array();
  for (const auto& L : md.labels) labels.push_back(L.name());
  out["labels"] = std::move(labels);
  json tw = json::array();
  for (const auto& t : md.T) tw.push_back(detail::complex_to_json(t));
  out["T"] = std::move(tw);
  if (include_matrices) {
    json S = json::array();
    for (int i = 0; i < md.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < md.size(); ++j) {
        row.push_back(detail::complex_to_json(md.S(i, j)));
      }
      S.push_back(std::move(row));
    }
    out["S"] = std::move(S);
  }
  return out;
}

inline json fit_to_json(const std::vector<Conjecture1Fit>& fits) {
  json out = json::array();
  for (const auto& f : fits) {
    json e;
    e["H"] = f.form.factors;
    e["beta"] = f.form.beta_string();
    e["coeff"] = f.form.coeff;
    e["pairing"] = f.pairing;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace fuscat
