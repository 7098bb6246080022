// Built-in catalog of the known data: the classified solutions for
// |G| in {1, 3, 5} (both signs) and the ten q-system j-vector solutions for
// odd 7 <= nu <= 19, together with the expected (H, beta) pair of the
// quadratic-form conjecture for each.
#pragma once

#include "fuscat/hidatum.hpp"

#include <string>
#include <vector>

namespace fuscat {

struct CatalogRecord {
  std::string id;
  std::vector<int> group;     // cyclic factors of G
  int sign = +1;
  std::string source;         // "classified" or "qsystem-j"
  std::vector<Real> j;        // q-system free j-values (empty for classified)
  int index = 0;              // index within solve_small output
  // Expected quadratic-form pair for the double's modular data.
  std::vector<int> H;         // cyclic factors of H, |H| = nu^2 + 4
  std::vector<long> beta;     // diagonal coefficients of beta on H
  std::string beta_label;     // printable form of beta

  HIDatum datum() const {
    if (source == "classified") {
      GroupSpec G(group);
      auto sols = solve_small(G, sign);
      return sols.at(static_cast<size_t>(index));
    }
    QSystemJSpec spec;
    spec.nu = group.at(0);
    spec.j = j;
    spec.id = id;
    return from_qsystem_j(spec);
  }
};

inline std::vector<CatalogRecord> catalog() {
  auto classified = [](const std::string& id, int nu, int sign, int index,
                       long k, int mu) {
    CatalogRecord r;
    r.id = id;
    r.group = {nu};
    r.sign = sign;
    r.source = "classified";
    r.index = index;
    r.H = {mu};
    r.beta = {k};
    r.beta_label = (k == 1 ? "k*l/" : std::to_string(k) + "*k*l/") +
                   std::to_string(mu);
    return r;
  };
  auto qsystem = [](const std::string& id, int nu, std::vector<double> j,
                    std::vector<int> H, std::vector<long> beta,
                    const std::string& beta_label) {
    CatalogRecord r;
    r.id = id;
    r.group = {nu};
    r.sign = +1;
    r.source = "qsystem-j";
    for (double v : j) r.j.push_back(Real(v));
    r.H = std::move(H);
    r.beta = std::move(beta);
    r.beta_label = beta_label;
    return r;
  };

  std::vector<CatalogRecord> out;
  out.push_back(classified("Z1+1", 1, +1, 0, 1, 5));
  out.push_back(classified("Z1-1", 1, -1, 0, 2, 5));
  out.push_back(classified("Z3+1", 3, +1, 0, 1, 13));
  out.push_back(classified("Z3+2", 3, +1, 1, 1, 13));
  out.push_back(classified("Z3-1", 3, -1, 0, 2, 13));
  out.push_back(classified("Z3-2", 3, -1, 1, 2, 13));
  out.push_back(classified("Z5+1", 5, +1, 0, 1, 29));
  out.push_back(classified("Z5+2", 5, +1, 1, 1, 29));
  out.push_back(classified("Z5-1", 5, -1, 0, 2, 29));
  out.push_back(classified("Z5-2", 5, -1, 1, 2, 29));
  out.push_back(qsystem("QS-j7", 7, {2.471228, 0.51685555, 0.2137724},
                        {53}, {1}, "k*l/53"));
  out.push_back(qsystem(
      "QS-j9", 9, {2.396976693, 2.079251103, -0.2079168419, -2.508673987},
      {85}, {1}, "k*l/85"));
  out.push_back(qsystem(
      "QS-j9p", 9, {-2.364737070, 1.031057162, 1.569692175, 0.3383837765},
      {85}, {12}, "12*k*l/85"));
  out.push_back(qsystem(
      "QS-j11", 11,
      {0.9996507, 2.7258434, -0.5714203, -1.7797340, 1.2675985},
      {125}, {1}, "k*l/125"));
  out.push_back(qsystem(
      "QS-j11p", 11,
      {-2.6444397, -1.7629598, -2.6444440, 2.7572657, 0.1128260},
      {25, 5}, {2, 2}, "2*k1*l1/25 + 2*k2*l2/5"));
  out.push_back(qsystem(
      "QS-j13", 13,
      {-3.1050384, 0.5993399, -0.111708, -0.969766, 1.336848, 1.00483129},
      {173}, {1}, "k*l/173"));
  out.push_back(qsystem("QS-j15", 15,
                        {-1.0777623, -0.7748018, -2.171863, -1.6068402,
                         -0.257508, 2.092502, 0.72289565},
                        {229}, {1}, "k*l/229"));
  out.push_back(qsystem("QS-j17", 17,
                        {-1.466074, 0.291489, 3.130735, -2.693185, 1.398153,
                         -0.611938, -1.667078, -1.754821},
                        {293}, {1}, "k*l/293"));
  out.push_back(qsystem("QS-j19", 19,
                        {-2.677465, 1.088972, -0.899442, 0.015448, -1.240928,
                         -0.493394, 1.839879, -1.525884, -2.084374},
                        {365}, {1}, "k*l/365"));
  out.push_back(qsystem("QS-j19p", 19,
                        {0.896858, -0.882585, -2.369855, -1.873294, -1.711620,
                         -0.119360, 2.972018, -2.460652, 0.041334},
                        {365}, {22}, "22*k*l/365"));
  return out;
}

inline CatalogRecord catalog_record(const std::string& id) {
  for (auto& r : catalog()) {
    if (r.id == id) return r;
  }
  throw CatalogMismatch("unknown catalog id: " + id);
}

inline HIDatum catalog_datum(const std::string& id) {
  return catalog_record(id).datum();
}

}  // namespace fuscat
