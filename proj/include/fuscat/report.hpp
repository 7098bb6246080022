// Residual reports shared by all check operations.
#pragma once

#include "fuscat/scalar.hpp"

#include <string>
#include <vector>

namespace fuscat {

struct ReportItem {
  std::string check;
  std::string indices;
  Real residual{0};
  bool pass = true;
};

struct Report {
  std::string name;
  std::vector<ReportItem> items;

  void add(const std::string& check, const Real& residual,
           double tol, const std::string& indices = "") {
    items.push_back({check, indices, residual, residual < Real(tol)});
  }
  void add_flag(const std::string& check, bool ok,
                const std::string& indices = "") {
    items.push_back({check, indices, ok ? Real(0) : Real(1), ok});
  }

  bool pass() const {
    for (const auto& it : items) {
      if (!it.pass) return false;
    }
    return true;
  }
  Real worst() const {
    Real w = 0;
    for (const auto& it : items) {
      if (it.residual > w) w = it.residual;
    }
    return w;
  }
  std::string summary() const {
    std::string out = name + ": " + (pass() ? "pass" : "FAIL");
    out += " (worst residual " + to_string(worst(), 6) + ")";
    for (const auto& it : items) {
      if (!it.pass) {
        out += "\n  FAIL " + it.check +
               (it.indices.empty() ? "" : " [" + it.indices + "]") +
               " residual " + to_string(it.residual, 6);
      }
    }
    return out;
  }
};

}  // namespace fuscat
