// Character-vector admissibility analysis for the nu = 3 doubles at
// effective central charge 8.  The leading-exponent matrix Lambda, the
// first coefficient matrix Xi_1, and the truncated q-expansions (linear
// forms in the free parameters) are ingested from bundled JSON data and
// checked against integrality/nonnegativity requirements.
#pragma once

#include "fuscat/modular.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

// Default location of the bundled datasets; the build points this at the
// source tree so binaries work from any directory.
#ifndef FUSCAT_DATA_DIR
#define FUSCAT_DATA_DIR "data"
#endif

namespace fuscat {

struct ChecksumMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational arithmetic for the transcribed tables.
struct Rat {
  long long n = 0;
  long long d = 1;

  Rat() = default;
  Rat(long long num, long long den = 1) : n(num), d(den) { normalise(); }

  void normalise() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

  std::string str() const {
    return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
  }

  bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
  Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
  Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
  Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
  Rat operator/(const Rat& o) const { return Rat(n * o.d, d * o.n); }
  Rat operator-() const { return Rat(-n, d); }
  bool is_zero() const { return n == 0; }
  bool is_integer() const { return d == 1; }
  bool is_nonneg() const { return n >= 0; }
};

// A linear form c0 + sum_i c_i * param_i with rational coefficients.
struct LinForm {
  Rat c0;
  std::map<std::string, Rat> coeff;

  Rat eval(const std::map<std::string, long>& v) const {
    Rat out = c0;
    for (const auto& [p, c] : coeff) {
      auto it = v.find(p);
      long x = (it == v.end()) ? 0 : it->second;
      out = out + c * Rat(x);
    }
    return out;
  }

  std::string str() const {
    std::string s;
    auto term = [&](const Rat& c, const std::string& name) {
      if (c.is_zero()) return;
      std::string mag = (c.n < 0 ? (-c).str() : c.str());
      if (s.empty()) {
        s += (c.n < 0 ? "-" : "");
      } else {
        s += (c.n < 0 ? " - " : " + ");
      }
      if (name.empty()) {
        s += mag;
      } else {
        s += (mag == "1" ? "" : mag + "*") + name;
      }
    };
    term(c0, "");
    for (const auto& [p, c] : coeff) term(c, p);
    return s.empty() ? "0" : s;
  }
};

struct SeriesComponent {
  int component = 0;
  Rat q_power;
  std::vector<LinForm> coeffs;  // coefficient of q^n, n = 0, 1, ...
};

struct CharSeriesData {
  std::string id;
  std::vector<std::string> params;
  std::vector<std::string> components;  // display labels, size 12
  int positive_row = 0;
  std::vector<Rat> lambda;
  std::vector<std::vector<Rat>> xi1;
  std::vector<SeriesComponent> series;
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string charvec_canonical(nlohmann::json j) {
  j.erase("checksum");
  return j.dump();
}

}  // namespace detail

inline CharSeriesData load_series(const std::string& id,
                                  const std::string& data_dir = FUSCAT_DATA_DIR) {
  if (id != "haagerup-c8" && id != "nonunitary-c8") {
    throw std::invalid_argument("unknown dataset id: " + id);
  }
  std::ifstream in(data_dir + "/" + id + ".json");
  if (!in) {
    throw std::runtime_error("cannot open dataset file for " + id + " under " +
                             data_dir);
  }
  nlohmann::json j;
  in >> j;
  const std::string expect = j.value("checksum", "");
  std::ostringstream got;
  got << "fnv1a64:" << std::hex << detail::fnv1a64(detail::charvec_canonical(j));
  if (expect != got.str()) {
    throw ChecksumMismatch("dataset " + id + ": checksum " + got.str() +
                           " != recorded " + expect);
  }

  CharSeriesData out;
  out.id = id;
  out.params = j.at("params").get<std::vector<std::string>>();
  out.components = j.at("components").get<std::vector<std::string>>();
  out.positive_row = j.at("positive_row").get<int>();
  for (const auto& s : j.at("lambda")) out.lambda.push_back(Rat::parse(s));
  for (const auto& row : j.at("xi1")) {
    std::vector<Rat> r;
    for (const auto& s : row) r.push_back(Rat::parse(s));
    out.xi1.push_back(std::move(r));
  }
  for (const auto& sc : j.at("series")) {
    SeriesComponent c;
    c.component = sc.at("component").get<int>();
    c.q_power = Rat::parse(sc.at("q_power"));
    for (const auto& co : sc.at("coeffs")) {
      LinForm f;
      for (auto it = co.begin(); it != co.end(); ++it) {
        if (it.key() == "const") {
          f.c0 = Rat::parse(it.value());
        } else {
          f.coeff[it.key()] = Rat::parse(it.value());
        }
      }
      c.coeffs.push_back(std::move(f));
    }
    out.series.push_back(std::move(c));
  }
  if (out.lambda.size() != out.components.size() ||
      out.xi1.size() != out.components.size()) {
    throw std::runtime_error("dataset " + id + ": inconsistent table sizes");
  }
  return out;
}

struct AdmissibilityConstraint {
  std::string kind;  // nonneg-integer | normalisation | parity | linear-relation
  std::string text;
  std::string citation;          // the coefficient(s) generating it
  std::vector<std::string> parity_params;  // for parity constraints
  Rat parity_const;
  LinForm relation;              // for linear relations (== 0)
  int component = -1, power = -1;  // for nonneg-integer
};

namespace detail {

// GF(2) span of parameter-index vectors, used for parity reasoning.
class ParitySpan {
 public:
  explicit ParitySpan(int nparams) : nparams_(nparams) {}

  void add(std::uint32_t v) {
    v = reduce(v);
    if (v) basis_.push_back(v);
  }
  bool contains(std::uint32_t v) const { return reduce(v) == 0; }

 private:
  std::uint32_t reduce(std::uint32_t v) const {
    for (auto b : basis_) {
      std::uint32_t top = 1u << (31 - __builtin_clz(b));
      if (v & top) v ^= b;
    }
    return v;
  }
  int nparams_;
  std::vector<std::uint32_t> basis_;
};

inline std::uint32_t parity_vector(const CharSeriesData& data, const LinForm& f,
                                   bool* well_defined = nullptr) {
  // Parity of f over integer assignments: meaningful when every coefficient
  // has denominator 1.  (Half-integer forms generate parity constraints
  // instead.)
  std::uint32_t v = 0;
  bool ok = true;
  for (size_t i = 0; i < data.params.size(); ++i) {
    auto it = f.coeff.find(data.params[i]);
    if (it == f.coeff.end()) continue;
    if (!it->second.is_integer()) ok = false;
    if (it->second.n % 2 != 0) v |= 1u << i;
  }
  if (well_defined) *well_defined = ok && f.c0.is_integer();
  return v;
}

}  // namespace detail

inline std::vector<AdmissibilityConstraint> derive_constraints(
    const CharSeriesData& data) {
  std::vector<AdmissibilityConstraint> out;

  // Normalisation: the vacuum component's leading coefficient must be 1.
  {
    AdmissibilityConstraint c;
    c.kind = "normalisation";
    const auto& f = data.series.at(0).coeffs.at(0);
    c.text = "chi_{1;0} = " + f.str() + " = 1";
    c.citation = "component 0, q^0 coefficient";
    out.push_back(std::move(c));
  }

  // Every printed coefficient must be a nonnegative integer.
  for (const auto& sc : data.series) {
    for (size_t n = 0; n < sc.coeffs.size(); ++n) {
      AdmissibilityConstraint c;
      c.kind = "nonneg-integer";
      c.component = sc.component;
      c.power = static_cast<int>(n);
      c.text = sc.coeffs[n].str() + " in Z_{>=0}";
      c.citation = "component " + std::to_string(sc.component) + ", q^" +
                   std::to_string(n) + " coefficient";
      c.relation = sc.coeffs[n];
      out.push_back(std::move(c));
    }
  }

  // Parity constraints from half-integer coefficients: 2f is an integer
  // form, and integrality of f forces the odd part of 2f to vanish mod 2.
  std::set<std::pair<std::uint32_t, long long>> parity_seen;
  for (const auto& sc : data.series) {
    for (size_t n = 0; n < sc.coeffs.size(); ++n) {
      const LinForm& f = sc.coeffs[n];
      bool halves = false;
      for (const auto& [p, c] : f.coeff) {
        if (c.d == 2) halves = true;
        if (c.d > 2) throw std::runtime_error("unexpected denominator in data");
      }
      if (f.c0.d > 2) throw std::runtime_error("unexpected denominator in data");
      if (!halves && f.c0.d != 2) continue;
      std::uint32_t v = 0;
      std::vector<std::string> odd;
      for (size_t i = 0; i < data.params.size(); ++i) {
        auto it = f.coeff.find(data.params[i]);
        if (it == f.coeff.end()) continue;
        Rat two = it->second * Rat(2);
        if (two.n % 2 != 0) {
          v |= 1u << i;
          odd.push_back(data.params[i]);
        }
      }
      long long codd = (f.c0 * Rat(2)).n % 2;
      if (odd.empty() && codd == 0) continue;
      if (!parity_seen.insert({v, codd}).second) continue;
      AdmissibilityConstraint c;
      c.kind = "parity";
      c.parity_params = odd;
      c.parity_const = Rat(codd);
      if (odd.size() == 2 && codd == 0) {
        c.text = odd[0] + " = " + odd[1] + " (mod 2)";
      } else {
        std::string s;
        for (const auto& p : odd) s += (s.empty() ? "" : " + ") + p;
        c.text = s + (codd ? " = 1" : " = 0") + " (mod 2)";
      }
      c.citation = "component " + std::to_string(sc.component) + ", q^" +
                   std::to_string(n) + " coefficient " + f.str();
      out.push_back(std::move(c));
    }
  }

  // Linear relations: two coefficients proportional with a negative ratio
  // are each nonnegative, hence both vanish.
  auto normalised_vec = [&](const LinForm& f) {
    std::vector<Rat> v{f.c0};
    for (const auto& p : data.params) {
      auto it = f.coeff.find(p);
      v.push_back(it == f.coeff.end() ? Rat() : it->second);
    }
    return v;
  };
  auto ratio = [](const std::vector<Rat>& a,
                  const std::vector<Rat>& b) -> std::optional<Rat> {
    // Returns r with a = r * b, if it exists and b != 0.
    std::optional<Rat> r;
    for (size_t i = 0; i < a.size(); ++i) {
      if (b[i].is_zero()) {
        if (!a[i].is_zero()) return std::nullopt;
        continue;
      }
      Rat q = a[i] / b[i];
      if (!r) {
        r = q;
      } else if (!(q == *r)) {
        return std::nullopt;
      }
    }
    return r;
  };
  std::vector<std::vector<Rat>> relation_vecs;
  std::set<std::string> relation_seen;
  {
    struct Entry {
      std::vector<Rat> vec;
      LinForm form;
      std::string cite;
    };
    std::vector<Entry> entries;
    for (const auto& sc : data.series) {
      for (size_t n = 0; n < sc.coeffs.size(); ++n) {
        bool zero = true;
        LinForm f = sc.coeffs[n];
        if (f.c0.is_zero()) {
          zero = std::all_of(f.coeff.begin(), f.coeff.end(),
                             [](const auto& kv) { return kv.second.is_zero(); });
        } else {
          zero = false;
        }
        if (zero) continue;
        entries.push_back({normalised_vec(f), f,
                           "component " + std::to_string(sc.component) +
                               ", q^" + std::to_string(n)});
      }
    }
    for (size_t i = 0; i < entries.size(); ++i) {
      for (size_t k = i + 1; k < entries.size(); ++k) {
        auto r = ratio(entries[i].vec, entries[k].vec);
        if (!r || r->is_nonneg()) continue;
        // Canonical text: positive terms of the normalised form on the left.
        LinForm f = entries[k].form;
        // Scale so the first nonzero coefficient is +1.
        Rat lead;
        for (const auto& p : data.params) {
          auto it = f.coeff.find(p);
          if (it != f.coeff.end() && !it->second.is_zero()) {
            lead = it->second;
            break;
          }
        }
        if (lead.is_zero()) continue;
        LinForm g;
        g.c0 = f.c0 / lead;
        for (auto& [p, c] : f.coeff) g.coeff[p] = c / lead;
        std::string lhs, rhs;
        for (const auto& p : data.params) {
          auto cit = g.coeff.find(p);
          if (cit == g.coeff.end()) continue;
          const Rat& c = cit->second;
          if (c.is_zero()) continue;
          std::string term = (c.n == 1 && c.d == 1) || (c.n == -1 && c.d == 1)
                                 ? p
                                 : (c.n < 0 ? (-c).str() : c.str()) + "*" + p;
          if (c.is_nonneg()) {
            lhs += (lhs.empty() ? "" : " + ") + term;
          } else {
            rhs += (rhs.empty() ? "" : " + ") + term;
          }
        }
        if (!g.c0.is_zero()) {
          if (g.c0.is_nonneg()) {
            lhs += " + " + g.c0.str();
          } else {
            rhs += (rhs.empty() ? "" : " + ") + (-g.c0).str();
          }
        }
        std::string text = lhs + " = " + (rhs.empty() ? "0" : rhs);
        if (!relation_seen.insert(text).second) continue;
        AdmissibilityConstraint c;
        c.kind = "linear-relation";
        c.text = text;
        c.citation = entries[i].cite + " vs " + entries[k].cite;
        c.relation = g;
        out.push_back(std::move(c));
        relation_vecs.push_back(normalised_vec(g));
      }
    }
  }

  // Parity consequences: combine explicit parities with the mod-2 images of
  // the linear relations and report any induced two-parameter parity.
  {
    detail::ParitySpan span(static_cast<int>(data.params.size()));
    std::set<std::uint32_t> have;
    for (const auto& c : out) {
      if (c.kind != "parity" || !c.parity_const.is_zero()) continue;
      std::uint32_t v = 0;
      for (size_t i = 0; i < data.params.size(); ++i) {
        if (std::find(c.parity_params.begin(), c.parity_params.end(),
                      data.params[i]) != c.parity_params.end()) {
          v |= 1u << i;
        }
      }
      span.add(v);
      have.insert(v);
    }
    for (const auto& vec : relation_vecs) {
      // vec = (c0, coeffs...); relations here have integer mod-2 content
      // after scaling, skip otherwise.
      std::uint32_t v = 0;
      bool ok = vec[0].is_integer() && vec[0].n % 2 == 0;
      for (size_t i = 0; i < data.params.size(); ++i) {
        const Rat& c = vec[i + 1];
        if (!c.is_integer()) ok = false;
        if (ok && c.n % 2 != 0) v |= 1u << i;
      }
      if (ok) span.add(v);
    }
    for (size_t i = 0; i < data.params.size(); ++i) {
      for (size_t k = i + 1; k < data.params.size(); ++k) {
        std::uint32_t v = (1u << i) | (1u << k);
        if (have.count(v) || !span.contains(v)) continue;
        AdmissibilityConstraint c;
        c.kind = "parity";
        c.parity_params = {data.params[i], data.params[k]};
        c.parity_const = Rat(0);
        c.text = data.params[i] + " = " + data.params[k] + " (mod 2)";
        c.citation = "induced by the explicit parities and linear relations";
        out.push_back(std::move(c));
      }
    }
  }

  return out;
}

struct CharEnumeration {
  std::vector<std::map<std::string, long>> admissible;
  std::vector<std::string> log;
};

inline CharEnumeration enumerate_admissible(const CharSeriesData& data,
                                            int depth = 3, long cap = 6) {
  CharEnumeration out;
  auto constraints = derive_constraints(data);
  for (const auto& c : constraints) {
    if (c.kind != "nonneg-integer") {
      out.log.push_back(c.kind + ": " + c.text + "  [" + c.citation + "]");
    }
  }

  // Per-parameter upper bounds from single-parameter coefficients with a
  // negative slope.
  std::map<std::string, long> ub;
  for (const auto& p : data.params) ub[p] = cap;
  for (const auto& c : constraints) {
    if (c.kind != "nonneg-integer") continue;
    const LinForm& f = c.relation;
    std::string only;
    int nz = 0;
    for (const auto& [p, cf] : f.coeff) {
      if (!cf.is_zero()) {
        ++nz;
        only = p;
      }
    }
    if (nz == 1 && f.coeff.at(only).n < 0) {
      // c0 + cf * p >= 0  =>  p <= c0 / (-cf)
      Rat bound = f.c0 / (-f.coeff.at(only));
      long b = bound.n >= 0 ? bound.n / bound.d : -1;
      if (b < ub[only]) {
        ub[only] = b;
        out.log.push_back("bound: " + only + " <= " + std::to_string(b) +
                          "  [" + c.citation + "]");
      }
    }
  }

  // Enumerate the integer box and filter.
  std::map<std::string, long> v;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == data.params.size()) {
      for (const auto& c : constraints) {
        if (c.kind == "nonneg-integer") {
          if (c.power > depth) continue;
          Rat val = c.relation.eval(v);
          if (!val.is_integer() || !val.is_nonneg()) return;
        } else if (c.kind == "parity") {
          long s = c.parity_const.n;
          for (const auto& p : c.parity_params) s += v.at(p);
          if (s % 2 != 0) return;
        } else if (c.kind == "linear-relation") {
          if (!c.relation.eval(v).is_zero()) return;
        }
      }
      out.admissible.push_back(v);
      return;
    }
    for (long x = 0; x <= ub[data.params[i]]; ++x) {
      v[data.params[i]] = x;
      rec(i + 1);
    }
  };
  rec(0);

  // Diagnostics: components whose printed coefficients vanish identically
  // under the derived linear relations.
  std::vector<LinForm> relations;
  for (const auto& c : constraints) {
    if (c.kind == "linear-relation") relations.push_back(c.relation);
  }
  auto reduces_to_zero = [&](const LinForm& f) {
    if (relations.empty()) {
      return f.c0.is_zero() &&
             std::all_of(f.coeff.begin(), f.coeff.end(),
                         [](const auto& kv) { return kv.second.is_zero(); });
    }
    // Single-relation case: proportionality test.
    for (const auto& r : relations) {
      // f - t*r = 0 for some t?
      Rat t;
      bool found = false, ok = true;
      for (const auto& [p, rc] : r.coeff) {
        auto it = f.coeff.find(p);
        Rat fc = it == f.coeff.end() ? Rat() : it->second;
        if (rc.is_zero()) {
          if (!fc.is_zero()) ok = false;
          continue;
        }
        Rat q = fc / rc;
        if (!found) {
          t = q;
          found = true;
        } else if (!(q == t)) {
          ok = false;
        }
      }
      if (!ok || !found) continue;
      bool all = f.c0 == r.c0 * t;
      for (const auto& [p, fc] : f.coeff) {
        auto it = r.coeff.find(p);
        Rat rc = it == r.coeff.end() ? Rat() : it->second;
        if (!(fc == rc * t)) all = false;
      }
      if (all) return true;
    }
    return false;
  };
  for (const auto& sc : data.series) {
    bool all0 = !sc.coeffs.empty();
    for (const auto& f : sc.coeffs) {
      if (!reduces_to_zero(f)) all0 = false;
    }
    if (all0) {
      out.log.push_back(
          "vanishing: all printed coefficients of component " +
          std::to_string(sc.component) + " (" +
          data.components.at(static_cast<size_t>(sc.component)) +
          ") vanish identically under the derived linear relations");
    }
  }

  // Even-coefficient obstruction on the vacuum component: if every
  // admissible assignment makes the q, .., q^depth coefficients even, none
  // of them can equal 1.
  {
    detail::ParitySpan span(static_cast<int>(data.params.size()));
    std::vector<std::pair<std::uint32_t, long long>> congs;  // v, const mod 2
    for (const auto& c : constraints) {
      if (c.kind == "parity") {
        std::uint32_t v = 0;
        for (size_t i = 0; i < data.params.size(); ++i) {
          if (std::find(c.parity_params.begin(), c.parity_params.end(),
                        data.params[i]) != c.parity_params.end()) {
            v |= 1u << i;
          }
        }
        if (c.parity_const.is_zero()) span.add(v);
      } else if (c.kind == "linear-relation") {
        bool ok = c.relation.c0.is_integer() && c.relation.c0.n % 2 == 0;
        std::uint32_t v = 0;
        for (size_t i = 0; i < data.params.size(); ++i) {
          auto it = c.relation.coeff.find(data.params[i]);
          if (it == c.relation.coeff.end()) continue;
          if (!it->second.is_integer()) ok = false;
          if (ok && it->second.n % 2 != 0) v |= 1u << i;
        }
        if (ok) span.add(v);
      }
    }
    const auto& vac = data.series.at(0);
    bool all_even = true;
    int checked = 0;
    for (size_t n = 1; n < vac.coeffs.size() && static_cast<int>(n) <= depth;
         ++n) {
      bool ok = true;
      std::uint32_t v = detail::parity_vector(data, vac.coeffs[n], &ok);
      bool even = ok && vac.coeffs[n].c0.n % 2 == 0 && span.contains(v);
      if (!even) all_even = false;
      ++checked;
    }
    if (all_even && checked > 0) {
      out.log.push_back(
          "obstruction: the q..q^" + std::to_string(checked) +
          " coefficients of the vacuum component are even for every "
          "admissible assignment and therefore cannot equal 1");
    }
  }

  return out;
}

// Compares the dataset's leading exponents Lambda against the engine's twists
// (T = exp(2 pi i (Lambda + c/24)) with c = 8) and against the dataset's own
// series exponents.  Mismatches are reported, never corrected.
struct LambdaCheck {
  std::vector<std::string> log;
  int twist_mismatches = 0;
  int series_mismatches = 0;

  int mismatches() const { return twist_mismatches + series_mismatches; }
};

inline LambdaCheck lambda_twist_check(const CharSeriesData& data,
                                      const ModularData& md) {
  LambdaCheck out;
  const Real tol(tol_report());
  const int n = static_cast<int>(data.lambda.size());
  if (md.size() != n) {
    out.log.push_back("size mismatch: dataset " + std::to_string(n) +
                      " vs modular " + std::to_string(md.size()));
    ++out.twist_mismatches;
    return out;
  }
  auto phase_of = [&](const Rat& lam) {
    return unit_phase(Real(lam.n) / Real(lam.d) + Real(1) / 3);
  };
  // Twists are matched as multisets (the row order of the expansion tables
  // need not follow the primary labelling), preferring the same position.
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int k = 0; k < n; ++k) {
    Complex p = phase_of(data.lambda[static_cast<size_t>(k)]);
    int match = -1;
    if (!used[static_cast<size_t>(k)] && abs(p - md.T[k]) < tol) {
      match = k;
    } else {
      for (int j = 0; j < n; ++j) {
        if (!used[static_cast<size_t>(j)] && abs(p - md.T[j]) < tol) {
          match = j;
          break;
        }
      }
    }
    if (match >= 0) used[static_cast<size_t>(match)] = true;
    std::string head = "lambda[" + std::to_string(k) + "] = " +
                       data.lambda[static_cast<size_t>(k)].str();
    if (match >= 0) {
      out.log.push_back(head + ": matches twist of primary " +
                        md.labels[static_cast<size_t>(match)].name());
    } else {
      out.log.push_back(head + ": NO twist matches exp(2 pi i (lambda + 1/3))");
      ++out.twist_mismatches;
    }
  }
  // Internal consistency: series leading power vs lambda mod 1.
  for (const auto& sc : data.series) {
    Rat diff = sc.q_power - data.lambda.at(static_cast<size_t>(sc.component));
    if (!diff.is_integer()) {
      out.log.push_back("series[" + std::to_string(sc.component) +
                        "]: leading power " + sc.q_power.str() +
                        " differs from lambda " +
                        data.lambda.at(static_cast<size_t>(sc.component)).str() +
                        " by a non-integer");
      ++out.series_mismatches;
    }
  }
  return out;
}

}  // namespace fuscat
