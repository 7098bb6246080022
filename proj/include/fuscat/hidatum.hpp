// The Haagerup-Izumi datum (G; sign, omega, b, A): polynomial identity suite,
// solvers for |G| <= 5 assembled from the known algebraic constants, the
// Q-system j-vector constructor with Newton refinement, and equivalence /
// unitarity classification.
#pragma once

#include "fuscat/algebraic.hpp"
#include "fuscat/group.hpp"
#include "fuscat/linalg.hpp"
#include "fuscat/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuscat {

struct CatalogMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExtensionRuleViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// omega is a third root of unity, stored as an exponent: omega = zeta_3^k.
enum class Omega : int { One = 0, W = 1, Wbar = 2 };

inline Complex omega_value(Omega w) {
  switch (w) {
    case Omega::One:
      return Complex{Real(1)};
    case Omega::W:
      return unit_phase(Real(1) / 3);
    case Omega::Wbar:
      return unit_phase(Real(-1) / 3);
  }
  return Complex{Real(1)};
}

struct HIDatum {
  GroupSpec group;
  int sign = +1;  // +1 or -1, selecting delta_pm
  Omega omega = Omega::One;
  Complex b;
  CMatrix A;  // nu x nu, indexed by (g, h)
  std::string id;  // optional catalog id / provenance tag

  int nu() const { return group.nu(); }
  Real delta() const { return delta_pm(nu(), sign); }
  Real lambda() const {
    Real d = delta();
    return Real(nu()) * (1 + d * d);
  }
  int mu() const { return nu() * nu() + 4; }
  int m() const { return (mu() - 1) / 2; }  // = (nu^2+3)/2
  Complex omega_c() const { return omega_value(omega); }

  const Complex& a(int g, int h) const { return A(g, h); }
};

// b = 1/sqrt(omega delta), branch normalised to Arg(b) in [0, pi).
inline Complex branch_b(int nu, int sign, Omega omega) {
  Complex z = Complex{Real(1)} / (omega_value(omega) * Complex{delta_pm(nu, sign)});
  Complex b = sqrt(z);
  if (b.im < 0 || (b.im == 0 && b.re < 0)) b = -b;
  return b;
}

// ---------------------------------------------------------------------------
// Identity suite

// Residuals of the full defining equation system.  include_quartic can be
// disabled for quick screening (the quartic sweep is O(nu^6)).
inline Report verify_equations(const HIDatum& d, bool include_quartic = true) {
  Report rep;
  rep.name = "verify_equations(" + (d.id.empty() ? d.group.name() : d.id) + ")";
  const GroupSpec& G = d.group;
  const int nu = G.nu();
  const Real delta = d.delta();
  const Complex dinv{Real(1) / delta};
  const Complex w = d.omega_c();
  const Complex wb = conj(w);
  const double tol = tol_report();
  const Complex one{Real(1)};

  // b normalisation: b^2 omega delta = 1 and b^4 + nu omega b^2 = 1.
  Complex b2 = d.b * d.b;
  rep.add("b_square", abs(b2 * w * Complex{delta} - one), tol);
  rep.add("b_quartic", abs(b2 * b2 + Complex{Real(nu)} * w * b2 - one), tol);

  // Order-3 symmetry A_{g,h} = w A_{-h,g-h} = conj(w) A_{h-g,-g}.
  Real worst = 0;
  for (int g = 0; g < nu; ++g) {
    for (int h = 0; h < nu; ++h) {
      Real r1 = abs(d.a(g, h) - w * d.a(G.neg(h), G.sub(g, h)));
      Real r2 = abs(d.a(g, h) - wb * d.a(G.sub(h, g), G.neg(g)));
      if (r1 > worst) worst = r1;
      if (r2 > worst) worst = r2;
    }
  }
  rep.add("order3_symmetry", worst, tol);

  // Linear sums.
  {
    Complex acc{};
    for (int h = 0; h < nu; ++h) acc += d.a(h, 0);
    rep.add("linear_row", abs(acc + wb * dinv), tol);
    Complex acc2{};
    for (int g = 0; g < nu; ++g) acc2 += d.a(0, g);
    rep.add("linear_col", abs(acc2 + w * dinv), tol);
  }

  // Quadratic: sum_g A_{h+g,k} A_{k,g} = delta_{h,0} - delta^{-1} delta_{k,0}.
  worst = 0;
  for (int h = 0; h < nu; ++h) {
    for (int k = 0; k < nu; ++k) {
      Complex acc{};
      for (int g = 0; g < nu; ++g) acc += d.a(G.add(h, g), k) * d.a(k, g);
      Complex target{};
      if (h == 0) target += one;
      if (k == 0) target -= dinv;
      Real r = abs(acc - target);
      if (r > worst) worst = r;
    }
  }
  rep.add("quadratic", worst, tol);

  // Cubic: conj(w) sum_m A_{m,g+h} A_{g,m+k} A_{h,m+l}
  //        = A_{g+l,k} A_{h+k,l} - delta^{-1} delta_{g,0} delta_{h,0}.
  worst = 0;
  for (int g = 0; g < nu; ++g) {
    for (int h = 0; h < nu; ++h) {
      for (int k = 0; k < nu; ++k) {
        for (int l = 0; l < nu; ++l) {
          Complex acc{};
          for (int mm = 0; mm < nu; ++mm) {
            acc += d.a(mm, G.add(g, h)) * d.a(g, G.add(mm, k)) *
                   d.a(h, G.add(mm, l));
          }
          Complex target = d.a(G.add(g, l), k) * d.a(G.add(h, k), l);
          if (g == 0 && h == 0) target -= dinv;
          Real r = abs(wb * acc - target);
          if (r > worst) worst = r;
        }
      }
    }
  }
  rep.add("cubic", worst, tol);

  // Quartic identity.
  if (include_quartic) {
    worst = 0;
    for (int g = 0; g < nu; ++g) {
      for (int h = 0; h < nu; ++h) {
        for (int i = 0; i < nu; ++i) {
          for (int k = 0; k < nu; ++k) {
            Complex acc{};
            for (int l = 0; l < nu; ++l) {
              for (int mm = 0; mm < nu; ++mm) {
                acc += d.a(l, mm) * d.a(G.add(l, g), h) *
                       d.a(G.add(h, mm), G.add(l, i)) * d.a(i, G.add(k, mm));
              }
            }
            Complex target{};
            if (k == g) target += d.a(G.sub(h, g), G.sub(i, g));
            if (h == 0) target -= wb * dinv * d.a(i, k);
            if (i == 0) target -= w * dinv * d.a(g, h);
            Real r = abs(acc - target);
            if (r > worst) worst = r;
          }
        }
      }
    }
    rep.add("quartic", worst, tol);
  }

  // Auxiliary identities arising from the endomorphism verification.
  {
    // 1 = 2 conj(w) b^4 + w b^2 sum_{h,k} A_{h,k} A_{k,h}
    Complex acc{};
    for (int h = 0; h < nu; ++h) {
      for (int k = 0; k < nu; ++k) acc += d.a(h, k) * d.a(k, h);
    }
    rep.add("aux_trace", abs(Complex{Real(2)} * wb * b2 * b2 + w * b2 * acc - one),
            tol);
  }
  {
    // sum_{l,m} A_{l,m} A_{m,l+h} A_{h,k+m} = -w b^2 A_{h,k} - conj(w) b^2 d_{h,0}
    worst = 0;
    for (int h = 0; h < nu; ++h) {
      for (int k = 0; k < nu; ++k) {
        Complex acc{};
        for (int l = 0; l < nu; ++l) {
          for (int mm = 0; mm < nu; ++mm) {
            acc += d.a(l, mm) * d.a(mm, G.add(l, h)) * d.a(h, G.add(k, mm));
          }
        }
        Complex target = -w * b2 * d.a(h, k);
        if (h == 0) target -= wb * b2;
        Real r = abs(acc - target);
        if (r > worst) worst = r;
      }
    }
    rep.add("aux_cubic_a", worst, tol);
  }
  {
    // sum_{l,m} A_{l,m} A_{l+g,k} A_{k+m,l} = -b^2 d_{k,0} - w b^2 A_{g,k}
    worst = 0;
    for (int g = 0; g < nu; ++g) {
      for (int k = 0; k < nu; ++k) {
        Complex acc{};
        for (int l = 0; l < nu; ++l) {
          for (int mm = 0; mm < nu; ++mm) {
            acc += d.a(l, mm) * d.a(G.add(l, g), k) * d.a(G.add(k, mm), l);
          }
        }
        Complex target = -w * b2 * d.a(g, k);
        if (k == 0) target -= b2;
        Real r = abs(acc - target);
        if (r > worst) worst = r;
      }
    }
    rep.add("aux_cubic_b", worst, tol);
  }
  {
    // sum_k A_{k+g,h} A_{k,-h} = w d_{h,g} - conj(w) b^2 d_{h,0}
    worst = 0;
    for (int g = 0; g < nu; ++g) {
      for (int h = 0; h < nu; ++h) {
        Complex acc{};
        for (int k = 0; k < nu; ++k) acc += d.a(G.add(k, g), h) * d.a(k, G.neg(h));
        Complex target{};
        if (h == g) target += w;
        if (h == 0) target -= wb * b2;
        Real r = abs(acc - target);
        if (r > worst) worst = r;
      }
    }
    rep.add("aux_skew", worst, tol);
  }
  {
    // sum_m A_{g,m+g} A_{-g,m+k} = conj(w) d_{k,0} - b^2 d_{0,g}
    worst = 0;
    for (int g = 0; g < nu; ++g) {
      for (int k = 0; k < nu; ++k) {
        Complex acc{};
        for (int mm = 0; mm < nu; ++mm) {
          acc += d.a(g, G.add(mm, g)) * d.a(G.neg(g), G.add(mm, k));
        }
        Complex target{};
        if (k == 0) target += wb;
        if (g == 0) target -= b2;
        Real r = abs(acc - target);
        if (r > worst) worst = r;
      }
    }
    rep.add("aux_pair", worst, tol);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Solvers for small groups

inline HIDatum solve_Z1(int sign) {
  HIDatum d;
  d.group = GroupSpec({1});
  d.sign = sign;
  d.omega = Omega::One;
  d.b = branch_b(1, sign, Omega::One);
  d.A = CMatrix(1, 1);
  d.A(0, 0) = Complex{Real(-1) / delta_pm(1, sign)};
  d.id = std::string("Z1") + (sign > 0 ? "+" : "-") + "1";
  return d;
}

namespace detail {

// Z3 constants: quadratic surds in sqrt(13) plus quartic roots.
inline std::vector<HIDatum> z3_data(int sign) {
  const Real s13 = sqrt(Real(13));
  auto surd = [&](int p, int q, int den) {  // (p + q sqrt13)/den
    return Complex{(Real(p) + Real(q) * s13) / den};
  };
  const Complex c1 = surd(2, -1, 3), c2 = surd(7, -1, 6), c3 = surd(7, 1, 6),
                c4 = surd(2, 1, 3);
  const Complex d5 = surd(1, -1, 6), d6 = surd(1, 1, 6);
  const Complex f5 = surd(1, 1, 6), f6 = surd(1, -1, 6);
  // d_1..d_4: roots of 9x^4 - 15x^3 + 7x^2 + x - 1.
  const std::vector<long long> dp = {-1, 1, 7, -15, 9};
  const Complex d1 = refine_root(dp, -0.321);
  const Complex d2 = refine_root(dp, 0.554);
  const Complex d3 = refine_root(dp, 0.717, -0.329);
  const Complex d4 = refine_root(dp, 0.717, 0.329);
  // f_1..f_4: roots of 9x^4 + 3x^3 + x^2 + 5x - 1.
  const std::vector<long long> fp = {-1, 5, 1, 3, 9};
  const Complex f1 = refine_root(fp, 0.217, 0.758);
  const Complex f2 = refine_root(fp, 0.217, -0.758);
  const Complex f3 = refine_root(fp, -0.954);
  const Complex f4 = refine_root(fp, 0.186);

  struct Tuple {
    int sign;
    Complex c, d, e, f, g;
  };
  const std::vector<Tuple> tuples = {
      {+1, c1, d1, d2, f5, f5},
      {+1, c2, d5, d5, f1, f2},
      {-1, c3, d6, d6, f3, f4},
      {-1, c4, d3, d4, f6, f6},
  };
  std::vector<HIDatum> out;
  int counter = 0;
  for (const auto& t : tuples) {
    if (t.sign != sign) continue;
    ++counter;
    HIDatum dd;
    dd.group = GroupSpec({3});
    dd.sign = sign;
    dd.omega = Omega::One;
    dd.b = branch_b(3, sign, Omega::One);
    dd.A = CMatrix(3, 3);
    dd.A(0, 0) = t.c; dd.A(0, 1) = t.d; dd.A(0, 2) = t.e;
    dd.A(1, 0) = t.d; dd.A(1, 1) = t.e; dd.A(1, 2) = t.f;
    dd.A(2, 0) = t.e; dd.A(2, 1) = t.g; dd.A(2, 2) = t.d;
    dd.id = std::string("Z3") + (sign > 0 ? "+" : "-") + std::to_string(counter);
    out.push_back(std::move(dd));
  }
  return out;
}

// Z5 constants: surds in sqrt(29) plus two octic roots and one quartic.
inline std::vector<HIDatum> z5_data(int sign) {
  const Real s29 = sqrt(Real(29));
  auto surd = [&](int p, int q, int den) {
    return Complex{(Real(p) + Real(q) * s29) / den};
  };
  const Complex c1 = surd(13, 1, 10), c2 = surd(13, -1, 10), c3 = surd(7, 1, 5),
                c4 = surd(7, -1, 5);
  const Complex d1 = surd(3, -1, 10), d2 = surd(3, 1, 10);
  const std::vector<long long> dp = {-1, -29, 75, 152, -654, 245, 1275, -1375, 625};
  const Complex d3 = refine_root(dp, -0.537, 0, 0.04);
  const Complex d4 = refine_root(dp, -0.426, 0, 0.04);
  const Complex d5 = refine_root(dp, -0.032, 0, 0.04);
  const Complex d6 = refine_root(dp, 0.480, 0, 0.04);
  const Complex d7 = refine_root(dp, 0.400, -0.282, 0.04);
  const Complex d8 = refine_root(dp, 0.400, 0.282, 0.04);
  const Complex d9 = refine_root(dp, 0.957, -0.983, 0.04);
  const Complex d10 = refine_root(dp, 0.957, 0.983, 0.04);
  const std::vector<long long> hq = {-1, 7, -9, -15, 25};
  const Complex h1 = refine_root(hq, -0.675);
  const Complex h2 = refine_root(hq, 0.218);
  const Complex h3 = refine_root(hq, 0.437);
  const Complex h4 = refine_root(hq, 0.620);
  const std::vector<long long> ho = {1, -3, -95, 402, -789, 1110, -525, -875, 625};
  const Complex h5 = refine_root(ho, -1.270, 0, 0.04);
  const Complex h6 = refine_root(ho, -0.095, 0, 0.009);
  const Complex h7 = refine_root(ho, 0.084, -0.536, 0.04);
  const Complex h8 = refine_root(ho, 0.084, 0.536, 0.04);
  const Complex h9 = refine_root(ho, 0.106, 0, 0.009);
  const Complex h10 = refine_root(ho, 0.534, -0.099, 0.04);
  const Complex h11 = refine_root(ho, 0.534, 0.099, 0.04);
  const Complex h12 = refine_root(ho, 1.420, 0, 0.04);

  struct Tuple {
    int sign;
    Complex c, d, e, f, g, h, i, j, k;
  };
  const std::vector<Tuple> tuples = {
      {+1, c2, d1, d1, d1, d1, h7, h11, h8, h10},
      {+1, c4, d4, d3, d6, d5, h4, h2, h4, h2},
      {-1, c1, d2, d2, d2, d2, h5, h12, h9, h6},
      {-1, c3, d7, d10, d9, d8, h3, h1, h3, h1},
  };
  std::vector<HIDatum> out;
  int counter = 0;
  for (const auto& t : tuples) {
    if (t.sign != sign) continue;
    ++counter;
    HIDatum dd;
    dd.group = GroupSpec({5});
    dd.sign = sign;
    dd.omega = Omega::One;
    dd.b = branch_b(5, sign, Omega::One);
    dd.A = CMatrix(5, 5);
    const Complex* row0[5] = {&t.c, &t.d, &t.e, &t.f, &t.g};
    const Complex* row1[5] = {&t.d, &t.g, &t.h, &t.i, &t.h};
    const Complex* row2[5] = {&t.e, &t.j, &t.f, &t.i, &t.i};
    const Complex* row3[5] = {&t.f, &t.k, &t.k, &t.e, &t.h};
    const Complex* row4[5] = {&t.g, &t.j, &t.k, &t.j, &t.d};
    const Complex** rows[5] = {row0, row1, row2, row3, row4};
    for (int g = 0; g < 5; ++g) {
      for (int h = 0; h < 5; ++h) dd.A(g, h) = *rows[g][h];
    }
    dd.id = std::string("Z5") + (sign > 0 ? "+" : "-") + std::to_string(counter);
    out.push_back(std::move(dd));
  }
  return out;
}

}  // namespace detail

inline std::string classify(const HIDatum& d);
inline std::optional<std::vector<int>> equivalence(const HIDatum& d1,
                                                   const HIDatum& d2);

// Assembles the known solutions for nu in {1,3,5}, verifies them, and dedupes
// under Aut(G).  Expected counts per sign: 1, 2, 2.
inline std::vector<HIDatum> solve_small(const GroupSpec& G, int sign) {
  std::vector<HIDatum> cand;
  switch (G.nu()) {
    case 1:
      cand = {solve_Z1(sign)};
      break;
    case 3:
      cand = detail::z3_data(sign);
      break;
    case 5:
      cand = detail::z5_data(sign);
      break;
    default:
      throw std::invalid_argument("solve_small supports nu in {1,3,5}");
  }
  std::vector<HIDatum> out;
  for (auto& d : cand) {
    if (!verify_equations(d).pass()) {
      throw CatalogMismatch("assembled datum fails the identity suite: " + d.id);
    }
    bool dup = false;
    for (const auto& prev : out) {
      if (equivalence(prev, d)) dup = true;
    }
    if (!dup) out.push_back(std::move(d));
  }
  const size_t expect = (G.nu() == 1) ? 1 : 2;
  if (out.size() != expect) {
    throw CatalogMismatch("unexpected solution count for " + G.name());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q-system construction from j-vectors

struct QSystemJSpec {
  int nu = 0;                // odd, >= 3
  std::vector<Real> j;       // j_2 .. j_{n+1} (radians); j_1 = 0 implicitly
  std::string id;
};

namespace detail {
// Full vector j_1..j_{nu-1} from the free part via the extension rule.
inline std::vector<Real> extend_j(int nu, const std::vector<Real>& jfree) {
  const int n = (nu - 1) / 2;
  if (static_cast<int>(jfree.size()) != n) {
    throw std::invalid_argument("extend_j: expected j_2..j_{n+1}");
  }
  std::vector<Real> j(nu);  // j[g] for g = 1..nu-1; j[0] unused
  j[1] = 0;
  for (int g = 2; g <= n + 1; ++g) j[g] = jfree[g - 2];
  for (int i = 1; i < n; ++i) j[n + 1 + i] = j[n + 1] + j[n] - j[n - i];
  return j;
}

inline CMatrix qsystem_A(int nu, const std::vector<Real>& jfull) {
  const Real delta = delta_pm(nu, +1);
  const Real amp = sqrt(delta) / (delta - 1);
  const Real boundary = -1 / (delta - 1);
  CMatrix A(nu, nu);
  for (int g = 0; g < nu; ++g) {
    A(g, 0) = Complex{(g == 0 ? Real(1) : Real(0)) + boundary};
    A(0, g) = A(g, 0);  // hermitian, boundary values are real
  }
  for (int g = 1; g < nu; ++g) {
    // Diagonal from order-3 symmetry with omega = 1: A_{g,g} = A_{-g,0}.
    A(g, g) = A((nu - g) % nu, 0);
  }
  for (int g = 1; g < nu; ++g) {
    for (int h = g + 1; h < nu; ++h) {
      Complex v = Complex{amp} * cis(jfull[h] - jfull[g] - jfull[h - g]);
      A(g, h) = v;
      A(h, g) = conj(v);
    }
  }
  return A;
}

// Residuals of the linear and quadratic identities as a real vector.
inline std::vector<Real> qsystem_residuals(const GroupSpec& G, const CMatrix& A,
                                           const Real& delta) {
  const int nu = G.nu();
  std::vector<Real> out;
  Complex acc{};
  for (int h = 0; h < nu; ++h) acc += A(h, 0);
  out.push_back(acc.re + 1 / delta);
  out.push_back(acc.im);
  for (int h = 0; h < nu; ++h) {
    for (int k = 0; k < nu; ++k) {
      Complex q{};
      for (int g = 0; g < nu; ++g) q += A(G.add(h, g), k) * A(k, g);
      if (h == 0) q -= Complex{Real(1)};
      if (k == 0) q += Complex{1 / delta};
      out.push_back(q.re);
      out.push_back(q.im);
    }
  }
  return out;
}
}  // namespace detail

// Builds the hermitian A matrix from a j-vector and polishes the j values by
// Gauss-Newton on the linear+quadratic identities (the printed values carry
// only ~7 digits).  All free components are refined: the phases depend on j
// only through j_h - j_g - j_{h-g} with subscripts mod nu, and a linear shift
// j_g -> j_g + c g is a symmetry only for the discrete values c nu in 2 pi Z,
// so the solution is locally isolated.
inline HIDatum from_qsystem_j(const QSystemJSpec& spec) {
  const int nu = spec.nu;
  if (nu < 3 || nu % 2 == 0) {
    throw std::invalid_argument("from_qsystem_j: nu must be odd and >= 3");
  }
  const int n = (nu - 1) / 2;
  if (static_cast<int>(spec.j.size()) != n) {
    throw ExtensionRuleViolation("expected j_2..j_{n+1}: " + std::to_string(n) +
                                 " values");
  }
  GroupSpec G({nu});
  const Real delta = delta_pm(nu, +1);

  std::vector<Real> jfree = spec.j;
  // Gauss-Newton over j_2..j_{n+1}.
  const int nvar = n;
  Real step = Real("1e-25");
  for (int it = 0; it < 60 && nvar > 0; ++it) {
    auto jfull = detail::extend_j(nu, jfree);
    auto A = detail::qsystem_A(nu, jfull);
    auto r0 = detail::qsystem_residuals(G, A, delta);
    Real rn = 0;
    for (const auto& r : r0) rn += r * r;
    rn = sqrt(rn);
    if (rn < Real("1e-60")) break;
    // Numerical Jacobian (forward differences scaled to current residual).
    Real h = rn / 1000;
    if (h < step) h = step;
    const int neq = static_cast<int>(r0.size());
    CMatrix J(neq, nvar);
    for (int v = 0; v < nvar; ++v) {
      auto jp = jfree;
      jp[v] += h;
      auto rp = detail::qsystem_residuals(
          G, detail::qsystem_A(nu, detail::extend_j(nu, jp)), delta);
      for (int e = 0; e < neq; ++e) J(e, v) = Complex{(rp[e] - r0[e]) / h};
    }
    CVector rhs(neq);
    for (int e = 0; e < neq; ++e) rhs[e] = Complex{-r0[e]};
    CVector dx = least_squares(J, rhs);
    for (int v = 0; v < nvar; ++v) jfree[v] += dx[v].re;
  }

  HIDatum d;
  d.group = G;
  d.sign = +1;
  d.omega = Omega::One;
  d.b = branch_b(nu, +1, Omega::One);
  d.A = detail::qsystem_A(nu, detail::extend_j(nu, jfree));
  d.id = spec.id.empty() ? ("QS-nu" + std::to_string(nu)) : spec.id;
  return d;
}

// ---------------------------------------------------------------------------
// Equivalence and classification

// Tensor-equivalence witness: a group isomorphism pi with
// A1_{g,h} = A2_{pi g, pi h}, same sign and omega.  Returns pi as a
// permutation of element indices, or nullopt.
inline std::optional<std::vector<int>> equivalence(const HIDatum& d1,
                                                   const HIDatum& d2) {
  if (d1.nu() != d2.nu() || d1.sign != d2.sign || d1.omega != d2.omega) {
    return std::nullopt;
  }
  if (d1.group.cyclic_factors != d2.group.cyclic_factors) return std::nullopt;
  const int nu = d1.nu();
  for (const auto& pi : d1.group.automorphisms()) {
    bool ok = true;
    for (int g = 0; g < nu && ok; ++g) {
      for (int h = 0; h < nu && ok; ++h) {
        if (!scalar_equal(d1.a(g, h), d2.a(pi[g], pi[h]), tol_report())) {
          ok = false;
        }
      }
    }
    if (ok) return pi;
  }
  return std::nullopt;
}

// A star structure can be twisted by a group automorphism, so hermitian-ness
// is detected up to the Aut(G) action: A_{g,h} = conj(A_{pi h, pi g}) for
// some automorphism pi (the literal matrix condition is pi = id).
inline bool is_hermitian(const HIDatum& d) {
  const int nu = d.nu();
  for (const auto& pi : d.group.automorphisms()) {
    bool ok = true;
    for (int g = 0; g < nu && ok; ++g) {
      for (int h = 0; h < nu && ok; ++h) {
        if (!scalar_equal(d.a(g, h), conj(d.a(pi[h], pi[g])), tol_report())) {
          ok = false;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::string classify(const HIDatum& d) {
  if (is_hermitian(d)) {
    return (d.sign > 0) ? "unitary" : "hermitian-nonunitary";
  }
  return "neither";
}

}  // namespace fuscat
