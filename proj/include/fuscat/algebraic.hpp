// Algebraic constants: construction from printed minimal polynomials via
// Newton refinement with residual certificates.
#pragma once

#include "fuscat/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace fuscat {

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polynomial with rational coefficients (low -> high) plus an isolating
// approximation of one simple root.
struct AlgebraicSpec {
  struct Rat {
    long long num = 0;
    long long den = 1;
  };
  std::vector<Rat> coeffs;  // c0 + c1 x + c2 x^2 + ...
  Complex approx;
  double isolation_radius = 5e-2;
};

inline Complex poly_eval(const std::vector<AlgebraicSpec::Rat>& c,
                         const Complex& x) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + Complex{Real(it->num) / Real(it->den)};
  }
  return acc;
}

inline std::vector<AlgebraicSpec::Rat> poly_derivative(
    const std::vector<AlgebraicSpec::Rat>& c) {
  std::vector<AlgebraicSpec::Rat> d;
  for (size_t i = 1; i < c.size(); ++i) {
    d.push_back({c[i].num * static_cast<long long>(i), c[i].den});
  }
  return d;
}

// Newton iteration from spec.approx.  Certifies |p(x)| < 1e-50 (scaled by the
// coefficient magnitude) and that the iteration stayed inside the isolation
// radius; a nearly vanishing derivative at the root flags an ambiguous
// (non-simple or non-isolated) root.
inline Complex refine_root(const AlgebraicSpec& spec) {
  const auto deriv = poly_derivative(spec.coeffs);
  Real coeff_scale = 1;
  for (const auto& r : spec.coeffs) {
    Real m = Real(r.num < 0 ? -r.num : r.num) / Real(r.den);
    if (m > coeff_scale) coeff_scale = m;
  }
  Complex x = spec.approx;
  const Real target = Real("1e-50") * coeff_scale;
  Real last_res = -1;
  int stalls = 0;
  for (int it = 0; it < 400; ++it) {
    Complex p = poly_eval(spec.coeffs, x);
    Real res = abs(p);
    if (res < target) {
      Complex dp = poly_eval(deriv, x);
      if (abs(dp) < Real("1e-20") * coeff_scale) {
        throw AmbiguousRoot("derivative nearly vanishes at refined root");
      }
      if (abs(x - spec.approx) > Real(spec.isolation_radius)) {
        throw AmbiguousRoot("refined root escaped the isolation radius");
      }
      return x;
    }
    Complex dp = poly_eval(deriv, x);
    if (abs(dp) == 0) throw NoConvergence("vanishing derivative during Newton");
    x -= p / dp;
    if (abs(x - spec.approx) > Real(4) * Real(spec.isolation_radius) + 1) {
      throw AmbiguousRoot("Newton iterate left the isolation neighbourhood");
    }
    if (last_res >= 0 && res >= last_res) {
      if (++stalls > 40) throw NoConvergence("residual stopped decreasing");
    } else {
      stalls = 0;
    }
    last_res = res;
  }
  throw NoConvergence("iteration budget exhausted");
}

// Convenience: real root from integer coefficients and a double seed.
inline Complex refine_root(std::vector<long long> int_coeffs, double seed_re,
                           double seed_im = 0.0, double radius = 5e-2) {
  AlgebraicSpec spec;
  for (long long c : int_coeffs) spec.coeffs.push_back({c, 1});
  spec.approx = Complex{Real(seed_re), Real(seed_im)};
  spec.isolation_radius = radius;
  return refine_root(spec);
}

// delta_pm: the chosen root of x^2 = 1 + nu x, i.e. (nu +- sqrt(nu^2+4))/2.
inline Real delta_pm(int nu, int sign) {
  Real root = sqrt(Real(nu) * nu + 4);
  return (Real(nu) + (sign >= 0 ? root : -root)) / 2;
}

}  // namespace fuscat
