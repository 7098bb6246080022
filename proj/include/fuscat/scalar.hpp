// Arbitrary-precision complex scalars and the project-wide tolerance policy.
//
// All numeric constants in the library are carried as high-precision complex
// numbers (MPFR reals via boost::multiprecision) together with residual
// certificates computed downstream; there is no exact algebraic-number tower.
#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/math/constants/constants.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace fuscat {

using Real = boost::multiprecision::mpfr_float;

// Working precision, settable once at startup (CLI flag --precision-bits).
inline unsigned& precision_bits_ref() {
  static unsigned bits = 256;
  return bits;
}

inline void set_precision_bits(unsigned bits) {
  precision_bits_ref() = bits;
  // mpfr_float precision is configured in decimal digits.
  const unsigned digits = static_cast<unsigned>(bits * 0.30103) + 2;
  Real::default_precision(digits);
}

struct InitPrecision {
  InitPrecision() { set_precision_bits(precision_bits_ref()); }
};
inline const InitPrecision init_precision_once{};

// Tolerances: tol_zero governs scalar equality / term dropping, tol_report
// governs matrix-level residual reporting.  Both configurable.
inline double& tol_zero() {
  static double v = 1e-30;
  return v;
}
inline double& tol_report() {
  static double v = 1e-15;
  return v;
}

inline Real real_pi() { return boost::math::constants::pi<Real>(); }

// Minimal complex type over Real.  boost's mpc-backed complex is unavailable
// in this environment, and we only need a handful of operations.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r) {}
  Complex(long r) : re(r) {}
  Complex(double r) : re(r) {}

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return sqrt(norm2(a)); }

inline Complex sqrt(const Complex& a) {
  // Principal branch.
  Real r = abs(a);
  if (r == 0) return Complex{};
  Real x = sqrt((r + a.re) / 2);
  Real y = sqrt((r - a.re) / 2);
  if (a.im < 0) y = -y;
  return {x, y};
}

// e^{2 pi i t} for real t.
inline Complex unit_phase(const Real& t) {
  Real th = 2 * real_pi() * t;
  return {cos(th), sin(th)};
}

// e^{i theta} for real theta (radians).
inline Complex cis(const Real& theta) { return {cos(theta), sin(theta)}; }

inline Complex cpow(Complex base, unsigned long e) {
  Complex out{Real(1)};
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// Tolerance-mediated scalar equality: |a-b| < tol * max(1,|a|,|b|).
inline bool scalar_equal(const Complex& a, const Complex& b,
                         double tol = tol_zero()) {
  Real scale = 1;
  Real aa = abs(a), bb = abs(b);
  if (aa > scale) scale = aa;
  if (bb > scale) scale = bb;
  return abs(a - b) < Real(tol) * scale;
}

inline bool is_zero(const Complex& a, double tol = tol_zero()) {
  return abs(a) < Real(tol);
}

inline std::string to_string(const Real& x, unsigned digits = 30) {
  return x.str(digits);
}

inline std::string to_string(const Complex& z, unsigned digits = 30) {
  return "(" + to_string(z.re, digits) + ", " + to_string(z.im, digits) + ")";
}

inline double to_double(const Real& x) { return static_cast<double>(x); }

}  // namespace fuscat
