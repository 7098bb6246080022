// Half-braidings on the sector sum_g [alpha_g rho]: the commutative corner
// algebra spanned by C_{00}, F_{00}, G_{00}^{gh} is diagonalised, its minimal
// idempotents matched against the closed-form corner idempotents of the four
// known summand classes, and the remaining ones yield the twists w_j and
// coefficient matrices C^j of the final class, validated against the full
// linear and nonlinear constraint system.
#pragma once

#include "fuscat/hidatum.hpp"
#include "fuscat/linalg.hpp"
#include "fuscat/report.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuscat {

struct DegenerateSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The corner algebra A_rho with basis {C00, F00, G00^{kl}}, dimension
// nu^2 + 2, using the closed-form structure constants.  Elements are dense
// coefficient vectors.
class CornerAlgebra {
 public:
  explicit CornerAlgebra(const HIDatum& d)
      : d_(d), G_(d.group), nu_(d.group.nu()), dim_(nu_ * nu_ + 2) {
    build_table();
  }

  int dim() const { return dim_; }
  int idxC() const { return 0; }
  int idxF() const { return 1; }
  int idxG(int k, int l) const { return 2 + k * nu_ + l; }

  CVector zero() const { return CVector(dim_); }

  CVector mul(const CVector& x, const CVector& y) const {
    CVector out(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (x[i].re == 0 && x[i].im == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j].re == 0 && y[j].im == 0) continue;
        Complex c = x[i] * y[j];
        const CVector& p = table_[static_cast<size_t>(i) * dim_ + j];
        for (int k = 0; k < dim_; ++k) out[k] += c * p[k];
      }
    }
    return out;
  }

  // Matrix of left multiplication by x in the basis.
  CMatrix left_mult(const CVector& x) const {
    CMatrix M(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      CVector ej(dim_);
      ej[j] = Complex{Real(1)};
      CVector col = mul(x, ej);
      for (int i = 0; i < dim_; ++i) M(i, j) = col[i];
    }
    return M;
  }

  const CVector& basis_product(int i, int j) const {
    return table_[static_cast<size_t>(i) * dim_ + j];
  }

  // ---- corner idempotents of the known summand classes --------------------
  // All are of the form c0 (C00 + fc F00 + sum_{k,l} gc(k,l) G00^{kl}).
  CVector corner_ii() const {
    Real delta = d_.delta();
    Complex w = d_.omega_c();
    CVector v(dim_);
    Complex c0{delta / d_.lambda()};
    v[idxC()] = c0;
    v[idxF()] = c0 * Complex{delta};
    for (int k = 0; k < nu_; ++k) {
      for (int l = 0; l < nu_; ++l) {
        Complex s{};
        for (int m = 0; m < nu_; ++m) {
          s += d_.a(G_.add(k, m), G_.add(l, m)) *
               d_.a(G_.sub(k, m), G_.sub(l, m));
        }
        v[idxG(k, l)] = c0 * w * Complex{delta} * s;
      }
    }
    return v;
  }

  CVector corner_iii(int psi) const {
    Real delta = d_.delta();
    Complex w = d_.omega_c();
    CVector v(dim_);
    Complex c0{Real(1) / (Real(nu_) * delta)};
    v[idxC()] = c0;
    v[idxF()] = c0 * Complex{delta};
    for (int k = 0; k < nu_; ++k) {
      for (int l = 0; l < nu_; ++l) {
        Complex s{};
        for (int m = 0; m < nu_; ++m) {
          s += G_.character(psi, m) * d_.a(G_.add(k, m), G_.add(l, m)) *
               d_.a(G_.sub(k, m), G_.sub(l, m));
        }
        v[idxG(k, l)] = c0 * w * Complex{delta} * s;
      }
    }
    return v;
  }

  CVector corner_iv(int h, int psi) const {
    Real delta = d_.delta();
    Complex w = d_.omega_c();
    CVector v(dim_);
    Complex c0{Real(1) / (Real(nu_) * delta)};
    v[idxC()] = c0;
    v[idxF()] = c0 * Complex{delta} * conj(G_.character(psi, h));
    for (int k = 0; k < nu_; ++k) {
      for (int l = 0; l < nu_; ++l) {
        Complex s{};
        for (int m = 0; m < nu_; ++m) {
          s += G_.character(psi, m) *
               d_.a(G_.add(G_.add(k, h), m), G_.add(l, m)) *
               d_.a(G_.sub(k, G_.add(h, m)), G_.sub(l, m));
        }
        v[idxG(k, l)] = c0 * w * Complex{delta} * s;
      }
    }
    return v;
  }

  // All corner idempotents of classes ii-iv (with h running over one
  // representative per pair {h,-h} and psi over one per pair {psi,-psi} in
  // class iii).
  std::vector<CVector> known_corners() const {
    std::vector<CVector> out;
    out.push_back(corner_ii());
    std::vector<int> pair_reps;
    {
      std::vector<bool> seen(nu_, false);
      for (int h = 1; h < nu_; ++h) {
        if (seen[h]) continue;
        seen[h] = seen[G_.neg(h)] = true;
        pair_reps.push_back(h);
      }
    }
    for (int psi : pair_reps) out.push_back(corner_iii(psi));
    for (int h : pair_reps) {
      for (int psi = 0; psi < nu_; ++psi) out.push_back(corner_iv(h, psi));
    }
    return out;
  }

 private:
  void build_table() {
    table_.assign(static_cast<size_t>(dim_) * dim_, CVector());
    const Real delta = d_.delta();
    const Complex dinv{Real(1) / delta};
    const Complex w = d_.omega_c();
    const Complex wb = conj(w);
    auto at = [&](int i, int j) -> CVector& {
      return table_[static_cast<size_t>(i) * dim_ + j];
    };
    // C00 is the unit.
    for (int j = 0; j < dim_; ++j) {
      CVector v(dim_);
      v[j] = Complex{Real(1)};
      at(idxC(), j) = v;
      at(j, idxC()) = v;
    }
    // F00 F00 = delta^-3 C00 + omega delta^-2 sum_l G00^{l0}.
    {
      CVector v(dim_);
      v[idxC()] = dinv * dinv * dinv;
      for (int l = 0; l < nu_; ++l) v[idxG(l, 0)] += w * dinv * dinv;
      at(idxF(), idxF()) = v;
    }
    // F00 G00^{kl} = G00^{kl} F00
    //   = delta_{k,0} delta^-2 C00 + delta^-1 sum_m A_{m+l,2k} G00^{mk}.
    for (int k = 0; k < nu_; ++k) {
      for (int l = 0; l < nu_; ++l) {
        CVector v(dim_);
        if (k == 0) v[idxC()] = dinv * dinv;
        for (int m = 0; m < nu_; ++m) {
          v[idxG(m, k)] += dinv * d_.a(G_.add(m, l), G_.add(k, k));
        }
        at(idxF(), idxG(k, l)) = v;
        at(idxG(k, l), idxF()) = v;
      }
    }
    // G00^{kl} G00^{k'l'} = delta_{k,k'} wbar delta^-1 A_{l+l',2k} C00
    //   + delta_{k,l'} delta_{k',l} omega F00
    //   + sum_{m,m'} A_{m+l'-k,m'+k'-k} A_{m'-k'-k,l'-k'-k+l}
    //                A_{m+l-k',m'+k-k'} G00^{mm'}.
    for (int k = 0; k < nu_; ++k) {
      for (int l = 0; l < nu_; ++l) {
        for (int kp = 0; kp < nu_; ++kp) {
          for (int lp = 0; lp < nu_; ++lp) {
            CVector v(dim_);
            if (k == kp) {
              v[idxC()] = wb * dinv * d_.a(G_.add(l, lp), G_.add(k, k));
            }
            if (k == lp && kp == l) v[idxF()] += w;
            for (int m = 0; m < nu_; ++m) {
              for (int mp = 0; mp < nu_; ++mp) {
                v[idxG(m, mp)] +=
                    d_.a(G_.add(m, G_.sub(lp, k)), G_.add(mp, G_.sub(kp, k))) *
                    d_.a(G_.sub(mp, G_.add(kp, k)),
                         G_.add(G_.sub(lp, G_.add(kp, k)), l)) *
                    d_.a(G_.add(m, G_.sub(l, kp)), G_.add(mp, G_.sub(k, kp)));
              }
            }
            at(idxG(k, l), idxG(kp, lp)) = v;
          }
        }
      }
    }
  }

  HIDatum d_;
  GroupSpec G_;
  int nu_, dim_;
  std::vector<CVector> table_;
};

// One half-braiding of the final class.
struct ClassVSolution {
  Complex w;           // twist
  int w_order = 0;     // multiplicative order (0 if not certified)
  CMatrix C;           // nu x nu coefficient matrix C^j_{g,h}
  CVector idem;        // minimal idempotent in CornerAlgebra coordinates
};

namespace detail {

inline Real vec_distance(const CVector& x, const CVector& y) {
  Real m = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    Real a = abs(x[i] - y[i]);
    if (a > m) m = a;
  }
  return m;
}

inline int root_of_unity_order(const Complex& w, int max_order,
                               double tol = 1e-30) {
  Complex p = w;
  for (int n = 1; n <= max_order; ++n) {
    if (abs(p - Complex{Real(1)}) < Real(tol)) return n;
    p *= w;
  }
  return 0;
}

}  // namespace detail

// Diagonalise the corner algebra and extract the class-v half-braidings.
inline std::vector<ClassVSolution> solve_class_v(const HIDatum& d,
                                                 uint64_t seed = 12345) {
  CornerAlgebra A(d);
  const int dim = A.dim();
  const int nu = d.nu();
  const Real delta = d.delta();
  const Complex w3 = d.omega_c();

  // A generic element of the commutative split algebra has simple spectrum;
  // retry with fresh coefficients if the double-precision seed looks
  // clustered.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<std::complex<double>> vals;
  std::vector<std::vector<std::complex<double>>> vecs;
  CMatrix M;
  bool ok = false;
  for (int attempt = 0; attempt < 6 && !ok; ++attempt) {
    CVector P(dim);
    for (int i = 0; i < dim; ++i) {
      P[i] = Complex{Real(unif(rng)), Real(unif(rng))};
    }
    M = A.left_mult(P);
    eigen_seed(M, vals, vecs);
    ok = true;
    for (int i = 0; i < dim && ok; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        if (std::abs(vals[i] - vals[j]) < 1e-6) {
          ok = false;
          break;
        }
      }
    }
  }
  if (!ok) throw DegenerateSpectrum("corner algebra spectrum not separated");

  // Refine each eigenpair and rescale to an idempotent.
  std::vector<CVector> idems;
  for (int k = 0; k < dim; ++k) {
    Complex lambda{Real(vals[k].real()), Real(vals[k].imag())};
    CVector v(dim);
    for (int i = 0; i < dim; ++i) {
      v[i] = Complex{Real(vecs[k][i].real()), Real(vecs[k][i].imag())};
    }
    refine_eigenpair(M, lambda, v);
    // v spans a one-dimensional ideal: v*v = c v, so v/c is idempotent.
    CVector vv = A.mul(v, v);
    int imax = 0;
    Real best = 0;
    for (int i = 0; i < dim; ++i) {
      Real a = abs(v[i]);
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    Complex c = vv[imax] / v[imax];
    CVector e(dim);
    for (int i = 0; i < dim; ++i) e[i] = v[i] / c;
    // Idempotent polish: e <- 3e^2 - 2e^3.
    for (int it = 0; it < 3; ++it) {
      CVector e2 = A.mul(e, e);
      CVector e3 = A.mul(e2, e);
      for (int i = 0; i < dim; ++i) {
        e[i] = Complex{Real(3)} * e2[i] - Complex{Real(2)} * e3[i];
      }
    }
    CVector echk = A.mul(e, e);
    if (detail::vec_distance(echk, e) > Real(tol_report())) {
      throw DegenerateSpectrum("eigenvector failed to polish to idempotent");
    }
    idems.push_back(std::move(e));
  }

  // Discard the idempotents belonging to the known summand classes.
  std::vector<CVector> corners = A.known_corners();
  std::vector<bool> corner_used(corners.size(), false);
  std::vector<ClassVSolution> out;
  for (auto& e : idems) {
    Real scale = 0;
    for (const auto& c : e) {
      Real a = abs(c);
      if (a > scale) scale = a;
    }
    bool matched = false;
    for (size_t c = 0; c < corners.size(); ++c) {
      if (detail::vec_distance(e, corners[c]) <
          Real(tol_report()) * (scale < 1 ? Real(1) : scale)) {
        if (corner_used[c]) {
          throw DegenerateSpectrum("corner idempotent matched twice");
        }
        corner_used[c] = true;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // Extract w and C from e F00 = delta^-1 w e and
    // e G00^{gh} = omega w C_{h,g} e.
    int imax = 0;
    Real best = 0;
    for (int i = 0; i < dim; ++i) {
      Real a = abs(e[i]);
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    CVector f(dim);
    f[A.idxF()] = Complex{Real(1)};
    CVector ef = A.mul(e, f);
    ClassVSolution sol;
    sol.w = Complex{delta} * ef[imax] / e[imax];
    sol.C = CMatrix(nu, nu);
    for (int g = 0; g < nu; ++g) {
      for (int h = 0; h < nu; ++h) {
        CVector gbas(dim);
        gbas[A.idxG(g, h)] = Complex{Real(1)};
        CVector eg = A.mul(e, gbas);
        sol.C(h, g) = eg[imax] / (w3 * sol.w * e[imax]);
      }
    }
    sol.w_order = detail::root_of_unity_order(sol.w, 4 * d.mu());
    sol.idem = std::move(e);
    out.push_back(std::move(sol));
  }
  for (size_t c = 0; c < corners.size(); ++c) {
    if (!corner_used[c]) {
      throw DegenerateSpectrum("a known corner idempotent was not found");
    }
  }
  // Canonical order: by twist argument, for reproducible output.
  std::sort(out.begin(), out.end(),
            [](const ClassVSolution& a, const ClassVSolution& b) {
              double aa = std::atan2(to_double(a.w.im), to_double(a.w.re));
              double bb = std::atan2(to_double(b.w.im), to_double(b.w.re));
              return aa < bb;
            });
  return out;
}

// Residuals of the constraint system satisfied by the class-v data.
inline Report verify_class_v(const HIDatum& d,
                             const std::vector<ClassVSolution>& sols) {
  Report rep;
  rep.name = "class_v(" + (d.id.empty() ? d.group.name() : d.id) + ")";
  const GroupSpec& G = d.group;
  const int nu = d.nu();
  const Real delta = d.delta();
  const Complex dinv{Real(1) / delta};
  const Complex w3 = d.omega_c();
  const double tol = tol_report();

  rep.add_flag("count", static_cast<int>(sols.size()) == d.m());

  Real worst_unit = 0, worst_lin1 = 0, worst_lin2 = 0, worst_n1 = 0;
  bool orders_ok = true;
  for (const auto& s : sols) {
    Real r = abs(abs(s.w) - 1);
    if (r > worst_unit) worst_unit = r;
    if (s.w_order == 0) orders_ok = false;
    const Complex wj = s.w;
    const Complex wjb = conj(s.w);
    // sum_g C_{0,g} = w - wbar/delta.
    Complex acc{};
    for (int g = 0; g < nu; ++g) acc += s.C(0, g);
    r = abs(acc - wj + wjb * dinv);
    if (r > worst_lin1) worst_lin1 = r;
    // w C_{g,h} - sum_k A_{g+k,2h} C_{h,k} = delta_{h,0} omega wbar / delta.
    for (int g = 0; g < nu; ++g) {
      for (int h = 0; h < nu; ++h) {
        Complex lhs = wj * s.C(g, h);
        for (int k = 0; k < nu; ++k) {
          lhs -= d.a(G.add(g, k), G.add(h, h)) * s.C(h, k);
        }
        Complex rhs = (h == 0) ? w3 * wjb * dinv : Complex{};
        r = abs(lhs - rhs);
        if (r > worst_lin2) worst_lin2 = r;
      }
    }
    // Quadratic constraint coupling two C entries with a triple-A kernel.
    for (int p = 0; p < nu; ++p) {
      for (int ss = 0; ss < nu; ++ss) {
        for (int h = 0; h < nu; ++h) {
          for (int rr = 0; rr < nu; ++rr) {
            Complex lhs = w3 * wj * s.C(p, ss) * s.C(h, rr) * Complex{delta};
            Complex rhs{};
            if (ss == h && rr == p) rhs += Complex{Real(1)};
            if (rr == ss) rhs += wjb * d.a(G.add(p, h), G.add(ss, ss));
            Complex sum{};
            for (int k = 0; k < nu; ++k) {
              for (int l = 0; l < nu; ++l) {
                sum += s.C(k, l) *
                       d.a(G.add(h, G.sub(l, ss)), G.add(rr, G.sub(k, ss))) *
                       d.a(G.sub(rr, G.add(k, ss)),
                           G.add(G.sub(l, G.add(k, ss)), p)) *
                       d.a(G.sub(G.add(h, p), k), G.sub(G.add(rr, ss), k));
              }
            }
            rhs += Complex{delta} * sum;
            r = abs(lhs - rhs);
            if (r > worst_n1) worst_n1 = r;
          }
        }
      }
    }
  }
  rep.add("modulus_one", worst_unit, tol);
  rep.add_flag("root_of_unity", orders_ok);
  rep.add("linear_sum", worst_lin1, tol);
  rep.add("linear_recursion", worst_lin2, tol);
  rep.add("quadratic", worst_n1, tol);

  // Orthonormality: lambda/nu delta_{jj'} = 1 + wbar' w + delta omega w
  // sum C'_{t,q} C_{q,t}.
  Real worst_n2 = 0;
  for (size_t j = 0; j < sols.size(); ++j) {
    for (size_t jp = 0; jp < sols.size(); ++jp) {
      Complex acc = Complex{Real(1)} + conj(sols[jp].w) * sols[j].w;
      Complex sum{};
      for (int t = 0; t < nu; ++t) {
        for (int q = 0; q < nu; ++q) sum += sols[jp].C(t, q) * sols[j].C(q, t);
      }
      acc += Complex{delta} * w3 * sols[j].w * sum;
      Complex target = (j == jp) ? Complex{d.lambda() / nu} : Complex{};
      Real r = abs(acc - target);
      if (r > worst_n2) worst_n2 = r;
    }
  }
  rep.add("orthonormality", worst_n2, tol);

  // Orthogonality to the known classes, for all characters psi and g in G.
  Real worst_n3 = 0;
  for (const auto& s : sols) {
    for (int psi = 0; psi < nu; ++psi) {
      for (int g = 0; g < nu; ++g) {
        Complex acc = Complex{Real(1)} + conj(G.character(psi, g)) * s.w;
        Complex sum{};
        for (int t = 0; t < nu; ++t) {
          for (int q = 0; q < nu; ++q) {
            for (int m = 0; m < nu; ++m) {
              sum += G.character(psi, m) * s.C(q, t) *
                     d.a(G.add(t, G.add(m, g)), G.add(q, m)) *
                     d.a(G.sub(t, G.add(m, g)), G.sub(q, m));
            }
          }
        }
        acc += Complex{delta} * w3 * s.w * sum;
        Real r = abs(acc);
        if (r > worst_n3) worst_n3 = r;
      }
    }
  }
  rep.add("known_class_orthogonality", worst_n3, tol);
  return rep;
}

}  // namespace fuscat
