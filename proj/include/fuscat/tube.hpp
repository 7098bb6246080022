// The tube algebra of the system {alpha_g, alpha_g rho}: basis bookkeeping,
// multiplication through the general intertwiner formula (driven by the
// Leavitt engine), the closed-form product table as an oracle, the two-sided
// unit, and the matrix units of the four explicitly known summand classes.
#pragma once

#include "fuscat/endo.hpp"
#include "fuscat/hidatum.hpp"
#include "fuscat/report.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fuscat {

struct DecompositionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Basis families.  A(g,h), B(g,h), C(g,h), F(g,h) carry two indices;
// D(g,k,h), E(g,k,h) three; G(g,h;k,l) four.
enum class Fam : int { A = 0, B, C, F, D, E, G };

struct TubeLabel {
  Fam fam = Fam::A;
  int g = 0, k = 0, h = 0, l = 0;  // unused indices stay 0
};

// Simple sector: alpha_g (r=0) or alpha_g rho (r=1).
struct Sector {
  int g = 0;
  int r = 0;
  bool operator==(const Sector& o) const { return g == o.g && r == o.r; }
};

// Sparse tube element over flat basis indices.
using TubeElement = std::unordered_map<int, Complex>;

inline void tube_add(TubeElement& x, int idx, const Complex& c) {
  auto it = x.find(idx);
  if (it == x.end()) {
    x.emplace(idx, c);
  } else {
    it->second += c;
  }
}

inline void tube_prune(TubeElement& x, double tol = tol_zero()) {
  for (auto it = x.begin(); it != x.end();) {
    if (abs(it->second) < Real(tol)) {
      it = x.erase(it);
    } else {
      ++it;
    }
  }
}

inline Real tube_max_abs(const TubeElement& x) {
  Real m = 0;
  for (const auto& [i, c] : x) {
    Real a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

inline TubeElement tube_scale(TubeElement x, const Complex& c) {
  for (auto& [i, v] : x) v *= c;
  return x;
}

inline void tube_axpy(TubeElement& x, const TubeElement& y, const Complex& c) {
  for (const auto& [i, v] : y) tube_add(x, i, c * v);
}

inline Real tube_distance(const TubeElement& x, const TubeElement& y) {
  TubeElement d = x;
  tube_axpy(d, y, Complex{Real(-1)});
  return tube_max_abs(d);
}

class TubeAlgebra {
 public:
  explicit TubeAlgebra(const HIDatum& datum)
      : d_(datum), G_(datum.group), nu_(datum.group.nu()) {
    offB_ = nu_ * nu_;
    offC_ = 2 * nu_ * nu_;
    offF_ = 3 * nu_ * nu_;
    offD_ = 4 * nu_ * nu_;
    offE_ = offD_ + nu_ * nu_ * nu_;
    offG_ = offE_ + nu_ * nu_ * nu_;
    dim_ = offG_ + nu_ * nu_ * nu_ * nu_;
    rho_ = build_rho(d_);
    for (int g = 0; g < nu_; ++g) {
      alpha_.push_back(build_alpha(d_, g));
      alpharho_.push_back(compose(alpha_.back(), rho_));
    }
    unit_word_ = LElement::unit();
    ssp_ = reduce(G_, word_elem({letter(GK::S), letter(GK::Sp)}));
  }

  const HIDatum& datum() const { return d_; }
  const GroupSpec& group() const { return G_; }
  int dim() const { return dim_; }

  // ---- label encoding -----------------------------------------------------
  int idxA(int g, int h) const { return g * nu_ + h; }
  int idxB(int g, int h) const { return offB_ + g * nu_ + h; }
  int idxC(int g, int h) const { return offC_ + g * nu_ + h; }
  int idxF(int g, int h) const { return offF_ + g * nu_ + h; }
  int idxD(int g, int k, int h) const {
    return offD_ + (g * nu_ + k) * nu_ + h;
  }
  int idxE(int g, int k, int h) const {
    return offE_ + (g * nu_ + k) * nu_ + h;
  }
  int idxG(int g, int h, int k, int l) const {
    return offG_ + ((g * nu_ + h) * nu_ + k) * nu_ + l;
  }

  TubeLabel label(int idx) const {
    TubeLabel L;
    if (idx < offB_) {
      L.fam = Fam::A;
    } else if (idx < offC_) {
      L.fam = Fam::B;
      idx -= offB_;
    } else if (idx < offF_) {
      L.fam = Fam::C;
      idx -= offC_;
    } else if (idx < offD_) {
      L.fam = Fam::F;
      idx -= offF_;
    } else if (idx < offE_) {
      L.fam = Fam::D;
      idx -= offD_;
    } else if (idx < offG_) {
      L.fam = Fam::E;
      idx -= offE_;
    } else {
      L.fam = Fam::G;
      idx -= offG_;
    }
    switch (L.fam) {
      case Fam::A:
      case Fam::B:
      case Fam::C:
      case Fam::F:
        L.g = idx / nu_;
        L.h = idx % nu_;
        break;
      case Fam::D:
      case Fam::E:
        L.h = idx % nu_;
        L.k = (idx / nu_) % nu_;
        L.g = idx / (nu_ * nu_);
        break;
      case Fam::G:
        L.l = idx % nu_;
        L.k = (idx / nu_) % nu_;
        L.h = (idx / (nu_ * nu_)) % nu_;
        L.g = idx / (nu_ * nu_ * nu_);
        break;
    }
    return L;
  }

  std::string label_name(int idx) const {
    TubeLabel L = label(idx);
    auto two = [&](const char* f) {
      return std::string(f) + "[" + std::to_string(L.g) + "," +
             std::to_string(L.h) + "]";
    };
    auto three = [&](const char* f) {
      return std::string(f) + "[" + std::to_string(L.g) + "," +
             std::to_string(L.k) + "," + std::to_string(L.h) + "]";
    };
    switch (L.fam) {
      case Fam::A: return two("A");
      case Fam::B: return two("B");
      case Fam::C: return two("C");
      case Fam::F: return two("F");
      case Fam::D: return three("D");
      case Fam::E: return three("E");
      case Fam::G:
        return "G[" + std::to_string(L.g) + "," + std::to_string(L.h) + ";" +
               std::to_string(L.k) + "," + std::to_string(L.l) + "]";
    }
    return "?";
  }

  // ---- sector data --------------------------------------------------------
  Sector xi(int idx) const {
    TubeLabel L = label(idx);
    switch (L.fam) {
      case Fam::A:
      case Fam::B:
      case Fam::D: return {L.g, 0};
      default: return {L.g, 1};
    }
  }
  Sector zeta(int idx) const {
    TubeLabel L = label(idx);
    switch (L.fam) {
      case Fam::A: return {L.h, 0};
      case Fam::B: return {L.h, 1};
      case Fam::C: return {G_.half(G_.sub(L.g, L.h)), 0};
      case Fam::F: return {G_.half(G_.add(L.g, L.h)), 1};
      case Fam::D:
      case Fam::E: return {L.k, 1};
      case Fam::G: return {L.k, 1};
    }
    return {0, 0};
  }
  Sector eta(int idx) const {
    TubeLabel L = label(idx);
    switch (L.fam) {
      case Fam::A: return {L.g, 0};
      case Fam::B: return {G_.neg(L.g), 0};
      case Fam::E: return {L.h, 0};
      default: return {L.h, 1};
    }
  }

  // The Leavitt intertwiner carried by the basis element.
  LElement word(int idx) const {
    TubeLabel L = label(idx);
    switch (L.fam) {
      case Fam::A:
      case Fam::B:
      case Fam::C: return unit_word_;
      case Fam::F: return ssp_;
      case Fam::D:
        return LElement::gen(GK::T,
                             G_.add(G_.add(L.k, L.k), G_.sub(L.g, L.h)));
      case Fam::E: return LElement::gen(GK::Tp, G_.sub(L.g, L.h));
      case Fam::G: {
        LWord w;
        w.push_back(static_cast<char>(
            letter(GK::T, G_.add(G_.sub(L.l, L.h), L.k))));
        w.push_back(static_cast<char>(
            letter(GK::Tp, G_.sub(G_.add(L.l, L.g), L.k))));
        LElement e;
        e.add_term(w, Complex{Real(1)});
        return e;
      }
    }
    return unit_word_;
  }

  const Endo& sector_endo(const Sector& s) const {
    return s.r ? alpharho_[s.g] : alpha_[s.g];
  }

  // ---- multiplication -----------------------------------------------------
  const TubeElement& basis_product(int i, int j) const {
    size_t key = static_cast<size_t>(i) * dim_ + j;
    auto it = prod_cache_.find(key);
    if (it != prod_cache_.end()) return it->second;
    TubeElement out = compute_basis_product(i, j);
    return prod_cache_.emplace(key, std::move(out)).first->second;
  }

  TubeElement mul(const TubeElement& X, const TubeElement& Y) const {
    TubeElement out;
    for (const auto& [i, ci] : X) {
      for (const auto& [j, cj] : Y) {
        tube_axpy(out, basis_product(i, j), ci * cj);
      }
    }
    tube_prune(out);
    return out;
  }

  // ---- two-sided unit -----------------------------------------------------
  // Solved from u X = X u = X over a diagonal-sector candidate span, then
  // verified against `verify_count` basis elements (all when <= 0).
  TubeElement unit(int verify_count = -1) const {
    if (!unit_.empty()) return unit_;
    std::vector<int> cand;
    for (int g = 0; g < nu_; ++g) {
      for (int h = 0; h < nu_; ++h) cand.push_back(idxA(g, h));
      cand.push_back(idxB(0, g));
      cand.push_back(idxC(g, g));
      cand.push_back(idxF(g, g));
      for (int k = 0; k < nu_; ++k) {
        for (int l = 0; l < nu_; ++l) cand.push_back(idxG(g, g, k, l));
      }
    }
    // Probe set: one basis element per sector family is enough to pin the
    // unit down; use the full two-index families plus D/E/G slices.
    std::vector<int> probes;
    for (int g = 0; g < nu_; ++g) {
      for (int h = 0; h < nu_; ++h) {
        probes.push_back(idxA(g, h));
        probes.push_back(idxB(g, h));
        probes.push_back(idxC(g, h));
        probes.push_back(idxF(g, h));
        probes.push_back(idxD(g, 0, h));
        probes.push_back(idxE(g, 0, h));
        probes.push_back(idxG(g, h, 0, 0));
      }
    }
    const int nc = static_cast<int>(cand.size());
    // Least squares on stacked equations sum_s x_s (u_s X_p) = X_p.
    std::vector<std::pair<int, Complex>> rhs_rows;  // (flat eq index, value)
    std::unordered_map<long long, int> eqindex;     // (probe,basis) -> row
    std::vector<std::vector<Complex>> cols(nc);
    std::vector<Complex> rhs;
    auto eq_row = [&](int p, int b) {
      long long key = static_cast<long long>(p) * dim_ + b;
      auto it = eqindex.find(key);
      if (it != eqindex.end()) return it->second;
      int r = static_cast<int>(rhs.size());
      eqindex.emplace(key, r);
      rhs.push_back(Complex{});
      for (auto& c : cols) c.resize(rhs.size());
      return r;
    };
    for (size_t pi = 0; pi < probes.size(); ++pi) {
      int p = probes[pi];
      // Right-hand side: X itself.
      rhs[static_cast<size_t>(eq_row(static_cast<int>(pi), p))] = Complex{Real(1)};
      for (int s = 0; s < nc; ++s) {
        const TubeElement& prod = basis_product(cand[s], p);
        for (const auto& [b, c] : prod) {
          int r = eq_row(static_cast<int>(pi), b);
          for (auto& col : cols) col.resize(rhs.size());
          cols[s][static_cast<size_t>(r)] += c;
        }
      }
    }
    const int ne = static_cast<int>(rhs.size());
    CMatrix M(ne, nc);
    CVector b(ne);
    for (int r = 0; r < ne; ++r) {
      b[r] = rhs[r];
      for (int s = 0; s < nc; ++s) {
        M(r, s) = (r < static_cast<int>(cols[s].size())) ? cols[s][r] : Complex{};
      }
    }
    CVector x = least_squares(M, b);
    TubeElement u;
    for (int s = 0; s < nc; ++s) {
      if (abs(x[s]) > Real(tol_zero())) tube_add(u, cand[s], x[s]);
    }
    // Verification.
    int count = (verify_count <= 0) ? dim_ : verify_count;
    std::mt19937_64 rng(2024);
    for (int t = 0; t < count; ++t) {
      int p = (verify_count <= 0) ? t
                                  : static_cast<int>(rng() % dim_);
      TubeElement X{{p, Complex{Real(1)}}};
      if (tube_distance(mul(u, X), X) > Real(tol_report()) ||
          tube_distance(mul(X, u), X) > Real(tol_report())) {
        throw DecompositionFailure("computed unit fails at " + label_name(p));
      }
    }
    unit_ = u;
    return u;
  }

  // ---- oracle: the printed product table ----------------------------------
  Report structure_table() const;

  // Associativity on random basis triples.
  Report check_associativity(int triples, uint64_t seed) const {
    Report rep;
    rep.name = "tube_associativity(" + (d_.id.empty() ? G_.name() : d_.id) + ")";
    std::mt19937_64 rng(seed);
    Real worst = 0;
    for (int t = 0; t < triples; ++t) {
      int i = static_cast<int>(rng() % dim_);
      int j = static_cast<int>(rng() % dim_);
      int k = static_cast<int>(rng() % dim_);
      TubeElement X{{i, Complex{Real(1)}}};
      TubeElement Y{{j, Complex{Real(1)}}};
      TubeElement Z{{k, Complex{Real(1)}}};
      Real r = tube_distance(mul(mul(X, Y), Z), mul(X, mul(Y, Z)));
      if (r > worst) worst = r;
    }
    rep.add("associativity(" + std::to_string(triples) + " triples)", worst,
            tol_report());
    return rep;
  }

 private:
  static LElement word_elem(std::initializer_list<Letter> ls) {
    LElement e;
    e.add_term(LWord(ls.begin(), ls.end()), Complex{Real(1)});
    return e;
  }

  TubeElement compute_basis_product(int i, int j) const {
    TubeElement out;
    if (!(eta(i) == xi(j))) return out;
    Sector z1 = zeta(i), z2 = zeta(j);
    Sector sx = xi(i), se = eta(j);
    const Endo& ex = sector_endo(sx);
    const Endo& ez = sector_endo(z1);
    LElement X = word(i), Y = word(j);
    LElement zY = ez.apply(Y);
    LElement core = fuscat::mul(G_, zY, X);

    struct Cand {
      Sector nu;
      LElement T;  // in Hom(nu, zeta zetabar): 1, s or t_c
    };
    std::vector<Cand> cands;
    if (z1.r == 0 && z2.r == 0) {
      cands.push_back({{G_.add(z1.g, z2.g), 0}, unit_word_});
    } else if (z1.r == 0 && z2.r == 1) {
      cands.push_back({{G_.add(z1.g, z2.g), 1}, unit_word_});
    } else if (z1.r == 1 && z2.r == 0) {
      cands.push_back({{G_.sub(z1.g, z2.g), 1}, unit_word_});
    } else {
      int u = G_.sub(z1.g, z2.g);
      cands.push_back({{u, 0}, LElement::gen(GK::S)});
      for (int c = 0; c < nu_; ++c) {
        cands.push_back({{c, 1}, LElement::gen(GK::T, G_.add(c, u))});
      }
    }
    for (const auto& cd : cands) {
      LElement Z = fuscat::mul(
          G_, star(cd.T), fuscat::mul(G_, core, ex.apply(cd.T)));
      decompose(sx, cd.nu, se, Z, out);
    }
    tube_prune(out);
    return out;
  }

  // Express Z in Hom(xi nu', nu' eta) in the basis and accumulate into out.
  void decompose(const Sector& sx, const Sector& nv, const Sector& se,
                 const LElement& Z, TubeElement& out) const {
    if (Z.empty()) return;
    auto expect_scalar_times = [&](const LElement& w, int idx) {
      // Z must equal c*w; extract c by matching any one word of w.
      const auto& [w0, c0] = *w.terms().begin();
      Complex c{};
      auto it = Z.terms().find(w0);
      if (it != Z.terms().end()) c = it->second / c0;
      LElement resid = Z;
      resid -= w * c;
      if (resid.max_abs() > residual_tol(Z)) {
        throw DecompositionFailure("residual outside span at " +
                                   label_name(idx));
      }
      if (abs(c) > Real(tol_zero())) tube_add(out, idx, c);
    };
    const int r3 = sx.r * 4 + nv.r * 2 + se.r;
    switch (r3) {
      case 0:  // (0,0,0) -> A, requires eta == xi
        if (!(se == sx)) { require_zero(Z, "A sector"); return; }
        expect_scalar_times(unit_word_, idxA(sx.g, nv.g));
        return;
      case 2:  // (0,1,0) -> B, requires eta == -xi
        if (se.g != G_.neg(sx.g)) { require_zero(Z, "B sector"); return; }
        expect_scalar_times(unit_word_, idxB(sx.g, nv.g));
        return;
      case 5:  // (1,0,1) -> C, requires nu' == (xi - eta)/2
        if (nv.g != G_.half(G_.sub(sx.g, se.g))) {
          require_zero(Z, "C sector");
          return;
        }
        expect_scalar_times(unit_word_, idxC(sx.g, se.g));
        return;
      case 3:  // (0,1,1) -> D
        expect_scalar_times(
            LElement::gen(GK::T, G_.add(G_.add(nv.g, nv.g),
                                        G_.sub(sx.g, se.g))),
            idxD(sx.g, nv.g, se.g));
        return;
      case 6:  // (1,1,0) -> E
        expect_scalar_times(LElement::gen(GK::Tp, G_.sub(sx.g, se.g)),
                            idxE(sx.g, nv.g, se.g));
        return;
      case 7: {  // (1,1,1) -> F (if aligned) + G's
        const bool has_f = (nv.g == G_.half(G_.add(sx.g, se.g)));
        // Reduced span: unit word (from ss') plus t_{l-h+k} t'_{l+g-k}.
        Complex f{};
        LElement resid = Z;
        if (has_f) {
          auto it = Z.terms().find(LWord{});
          if (it != Z.terms().end()) f = it->second;
          resid -= ssp_ * f;
          if (abs(f) > Real(tol_zero()))
            tube_add(out, idxF(sx.g, se.g), f);
        }
        for (int l = 0; l < nu_; ++l) {
          LWord w;
          w.push_back(static_cast<char>(
              letter(GK::T, G_.add(G_.sub(l, se.g), nv.g))));
          w.push_back(static_cast<char>(
              letter(GK::Tp, G_.sub(G_.add(l, sx.g), nv.g))));
          auto it = resid.terms().find(w);
          if (it == resid.terms().end()) continue;
          Complex c = it->second;
          LElement mono;
          mono.add_term(w, c);
          resid -= mono;
          if (abs(c) > Real(tol_zero()))
            tube_add(out, idxG(sx.g, se.g, nv.g, l), c);
        }
        if (resid.max_abs() > residual_tol(Z)) {
          throw DecompositionFailure("residual outside span in F/G sector");
        }
        return;
      }
      default:
        require_zero(Z, "empty sector");
        return;
    }
  }

  Real residual_tol(const LElement& Z) const {
    Real scale = Z.max_abs();
    if (scale < 1) scale = 1;
    return Real(tol_report()) * scale / 100;
  }

  void require_zero(const LElement& Z, const char* what) const {
    if (Z.max_abs() > residual_tol(Z)) {
      throw DecompositionFailure(std::string("nonzero product in ") + what);
    }
  }

  HIDatum d_;
  GroupSpec G_;
  int nu_;
  int offB_ = 0, offC_ = 0, offF_ = 0, offD_ = 0, offE_ = 0, offG_ = 0;
  int dim_ = 0;
  Endo rho_;
  std::vector<Endo> alpha_, alpharho_;
  LElement unit_word_, ssp_;
  mutable std::unordered_map<size_t, TubeElement> prod_cache_;
  mutable TubeElement unit_;
};

// ---------------------------------------------------------------------------
// The printed product table, replayed identity by identity against the
// general-formula multiplication.
inline Report TubeAlgebra::structure_table() const {
  Report rep;
  rep.name = "tube_structure_table(" + (d_.id.empty() ? G_.name() : d_.id) + ")";
  const double tol = tol_report();
  const GroupSpec& G = G_;
  const int nu = nu_;
  const Complex w = d_.omega_c();
  const Complex wb = conj(w);
  const Complex dinv{Real(1) / d_.delta()};

  auto basis = [&](int idx) { return TubeElement{{idx, Complex{Real(1)}}}; };
  auto check = [&](const std::string& name, const TubeElement& got,
                   const TubeElement& expect) {
    rep.add(name, tube_distance(got, expect), tol);
  };

  for (int g = 0; g < nu; ++g) {
    for (int h = 0; h < nu; ++h) {
      for (int l = 0; l < nu; ++l) {
        // A A, A B, B A.
        check("A.A", mul(basis(idxA(g, h)), basis(idxA(g, l))),
              basis(idxA(g, G.add(h, l))));
        check("A.B", mul(basis(idxA(g, h)), basis(idxB(g, l))),
              basis(idxB(g, G.add(h, l))));
        check("B.A", mul(basis(idxB(g, l)), basis(idxA(G.neg(g), G.neg(h)))),
              basis(idxB(g, G.add(h, l))));
        // B B.
        {
          TubeElement e = basis(idxA(g, G.sub(h, l)));
          if (g == 0) {
            for (int m = 0; m < nu; ++m) tube_add(e, idxB(0, m), Complex{Real(1)});
          }
          check("B.B", mul(basis(idxB(g, h)), basis(idxB(G.neg(g), l))), e);
        }
        // C C.
        check("C.C", mul(basis(idxC(g, h)), basis(idxC(h, l))),
              basis(idxC(g, l)));
        // A D.
        check("A.D", mul(basis(idxA(g, h)), basis(idxD(g, l, 0))),
              basis(idxD(g, G.add(h, l), 0)));
        // E A.
        check("E.A", mul(basis(idxE(g, h, l)), basis(idxA(l, 1 % nu))),
              basis(idxE(g, G.sub(h, 1 % nu), l)));
        // C F, F C.
        check("C.F", mul(basis(idxC(g, h)), basis(idxF(h, l))),
              basis(idxF(g, l)));
        check("F.C", mul(basis(idxF(g, h)), basis(idxC(h, l))),
              basis(idxF(g, l)));
      }
    }
  }

  for (int g = 0; g < nu; ++g) {
    for (int k = 0; k < nu; ++k) {
      // B_{g0} D_{-g,k,0} = sum_l A_{l+k-g,l+k+g} D_{g,l,0}.
      {
        TubeElement e;
        for (int l = 0; l < nu; ++l) {
          tube_add(e, idxD(g, l, 0),
                   d_.a(G.add(l, G.sub(k, g)), G.add(l, G.add(k, g))));
        }
        check("B.D", mul(basis(idxB(g, 0)), basis(idxD(G.neg(g), k, 0))), e);
      }
      // E_{0,k,h} B_{h,0} = sum_m A_{m+k-h,m+k+h} E_{0,m,-h}.
      {
        int h = k;  // reuse loop indices: run over all (k,h) via double loop
        for (int kk = 0; kk < nu; ++kk) {
          TubeElement e;
          for (int m = 0; m < nu; ++m) {
            tube_add(e, idxE(0, m, G.neg(h)),
                     d_.a(G.add(m, G.sub(kk, h)), G.add(m, G.add(kk, h))));
          }
          check("E.B", mul(basis(idxE(0, kk, h)), basis(idxB(h, 0))), e);
        }
      }
      // D_{gkh} C_{hk'} = D_{g,k+(k'-h)/2,k'}.
      for (int h = 0; h < nu; ++h) {
        for (int kp = 0; kp < nu; ++kp) {
          check("D.C", mul(basis(idxD(g, k, h)), basis(idxC(h, kp))),
                basis(idxD(g, G.add(k, G.half(G.sub(kp, h))), kp)));
        }
        // C_{gh} E_{h,k,g'}.
        check("C.E", mul(basis(idxC(g, h)), basis(idxE(h, k, 0))),
              basis(idxE(g, G.half(G.add(G.sub(g, h), G.add(k, k))), 0)));
      }
    }
  }

  // D_{g0h} E_{h0l}.
  for (int g = 0; g < nu; ++g) {
    for (int h = 0; h < nu; ++h) {
      for (int l = 0; l < nu; ++l) {
        TubeElement e;
        if (g == l) tube_add(e, idxA(g, 0), wb);
        if (g == G.neg(l)) {
          for (int m = 0; m < nu; ++m) {
            tube_add(e, idxB(g, m), d_.a(G.add(m, G.add(g, h)), G.add(g, g)));
          }
        }
        check("D.E", mul(basis(idxD(g, 0, h)), basis(idxE(h, 0, l))), e);
      }
    }
  }

  // E_{0kh} D_{hl0}.
  for (int k = 0; k < nu; ++k) {
    for (int h = 0; h < nu; ++h) {
      for (int l = 0; l < nu; ++l) {
        TubeElement e;
        if (l == k) tube_add(e, idxC(0, 0), wb * dinv);
        if (k == G.add(l, h)) tube_add(e, idxF(0, 0), wb);
        for (int g = 0; g < nu; ++g) {
          for (int m = 0; m < nu; ++m) {
            Complex c = d_.a(G.add(m, G.add(G.sub(l, k), h)),
                             G.add(g, G.sub(l, k))) *
                        d_.a(G.add(m, G.sub(k, G.add(l, h))),
                             G.add(g, G.sub(k, l)));
            tube_add(e, idxG(0, 0, m, g), c);
          }
        }
        tube_prune(e);
        check("E.D", mul(basis(idxE(0, k, h)), basis(idxD(h, l, 0))), e);
      }
    }
  }

  // D_{k0h} F_{h0} and F_{0h} E_{h0l}.
  for (int k = 0; k < nu; ++k) {
    for (int h = 0; h < nu; ++h) {
      check("D.F", mul(basis(idxD(k, 0, h)), basis(idxF(h, 0))),
            tube_scale(basis(idxD(k, G.neg(G.add(k, G.half(h))), 0)), dinv));
      check("F.E", mul(basis(idxF(0, h)), basis(idxE(h, 0, k))),
            tube_scale(basis(idxE(0, G.sub(k, G.half(h)), k)), dinv));
    }
  }

  // F_{0h} F_{h0}.
  for (int h = 0; h < nu; ++h) {
    TubeElement e;
    tube_add(e, idxC(0, 0), dinv * dinv * dinv);
    for (int l = 0; l < nu; ++l) {
      tube_add(e, idxG(0, 0, l, 0), w * dinv * dinv);
    }
    check("F.F", mul(basis(idxF(0, h)), basis(idxF(h, 0))), e);
  }

  // C G and G C.
  for (int g = 0; g < nu; ++g) {
    for (int h = 0; h < nu; ++h) {
      for (int k = 0; k < nu; ++k) {
        for (int l = 0; l < nu; ++l) {
          check("C.G", mul(basis(idxC(g, h)), basis(idxG(h, 0, k, l))),
                basis(idxG(g, 0, G.half(G.add(G.sub(g, h), G.add(k, k))),
                           G.half(G.add(G.add(l, l), G.sub(g, h))))));
          check("G.C", mul(basis(idxG(0, h, k, l)), basis(idxC(h, g))),
                basis(idxG(0, g, G.half(G.add(G.add(k, k), G.sub(g, h))),
                           G.half(G.add(G.add(l, l), G.sub(g, h))))));
        }
      }
    }
  }

  // D_{k0h} G_{h0}^{k'l} = sum_m A_{m+l,m+k+k'} A_{m+k+h-k',k+l-k'} D_{k,m,0}.
  // (The second factor is re-derived from the general formula; the h-dependence
  // on the right-hand side does not drop out.)
  for (int k = 0; k < nu; ++k) {
    for (int h = 0; h < nu; ++h) {
      for (int kp = 0; kp < nu; ++kp) {
        for (int l = 0; l < nu; ++l) {
          TubeElement e;
          for (int m = 0; m < nu; ++m) {
            Complex c = d_.a(G.add(m, l), G.add(m, G.add(k, kp))) *
                        d_.a(G.add(G.add(m, k), G.sub(h, kp)),
                             G.sub(G.add(k, l), kp));
            tube_add(e, idxD(k, m, 0), c);
          }
          tube_prune(e);
          check("D.G", mul(basis(idxD(k, 0, h)), basis(idxG(h, 0, kp, l))), e);
        }
      }
    }
  }

  // G_{0g}^{k'l} E_{g0k} = sum_m A_{m+g-k-k',l-k-k'} A_{l+m,m-k+k'} E_{0mk}.
  for (int g = 0; g < nu; ++g) {
    for (int k = 0; k < nu; ++k) {
      for (int kp = 0; kp < nu; ++kp) {
        for (int l = 0; l < nu; ++l) {
          TubeElement e;
          for (int m = 0; m < nu; ++m) {
            Complex c = d_.a(G.add(m, G.sub(g, G.add(k, kp))),
                             G.sub(l, G.add(k, kp))) *
                        d_.a(G.add(l, m), G.add(m, G.sub(kp, k)));
            tube_add(e, idxE(0, m, k), c);
          }
          tube_prune(e);
          check("G.E", mul(basis(idxG(0, g, kp, l)), basis(idxE(g, 0, k))), e);
        }
      }
    }
  }

  // G_{0g}^{kl} F_{g0} and F_{0k} G_{k0}^{k'l}.
  for (int g = 0; g < nu; ++g) {
    for (int k = 0; k < nu; ++k) {
      for (int l = 0; l < nu; ++l) {
        {
          TubeElement e;
          if (G.add(k, k) == g) tube_add(e, idxC(0, 0), dinv * dinv);
          for (int m = 0; m < nu; ++m) {
            tube_add(e, idxG(0, 0, m, G.sub(k, G.half(g))),
                     dinv * d_.a(G.add(l, G.sub(m, G.half(g))),
                                 G.sub(G.add(k, k), g)));
          }
          tube_prune(e);
          check("G.F", mul(basis(idxG(0, g, k, l)), basis(idxF(g, 0))), e);
        }
        {
          TubeElement e;
          if (G.add(k, k) == g) tube_add(e, idxC(0, 0), dinv * dinv);
          for (int m = 0; m < nu; ++m) {
            tube_add(e, idxG(0, 0, m, G.sub(k, G.half(g))),
                     dinv * d_.a(G.add(m, G.sub(l, G.half(g))),
                                 G.sub(G.add(k, k), g)));
          }
          tube_prune(e);
          check("F.G", mul(basis(idxF(0, g)), basis(idxG(g, 0, k, l))), e);
        }
      }
    }
  }

  // G_{0h}^{kl} G_{h0}^{k'l'}.
  for (int h = 0; h < nu; ++h) {
    for (int k = 0; k < nu; ++k) {
      for (int l = 0; l < nu; ++l) {
        for (int kp = 0; kp < nu; ++kp) {
          for (int lp = 0; lp < nu; ++lp) {
            TubeElement e;
            if (k == kp) {
              tube_add(e, idxC(0, 0),
                       wb * dinv *
                           d_.a(G.sub(G.add(l, lp), h), G.sub(G.add(k, k), h)));
            }
            if (k == lp && kp == l) tube_add(e, idxF(0, 0), w);
            for (int m = 0; m < nu; ++m) {
              for (int mp = 0; mp < nu; ++mp) {
                Complex c =
                    d_.a(G.add(m, G.sub(lp, k)), G.add(mp, G.sub(kp, k))) *
                    d_.a(G.add(G.sub(mp, kp), G.sub(h, k)),
                         G.add(G.sub(lp, G.add(kp, k)), l)) *
                    d_.a(G.add(m, G.sub(l, kp)), G.add(mp, G.sub(k, kp)));
                tube_add(e, idxG(0, 0, m, mp), c);
              }
            }
            tube_prune(e);
            check("G.G", mul(basis(idxG(0, h, k, l)), basis(idxG(h, 0, kp, lp))),
                  e);
          }
        }
      }
    }
  }

  return rep;
}

}  // namespace fuscat
