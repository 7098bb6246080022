// Endomorphisms of the Leavitt algebra: the grading automorphisms alpha_g and
// the distinguished endomorphism rho built from a datum, plus the structural
// checks that rest on them (relation preservation, the rho^2 decomposition,
// Hom-space bases and simplicity, the fusion ring, and rigidity data).
#pragma once

#include "fuscat/hidatum.hpp"
#include "fuscat/leavitt.hpp"
#include "fuscat/report.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuscat {

struct DepthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZigZagFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIntegerMultiplicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An algebra endomorphism, stored as the images of the 2(nu+1) generators.
// Images of whole words are memoised, which matters because rho^n images are
// rebuilt constantly by the tube-algebra multiplication.
class Endo {
 public:
  Endo() = default;
  Endo(GroupSpec G, std::string label) : G_(std::move(G)), label_(std::move(label)) {
    images_.resize(4 * 64);
  }

  const GroupSpec& group() const { return G_; }
  const std::string& label() const { return label_; }

  void set_image(GK k, int g, LElement img) {
    images_[letter(k, g)] = std::move(img);
  }
  const LElement& image(GK k, int g = 0) const { return images_[letter(k, g)]; }

  // Homomorphic extension to an arbitrary element, with per-word memoisation.
  LElement apply(const LElement& x) const {
    LElement out;
    for (const auto& [w, c] : x.terms()) {
      const LElement& img = word_image(w);
      for (const auto& [iw, ic] : img.terms()) out.add_term(iw, c * ic);
    }
    out.prune();
    return out;
  }

  const LElement& word_image(const LWord& w) const {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    LElement img;
    if (w.empty()) {
      img = LElement::unit();
    } else {
      // Peel the first letter and recurse on the (cached) suffix.
      const LElement& head = images_[static_cast<Letter>(w[0])];
      const LElement& tail = word_image(w.substr(1));
      img = mul(G_, head, tail);
    }
    return cache_.emplace(std::move(LWord(w)), std::move(img)).first->second;
  }

 private:
  GroupSpec G_;
  std::string label_;
  std::vector<LElement> images_;
  mutable std::unordered_map<LWord, LElement> cache_;
};

inline Endo build_identity(const GroupSpec& G) {
  Endo f(G, "id");
  f.set_image(GK::S, 0, LElement::gen(GK::S));
  f.set_image(GK::Sp, 0, LElement::gen(GK::Sp));
  for (int h = 0; h < G.nu(); ++h) {
    f.set_image(GK::T, h, LElement::gen(GK::T, h));
    f.set_image(GK::Tp, h, LElement::gen(GK::Tp, h));
  }
  return f;
}

// alpha_g: s, s' fixed; t_h -> t_{h+2g}, t'_h -> t'_{h+2g}.
inline Endo build_alpha(const HIDatum& d, int g) {
  const GroupSpec& G = d.group;
  Endo f(G, "alpha_" + std::to_string(g));
  f.set_image(GK::S, 0, LElement::gen(GK::S));
  f.set_image(GK::Sp, 0, LElement::gen(GK::Sp));
  for (int h = 0; h < G.nu(); ++h) {
    int h2 = G.add(h, G.add(g, g));
    f.set_image(GK::T, h, LElement::gen(GK::T, h2));
    f.set_image(GK::Tp, h, LElement::gen(GK::Tp, h2));
  }
  return f;
}

// rho from the datum, per the defining generator images.
inline Endo build_rho(const HIDatum& d) {
  const GroupSpec& G = d.group;
  const int nu = G.nu();
  const Complex dinv{Real(1) / d.delta()};
  const Complex w = d.omega_c();
  const Complex wb = conj(w);
  Endo f(G, "rho");
  {
    LElement img = LElement::gen(GK::S) * dinv;
    for (int g = 0; g < nu; ++g) {
      LWord wd;
      wd.push_back(static_cast<char>(letter(GK::T, g)));
      wd.push_back(static_cast<char>(letter(GK::T, g)));
      img.add_term(wd, d.b);
    }
    f.set_image(GK::S, 0, std::move(img));
  }
  {
    LElement img = LElement::gen(GK::Sp) * dinv;
    for (int g = 0; g < nu; ++g) {
      LWord wd;
      wd.push_back(static_cast<char>(letter(GK::Tp, g)));
      wd.push_back(static_cast<char>(letter(GK::Tp, g)));
      img.add_term(wd, w * d.b);
    }
    f.set_image(GK::Sp, 0, std::move(img));
  }
  for (int g = 0; g < nu; ++g) {
    // rho(t_g) = b s t'_{-g} + w t_{-g} s s' + sum_{h,k} A_{h+g,k+g} t_h t_{h+k+g} t'_k
    LElement raw;
    {
      LWord wd;
      wd.push_back(static_cast<char>(letter(GK::S)));
      wd.push_back(static_cast<char>(letter(GK::Tp, G.neg(g))));
      raw.add_term(wd, d.b);
    }
    {
      LWord wd;
      wd.push_back(static_cast<char>(letter(GK::T, G.neg(g))));
      wd.push_back(static_cast<char>(letter(GK::S)));
      wd.push_back(static_cast<char>(letter(GK::Sp)));
      raw.add_term(wd, w);
    }
    for (int h = 0; h < nu; ++h) {
      for (int k = 0; k < nu; ++k) {
        LWord wd;
        wd.push_back(static_cast<char>(letter(GK::T, h)));
        wd.push_back(static_cast<char>(letter(GK::T, G.add(h, G.add(k, g)))));
        wd.push_back(static_cast<char>(letter(GK::Tp, k)));
        raw.add_term(wd, d.a(G.add(h, g), G.add(k, g)));
      }
    }
    f.set_image(GK::T, g, reduce(G, raw));

    // rho(t'_g) = w b t_{-g} s' + conj(w) s s' t'_{-g}
    //             + sum_{h,k} A_{k+g,h+g} t_k t'_{g+h+k} t'_h
    LElement rawp;
    {
      LWord wd;
      wd.push_back(static_cast<char>(letter(GK::T, G.neg(g))));
      wd.push_back(static_cast<char>(letter(GK::Sp)));
      rawp.add_term(wd, w * d.b);
    }
    {
      LWord wd;
      wd.push_back(static_cast<char>(letter(GK::S)));
      wd.push_back(static_cast<char>(letter(GK::Sp)));
      wd.push_back(static_cast<char>(letter(GK::Tp, G.neg(g))));
      rawp.add_term(wd, wb);
    }
    for (int h = 0; h < nu; ++h) {
      for (int k = 0; k < nu; ++k) {
        LWord wd;
        wd.push_back(static_cast<char>(letter(GK::T, k)));
        wd.push_back(static_cast<char>(letter(GK::Tp, G.add(g, G.add(h, k)))));
        wd.push_back(static_cast<char>(letter(GK::Tp, h)));
        rawp.add_term(wd, d.a(G.add(k, g), G.add(h, g)));
      }
    }
    f.set_image(GK::Tp, g, reduce(G, rawp));
  }
  return f;
}

// rho-tilde = * after rho after *; its images are the starred images of the
// starred generators.
inline Endo build_rho_tilde(const HIDatum& d) {
  Endo rho = build_rho(d);
  const GroupSpec& G = d.group;
  Endo f(G, "rho~");
  f.set_image(GK::S, 0, star(rho.image(GK::Sp)));
  f.set_image(GK::Sp, 0, star(rho.image(GK::S)));
  for (int g = 0; g < G.nu(); ++g) {
    f.set_image(GK::T, g, star(rho.image(GK::Tp, g)));
    f.set_image(GK::Tp, g, star(rho.image(GK::T, g)));
  }
  return f;
}

// (f o g)(x) = f(g(x)); image table of the composite.
inline Endo compose(const Endo& f, const Endo& g) {
  const GroupSpec& G = f.group();
  Endo h(G, f.label() + "o" + g.label());
  h.set_image(GK::S, 0, f.apply(g.image(GK::S)));
  h.set_image(GK::Sp, 0, f.apply(g.image(GK::Sp)));
  for (int k = 0; k < G.nu(); ++k) {
    h.set_image(GK::T, k, f.apply(g.image(GK::T, k)));
    h.set_image(GK::Tp, k, f.apply(g.image(GK::Tp, k)));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Structural checks

// The generator relations must hold for the images.
inline Report check_cuntz_preservation(const Endo& f) {
  Report rep;
  rep.name = "cuntz_preservation(" + f.label() + ")";
  const GroupSpec& G = f.group();
  const int nu = G.nu();
  const double tol = tol_report();
  const LElement one = LElement::unit();

  rep.add("s'_s", distance(mul(G, f.image(GK::Sp), f.image(GK::S)), one), tol);
  for (int g = 0; g < nu; ++g) {
    for (int h = 0; h < nu; ++h) {
      LElement p = mul(G, f.image(GK::Tp, g), f.image(GK::T, h));
      LElement target = (g == h) ? one : LElement::zero();
      rep.add("t'_t", distance(p, target), tol,
              std::to_string(g) + "," + std::to_string(h));
    }
    rep.add("s'_t", mul(G, f.image(GK::Sp), f.image(GK::T, g)).max_abs(), tol,
            std::to_string(g));
    rep.add("t'_s", mul(G, f.image(GK::Tp, g), f.image(GK::S)).max_abs(), tol,
            std::to_string(g));
  }
  LElement sum = mul(G, f.image(GK::S), f.image(GK::Sp));
  for (int g = 0; g < nu; ++g) {
    sum += mul(G, f.image(GK::T, g), f.image(GK::Tp, g));
  }
  rep.add("completeness", distance(sum, one), tol);
  return rep;
}

// Generator-level criterion for rho^2 = id (+) sum_g alpha_g rho:
//   s' rho^2(x) = x s',        t'_g rho^2(x) = alpha_g(rho(x)) t'_g
// for x in {s, t_h}, and the starred-side identities
//   rho^2(y) s = s y,          rho^2(y) t_g = t_g alpha_g(rho(y))
// for y in {s', t'_h}.
inline Report check_rho2_decomposition(const HIDatum& d) {
  Report rep;
  rep.name = "rho2_decomposition(" + (d.id.empty() ? d.group.name() : d.id) + ")";
  const GroupSpec& G = d.group;
  const int nu = G.nu();
  const double tol = tol_report();
  Endo rho = build_rho(d);
  Endo rho2 = compose(rho, rho);
  std::vector<Endo> alpha_rho;
  for (int g = 0; g < nu; ++g) alpha_rho.push_back(compose(build_alpha(d, g), rho));

  const LElement s = LElement::gen(GK::S), sp = LElement::gen(GK::Sp);
  auto gen = [](GK k, int g) { return LElement::gen(k, g); };

  // Unprimed generators x, intertwined from the left.
  std::vector<std::pair<std::string, LElement>> xs = {{"s", s}};
  for (int h = 0; h < nu; ++h) xs.push_back({"t" + std::to_string(h), gen(GK::T, h)});
  for (const auto& [nm, x] : xs) {
    rep.add("s'_branch", distance(mul(G, sp, rho2.apply(x)), mul(G, x, sp)), tol,
            nm);
    for (int g = 0; g < nu; ++g) {
      LElement tp = gen(GK::Tp, g);
      rep.add("t'_branch",
              distance(mul(G, tp, rho2.apply(x)),
                       mul(G, alpha_rho[g].apply(x), tp)),
              tol, nm + ",g=" + std::to_string(g));
    }
  }
  // Primed generators y, intertwined from the right.
  std::vector<std::pair<std::string, LElement>> ys = {{"s'", sp}};
  for (int h = 0; h < nu; ++h) ys.push_back({"t'" + std::to_string(h), gen(GK::Tp, h)});
  for (const auto& [nm, y] : ys) {
    rep.add("s_branch", distance(mul(G, rho2.apply(y), s), mul(G, s, y)), tol, nm);
    for (int g = 0; g < nu; ++g) {
      LElement t = gen(GK::T, g);
      rep.add("t_branch",
              distance(mul(G, rho2.apply(y), t),
                       mul(G, t, alpha_rho[g].apply(y))),
              tol, nm + ",g=" + std::to_string(g));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Hom-space bases

// Object alpha_g rho^n.
struct ObjGN {
  int g = 0;
  int n = 0;
};

struct HomBasis {
  ObjGN source, target;
  // Basis monomials of Hom(source, target), each target-word times the star
  // of a source-word matched through the same intermediate simple object.
  std::vector<LWord> monomials;
  std::vector<char> kinds;  // 'u' (through alpha_h) or 'v' (through alpha_k rho)
  int dimension() const { return static_cast<int>(monomials.size()); }
};

namespace detail {

// u[h] / v[k]: words (in s, t only) spanning Hom(alpha_h, alpha_g rho^n) and
// Hom(alpha_k rho, alpha_g rho^n).  The recursion follows the decomposition
// alpha_g rho^n = s (alpha_g rho^{n-2}) s' + sum_c t_{c+2g} (alpha_{g+c} rho^{n-1}) t'_{c+2g}.
struct UVBases {
  std::vector<std::vector<LWord>> u, v;  // indexed by h / k
};

inline const UVBases& uv_bases(const GroupSpec& G, int g, int n, int max_depth) {
  static std::map<std::tuple<std::vector<int>, int, int>, UVBases> cache;
  auto key = std::make_tuple(G.cyclic_factors, g, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (n > max_depth) {
    throw DepthExceeded("hom basis recursion beyond depth " +
                        std::to_string(max_depth));
  }
  const int nu = G.nu();
  UVBases B;
  B.u.assign(nu, {});
  B.v.assign(nu, {});
  if (n == 0) {
    B.u[g].push_back(LWord{});
  } else if (n == 1) {
    B.v[g].push_back(LWord{});
  } else {
    const UVBases& two = uv_bases(G, g, n - 2, max_depth);
    for (int h = 0; h < nu; ++h) {
      for (const auto& w : two.u[h]) {
        B.u[h].push_back(LWord(1, static_cast<char>(letter(GK::S))) + w);
      }
      for (const auto& w : two.v[h]) {
        B.v[h].push_back(LWord(1, static_cast<char>(letter(GK::S))) + w);
      }
    }
    for (int c = 0; c < nu; ++c) {
      const UVBases& one = uv_bases(G, G.add(g, c), n - 1, max_depth);
      Letter t = letter(GK::T, G.add(c, G.add(g, g)));
      for (int h = 0; h < nu; ++h) {
        for (const auto& w : one.u[h]) {
          B.u[h].push_back(LWord(1, static_cast<char>(t)) + w);
        }
        for (const auto& w : one.v[h]) {
          B.v[h].push_back(LWord(1, static_cast<char>(t)) + w);
        }
      }
    }
  }
  return cache.emplace(std::move(key), std::move(B)).first->second;
}

inline LWord star_word(const LWord& w) {
  LWord r(w.rbegin(), w.rend());
  for (auto& l : r) l = static_cast<char>(primed(static_cast<Letter>(l)));
  return r;
}

}  // namespace detail

inline int hom_basis_max_depth = 6;

inline HomBasis hom_basis(const HIDatum& d, ObjGN src, ObjGN tgt) {
  const GroupSpec& G = d.group;
  const auto& S = detail::uv_bases(G, src.g, src.n, hom_basis_max_depth);
  const auto& T = detail::uv_bases(G, tgt.g, tgt.n, hom_basis_max_depth);
  HomBasis B;
  B.source = src;
  B.target = tgt;
  for (int h = 0; h < G.nu(); ++h) {
    for (const auto& wt : T.u[h]) {
      for (const auto& ws : S.u[h]) {
        B.monomials.push_back(wt + detail::star_word(ws));
        B.kinds.push_back('u');
      }
    }
  }
  for (int k = 0; k < G.nu(); ++k) {
    for (const auto& wt : T.v[k]) {
      for (const auto& ws : S.v[k]) {
        B.monomials.push_back(wt + detail::star_word(ws));
        B.kinds.push_back('v');
      }
    }
  }
  return B;
}

// Proposition-level simplicity: the alpha_g and alpha_g rho are pairwise
// non-isomorphic simples.
inline Report check_simplicity(const HIDatum& d) {
  Report rep;
  rep.name = "simplicity(" + (d.id.empty() ? d.group.name() : d.id) + ")";
  const int nu = d.nu();
  for (int g = 0; g < nu; ++g) {
    for (int h = 0; h < nu; ++h) {
      int expect = (g == h) ? 1 : 0;
      rep.add_flag("dim Hom(a_g,a_h)",
                   hom_basis(d, {g, 0}, {h, 0}).dimension() == expect,
                   std::to_string(g) + "," + std::to_string(h));
      rep.add_flag("dim Hom(a_g r,a_h r)",
                   hom_basis(d, {g, 1}, {h, 1}).dimension() == expect,
                   std::to_string(g) + "," + std::to_string(h));
      rep.add_flag("dim Hom(a_g,a_h r)",
                   hom_basis(d, {g, 0}, {h, 1}).dimension() == 0,
                   std::to_string(g) + "," + std::to_string(h));
    }
  }
  return rep;
}

// Fusion matrices over the 2 nu simple labels: index l = g for alpha_g and
// l = nu + g for alpha_g rho.  N[c](a,b) = multiplicity of label c in a (x) b,
// where the tensor product of objects is composition of endomorphisms:
// (alpha_g rho^m)(alpha_h rho^p) = alpha_{g + (-1)^m h} rho^{m+p}.
inline std::vector<CMatrix> fusion_ring(const HIDatum& d) {
  const GroupSpec& G = d.group;
  const int nu = G.nu();
  const int L = 2 * nu;
  std::vector<CMatrix> N(L, CMatrix(L, L));
  for (int a = 0; a < L; ++a) {
    int ga = a % nu, ma = a / nu;
    for (int b = 0; b < L; ++b) {
      int gb = b % nu, mb = b / nu;
      int gc = G.add(ga, (ma == 1) ? G.neg(gb) : gb);
      int n = ma + mb;
      const auto& B = detail::uv_bases(G, gc, n, hom_basis_max_depth);
      for (int c = 0; c < L; ++c) {
        int m = (c < nu) ? static_cast<int>(B.u[c].size())
                         : static_cast<int>(B.v[c - nu].size());
        N[c](a, b) = Complex{Real(m)};
      }
    }
  }
  return N;
}

// ---------------------------------------------------------------------------
// Rigidity: (co)evaluation pair for alpha_g rho^n and categorical dimension.

struct CoevPair {
  ObjGN object;
  LElement e, b;
};

inline CoevPair coev_pair(const HIDatum& d, ObjGN obj) {
  const GroupSpec& G = d.group;
  const int n = obj.n;
  Endo rho = build_rho(d);
  // e = w^n b^-n s' rho(s') ... rho^{n-1}(s'),  b = w^n b^-n rho^{n-1}(s) ... rho(s) s.
  Complex coeff{Real(1)};
  {
    Complex binv = Complex{Real(1)} / d.b;
    Complex w = d.omega_c();
    for (int i = 0; i < n; ++i) coeff *= w * binv;
  }
  LElement e = LElement::unit(), b = LElement::unit();
  LElement cur_sp = LElement::gen(GK::Sp), cur_s = LElement::gen(GK::S);
  for (int k = 0; k < n; ++k) {
    e = mul(G, e, cur_sp);       // s' rho(s') ... in increasing order
    b = mul(G, cur_s, b);        // ... rho(s) s with rho^{n-1}(s) leftmost
    cur_sp = rho.apply(cur_sp);
    cur_s = rho.apply(cur_s);
  }
  CoevPair cp;
  cp.object = obj;
  cp.e = e * coeff;
  cp.b = b * coeff;

  // Zig-zag: beta(e) b = 1 = e beta_dual(b), with beta = alpha_g rho^n and
  // beta_dual = alpha_{(-1)^n g} rho^n.
  Endo beta = build_alpha(d, obj.g);
  for (int k = 0; k < n; ++k) beta = compose(beta, rho);
  Endo beta_dual = build_alpha(d, (n % 2 == 0) ? G.neg(obj.g) : obj.g);
  for (int k = 0; k < n; ++k) beta_dual = compose(beta_dual, rho);
  const LElement one = LElement::unit();
  Real r1 = distance(mul(G, beta.apply(cp.e), cp.b), one);
  Real r2 = distance(mul(G, cp.e, beta_dual.apply(cp.b)), one);
  if (r1 > Real(tol_report()) || r2 > Real(tol_report())) {
    throw ZigZagFailure("zig-zag residuals " + to_string(r1, 3) + ", " +
                        to_string(r2, 3));
  }
  return cp;
}

// dim(alpha_g rho^n) = e b, which reduces to a scalar multiple of 1.
inline Complex categorical_dim(const HIDatum& d, ObjGN obj) {
  CoevPair cp = coev_pair(d, obj);
  LElement prod = mul(d.group, cp.e, cp.b);
  Complex val{};
  for (const auto& [w, c] : prod.terms()) {
    if (w.empty()) {
      val = c;
    } else if (abs(c) > Real(tol_report())) {
      throw ZigZagFailure("e*b did not reduce to a scalar");
    }
  }
  return val;
}

}  // namespace fuscat
