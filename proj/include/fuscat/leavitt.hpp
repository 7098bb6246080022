// The Leavitt algebra L_{nu+1} on generators s, s', t_g, t'_g (g in the
// configured odd abelian group) as a noncommutative rewriting system with
// canonical reduced normal forms:
//
//   s' s = 1,   t'_g t_h = delta_{g,h},   s' t_g = t'_g s = 0,
//   s s' + sum_g t_g t'_g = 1.
//
// A word is reduced iff no primed generator appears to the left of an
// unprimed one and no adjacent pair s s' occurs.  Every element has a unique
// reduced form; the engine's rewriting strategy first removes all
// primed-before-unprimed inversions (each step shortens the word) and then
// substitutes s s' -> 1 - sum_g t_g t'_g left-to-right (never creating new
// inversions to the left of the substitution point), which terminates.
#pragma once

#include "fuscat/group.hpp"
#include "fuscat/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace fuscat {

// Generator kinds.  A letter is packed into one byte: kind << 6 | g, which
// accommodates every group in use (nu <= 19 for built-in data).
enum class GK : uint8_t { S = 0, Sp = 1, T = 2, Tp = 3 };

using Letter = uint8_t;

inline Letter letter(GK k, int g = 0) {
  return static_cast<Letter>((static_cast<int>(k) << 6) | g);
}
inline GK kind(Letter l) { return static_cast<GK>(l >> 6); }
inline int gidx(Letter l) { return l & 0x3f; }
inline bool is_primed(Letter l) {
  return kind(l) == GK::Sp || kind(l) == GK::Tp;
}
inline Letter primed(Letter l) {
  switch (kind(l)) {
    case GK::S:
      return letter(GK::Sp);
    case GK::Sp:
      return letter(GK::S);
    case GK::T:
      return letter(GK::Tp, gidx(l));
    case GK::Tp:
      return letter(GK::T, gidx(l));
  }
  return l;
}

// A word in the generators; std::string gives small-buffer storage, cheap
// hashing and lexicographic comparison.
using LWord = std::string;

inline LWord word_of(std::initializer_list<Letter> ls) {
  return LWord(ls.begin(), ls.end());
}

inline std::string pretty(const LWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += " ";
    switch (kind(l)) {
      case GK::S:
        out += "s";
        break;
      case GK::Sp:
        out += "s'";
        break;
      case GK::T:
        out += "t[" + std::to_string(gidx(l)) + "]";
        break;
      case GK::Tp:
        out += "t'[" + std::to_string(gidx(l)) + "]";
        break;
    }
  }
  return out;
}

// Which occurrence the reducer picks when several rewrites apply; the two
// orders must agree (Lemma-style normal-form uniqueness) and this is tested.
enum class ReduceOrder { Leftmost, Rightmost };

class LElement {
 public:
  using Terms = std::unordered_map<LWord, Complex>;

  LElement() = default;

  static LElement zero() { return LElement{}; }
  static LElement unit() {
    LElement e;
    e.terms_[LWord{}] = Complex{Real(1)};
    return e;
  }
  // A single generator (assumed reduced, which single letters always are).
  static LElement gen(GK k, int g = 0) {
    LElement e;
    e.terms_[LWord(1, letter(k, g))] = Complex{Real(1)};
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const LWord& w, const Complex& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
    }
  }

  void prune(double tol = tol_zero()) {
    Real t(tol);
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (abs(it->second) < t) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  LElement& operator+=(const LElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    prune();
    return *this;
  }
  LElement& operator-=(const LElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    prune();
    return *this;
  }
  LElement& operator*=(const Complex& c) {
    for (auto& [w, v] : terms_) v *= c;
    prune();
    return *this;
  }

  friend LElement operator+(LElement a, const LElement& b) { return a += b; }
  friend LElement operator-(LElement a, const LElement& b) { return a -= b; }
  friend LElement operator*(LElement a, const Complex& c) { return a *= c; }
  friend LElement operator*(const Complex& c, LElement a) { return a *= c; }

  // Largest coefficient magnitude (0 for the zero element).
  Real max_abs() const {
    Real m = 0;
    for (const auto& [w, c] : terms_) {
      Real a = abs(c);
      if (a > m) m = a;
    }
    return m;
  }

  std::string pretty_str(unsigned digits = 8) const {
    if (terms_.empty()) return "0";
    // Sort words for stable output.
    std::vector<const Terms::value_type*> items;
    for (const auto& kv : terms_) items.push_back(&kv);
    std::sort(items.begin(), items.end(),
              [](auto* a, auto* b) { return a->first < b->first; });
    std::string out;
    for (auto* kv : items) {
      if (!out.empty()) out += " + ";
      out += to_string(kv->second, digits) + "*" + pretty(kv->first);
    }
    return out;
  }

 private:
  Terms terms_;
};

// Rewrites one unreduced word (times coeff) into `out`, using an explicit
// work stack.  `nu` is the group order (needed by the s s' substitution).
inline void reduce_word_into(const GroupSpec& G, LWord w, Complex coeff,
                             LElement& out,
                             ReduceOrder order = ReduceOrder::Leftmost) {
  struct Item {
    LWord w;
    Complex c;
  };
  std::vector<Item> stack;
  stack.push_back({std::move(w), std::move(coeff)});
  const int nu = G.nu();
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    LWord& cur = item.w;
    bool redone = true;
    while (redone) {
      redone = false;
      // Phase 1: adjacent primed-unprimed pair.
      int found = -1;
      const int last = static_cast<int>(cur.size()) - 1;
      if (order == ReduceOrder::Leftmost) {
        for (int i = 0; i < last; ++i) {
          if (is_primed(cur[i]) && !is_primed(cur[i + 1])) {
            found = i;
            break;
          }
        }
      } else {
        for (int i = last - 1; i >= 0; --i) {
          if (is_primed(cur[i]) && !is_primed(cur[i + 1])) {
            found = i;
            break;
          }
        }
      }
      if (found >= 0) {
        GK a = kind(cur[found]), b = kind(cur[found + 1]);
        bool drop = false;
        if (a == GK::Sp && b == GK::S) {
          // s' s -> 1
        } else if (a == GK::Tp && b == GK::T) {
          if (gidx(cur[found]) != gidx(cur[found + 1])) drop = true;
        } else {
          drop = true;  // s' t = 0, t' s = 0
        }
        if (drop) {
          cur.clear();
          item.c = Complex{};
          break;
        }
        cur.erase(static_cast<size_t>(found), 2);
        redone = true;
        continue;
      }
      // Phase 2: adjacent s s' pair.
      found = -1;
      if (order == ReduceOrder::Leftmost) {
        for (int i = 0; i < last; ++i) {
          if (kind(cur[i]) == GK::S && kind(cur[i + 1]) == GK::Sp) {
            found = i;
            break;
          }
        }
      } else {
        for (int i = last - 1; i >= 0; --i) {
          if (kind(cur[i]) == GK::S && kind(cur[i + 1]) == GK::Sp) {
            found = i;
            break;
          }
        }
      }
      if (found >= 0) {
        // s s' -> 1 - sum_g t_g t'_g ; push the branches.
        LWord base = cur;
        base.erase(static_cast<size_t>(found), 2);
        for (int g = 0; g < nu; ++g) {
          LWord tg = cur;
          tg[static_cast<size_t>(found)] = letter(GK::T, g);
          tg[static_cast<size_t>(found) + 1] = letter(GK::Tp, g);
          stack.push_back({std::move(tg), -item.c});
        }
        cur = std::move(base);
        redone = true;
        continue;
      }
    }
    if (!(item.c.re == 0 && item.c.im == 0)) out.add_term(cur, item.c);
  }
}

inline LElement reduce(const GroupSpec& G, const LElement& e,
                       ReduceOrder order = ReduceOrder::Leftmost) {
  LElement out;
  for (const auto& [w, c] : e.terms()) reduce_word_into(G, w, c, out, order);
  out.prune();
  return out;
}

inline LElement mul(const GroupSpec& G, const LElement& a, const LElement& b) {
  LElement out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      LWord w = wa;
      w += wb;
      reduce_word_into(G, std::move(w), ca * cb, out);
    }
  }
  out.prune();
  return out;
}

// The *-operation: conjugate-linear anti-homomorphism x -> x'.
inline LElement star(const LElement& a) {
  LElement out;
  for (const auto& [w, c] : a.terms()) {
    LWord r(w.rbegin(), w.rend());
    for (auto& l : r) l = primed(static_cast<Letter>(l));
    out.add_term(r, conj(c));
  }
  return out;
}

inline bool equal(const LElement& a, const LElement& b,
                  double tol = tol_zero()) {
  LElement d = a;
  d -= b;
  Real scale = 1;
  if (a.max_abs() > scale) scale = a.max_abs();
  if (b.max_abs() > scale) scale = b.max_abs();
  return d.max_abs() < Real(tol) * scale;
}

// Residual distance used in reports: max coefficient of a - b.
inline Real distance(const LElement& a, const LElement& b) {
  LElement d = a;
  d -= b;
  return d.max_abs();
}

// Random (unreduced) word for property tests.
inline LWord random_word(std::mt19937_64& rng, const GroupSpec& G,
                         int max_len = 10) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<int> g_dist(0, G.nu() - 1);
  int len = len_dist(rng);
  LWord w;
  for (int i = 0; i < len; ++i) {
    GK k = static_cast<GK>(kind_dist(rng));
    int g = (k == GK::T || k == GK::Tp) ? g_dist(rng) : 0;
    w.push_back(static_cast<char>(letter(k, g)));
  }
  return w;
}

}  // namespace fuscat
