// Finite abelian groups of odd order: element arithmetic (including the
// division by 2 that the odd-order hypothesis makes available), characters,
// and automorphism enumeration.
#pragma once

#include "fuscat/scalar.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuscat {

// Elements are flat indices 0..nu-1 in mixed radix over the cyclic factors.
struct GroupSpec {
  std::vector<int> cyclic_factors;  // each odd, >= 1

  explicit GroupSpec(std::vector<int> factors = {1})
      : cyclic_factors(std::move(factors)) {
    for (int f : cyclic_factors) {
      if (f < 1 || f % 2 == 0) {
        throw std::invalid_argument("group factors must be odd and positive");
      }
    }
    nu_ = 1;
    for (int f : cyclic_factors) nu_ *= f;
    // Componentwise inverse of 2 (exists since every factor is odd).
    for (int f : cyclic_factors) inv2_.push_back((f + 1) / 2);
    // Flat operation tables; group ops sit inside high-arity index loops.
    add_.resize(static_cast<size_t>(nu_) * nu_);
    neg_.resize(nu_);
    half_.resize(nu_);
    for (int a = 0; a < nu_; ++a) {
      neg_[a] = neg_slow(a);
      half_[a] = half_slow(a);
      for (int b = 0; b < nu_; ++b) {
        add_[static_cast<size_t>(a) * nu_ + b] = add_slow(a, b);
      }
    }
  }

  int nu() const { return nu_; }
  int n() const { return (nu_ - 1) / 2; }

  // #{g : 3g = 0}
  int n3() const {
    int c = 0;
    for (int g = 0; g < nu_; ++g) {
      if (mul_int(3, g) == 0) ++c;
    }
    return c;
  }

  std::vector<int> unpack(int g) const {
    std::vector<int> d(cyclic_factors.size());
    for (size_t i = 0; i < cyclic_factors.size(); ++i) {
      d[i] = g % cyclic_factors[i];
      g /= cyclic_factors[i];
    }
    return d;
  }
  int pack(const std::vector<int>& d) const {
    int g = 0;
    for (size_t i = cyclic_factors.size(); i-- > 0;) {
      g = g * cyclic_factors[i] + (d[i] % cyclic_factors[i]);
    }
    return g;
  }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * nu_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int half(int a) const { return half_[a]; }
  int mul_int(long long k, int a) const {
    auto d = unpack(a);
    for (size_t i = 0; i < d.size(); ++i) {
      long long f = cyclic_factors[i];
      d[i] = static_cast<int>((((k % f) * d[i]) % f + f) % f);
    }
    return pack(d);
  }

  // Character k evaluated at g: exp(2 pi i sum_i k_i g_i / f_i).
  Complex character(int k, int g) const {
    auto dk = unpack(k), dg = unpack(g);
    Real t = 0;
    for (size_t i = 0; i < dk.size(); ++i) {
      t += Real(static_cast<long long>(dk[i]) * dg[i]) / cyclic_factors[i];
    }
    return unit_phase(t);
  }

  // All automorphisms, as permutations of {0..nu-1}; brute force over images
  // of the standard generators.  Complete for the group sizes in use.
  std::vector<std::vector<int>> automorphisms() const {
    const size_t k = cyclic_factors.size();
    std::vector<std::vector<int>> result;
    // Iterate over all k-tuples of generator images.
    std::vector<int> idx(k, 0);
    while (true) {
      // Build candidate map from generator images idx[].
      std::vector<int> perm(nu_);
      std::vector<char> seen(nu_, 0);
      bool ok = true;
      for (int g = 0; g < nu_ && ok; ++g) {
        auto d = unpack(g);
        int img = 0;
        for (size_t i = 0; i < k; ++i) {
          img = add(img, mul_int(d[i], idx[i]));
        }
        perm[g] = img;
        if (seen[img]) ok = false;
        seen[img] = 1;
      }
      if (ok) result.push_back(perm);
      // Advance.
      size_t i = 0;
      for (; i < k; ++i) {
        if (++idx[i] < nu_) break;
        idx[i] = 0;
      }
      if (i == k) break;
    }
    return result;
  }

  std::string name() const {
    std::string s;
    for (size_t i = 0; i < cyclic_factors.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(cyclic_factors[i]);
    }
    return s;
  }

 private:
  int add_slow(int a, int b) const {
    auto da = unpack(a), db = unpack(b);
    for (size_t i = 0; i < da.size(); ++i) {
      da[i] = (da[i] + db[i]) % cyclic_factors[i];
    }
    return pack(da);
  }
  int neg_slow(int a) const {
    auto d = unpack(a);
    for (size_t i = 0; i < d.size(); ++i) {
      d[i] = (cyclic_factors[i] - d[i]) % cyclic_factors[i];
    }
    return pack(d);
  }
  int half_slow(int a) const {
    auto d = unpack(a);
    for (size_t i = 0; i < d.size(); ++i) {
      d[i] = (d[i] * inv2_[i]) % cyclic_factors[i];
    }
    return pack(d);
  }

  int nu_ = 1;
  std::vector<int> inv2_;
  std::vector<int> add_, neg_, half_;
};

}  // namespace fuscat
