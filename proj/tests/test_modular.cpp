#include "fuscat/modular.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fuscat;

namespace {

ModularData make_md(const HIDatum& d) {
  return assemble_ST(d, solve_class_v(d));
}

}  // namespace

TEST_CASE("trivial group modular data") {
  ModularData md = make_md(solve_Z1(+1));
  REQUIRE(md.size() == 4);
  // T = diag(1, 1, e^{4 pi i/5}, e^{6 pi i/5}) up to d-label order.
  REQUIRE(abs(md.T[0] - Complex{Real(1)}) < Real("1e-40"));
  REQUIRE(abs(md.T[1] - Complex{Real(1)}) < Real("1e-40"));
  std::vector<Complex> expect{unit_phase(Real(2) / 5), unit_phase(Real(3) / 5)};
  for (int i = 2; i < 4; ++i) {
    Real best = 10;
    for (const auto& e : expect) {
      Real r = abs(md.T[i] - e);
      if (r < best) best = r;
    }
    REQUIRE(best < Real("1e-40"));
  }
  Report rep = check_axioms(md);
  INFO(rep.summary());
  REQUIRE(rep.pass());
  // Unitary datum: the vacuum column is the positive one.
  auto cols = positive_columns(md);
  REQUIRE(std::find(cols.begin(), cols.end(), 0) != cols.end());
}

TEST_CASE("Z3 modular axioms") {
  for (int sign : {+1, -1}) {
    for (const auto& d : solve_small(GroupSpec({3}), sign)) {
      ModularData md = make_md(d);
      REQUIRE(md.size() == 12);
      Report rep = check_axioms(md);
      INFO(rep.summary());
      REQUIRE(rep.pass());
      auto cols = positive_columns(md);
      if (sign > 0) {
        REQUIRE(std::find(cols.begin(), cols.end(), 0) != cols.end());
      } else {
        // Non-unitary double: the positive column is the second primary.
        REQUIRE(std::find(cols.begin(), cols.end(), 1) != cols.end());
      }
    }
  }
}

TEST_CASE("left-inverse crosscheck") {
  for (int sign : {+1, -1}) {
    {
      Report rep = sdef_crosscheck(make_md(solve_Z1(sign)));
      INFO(rep.summary());
      REQUIRE(rep.pass());
    }
    for (const auto& d : solve_small(GroupSpec({3}), sign)) {
      Report rep = sdef_crosscheck(make_md(d));
      INFO(rep.summary());
      REQUIRE(rep.pass());
    }
  }
}

TEST_CASE("alternate diagonal S expression") {
  for (int sign : {+1, -1}) {
    {
      Report rep = alternate_diagonal_check(make_md(solve_Z1(sign)));
      INFO(rep.summary());
      REQUIRE(rep.pass());
    }
    for (const auto& d : solve_small(GroupSpec({3}), sign)) {
      Report rep = alternate_diagonal_check(make_md(d));
      INFO(rep.summary());
      REQUIRE(rep.pass());
    }
  }
}

TEST_CASE("verlinde ring is commutative and associative") {
  ModularData md = make_md(solve_small(GroupSpec({3}), -1)[0]);
  auto N = verlinde_tensor(md);
  const int L = md.size();
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      for (int k = 0; k < L; ++k) {
        REQUIRE(N[i][j][k] == N[j][i][k]);
        REQUIRE(N[i][j][k] >= 0);
      }
    }
  }
  // Identity column.
  for (int j = 0; j < L; ++j) {
    for (int k = 0; k < L; ++k) {
      REQUIRE(N[0][j][k] == (j == k ? 1 : 0));
    }
  }
  // Associativity.
  for (int a = 0; a < L; ++a) {
    for (int b = 0; b < L; ++b) {
      for (int c = 0; c < L; ++c) {
        for (int dd = 0; dd < L; ++dd) {
          long long lhs = 0, rhs = 0;
          for (int e = 0; e < L; ++e) {
            lhs += N[a][b][e] * N[e][c][dd];
            rhs += N[b][c][e] * N[a][e][dd];
          }
          REQUIRE(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("form enumeration") {
  {
    auto forms = enumerate_forms(5);
    REQUIRE(forms.size() == 2);
    REQUIRE(forms[0].factors == std::vector<int>{5});
    std::vector<long> ks{forms[0].coeff[0], forms[1].coeff[0]};
    std::sort(ks.begin(), ks.end());
    REQUIRE(ks == std::vector<long>{1, 2});
  }
  {
    auto forms = enumerate_forms(13);
    REQUIRE(forms.size() == 2);
  }
  {
    auto groups = enumerate_abelian_groups(125);
    REQUIRE(groups.size() == 3);  // Z125, Z25xZ5, Z5^3
  }
}

TEST_CASE("conjecture-1 fits for the trivial group") {
  {
    auto fits = fit_conjecture1(make_md(solve_Z1(+1)));
    REQUIRE(fits.size() == 1);
    REQUIRE(fits[0].form.factors == std::vector<int>{5});
    REQUIRE(fits[0].form.coeff == std::vector<long>{1});
  }
  {
    auto fits = fit_conjecture1(make_md(solve_Z1(-1)));
    REQUIRE(fits.size() == 1);
    REQUIRE(fits[0].form.coeff == std::vector<long>{2});
  }
}

TEST_CASE("conjecture-1 fits for Z3") {
  for (int sign : {+1, -1}) {
    for (const auto& d : solve_small(GroupSpec({3}), sign)) {
      auto fits = fit_conjecture1(make_md(d));
      REQUIRE(fits.size() == 1);
      REQUIRE(fits[0].form.factors == std::vector<int>{13});
      REQUIRE(fits[0].form.coeff ==
              std::vector<long>{sign > 0 ? 1 : 2});
    }
  }
}

TEST_CASE("galois pairing of twist spectra") {
  // The '+' and '-' twist sets are related by squaring (k -> 2k in the
  // exponent of the fitted form).
  for (const GroupSpec& G : {GroupSpec({1}), GroupSpec({3})}) {
    std::vector<std::vector<ClassVSolution>> plus, minus;
    if (G.nu() == 1) {
      plus.push_back(solve_class_v(solve_Z1(+1)));
      minus.push_back(solve_class_v(solve_Z1(-1)));
    } else {
      for (const auto& d : solve_small(G, +1)) plus.push_back(solve_class_v(d));
      for (const auto& d : solve_small(G, -1)) {
        minus.push_back(solve_class_v(d));
      }
    }
    for (const auto& p : plus) {
      bool found = false;
      for (const auto& q : minus) {
        bool all = true;
        for (const auto& sp : p) {
          Complex sq = sp.w * sp.w;
          bool hit = false;
          for (const auto& sm : q) {
            if (abs(sq - sm.w) < Real("1e-30")) hit = true;
          }
          if (!hit) all = false;
        }
        if (all) found = true;
      }
      REQUIRE(found);
    }
  }
}
