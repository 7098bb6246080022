#include "fuscat/catalog.hpp"
#include "fuscat/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace fuscat;

TEST_CASE("catalog inventory") {
  auto cat = catalog();
  REQUIRE(cat.size() == 20);
  std::set<std::string> ids;
  int classified = 0, qsystem = 0;
  for (const auto& r : cat) {
    REQUIRE(ids.insert(r.id).second);
    if (r.source == "classified") {
      ++classified;
      REQUIRE(r.j.empty());
    } else {
      REQUIRE(r.source == "qsystem-j");
      ++qsystem;
      // nu = 2n + 1 free values j_2 .. j_{n+1} -> (nu - 3) / 2 ... the
      // gauge-fixed count is (nu - 3) / 2 + 1.
      REQUIRE(static_cast<int>(r.j.size()) == (r.group[0] - 1) / 2);
    }
    // |H| = nu^2 + 4 in every record.
    long order = 1;
    for (int f : r.H) order *= f;
    REQUIRE(order == static_cast<long>(r.group[0]) * r.group[0] + 4);
    REQUIRE(r.H.size() == r.beta.size());
  }
  REQUIRE(classified == 10);
  REQUIRE(qsystem == 10);
  REQUIRE_THROWS_AS(catalog_record("Z7+1"), CatalogMismatch);
}

TEST_CASE("classified catalog datums verify") {
  for (const std::string& id : {"Z1+1", "Z1-1", "Z3+1", "Z3-2", "Z5-1"}) {
    HIDatum d = catalog_datum(id);
    Report rep = verify_equations(d);
    INFO(id << ": " << rep.summary());
    REQUIRE(rep.pass());
  }
  REQUIRE(classify(catalog_datum("Z3-1")) == "hermitian-nonunitary");
  REQUIRE(classify(catalog_datum("Z3+2")) == "unitary");
}

TEST_CASE("q-system catalog datum verifies") {
  HIDatum d = catalog_datum("QS-j7");
  REQUIRE(d.nu() == 7);
  Report rep = verify_equations(d);
  INFO(rep.summary());
  REQUIRE(rep.pass());
}

TEST_CASE("datum JSON round trip") {
  HIDatum d = catalog_datum("Z3-1");
  json j = datum_to_json(d);
  // Force a serialisation round trip through text.
  json j2 = json::parse(j.dump());
  HIDatum d2 = datum_from_json(j2);
  REQUIRE(d2.group.nu() == d.group.nu());
  REQUIRE(d2.sign == d.sign);
  REQUIRE(abs(d2.b - d.b) < Real("1e-40"));
  for (int g = 0; g < d.nu(); ++g) {
    for (int h = 0; h < d.nu(); ++h) {
      REQUIRE(abs(d2.a(g, h) - d.a(g, h)) < Real("1e-40"));
    }
  }
  REQUIRE(j.at("meta").at("classification") == "hermitian-nonunitary");
}

TEST_CASE("datum JSON validation") {
  json j = datum_to_json(catalog_datum("Z1+1"));
  j["sign"] = "?";
  REQUIRE_THROWS_AS(datum_from_json(j), std::invalid_argument);
  j["sign"] = "+";
  j["A"] = json::array();
  REQUIRE_THROWS_AS(datum_from_json(j), std::invalid_argument);
}

TEST_CASE("report and modular JSON") {
  HIDatum d = solve_Z1(+1);
  Report rep = verify_equations(d);
  json j = report_to_json(rep);
  REQUIRE(j.at("pass").get<bool>());
  REQUIRE(j.at("items").size() == rep.items.size());

  ModularData md = assemble_ST(d, solve_class_v(d));
  json m = modular_to_json(md);
  REQUIRE(m.at("labels").size() == 4);
  REQUIRE(m.at("S").size() == 4);
  json f = fit_to_json(fit_conjecture1(md));
  REQUIRE(f.size() == 1);
  REQUIRE(f[0].at("H") == json::array({5}));
}

TEST_CASE("diagonal form equivalence across factorisations") {
  // kl/85 splits by CRT as 7kl/17 + 3kl/5, i.e. classes (3 mod 17, 2 mod 5).
  REQUIRE(form_equivalent({{85}, {1}}, {{17, 5}, {3, 2}}));
  // 12kl/85 splits as 84kl/17 + 36kl/5 = squares times (kl/17 + kl/5).
  REQUIRE(form_equivalent({{85}, {12}}, {{17, 5}, {1, 1}}));
  REQUIRE_FALSE(form_equivalent({{85}, {1}}, {{17, 5}, {1, 1}}));
  // Same factor: coefficients equivalent iff in the same square class.
  REQUIRE(form_equivalent({{5}, {1}}, {{5}, {4}}));
  REQUIRE_FALSE(form_equivalent({{5}, {1}}, {{5}, {2}}));
  REQUIRE_FALSE(form_equivalent({{125}, {1}}, {{25, 5}, {1, 1}}));
}
