// Command-line front end: solving, verification, tube-algebra checks,
// modular data and quadratic-form fits, character-vector admissibility, and
// the built-in catalog.  Exit codes: 0 pass, 1 check failure, 2 usage/IO.
#include "fuscat/catalog.hpp"
#include "fuscat/charvec.hpp"
#include "fuscat/json_io.hpp"
#include "fuscat/tube.hpp"
#include "fuscat/tube_units.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace fuscat;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  unsigned precision_bits = 256;
  double opt_tol_zero = 1e-30;
  double opt_tol_report = 1e-15;
  std::uint64_t seed = 12345;
  int parallel = 1;
  std::string output_dir;

  void apply() const {
    set_precision_bits(precision_bits);
    tol_zero() = opt_tol_zero;
    tol_report() = opt_tol_report;
  }
};

json read_input_json(const std::string& path) {
  json j;
  if (path.empty() || path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    in >> j;
  }
  return j;
}

std::vector<HIDatum> read_datums(const std::string& input,
                                 const std::string& id) {
  if (!id.empty()) return {catalog_datum(id)};
  json j = read_input_json(input);
  std::vector<HIDatum> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(datum_from_json(e));
  } else {
    out.push_back(datum_from_json(j));
  }
  if (out.empty()) throw std::runtime_error("no datum records in input");
  return out;
}

void emit(const json& j, const GlobalOptions& g, const std::string& name) {
  std::cout << j.dump(1) << "\n";
  if (!g.output_dir.empty()) {
    std::filesystem::create_directories(g.output_dir);
    std::ofstream out(std::filesystem::path(g.output_dir) / name);
    out << j.dump(1) << "\n";
  }
}

GroupSpec parse_group(std::string s) {
  if (!s.empty() && (s[0] == 'Z' || s[0] == 'z')) s = s.substr(1);
  int nu = std::stoi(s);
  if (nu < 1 || nu % 2 == 0) {
    throw CLI::ValidationError("--group", "order must be odd and positive");
  }
  return GroupSpec({nu});
}

int run_solve(const GlobalOptions& g, const std::string& group,
              const std::string& sign_str) {
  const int sign = (sign_str == "-") ? -1 : +1;
  GroupSpec G = parse_group(group);
  std::vector<HIDatum> sols;
  if (G.nu() == 1) {
    sols.push_back(solve_Z1(sign));
  } else {
    sols = solve_small(G, sign);
  }
  json out = json::array();
  for (const auto& d : sols) out.push_back(datum_to_json(d));
  emit(out.size() == 1 ? out[0] : out, g, "solve.json");
  return kExitPass;
}

int run_verify(const GlobalOptions& g, const std::string& input,
               const std::string& id) {
  bool ok = true;
  json out = json::array();
  for (const auto& d : read_datums(input, id)) {
    Report rep = verify_equations(d);
    ok = ok && rep.pass();
    out.push_back(report_to_json(rep));
  }
  emit(out.size() == 1 ? out[0] : out, g, "verify.json");
  return ok ? kExitPass : kExitCheckFailure;
}

int run_classify(const GlobalOptions& g, const std::string& input,
                 const std::string& id) {
  json out = json::array();
  for (const auto& d : read_datums(input, id)) {
    json e;
    e["id"] = d.id.empty() ? "unlabelled" : d.id;
    e["classification"] = classify(d);
    out.push_back(std::move(e));
  }
  emit(out.size() == 1 ? out[0] : out, g, "classify.json");
  return kExitPass;
}

int run_qsystem(const GlobalOptions& g, int nu, std::vector<double> jvals,
                const std::string& id) {
  HIDatum d;
  if (!id.empty()) {
    CatalogRecord r = catalog_record(id);
    if (r.source != "qsystem-j") {
      throw CLI::ValidationError("--id", "not a q-system record: " + id);
    }
    d = r.datum();
  } else {
    QSystemJSpec spec;
    spec.nu = nu;
    for (double v : jvals) spec.j.push_back(Real(v));
    d = from_qsystem_j(spec);
  }
  Report rep = verify_equations(d);
  json out = datum_to_json(d);
  out["verify"] = report_to_json(rep);
  emit(out, g, "qsystem.json");
  return rep.pass() ? kExitPass : kExitCheckFailure;
}

int run_tube(const GlobalOptions& g, const std::string& input,
             const std::string& id, int check_products, bool solve_v,
             bool decompose) {
  bool ok = true;
  json out = json::array();
  for (const auto& d : read_datums(input, id)) {
    TubeAlgebra T(d);
    json e;
    e["id"] = d.id.empty() ? d.group.name() : d.id;
    e["dim"] = T.dim();
    Report table = T.structure_table();
    ok = ok && table.pass();
    e["structure_table"] = report_to_json(table);
    if (check_products > 0) {
      Report assoc = T.check_associativity(check_products, g.seed);
      ok = ok && assoc.pass();
      json a = report_to_json(assoc);
      a["seed"] = g.seed;
      e["associativity"] = std::move(a);
    }
    std::vector<ClassVSolution> hb;
    if (solve_v || decompose) {
      hb = solve_class_v(d, g.seed);
      Report vrep = verify_class_v(d, hb);
      ok = ok && vrep.pass();
      json solutions = json::array();
      for (const auto& s : hb) {
        json se;
        se["w"] = detail::complex_to_json(s.w);
        se["w_order"] = s.w_order;
        json C = json::array();
        for (int r = 0; r < d.nu(); ++r) {
          json row = json::array();
          for (int c = 0; c < d.nu(); ++c) {
            row.push_back(detail::complex_to_json(s.C(r, c)));
          }
          C.push_back(std::move(row));
        }
        se["C"] = std::move(C);
        solutions.push_back(std::move(se));
      }
      e["class_v"] = {{"solutions", std::move(solutions)},
                      {"verify", report_to_json(vrep)}};
    }
    if (decompose) {
      auto blocks = known_blocks(T);
      for (auto& b : class_v_blocks(T, hb)) blocks.push_back(std::move(b));
      Report brep = validate_blocks(T, blocks);
      Report drep = check_decomposition(T, blocks);
      ok = ok && brep.pass() && drep.pass();
      e["blocks"] = report_to_json(brep);
      e["decomposition"] = report_to_json(drep);
    }
    out.push_back(std::move(e));
  }
  emit(out.size() == 1 ? out[0] : out, g, "tube.json");
  return ok ? kExitPass : kExitCheckFailure;
}

int run_modular(const GlobalOptions& g, const std::string& input,
                const std::string& id, bool fit, bool matrices) {
  bool ok = true;
  json out = json::array();
  for (const auto& d : read_datums(input, id)) {
    ModularData md = assemble_ST(d, solve_class_v(d, g.seed));
    json e = modular_to_json(md, matrices);
    e["id"] = d.id.empty() ? d.group.name() : d.id;
    Report axioms = check_axioms(md);
    ok = ok && axioms.pass();
    e["axioms"] = report_to_json(axioms);
    if (fit) {
      auto fits = fit_conjecture1(md);
      ok = ok && !fits.empty();
      e["conjecture1"] = fit_to_json(fits);
    }
    out.push_back(std::move(e));
  }
  emit(out.size() == 1 ? out[0] : out, g, "modular.json");
  return ok ? kExitPass : kExitCheckFailure;
}

int run_charvec(const GlobalOptions& g, const std::string& dataset,
                const std::string& data_dir, bool enumerate, int depth,
                long cap, bool twist_check) {
  CharSeriesData data = load_series(dataset, data_dir);
  json e;
  e["dataset"] = data.id;
  e["params"] = data.params;
  {
    json cs = json::array();
    for (const auto& c : derive_constraints(data)) {
      json ce;
      ce["kind"] = c.kind;
      ce["text"] = c.text;
      ce["citation"] = c.citation;
      cs.push_back(std::move(ce));
    }
    e["constraints"] = std::move(cs);
  }
  if (enumerate) {
    CharEnumeration en = enumerate_admissible(data, depth, cap);
    e["log"] = en.log;
    json adm = json::array();
    for (const auto& v : en.admissible) adm.push_back(v);
    e["admissible"] = std::move(adm);
  }
  if (twist_check) {
    // Compare against both doubles of the matching sign and report the best.
    const int sign = (dataset == "haagerup-c8") ? +1 : -1;
    json checks = json::array();
    for (const auto& d : solve_small(GroupSpec({3}), sign)) {
      ModularData md = assemble_ST(d, solve_class_v(d, g.seed));
      LambdaCheck c = lambda_twist_check(data, md);
      json ce;
      ce["datum"] = d.id;
      ce["twist_mismatches"] = c.twist_mismatches;
      ce["series_mismatches"] = c.series_mismatches;
      ce["log"] = c.log;
      checks.push_back(std::move(ce));
    }
    e["twist_check"] = std::move(checks);
  }
  emit(e, g, "charvec.json");
  return kExitPass;
}

int run_catalog(const GlobalOptions& g, bool list, const std::string& show,
                const std::string& write) {
  if (list) {
    for (const auto& r : catalog()) {
      std::cout << r.id << "  G=" << GroupSpec(r.group).name()
                << "  sign=" << (r.sign > 0 ? "+" : "-")
                << "  source=" << r.source << "  H=";
      for (size_t i = 0; i < r.H.size(); ++i) {
        std::cout << (i ? "x" : "") << "Z" << r.H[i];
      }
      std::cout << "  beta=" << r.beta_label << "\n";
    }
    return kExitPass;
  }
  if (!show.empty()) {
    emit(datum_to_json(catalog_datum(show)), g, "catalog_" + show + ".json");
    return kExitPass;
  }
  if (!write.empty()) {
    // Single-writer serialised catalog dump: assemble everything, then write
    // the file in one shot (last write wins).
    json out = json::array();
    for (const auto& r : catalog()) {
      json e = datum_to_json(r.datum());
      e["meta"]["H"] = r.H;
      e["meta"]["beta"] = r.beta_label;
      out.push_back(std::move(e));
    }
    std::ofstream f(write);
    if (!f) throw std::runtime_error("cannot open catalog file: " + write);
    f << out.dump(1) << "\n";
    std::cout << "wrote " << out.size() << " records to " << write << "\n";
    return kExitPass;
  }
  throw CLI::ValidationError("catalog", "one of --list/--show/--write required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion-category engine: datum solving, tube algebra, modular "
               "data, quadratic-form fits, character vectors"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--precision-bits", g.precision_bits,
                 "working precision in bits")
      ->capture_default_str();
  app.add_option("--tol-zero", g.opt_tol_zero,
                 "scalar equality / pruning tolerance")
      ->capture_default_str();
  app.add_option("--tol-report", g.opt_tol_report,
                 "residual reporting tolerance")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomised checks")
      ->capture_default_str();
  app.add_option("--parallel", g.parallel,
                 "max concurrent stage checks (this build runs sequentially)")
      ->capture_default_str();
  app.add_option("--output", g.output_dir, "directory for JSON report copies");

  // solve
  auto* solve = app.add_subcommand("solve", "solve the datum equations");
  std::string solve_group, solve_sign = "+";
  solve->add_option("--group", solve_group, "cyclic group, e.g. Z1, Z3, Z5")
      ->required();
  solve->add_option("--sign", solve_sign, "'+' or '-'")
      ->check(CLI::IsMember({"+", "-"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the polynomial identity suite");
  std::string verify_input, verify_id;
  verify->add_option("--input", verify_input, "datum JSON file ('-' = stdin)");
  verify->add_option("--id", verify_id, "catalog id instead of a file");

  // classify
  auto* cls = app.add_subcommand("classify", "unitarity classification");
  std::string cls_input, cls_id;
  cls->add_option("--input", cls_input, "datum JSON file ('-' = stdin)");
  cls->add_option("--id", cls_id, "catalog id instead of a file");

  // qsystem
  auto* qs = app.add_subcommand("qsystem", "build a datum from a j-vector");
  int qs_nu = 0;
  std::vector<double> qs_j;
  std::string qs_id;
  qs->add_option("--nu", qs_nu, "group order (odd)");
  qs->add_option("--j", qs_j, "free j-values")->expected(-1);
  qs->add_option("--id", qs_id, "built-in q-system id, e.g. QS-j7");

  // tube
  auto* tube = app.add_subcommand("tube", "tube algebra checks");
  std::string tube_input, tube_id;
  int tube_products = 0;
  bool tube_solve_v = false, tube_decompose = false;
  tube->add_option("--input", tube_input, "datum JSON file ('-' = stdin)");
  tube->add_option("--id", tube_id, "catalog id instead of a file");
  tube->add_option("--check-products", tube_products,
                   "number of random associativity triples")
      ->expected(0, 1)
      ->default_str("500");
  tube->add_flag("--solve-v", tube_solve_v, "solve the final half-braiding class");
  tube->add_flag("--decompose", tube_decompose,
                 "full matrix-unit block decomposition");

  // modular
  auto* mod = app.add_subcommand("modular", "S and T of the double");
  std::string mod_input, mod_id;
  bool mod_fit = false, mod_no_matrices = false;
  mod->add_option("--input", mod_input, "datum JSON file ('-' = stdin)");
  mod->add_option("--id", mod_id, "catalog id instead of a file");
  mod->add_flag("--fit", mod_fit, "fit the quadratic-form pair (H, beta)");
  mod->add_flag("--no-matrices", mod_no_matrices, "omit S from the output");

  // charvec
  auto* cv = app.add_subcommand("charvec", "character-vector admissibility");
  std::string cv_dataset, cv_data_dir = FUSCAT_DATA_DIR;
  bool cv_enumerate = false, cv_twists = false;
  int cv_depth = 3;
  long cv_cap = 6;
  cv->add_option("--dataset", cv_dataset, "haagerup-c8 or nonunitary-c8")
      ->required();
  cv->add_option("--data-dir", cv_data_dir, "dataset directory")
      ->capture_default_str();
  cv->add_flag("--enumerate", cv_enumerate, "enumerate admissible parameters");
  cv->add_option("--depth", cv_depth, "coefficient depth used in filtering")
      ->capture_default_str();
  cv->add_option("--cap", cv_cap, "parameter search cap")->capture_default_str();
  cv->add_flag("--twist-check", cv_twists,
               "compare leading exponents against the engine's twists");

  // catalog
  auto* cat = app.add_subcommand("catalog", "built-in solution catalog");
  bool cat_list = false;
  std::string cat_show, cat_write;
  cat->add_flag("--list", cat_list, "list the built-in records");
  cat->add_option("--show", cat_show, "print one datum by id");
  cat->add_option("--write", cat_write, "write all datums to a JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    g.apply();
    if (*solve) return run_solve(g, solve_group, solve_sign);
    if (*verify) return run_verify(g, verify_input, verify_id);
    if (*cls) return run_classify(g, cls_input, cls_id);
    if (*qs) {
      if (qs_id.empty() && (qs_nu == 0 || qs_j.empty())) {
        throw CLI::ValidationError("qsystem", "--id or (--nu and --j) required");
      }
      return run_qsystem(g, qs_nu, qs_j, qs_id);
    }
    if (*tube) {
      int products = tube->count("--check-products") > 0 && tube_products == 0
                         ? 500
                         : tube_products;
      return run_tube(g, tube_input, tube_id, products, tube_solve_v,
                      tube_decompose);
    }
    if (*mod) return run_modular(g, mod_input, mod_id, mod_fit, !mod_no_matrices);
    if (*cv) {
      return run_charvec(g, cv_dataset, cv_data_dir, cv_enumerate, cv_depth,
                         cv_cap, cv_twists);
    }
    if (*cat) return run_catalog(g, cat_list, cat_show, cat_write);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
