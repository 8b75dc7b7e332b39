#include "lgmf/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

#include "lgmf/demo.hpp"
#include "lgmf/lgmf.hpp"

namespace lgmf::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string file, file_b, out_file, out_dir, target;
  std::string variant = "standard";
  std::string potential, vars, side = "right", var_split;
  std::string phi, psi, demo_set;
  unsigned max_degree = 2;
};

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
    out << "wrote " << path << '\n';
  }
}

// zero | id | scalar:EXPR. In EXPR an undeclared `h` stands for the potential.
Morphism parse_morphism_arg(const std::string& arg, const MatrixFactorization& x,
                             const MatrixFactorization& y) {
  if (arg == "zero") return zero_morphism(x, y);
  auto require_endo = [&] {
    if (!(x == y)) throw ShapeMismatch("'" + arg + "' needs the source as target");
  };
  if (arg == "id") {
    require_endo();
    return identity_morphism(x);
  }
  if (arg.rfind("scalar:", 0) == 0) {
    require_endo();
    const std::string expr = arg.substr(7);
    std::vector<Variable> registry = x.vars();
    const Variable h("h");
    const bool alias = std::find(registry.begin(), registry.end(), h) == registry.end();
    if (alias) registry.push_back(h);
    Polynomial c = parse_poly(expr, registry);
    if (alias) c = substitute(c, {{h, x.potential()}});
    return scalar_morphism(x, c);
  }
  throw std::invalid_argument("morphism must be zero, id or scalar:EXPR, got '" + arg + "'");
}

std::pair<std::vector<Variable>, std::vector<Variable>> parse_split(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--var-split expects A:B");
  return {parse_variable_list(text.substr(0, colon)), parse_variable_list(text.substr(colon + 1))};
}

int cmd_validate(const Options& o, std::ostream& out) {
  MatrixFactorization x = read_factorization(o.file);
  out << "valid: size " << x.size() << ", potential " << x.potential() << '\n';
  return Exit::ok;
}

int cmd_print(const Options& o, std::ostream& out) {
  out << read_factorization(o.file).str();
  return Exit::ok;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  MatrixFactorization t =
      yoshino(read_factorization(o.file), read_factorization(o.file_b), parse_variant(o.variant));
  emit(serialize(t), o.out_file, out);
  return Exit::ok;
}

int cmd_unit(const Options& o, std::ostream& out) {
  auto vars = parse_variable_list(o.vars);
  UnitFactorization u = koszul_unit(parse_poly(o.potential, vars), vars);
  emit(serialize(u.mf), o.out_file, out);
  return Exit::ok;
}

int cmd_unitor(const Options& o, std::ostream& out) {
  MatrixFactorization x = read_factorization(o.file);
  auto [f_vars, g_vars] = parse_split(o.var_split);
  const bool right = o.side == "right";
  const auto& glue_vars = right ? f_vars : g_vars;
  Polynomial h = parse_poly(o.potential, glue_vars);
  UnitorBundle b = right ? unitor_right(x, h, glue_vars) : unitor_left(x, h, glue_vars);

  const bool rho_ok = validate_morphism(b.rho).ok();
  const bool psi_ok = validate_morphism(b.psi).ok();
  const bool left_inverse = compose_morphisms(b.rho, b.psi) == identity_morphism(x);
  const bool two_sided = compose_morphisms(b.psi, b.rho) == identity_morphism(b.z);
  const char* name = right ? "rho" : "lambda";

  out << "Z: size " << b.z.size() << ", potential " << b.z.potential() << '\n';
  out << name << " is a morphism: " << pass_fail(rho_ok) << '\n';
  out << "psi is a morphism: " << pass_fail(psi_ok) << '\n';
  out << name << "∘psi = id: " << pass_fail(left_inverse) << "; psi∘" << name
      << " = id: " << (two_sided ? "PASS (unexpected)" : "FAIL (expected)") << '\n';

  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    write_text(fs::path(o.out_dir) / "z.json", serialize(b.z));
    write_text(fs::path(o.out_dir) / (std::string(name) + ".json"), serialize(b.rho));
    write_text(fs::path(o.out_dir) / "psi.json", serialize(b.psi));
    out << "wrote z.json, " << name << ".json, psi.json to " << o.out_dir << '\n';
  }
  return rho_ok && psi_ok && left_inverse && !two_sided ? Exit::ok : Exit::check_failed;
}

int cmd_homotopy(const Options& o, std::ostream& out) {
  MatrixFactorization x = read_factorization(o.file);
  MatrixFactorization y = o.target.empty() ? x : read_factorization(o.target);
  Morphism phi = parse_morphism_arg(o.phi, x, y);
  Morphism psi = parse_morphism_arg(o.psi, x, y);
  for (const auto* m : {&phi, &psi}) {
    auto report = validate_morphism(*m);
    if (!report.ok()) {
      out << "input is not a morphism:\n" << report.str() << '\n';
      return Exit::check_failed;
    }
  }
  WitnessSearch s = find_witness(x, y, phi, psi, o.max_degree);
  if (!s.found()) {
    out << "NotFoundWithinDegree (max degree " << o.max_degree << ", " << s.unknowns
        << " unknowns, " << s.equations << " equations)\n";
    return Exit::check_failed;
  }
  const HomotopyWitness& w = *s.witness;
  out << "witness found (max degree " << o.max_degree << ")\n";
  out << "lambda0: " << to_string(w.lambda0) << '\n';
  out << "lambda1: " << to_string(w.lambda1) << '\n';
  out << "check: " << pass_fail(check_witness(x, y, phi, psi, w).ok()) << '\n';
  return Exit::ok;
}

int cmd_demo(const Options&, std::ostream& out) {
  return run_worked_examples(out) == 0 ? Exit::ok : Exit::check_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix factorizations of polynomials: validation, tensor products, units, "
               "unitors and homotopies"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto* validate = app.add_subcommand("validate", "Check that a factorization file factors its potential");
  validate->add_option("file", o.file, "Factorization JSON")->required();
  validate->callback([&] { action = cmd_validate; });

  auto* print = app.add_subcommand("print", "Render a factorization file as text");
  print->add_option("file", o.file, "Factorization JSON")->required();
  print->callback([&] { action = cmd_print; });

  auto* tensor = app.add_subcommand("tensor", "Tensor product of two factorizations");
  tensor->add_option("--variant", o.variant, "standard, v1, v2 or v3")
      ->check(CLI::IsMember({"standard", "v1", "v2", "v3"}));
  tensor->add_option("a", o.file, "First factor")->required();
  tensor->add_option("b", o.file_b, "Second factor")->required();
  tensor->add_option("-o,--out", o.out_file, "Output file (default: stdout)");
  tensor->callback([&] { action = cmd_tensor; });

  auto* unit = app.add_subcommand("unit", "Koszul unit factorization of a potential");
  unit->add_option("--potential", o.potential, "Polynomial f")->required();
  unit->add_option("--vars", o.vars, "Ordered variables, e.g. x,y")->required();
  unit->add_option("-o,--out", o.out_file, "Output file (default: stdout)");
  unit->callback([&] { action = cmd_unit; });

  auto* unitor = app.add_subcommand("unitor", "Build a unitor and its right inverse and check them");
  unitor->add_option("--side", o.side, "right or left")->check(CLI::IsMember({"right", "left"}));
  unitor->add_option("file", o.file, "Factorization of g - f")->required();
  unitor->add_option("--potential", o.potential, "f (right side) or g (left side)")->required();
  unitor->add_option("--var-split", o.var_split, "f-side:g-side variables, e.g. x:z")->required();
  unitor->add_option("--out-dir", o.out_dir, "Write Z, the unitor and psi here");
  unitor->callback([&] { action = cmd_unitor; });

  auto* homotopy = app.add_subcommand("homotopy", "Search for a homotopy between two morphisms");
  homotopy->add_option("file", o.file, "Source factorization")->required();
  homotopy->add_option("--target", o.target, "Target factorization (default: the source)");
  homotopy->add_option("--phi", o.phi, "zero, id or scalar:EXPR")->required();
  homotopy->add_option("--psi", o.psi, "zero, id or scalar:EXPR")->required();
  homotopy->add_option("--max-degree", o.max_degree, "Degree bound for witness entries");
  homotopy->callback([&] { action = cmd_homotopy; });

  auto* demo = app.add_subcommand("demo", "Replay the worked examples");
  demo->add_option("set", o.demo_set, "Example set")->required()->check(CLI::IsMember({"paper"}));
  demo->callback([&] { action = cmd_demo; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    return action(o, out);
  } catch (const NotAFactorization& e) {
    err << "error: " << e.what() << '\n';
    return Exit::check_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return Exit::usage;
  }
}

}  // namespace lgmf::cli
