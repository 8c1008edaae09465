#include "algdil/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "algdil/kernels.hpp"
#include "algdil/verify.hpp"

namespace algdil::cli {

namespace {

using Grid = std::vector<std::vector<std::string>>;

struct RunOptions {
  std::string input;
  std::string out;
  unsigned max_power = 4;
  unsigned trunc = 5;
  unsigned trials = 8;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::optional<unsigned> dump_operators;
};

struct GenOptions {
  std::string kind = "polynomial";
  std::size_t dim = 2;
  std::string field = "Q";
  std::uint64_t seed = 0;
  unsigned max_degree = 3;
  unsigned height = 5;
  std::string out;
};

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  if (j.is_object() && j.contains("kind")) {
    const auto kind = j["kind"].get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") return FieldSpec::prime(j.at("modulus").get<std::uint64_t>());
  }
  throw ParseError("\"field\" must be \"Q\", \"GF(p)\" or {\"kind\": ..., \"modulus\": ...}");
}

Grid grid_from_json(const json& j, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim) {
    throw ParseError(std::string(what) + " must be a " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " array of scalar strings");
  }
  Grid g;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim) {
      throw ParseError(std::string(what) + ": every row needs " + std::to_string(dim) + " entries");
    }
    auto& out = g.emplace_back();
    for (const auto& e : row) {
      if (e.is_string()) {
        out.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        out.push_back(e.dump());
      } else {
        throw ParseError(std::string(what) + ": entries must be scalar strings or integers");
      }
    }
  }
  return g;
}

template <class Field>
Matrix<Field> parse_grid(const Field& f, const Grid& g) {
  std::vector<std::vector<typename Field::Element>> rows;
  for (const auto& row : g) {
    auto& out = rows.emplace_back();
    for (const auto& e : row) out.push_back(f.parse(e));
  }
  Matrix<Field> m = Matrix<Field>::from_rows(f, rows);
  if (g.empty()) m = Matrix<Field>(f, 0, 0);
  return m;
}

template <class Field>
std::pair<Matrix<Field>, std::optional<Matrix<Field>>> resolve(const Field& f,
                                                               const ProblemFile& p) {
  if (p.recipe) {
    auto [t, s] = gen_pair(f, *p.recipe);
    return {std::move(t), std::move(s)};
  }
  std::optional<Matrix<Field>> s;
  if (p.s) s = parse_grid(f, *p.s);
  return {parse_grid(f, *p.t), std::move(s)};
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
  return ProblemFile::from_json(j);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write output file: " + path);
  f << text;
}

json meta_for(const char* command, const ProblemFile& p) {
  json meta = {{"command", command}};
  if (p.recipe) {
    meta["recipe"] = recipe_to_json(*p.recipe);
  } else {
    meta["source"] = "explicit";
  }
  return meta;
}

std::string render(const Report& r, const std::string& format) {
  return format == "text" ? r.render_text() : r.serialize();
}

CheckParams to_params(const RunOptions& o) {
  CheckParams p;
  p.max_power = o.max_power;
  p.max_trunc = o.trunc;
  p.trials = o.trials;
  p.seed = o.seed;
  return p;
}

int cmd_sznagy(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  const ProblemFile problem = load_problem(opt.input);
  if (problem.s) err << "warning: S is ignored by the sznagy command\n";
  return visit_field(problem.field, [&](const auto& f) {
    auto [t, s] = resolve(f, problem);
    Report report;
    report.meta = meta_for("sznagy", problem);
    report.meta.update({{"field", problem.field.name()}, {"dim", problem.dim}});
    report.meta.update(to_params(opt).to_json());
    report.append(check_sznagy(t, to_params(opt)));
    write_text(opt.out, render(report, opt.format), out);
    return report.pass() ? kPass : kCheckFailed;
  });
}

std::string operators_path(const std::string& out) {
  if (out.empty() || out == "-") return "operators.json";
  return out + ".operators.json";
}

int cmd_ando(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  const ProblemFile problem = load_problem(opt.input);
  const CheckParams params = to_params(opt);
  params.validate_for_ando();
  return visit_field(problem.field, [&](const auto& f) {
    using Field = std::decay_t<decltype(f)>;
    auto [t, s] = resolve(f, problem);
    if (!s) throw ParseError("the ando command needs both T and S");
    if (!check_commute(t, *s)) {
      err << "error: T and S do not commute; the Ando construction requires T*S = S*T\n";
      return kNotCommuting;
    }
    const auto ops = AndoDilation<Field>::build(t, *s);
    Report report = check_ando(ops, params);
    report.meta.update(meta_for("ando", problem));
    write_text(opt.out, render(report, opt.format), out);

    if (opt.dump_operators) {
      const unsigned k = *opt.dump_operators;
      const json dump = {
          {"field", problem.field.name()},
          {"dim", problem.dim},
          {"K", k},
          {"domain_dim", truncation_dim(ops.dim(), k)},
          {"codomain_dim", truncation_dim(ops.dim(), k + 1)},
          {"U", to_string_grid(truncated_matrix(ops, OperatorTag::U, k))},
          {"V", to_string_grid(truncated_matrix(ops, OperatorTag::V, k))},
          {"v", to_string_grid(ops.v())},
      };
      const std::string path = operators_path(opt.out);
      std::ofstream f(path, std::ios::binary);
      if (!f) throw ParseError("cannot write operator dump: " + path);
      f << dump.dump(2) << "\n";
    }
    return report.pass() ? kPass : kCheckFailed;
  });
}

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  PairRecipe recipe;
  recipe.kind = parse_pair_kind(opt.kind);
  recipe.dim = opt.dim;
  recipe.field = FieldSpec::parse(opt.field);
  recipe.seed = opt.seed;
  recipe.max_degree = opt.max_degree;
  recipe.height = opt.height;
  recipe.validate();

  ProblemFile problem;
  problem.field = recipe.field;
  problem.dim = recipe.dim;
  visit_field(recipe.field, [&](const auto& f) {
    auto [t, s] = gen_pair(f, recipe);
    problem.t = to_string_grid(t);
    problem.s = to_string_grid(s);
  });
  write_text(opt.out, problem.to_json().dump(2) + "\n", out);
  return kPass;
}

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--input", o.input, "problem file (JSON)")->required();
  cmd->add_option("--out", o.out, "report path (default: stdout)");
  cmd->add_option("--max-power", o.max_power, "largest exponent N")->capture_default_str();
  cmd->add_option("--trunc", o.trunc, "largest truncation level K_max")->capture_default_str();
  cmd->add_option("--trials", o.trials, "random trial vectors per check")->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for trial vectors")->capture_default_str();
  cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

}  // namespace

json recipe_to_json(const PairRecipe& r) {
  return {{"kind", pair_kind_name(r.kind)},
          {"seed", r.seed},
          {"max_degree", r.max_degree},
          {"height", r.height}};
}

ProblemFile ProblemFile::from_json(const json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  if (!j.contains("field") || !j.contains("dim")) {
    throw ParseError("problem file needs \"field\" and \"dim\"");
  }
  ProblemFile p;
  p.field = field_from_json(j["field"]);
  if (!j["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a non-negative integer");
  p.dim = j["dim"].get<std::size_t>();

  const bool has_t = j.contains("T");
  const bool has_recipe = j.contains("recipe");
  if (has_t == has_recipe) {
    throw ParseError("problem file needs exactly one of \"T\" (explicit matrices) or \"recipe\"");
  }
  if (has_t) {
    p.t = grid_from_json(j["T"], p.dim, "T");
    if (j.contains("S")) p.s = grid_from_json(j["S"], p.dim, "S");
    // Fail early on entries that do not parse in the declared field.
    visit_field(p.field, [&](const auto& f) {
      (void)parse_grid(f, *p.t);
      if (p.s) (void)parse_grid(f, *p.s);
    });
  } else {
    if (j.contains("S")) throw ParseError("\"S\" is not allowed alongside \"recipe\"");
    const json& r = j["recipe"];
    if (!r.is_object() || !r.contains("kind")) throw ParseError("\"recipe\" needs a \"kind\"");
    PairRecipe recipe;
    try {
      recipe.kind = parse_pair_kind(r["kind"].get<std::string>());
      recipe.seed = r.value("seed", std::uint64_t{0});
      recipe.max_degree = r.value("max_degree", 3u);
      recipe.height = r.value("height", 5u);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad recipe: ") + e.what());
    }
    recipe.dim = p.dim;
    recipe.field = p.field;
    recipe.validate();
    p.recipe = recipe;
  }
  return p;
}

json ProblemFile::to_json() const {
  json j = {{"field", field.name()}, {"dim", dim}};
  if (recipe) {
    j["recipe"] = recipe_to_json(*recipe);
  } else {
    if (t) j["T"] = *t;
    if (s) j["S"] = *s;
  }
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebraic Sz.-Nagy and Ando dilations with verification"};
  app.require_subcommand(1);
  std::string kernels = "auto";
  app.add_option("--kernels", kernels, "GF(p) row kernels: auto, reference or avx2")
      ->check(CLI::IsMember({"auto", "reference", "avx2"}));

  RunOptions sz_opt;
  auto* sz = app.add_subcommand("sznagy", "dilate one operator and verify");
  add_run_options(sz, sz_opt);

  RunOptions ando_opt;
  auto* ando = app.add_subcommand("ando", "dilate a commuting pair and verify");
  add_run_options(ando, ando_opt);
  ando->add_option("--dump-operators", ando_opt.dump_operators,
                   "also write truncated U, V (level K) and v as JSON");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "write a problem file with a generated commuting pair");
  gen->add_option("--kind", gen_opt.kind, "polynomial, upper-triangular, diagonal or idempotent")
      ->capture_default_str();
  gen->add_option("--dim", gen_opt.dim, "dimension d")->capture_default_str();
  gen->add_option("--field", gen_opt.field, "Q or GF(p)")->capture_default_str();
  gen->add_option("--seed", gen_opt.seed)->capture_default_str();
  gen->add_option("--max-degree", gen_opt.max_degree)->capture_default_str();
  gen->add_option("--height", gen_opt.height, "entry height bound")->capture_default_str();
  gen->add_option("--out", gen_opt.out, "output path (default: stdout)");

  std::vector<std::string> argv_store{"algdil"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (kernels == "auto") kernels::select_backend(kernels::detect_backend());
    if (kernels == "reference") kernels::select_backend(kernels::Backend::reference);
    if (kernels == "avx2") kernels::select_backend(kernels::Backend::avx2);
    if (*sz) return cmd_sznagy(sz_opt, out, err);
    if (*ando) return cmd_ando(ando_opt, out, err);
    return cmd_gen(gen_opt, out);
  } catch (const NotCommuting& e) {
    err << "error: " << e.what() << "\n";
    return kNotCommuting;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace algdil::cli
