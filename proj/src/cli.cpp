#include "css/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "css/algebra.hpp"
#include "css/classify.hpp"
#include "css/document.hpp"
#include "css/error.hpp"
#include "css/verify.hpp"

namespace css {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::MalformedJson || kind == ErrorKind::MalformedDocument ? kExitMalformed
                                                                                  : kExitInvariant;
}

CubicSoftSet read_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_cubic_soft_set(text);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

json cell_json(const Cell& c) { return {{"parameter", c.parameter.key()}, {"element", c.element}}; }

json cells_json(const std::vector<Cell>& cells) {
  json a = json::array();
  for (const auto& c : cells) a.push_back(cell_json(c));
  return a;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const auto s = read_set(path);
  out << "valid: " << s.parameter_count() << " parameters x " << s.universe_size() << " elements\n";
  return kExitOk;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const auto s = read_set(path);
  const auto c = classify(s);
  json doc = {{"internal", c.internal},
              {"external", c.external},
              {"internal_violations", cells_json(c.internal_violations)},
              {"external_violations", cells_json(c.external_violations)}};
  const auto w = theorem1_witness(s);
  doc["theorem1_witness"] = w ? cell_json(*w) : json(nullptr);
  if (c.internal && c.external) {
    const auto b = theorem2_boundary_check(s);
    doc["boundary"] = {{"global", b.global_holds}, {"per_point", b.per_point_holds}};
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_op(const std::string& name, const std::vector<std::string>& files, const std::string& out_path) {
  static const std::map<std::string, CombineKind> combines{
      {"p-union", CombineKind::P_UNION},
      {"p-intersection", CombineKind::P_INTERSECTION},
      {"r-union", CombineKind::R_UNION},
      {"r-intersection", CombineKind::R_INTERSECTION}};
  static const std::map<std::string, ProductKind> products{{"p-or", ProductKind::P_OR},
                                                           {"r-or", ProductKind::R_OR},
                                                           {"p-and", ProductKind::P_AND},
                                                           {"r-and", ProductKind::R_AND}};
  const bool unary = name == "complement";
  const bool known = unary || name == "star-swap" || combines.contains(name) || products.contains(name);
  if (!known) throw UsageError("unknown operation '" + name + "'");
  if (files.size() != (unary ? 1u : 2u)) {
    throw UsageError("'" + name + "' takes " + (unary ? "one input" : "two inputs"));
  }
  const auto f = read_set(files[0]);
  if (unary) {
    write_text(out_path, serialize(soft_complement(f)));
    return kExitOk;
  }
  const auto g = read_set(files[1]);
  if (name == "star-swap") {
    const auto [fs, gs] = star_swap(f, g);
    write_text(out_path + ".star-a", serialize(fs));
    write_text(out_path + ".star-b", serialize(gs));
  } else if (const auto c = combines.find(name); c != combines.end()) {
    write_text(out_path, serialize(soft_combine(c->second, f, g)));
  } else {
    write_text(out_path, serialize(soft_product(products.at(name), f, g)));
  }
  return kExitOk;
}

int cmd_cmp(const std::string& rel, const std::string& a, const std::string& b, std::ostream& out) {
  if (rel != "eq" && rel != "p-sub" && rel != "r-sub") throw UsageError("unknown relation '" + rel + "'");
  const auto f = read_set(a);
  const auto g = read_set(b);
  bool holds = false;
  if (rel == "eq") {
    holds = soft_equal(f, g);
  } else {
    holds = soft_suborder(rel == "p-sub" ? OrderKind::P : OrderKind::R, f, g);
  }
  out << (holds ? "true" : "false") << "\n";
  return holds ? kExitOk : kExitRelationFalse;
}

struct VerifyArgs {
  std::string theorem;
  std::optional<unsigned> grid;
  unsigned universe = 1;
  unsigned params = 1;
  unsigned exclusive = 0;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  bool constrained = false;
  std::string interp = "as-written";
  std::string out;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto id = theorem_from_string(a.theorem);
  if (!id) throw UsageError("unknown theorem '" + a.theorem + "'");
  const auto interp = interpretation_from_string(a.interp);
  if (!interp) throw UsageError("unknown interpretation '" + a.interp + "'");
  if (a.grid.has_value() == a.samples.has_value()) {
    throw UsageError("give exactly one of --grid or --samples");
  }
  if (a.constrained && a.grid) throw UsageError("--constrained applies to --samples only");
  CampaignReport report;
  if (a.grid) {
    if (*a.grid == 0) throw UsageError("--grid must be at least 1");
    report = run_campaign(*id, ExhaustiveMode{{*a.grid, a.universe, a.params, a.exclusive}}, *interp,
                          a.threads);
  } else {
    RandomMode m;
    m.samples = *a.samples;
    m.seed = a.seed;
    m.universe_size = a.universe;
    m.shared_params = a.params;
    m.exclusive_params = a.exclusive;
    m.constrained = a.constrained;
    report = run_campaign(*id, m, *interp, a.threads);
  }
  const auto text = serialize_report(report);
  if (a.out.empty()) {
    out << text;
  } else {
    write_text(a.out, text);
    out << a.theorem << " [" << a.interp << "] instances=" << report.instances_tested
        << " hypothesis=" << report.hypothesis_holds << " counterexamples=" << report.counterexample_count
        << "\n";
  }
  return report.counterexample_count == 0 ? kExitOk : kExitCounterexamples;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cubic soft set algebra and theorem checking"};
  app.require_subcommand(1);

  std::string file_a;
  std::string file_b;
  std::string name;
  std::vector<std::string> inputs;
  std::string out_path;
  VerifyArgs va;

  auto* validate = app.add_subcommand("validate", "check a document");
  validate->add_option("file", file_a)->required();

  auto* cls = app.add_subcommand("classify", "internal/external classification");
  cls->add_option("file", file_a)->required();

  auto* op = app.add_subcommand("op", "apply an operation");
  op->add_option("name", name, "p-union, p-intersection, r-union, r-intersection, p-or, r-or, p-and, "
                               "r-and, complement, star-swap")
      ->required();
  op->add_option("inputs", inputs)->required()->expected(1, 2);
  op->add_option("-o,--out", out_path)->required();

  auto* cmp = app.add_subcommand("cmp", "compare two documents");
  cmp->add_option("rel", name, "eq, p-sub, r-sub")->required();
  cmp->add_option("a", file_a)->required();
  cmp->add_option("b", file_b)->required();

  auto* verify = app.add_subcommand("verify", "run a theorem campaign");
  verify->add_option("theorem", va.theorem)->required();
  verify->add_option("--grid", va.grid, "exhaustive over the grid with K steps");
  verify->add_option("--universe", va.universe, "universe size")->capture_default_str();
  verify->add_option("--params", va.params, "shared parameters")->capture_default_str();
  verify->add_option("--exclusive", va.exclusive, "parameters only one operand has")->capture_default_str();
  verify->add_option("--samples", va.samples, "random instances");
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->add_flag("--constrained", va.constrained, "draw cells until the hypothesis holds");
  verify->add_option("--interp", va.interp, "as-written, open-open, closed-closed")->capture_default_str();
  verify->add_option("-o,--out", va.out);
  verify->add_option("--threads", va.threads)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (validate->parsed()) return cmd_validate(file_a, out);
    if (cls->parsed()) return cmd_classify(file_a, out);
    if (op->parsed()) return cmd_op(name, inputs, out_path);
    if (cmp->parsed()) return cmd_cmp(name, file_a, file_b, out);
    if (verify->parsed()) return cmd_verify(va, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitMalformed;
}

}  // namespace css
