// kronstab: command-line front end for the coefficient library and the
// verification sweeps.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 computation error (cap/overflow), 4 I/O or store error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kronstab/characters.hpp"
#include "kronstab/coefficient_store.hpp"
#include "kronstab/error.hpp"
#include "kronstab/evaluator.hpp"
#include "kronstab/littlewood_richardson.hpp"
#include "kronstab/partition.hpp"
#include "kronstab/stability_checks.hpp"

namespace {

using namespace kronstab;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kComputation = 3, kIo = 4 };

struct Globals {
  std::string store_path;
  int cap = 12;
  int jobs = 1;
};

struct CoeffArgs {
  std::vector<std::string> operands;
  std::string format = "plain";
};

void print_value(std::ostream& out, const CoeffArgs& args, std::string_view kind, const std::string& value,
                 bool numeric) {
  if (args.format == "plain") {
    out << value << '\n';
    return;
  }
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["operands"] = args.operands;
  if (numeric)
    j["value"] = std::stoll(value);
  else
    j["value"] = value;
  out << j.dump() << '\n';
}

std::vector<Partition> partitions_of(const std::vector<std::string>& texts, std::size_t count) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(parse_partition(texts.at(i)));
  return out;
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
}

std::string csv_field(const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; }

// Rows of one coefficient table, in canonical order.
void emit_table(std::ostream& out, CoefficientKind kind, int min_size, int max_size, int max_k, bool csv,
                const Evaluator& eval) {
  static const std::map<CoefficientKind, std::vector<std::string>> headers = {
      {CoefficientKind::character, {"lambda", "rho"}},
      {CoefficientKind::lr, {"lambda", "mu", "nu"}},
      {CoefficientKind::lr3, {"alpha", "beta", "gamma", "nu"}},
      {CoefficientKind::kron, {"lambda", "mu", "nu"}},
      {CoefficientKind::rkron, {"lambda", "mu", "nu"}},
      {CoefficientKind::rkron1row, {"lambda", "mu", "k"}},
  };
  if (csv) {
    for (const auto& h : headers.at(kind)) out << h << ',';
    out << "value\n";
  }
  auto row = [&](std::vector<Operand> operands, Integer value) {
    if (csv) {
      for (const auto& op : operands) out << csv_field(operand_text(op)) << ',';
      out << value << '\n';
    } else {
      out << CoefficientRecord{kind, std::move(operands), value}.to_line() << '\n';
    }
  };
  if (kind == CoefficientKind::kron || kind == CoefficientKind::character) require_within_cap(max_size, "table");

  std::vector<Partition> box;
  for (const auto& p : enumerate_partitions_up_to(max_size))
    if (p.size() >= min_size) box.push_back(p);

  switch (kind) {
    case CoefficientKind::character:
      for (int n = min_size; n <= max_size; ++n)
        for (const auto& lam : enumerate_partitions(n))
          for (const auto& rho : enumerate_partitions(n)) row({lam, rho}, eval.character(lam, rho));
      break;
    case CoefficientKind::kron:
      for (int n = min_size; n <= max_size; ++n) {
        const auto level = enumerate_partitions(n);
        for (const auto& lam : level)
          for (const auto& mu : level)
            for (const auto& nu : level) row({lam, mu, nu}, eval.kron(lam, mu, nu));
      }
      break;
    case CoefficientKind::lr:
      for (const auto& nu : box)
        for (const auto& lam : enumerate_partitions_up_to(nu.size()))
          for (const auto& mu : enumerate_partitions(nu.size() - lam.size())) row({lam, mu, nu}, eval.lr(lam, mu, nu));
      break;
    case CoefficientKind::lr3:
      for (const auto& nu : box)
        for (const auto& alpha : enumerate_partitions_up_to(nu.size()))
          for (const auto& beta : enumerate_partitions_up_to(nu.size() - alpha.size()))
            for (const auto& gamma : enumerate_partitions(nu.size() - alpha.size() - beta.size()))
              row({alpha, beta, gamma, nu}, eval.lr3(alpha, beta, gamma, nu));
      break;
    case CoefficientKind::rkron:
      for (const auto& lam : box)
        for (const auto& mu : box)
          for (const auto& nu : box) row({lam, mu, nu}, eval.rkron(lam, mu, nu));
      break;
    case CoefficientKind::rkron1row:
      for (const auto& lam : box)
        for (const auto& mu : box)
          for (int k = 0; k <= max_k; ++k) row({lam, mu, Integer{k}}, eval.rkron1row(lam, mu, k));
      break;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson, Kronecker and reduced Kronecker coefficients, with stability sweeps"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("KRONSTAB_STORE")) g.store_path = env;
  app.add_option("--store", g.store_path, "Coefficient store file (env KRONSTAB_STORE); absent means in-memory");
  app.add_option("--cap", g.cap, "Degree cap for characters and Kronecker coefficients")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", g.jobs, "Parallel width of verification sweeps")->check(CLI::PositiveNumber);

  struct CoeffCommand {
    const char* name;
    const char* help;
    std::vector<const char*> arg_names;
    CoeffArgs args;
  };
  std::vector<CoeffCommand> coeff_commands = {
      {"lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}", {"lambda", "mu", "nu"}, {}},
      {"lr3", "Three-factor LR coefficient c^nu_{alpha,beta,gamma}", {"alpha", "beta", "gamma", "nu"}, {}},
      {"kron", "Kronecker coefficient g_{lambda,mu,nu}", {"lambda", "mu", "nu"}, {}},
      {"rkron", "Reduced Kronecker coefficient", {"lambda", "mu", "nu"}, {}},
      {"rkron1row", "Reduced Kronecker coefficient with a one-row third argument (k)", {"lambda", "mu", "k"}, {}},
      {"char", "Character value chi^lambda(rho)", {"lambda", "rho"}, {}},
      {"pad", "Padded partition lambda[n]", {"lambda", "n"}, {}},
  };
  for (auto& cmd : coeff_commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    cmd.args.operands.resize(cmd.arg_names.size());
    for (std::size_t i = 0; i < cmd.arg_names.size(); ++i)
      sub->add_option(cmd.arg_names[i], cmd.args.operands[i], "partition as [3,2,1] ([] for empty) or integer")
          ->required();
    sub->add_option("--format", cmd.args.format, "plain or structured")
        ->check(CLI::IsMember({"plain", "structured"}));
  }

  std::string table_kind, table_out, table_format = "csv";
  int table_min = 0, table_max = 4, table_max_k = -1;
  auto* table = app.add_subcommand("table", "Emit a complete coefficient table over a size box");
  table->add_option("kind", table_kind, "character, lr, lr3, kron, rkron or rkron1row")->required();
  table->add_option("--min-size", table_min, "Smallest partition size in the box");
  table->add_option("--max-size", table_max, "Largest partition size in the box");
  table->add_option("--max-k", table_max_k, "Largest k for rkron1row (default: --max-size)");
  table->add_option("--out", table_out, "Destination file (default stdout)");
  table->add_option("--format", table_format, "csv or structured")->check(CLI::IsMember({"csv", "structured"}));

  std::string statement, report_path;
  std::map<std::string, int> overrides;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep; exit 0 iff no failures");
  std::vector<std::string> statements = statement_names();
  statements.emplace_back("all");
  verify->add_option("statement", statement, "One of: lrflip, kron-stab, triangle, k-eq-lr, size, formula, "
                                              "prop48, prop412, oracle-equiv, all")
      ->required()
      ->check(CLI::IsMember(statements));
  verify->add_option("--report", report_path, "Write reports (one JSON object per line) here instead of stdout");
  for (const char* key : {"max_core", "max_xi", "max_lam", "max_mu", "max_k", "margin", "max_n", "max_i", "max_m",
                          "max_size", "probe_cap"}) {
    std::string flag = std::string("--") + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    verify->add_option_function<int>(flag, [&overrides, key](const int& v) { overrides[key] = v; },
                                     std::string("Override box bound ") + key);
  }

  auto* store_cmd = app.add_subcommand("store", "Manage the coefficient store (requires --store)");
  store_cmd->require_subcommand(1);
  std::string export_kind, export_out, import_in;
  auto* store_export = store_cmd->add_subcommand("export", "Export records in store format");
  store_export->add_option("--kind", export_kind, "Only records of this kind");
  store_export->add_option("--out", export_out, "Destination file")->required();
  auto* store_import = store_cmd->add_subcommand("import", "Import and validate records");
  store_import->add_option("source", import_in, "Store-format file")->required();
  store_cmd->add_subcommand("compact", "Rewrite the store file sorted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  set_degree_cap(g.cap);
#ifdef KRONSTAB_INJECT_LR_FAULT
  // fault-injection build: c^{[2]}_{[1],[1]} is reported as -1
  testing::inject_lr_fault(make_partition({1}), make_partition({1}), make_partition({2}));
#endif

  std::unique_ptr<CoefficientStore> store;
  if (!g.store_path.empty()) store = std::make_unique<CoefficientStore>(g.store_path, recompute);
  const Evaluator eval(store.get());

  int status = kOk;
  for (auto& cmd : coeff_commands) {
    auto* sub = app.get_subcommand(cmd.name);
    if (!sub->parsed()) continue;
    const std::string name = cmd.name;
    const auto& a = cmd.args;
    try {
    if (name == "pad") {
      const auto core = parse_partition(a.operands[0]);
      print_value(std::cout, a, "pad", pad(core, parse_int(a.operands[1], "n")).to_string(), false);
    } else if (name == "rkron1row") {
      auto ps = partitions_of(a.operands, 2);
      print_value(std::cout, a, "rkron1row",
                  std::to_string(eval.rkron1row(ps[0], ps[1], parse_int(a.operands[2], "k"))), true);
    } else if (name == "char") {
      auto ps = partitions_of(a.operands, 2);
      print_value(std::cout, a, "character", std::to_string(eval.character(ps[0], ps[1])), true);
    } else if (name == "lr3") {
      auto ps = partitions_of(a.operands, 4);
      print_value(std::cout, a, "lr3", std::to_string(eval.lr3(ps[0], ps[1], ps[2], ps[3])), true);
    } else {
      auto ps = partitions_of(a.operands, 3);
      Integer value = 0;
      if (name == "lr") value = eval.lr(ps[0], ps[1], ps[2]);
      if (name == "kron") value = eval.kron(ps[0], ps[1], ps[2]);
      if (name == "rkron") value = eval.rkron(ps[0], ps[1], ps[2]);
      print_value(std::cout, a, name, std::to_string(value), true);
    }
    } catch (const ArgumentError& e) {
      std::cerr << "error: " << e.what() << "\n\n" << sub->help();
      return kUsage;
    }
  }

  if (table->parsed()) {
    const CoefficientKind kind = parse_kind(table_kind);
    const int max_k = table_max_k < 0 ? table_max : table_max_k;
    if (table_out.empty()) {
      emit_table(std::cout, kind, table_min, table_max, max_k, table_format == "csv", eval);
    } else {
      std::ofstream out(table_out, std::ios::trunc);
      if (!out) throw IoError("cannot write " + table_out);
      emit_table(out, kind, table_min, table_max, max_k, table_format == "csv", eval);
      if (!out.flush()) throw IoError("write failed on " + table_out);
    }
  }

  if (verify->parsed()) {
    const auto reports = run_verification(statement, overrides, SweepOptions{&eval, g.jobs});
    std::ofstream file;
    if (!report_path.empty()) {
      file.open(report_path, std::ios::trunc);
      if (!file) throw IoError("cannot write " + report_path);
    }
    std::ostream& out = report_path.empty() ? std::cout : file;
    for (const auto& r : reports) {
      out << r.to_json_line() << '\n';
      std::cerr << r.statement << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checked << " checked, "
                << r.failures.size() << " failures)\n";
      if (!r.passed()) status = kVerifyFailed;
    }
    if (!out.flush()) throw IoError("write failed on report");
  }

  if (store_cmd->parsed()) {
    if (!store) {
      std::cerr << "store commands need --store <path> or KRONSTAB_STORE\n";
      return kUsage;
    }
    if (store_export->parsed()) {
      std::optional<CoefficientKind> kind;
      if (!export_kind.empty()) kind = parse_kind(export_kind);
      std::cout << store->export_table(kind, {}, export_out) << '\n';
    } else if (store_import->parsed()) {
      std::cout << store->import_table(import_in) << '\n';
    }
    // compact happens on close below
  }

  if (store) store->close();
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kronstab::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const kronstab::ComputationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputation;
  } catch (const kronstab::StoreError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputation;
  }
}
