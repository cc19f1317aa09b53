#include "hodgerec/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodgerec/cache.hpp"
#include "hodgerec/conjectures.hpp"
#include "hodgerec/engine.hpp"
#include "hodgerec/golden.hpp"
#include "hodgerec/verify.hpp"

namespace hodgerec::cli {

namespace {

using json = nlohmann::ordered_json;

struct ComputeOptions {
  std::string kind = "D";
  int g = 0;
  std::string index;
  bool as_json = false;
};

struct TableOptions {
  int g = 0;
  int weight_max = -1;  // default 2g-1
  std::string format = "csv";
  std::string out_path;
  int jobs = 1;
};

struct VerifyOptions {
  std::string suite;
  int g_max = -1;
  int weight_max = -1;
  int t_order = 12;
  int weight_cap = 3;
  int slots_max = 2;
  int n_max = 20;
};

struct ConjecturesOptions {
  int g_max = 3;
  int weight_max = 3;
  std::string out_path;
};

struct GoldenOptions {
  std::string format = "csv";
  std::string out_path;
};

struct TableRow {
  IntegralKey key;
  Rational value;
  Int normalized;
};

std::vector<TableRow> table_rows(Engine& engine, int g, int weight_max,
                                 int jobs) {
  std::vector<IntegralKey> keys;
  for (Kind kind : {Kind::TwistedD, Kind::UntwistedD})
    for (const MultiIndex& index :
         canonical_indices(weight_max, std::min(weight_max, g)))
      keys.push_back(IntegralKey{kind, g, index});

  if (jobs > 1) {
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        try {
          for (std::size_t j = next.fetch_add(1); j < keys.size();
               j = next.fetch_add(1))
            engine.eval(keys[j]);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
  }

  std::vector<TableRow> rows;
  for (const IntegralKey& key : keys) {
    Rational value = engine.eval(key);
    if (value == 0) continue;
    rows.push_back({key, value, engine.normalized_integer(key)});
  }
  return rows;
}

json row_json(const TableRow& row) {
  json j;
  j["kind"] = std::string(1, kind_char(row.key.kind));
  j["g"] = row.key.g;
  j["index"] = row.key.index.text();
  j["num"] = row.value.get_num().get_str();
  j["den"] = row.value.get_den().get_str();
  j["normalized"] = row.normalized.get_str();
  return j;
}

int write_text(const std::string& text, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot write output file \"" << out_path << "\"\n";
    return kExitUsage;
  }
  file << text;
  if (!file.flush()) {
    err << "error: write failed for \"" << out_path << "\"\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_compute(Engine& engine, const ComputeOptions& opt, std::ostream& out,
                std::ostream& err) {
  auto kind = kind_from_text(opt.kind);
  if (!kind) {
    err << "error: --kind must be D or d, got \"" << opt.kind << "\"\n";
    return kExitUsage;
  }
  auto index = MultiIndex::parse(opt.index);
  if (!index) {
    err << "error: --index must be comma-separated nonnegative integers or "
           "\"-\", got \""
        << opt.index << "\"\n";
    return kExitUsage;
  }
  IntegralKey key{*kind, opt.g, *index};
  Rational value = engine.eval(key);
  Int normalized = engine.normalized_integer(key);
  if (opt.as_json) {
    json j;
    j["kind"] = std::string(1, kind_char(key.kind));
    j["g"] = key.g;
    j["index"] = key.index.text();
    j["value"] = to_string(value);
    j["num"] = value.get_num().get_str();
    j["den"] = value.get_den().get_str();
    j["normalized"] = normalized.get_str();
    out << j.dump() << '\n';
  } else {
    out << key.describe() << " = " << to_string(value) << '\n';
    out << "normalized 2^" << key.index.weight() + 1
        << " * value = " << normalized.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_table(Engine& engine, const TableOptions& opt, std::ostream& out,
              std::ostream& err) {
  const int weight_max = opt.weight_max >= 0 ? opt.weight_max : 2 * opt.g - 1;
  auto rows = table_rows(engine, opt.g, std::max(weight_max, 0), opt.jobs);

  std::ostringstream body;
  if (opt.format == "csv") {
    body << "kind,g,index,numerator,denominator,normalized_integer\n";
    for (const TableRow& row : rows)
      body << kind_char(row.key.kind) << ',' << row.key.g << ",\""
           << row.key.index.text() << "\"," << row.value.get_num().get_str()
           << ',' << row.value.get_den().get_str() << ','
           << row.normalized.get_str() << '\n';
  } else {
    json j = json::array();
    for (const TableRow& row : rows) j.push_back(row_json(row));
    body << j.dump(2) << '\n';
  }

  return write_text(body.str(), opt.out_path, out, err);
}

int cmd_verify(Engine& engine, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
  verify::SuiteResult result;
  if (opt.suite == "golden") {
    result = verify::run_golden(engine);
  } else if (opt.suite == "closed-forms") {
    result = verify::run_closed_forms(engine, opt.g_max < 0 ? 6 : opt.g_max);
  } else if (opt.suite == "k-independence") {
    result = verify::run_k_independence(engine, opt.g_max < 0 ? 4 : opt.g_max,
                                        opt.weight_max < 0 ? 5 : opt.weight_max);
  } else if (opt.suite == "pde") {
    result = verify::run_pde(engine, opt.t_order, opt.weight_cap, opt.slots_max);
  } else if (opt.suite == "identity") {
    result = verify::run_identity(opt.n_max);
  } else if (opt.suite == "polynomial-extrapolation") {
    result = verify::run_polynomial_extrapolation(
        engine, opt.weight_max < 0 ? 4 : opt.weight_max);
  } else {
    err << "error: unknown suite \"" << opt.suite
        << "\" (expected golden, closed-forms, k-independence, pde, identity"
           " or polynomial-extrapolation)\n";
    return kExitUsage;
  }

  out << "suite " << result.suite << ": " << result.checks_run << " checks, "
      << result.failures.size() << " failures\n";
  for (const std::string& note : result.notes) out << "note: " << note << '\n';
  if (!result.ok()) {
    json failures = json::array();
    for (const auto& f : result.failures) {
      json j;
      j["suite"] = result.suite;
      j["check"] = f.check;
      j["detail"] = f.detail;
      failures.push_back(std::move(j));
    }
    out << failures.dump(2) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_conjectures(Engine& engine, const ConjecturesOptions& opt,
                    std::ostream& out, std::ostream& err) {
  auto findings = conjectures::scan(engine, opt.g_max, opt.weight_max);
  std::size_t violations = 0;
  json report;
  report["g_max"] = opt.g_max;
  report["weight_max"] = opt.weight_max;
  report["findings"] = json::array();
  for (const auto& f : findings) {
    if (f.status == conjectures::FindingStatus::violated) ++violations;
    json j;
    j["conjecture"] = f.conjecture;
    j["instance"] = f.instance;
    j["status"] = conjectures::status_text(f.status);
    j["witness"] = f.witness;
    report["findings"].push_back(std::move(j));
  }
  report["violations"] = violations;

  int io = write_text(report.dump(2) + "\n", opt.out_path, out, err);
  if (io != kExitOk) return io;
  return violations == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_golden(const GoldenOptions& opt, std::ostream& out, std::ostream& err) {
  std::ostringstream body;
  if (opt.format == "csv") {
    body << "kind,g,index,numerator,denominator,source\n";
    for (const auto& v : golden::reference_values())
      body << kind_char(v.key.kind) << ',' << v.key.g << ",\""
           << v.key.index.text() << "\"," << v.value.get_num().get_str() << ','
           << v.value.get_den().get_str() << ",\"" << v.source << "\"\n";
  } else {
    json j;
    j["values"] = json::array();
    for (const auto& v : golden::reference_values()) {
      json rec;
      rec["kind"] = std::string(1, kind_char(v.key.kind));
      rec["g"] = v.key.g;
      rec["index"] = v.key.index.text();
      rec["num"] = v.value.get_num().get_str();
      rec["den"] = v.value.get_den().get_str();
      rec["source"] = v.source;
      j["values"].push_back(std::move(rec));
    }
    j["polynomials"] = json::array();
    for (const auto& p : golden::reference_polynomials()) {
      json rec;
      rec["kind"] = std::string(1, kind_char(p.kind));
      rec["index"] = p.index.text();
      rec["k_min"] = p.k_min;
      rec["coeffs"] = json::array();
      for (const Int& c : p.coeffs) rec["coeffs"].push_back(c.get_str());
      rec["corrected"] = p.corrected;
      rec["source"] = p.source;
      j["polynomials"].push_back(std::move(rec));
    }
    body << j.dump(2) << '\n';
  }
  return write_text(body.str(), opt.out_path, out, err);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "hodgerec: exact computation of the one-point Z2 Hurwitz-Hodge "
      "integrals D and d on the hyperelliptic locus"};
  app.require_subcommand(1);

  std::string cache_path;
  app.add_option("--cache", cache_path,
                 "JSON-lines value cache, loaded before and saved after the "
                 "command")
      ->envname("HODGEREC_CACHE");

  ComputeOptions compute_opt;
  CLI::App* compute = app.add_subcommand(
      "compute", "Evaluate one integral and its normalized integer");
  compute->add_option("--kind", compute_opt.kind, "D (twisted) or d (untwisted)")
      ->required();
  compute->add_option("--g", compute_opt.g, "genus")->required()
      ->check(CLI::NonNegativeNumber);
  compute
      ->add_option("--index", compute_opt.index,
                   "lambda exponents, e.g. 1,2,4; \"-\" for the empty index")
      ->required();
  compute->add_flag("--json", compute_opt.as_json, "structured output");

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand(
      "table", "All nonzero values at one genus, sorted and deterministic");
  table->add_option("--g", table_opt.g, "genus")->required()
      ->check(CLI::NonNegativeNumber);
  table->add_option("--weight-max", table_opt.weight_max,
                    "maximal |i| (default 2g-1)");
  table->add_option("--format", table_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_opt.out_path, "output file (default stdout)");
  table->add_option("--jobs", table_opt.jobs, "parallel evaluation threads")
      ->check(CLI::PositiveNumber);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("--suite", verify_opt.suite,
                   "golden | closed-forms | k-independence | pde | identity | "
                   "polynomial-extrapolation")
      ->required();
  verify->add_option("--g-max", verify_opt.g_max, "genus range cap");
  verify->add_option("--weight-max", verify_opt.weight_max, "weight range cap");
  verify->add_option("--t-order", verify_opt.t_order, "pde: truncation order")
      ->check(CLI::Range(4, 64));
  verify->add_option("--weight-cap", verify_opt.weight_cap, "pde: weight cap")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--slots-max", verify_opt.slots_max,
                     "pde: check slot counts 1..slots-max")
      ->check(CLI::PositiveNumber);
  verify->add_option("--n-max", verify_opt.n_max, "identity: maximal n")
      ->check(CLI::NonNegativeNumber);

  ConjecturesOptions conj_opt;
  CLI::App* conj = app.add_subcommand(
      "conjectures", "Scan the conjectures and emit a findings report");
  conj->add_option("--g-max", conj_opt.g_max, "genus range")
      ->check(CLI::PositiveNumber);
  conj->add_option("--weight-max", conj_opt.weight_max, "index weight range")
      ->check(CLI::NonNegativeNumber);
  conj->add_option("--out", conj_opt.out_path, "report file (default stdout)");

  GoldenOptions golden_opt;
  CLI::App* golden_cmd = app.add_subcommand(
      "golden", "Export the embedded reference tables for external comparison");
  golden_cmd->add_option("--format", golden_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  golden_cmd->add_option("--out", golden_opt.out_path,
                         "output file (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Engine engine;
  try {
    if (!cache_path.empty() && std::filesystem::exists(cache_path))
      cache_load(engine, cache_path);
  } catch (const cache_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  int code = kExitUsage;
  try {
    if (compute->parsed()) code = cmd_compute(engine, compute_opt, out, err);
    else if (table->parsed()) code = cmd_table(engine, table_opt, out, err);
    else if (verify->parsed()) code = cmd_verify(engine, verify_opt, out, err);
    else if (conj->parsed()) code = cmd_conjectures(engine, conj_opt, out, err);
    else if (golden_cmd->parsed()) code = cmd_golden(golden_opt, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const consistency_error& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  if (code != kExitUsage && !cache_path.empty()) {
    try {
      cache_save(engine, cache_path);
    } catch (const cache_error& e) {
      err << "error: " << e.what() << '\n';
      return kExitCheckFailed;
    }
  }
  return code;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int j = 1; j < argc; ++j) args.emplace_back(argv[j]);
  return run(std::move(args), std::cout, std::cerr);
}

}  // namespace hodgerec::cli
