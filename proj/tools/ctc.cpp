#include <CLI11.hpp>

#include <iostream>

#include "ctc/coherence.hpp"
#include "ctc/ledger.hpp"
#include "ctc/parallel.hpp"
#include "ctc/suites.hpp"

#ifndef CTC_DATA_DIR
#define CTC_DATA_DIR "data"
#endif

using namespace ctc;

namespace {

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string algebra;
  std::string format = "text";
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  std::string data = CTC_DATA_DIR;
};

Report error_report(const std::string& check, const std::string& message) {
  Report r;
  r.add(check, Status::error, nullptr, message);
  return r;
}

/// One report per file, run `jobs` at a time, joined in argument order.
Report per_file(const Options& o, const std::function<Report(const std::string&)>& fn) {
  const auto parts = parallel_map<Report>(o.files.size(), o.jobs, [&](std::size_t i) {
    try {
      return fn(o.files[i]);
    } catch (const Error& e) {
      return error_report("load", e.what());
    }
  });
  Report out;
  for (std::size_t i = 0; i < parts.size(); ++i) out.append(parts[i], o.files[i] + "/");
  return out;
}

Report ledger_report(const std::string& path) {
  Report r;
  const auto p = LedgerProblem::load(path);
  try {
    for (const auto& [sym, v] : solve_dims(p)) r.add("dim(" + sym + ")", Status::pass, v.to_string());
  } catch (const Error& e) {
    r.add("solve", Status::error, nullptr, e.what());
  }
  return r;
}

Report condense_report(const Options& o) {
  if (o.files.size() != 1 || o.algebra.empty())
    return error_report("usage", "condense takes one category file and --algebra");
  const auto cat = load_category(o.files.front());
  const auto alg = load_algebra(o.algebra);
  if (alg->category() != cat) return error_report("category", o.algebra + " is not over " + o.files.front());
  return condense(alg).report;
}

Report run(const Options& o) {
  if (o.command == "check-category")
    return per_file(o, [&](const std::string& f) { return check_category(CategorySpec::load(f), o.seed); });
  if (o.command == "check-algebra") return per_file(o, [](const std::string& f) { return algebra_report(*load_algebra(f)); });
  if (o.command == "check-module") return per_file(o, [](const std::string& f) { return module_report(load_module(f)); });
  if (o.command == "ledger") return per_file(o, ledger_report);
  if (o.command == "condense") return condense_report(o);
  // suite: named suites or manifest paths
  Report out;
  for (const auto& name : o.files) {
    try {
      if (name.size() > 5 && name.substr(name.size() - 5) == ".json")
        out.append(run_suite(name, o.jobs));
      else
        out.append(theorem_suite(name, o.data, o.jobs));
    } catch (const Error& e) {
      out.append(error_report("suite", e.what()), name + "/");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for braided tensor category data, algebra objects and their modules"};
  Options o;
  app.add_option("command", o.command, "check-category | check-algebra | check-module | condense | suite | ledger")
      ->required()
      ->check(CLI::IsMember({"check-category", "check-algebra", "check-module", "condense", "suite", "ledger"}));
  app.add_option("files", o.files, "input files (suite: maschke_2_6 | local_3_1 | counterexamples | all | manifest)")
      ->required();
  app.add_option("--algebra", o.algebra, "algebra file for condense");
  app.add_option("--report", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "parallel workers")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--data", o.data, "data directory holding suites/");
  CLI11_PARSE(app, argc, argv);

  Report r;
  try {
    r = run(o);
  } catch (const Error& e) {
    r = error_report(o.command, e.what());
  }
  std::cout << (o.format == "json" ? r.to_json() + "\n" : r.to_text());
  return r.exit_code();
}
