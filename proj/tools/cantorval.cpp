// cantorval: validate family specs and analyze achievement sets.
//
//   cantorval validate --spec gn.json
//   cantorval analyze --inline '{"type":"multigeometric","k":[3,2],"q":"1/4"}' --depth 8
//
// Exit codes: 0 ok, 1 failed conditions, 2 usage or parse error, 3 capacity.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cantorval/cantorval.hpp"

namespace {

enum Exit { kOk = 0, kConditionFailure = 1, kUsage = 2, kCapacity = 3 };

struct RunConfig {
  std::string spec_path;
  std::string inline_spec;
  std::size_t depth = 8;
  std::size_t horizon = 10;
  std::size_t cap = cantorval::kDefaultCap;
  std::size_t budget = 20;
  std::string format = "json";
  std::string out;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("CANTORVAL_CAP")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid CANTORVAL_CAP=" << env << '\n';
  }
  return cantorval::kDefaultCap;
}

std::string read_spec_text(const RunConfig& cfg) {
  if (!cfg.inline_spec.empty()) return cfg.inline_spec;
  std::ifstream in(cfg.spec_path);
  if (!in) throw cantorval::SpecError("cannot open spec file: " + cfg.spec_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

void emit_csv(const cantorval::json& report, const std::string& out) {
  namespace fs = std::filesystem;
  auto tables = cantorval::csv_tables(report);
  if (out.empty()) {
    for (std::size_t i = 0; i < tables.size(); ++i)
      std::cout << (i ? "\n" : "") << "# " << tables[i].first << '\n' << tables[i].second;
    return;
  }
  // A directory receives <table>.csv; anything else is a file prefix.
  for (const auto& [name, text] : tables) {
    fs::path p = fs::is_directory(out) ? fs::path(out) / (name + ".csv") : fs::path(out + "_" + name + ".csv");
    emit(text, p.string());
  }
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  auto* spec = cmd->add_option("--spec", cfg.spec_path, "Path to a JSON family spec");
  auto* inl = cmd->add_option("--inline", cfg.inline_spec, "Inline JSON family spec");
  spec->excludes(inl);
  inl->excludes(spec);
  cmd->add_option("--out", cfg.out, "Output path (csv: directory or file prefix)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.cap = default_cap();

  CLI::App app{"Exact analysis of achievement sets of eventually geometric series"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check a family spec's conditions");
  add_common(validate, cfg);
  validate->add_option("--format", cfg.format, "json | human")->check(CLI::IsMember({"json", "human"}));

  auto* analyze = app.add_subcommand("analyze", "Classify and measure the achievement set");
  add_common(analyze, cfg);
  analyze->add_option("--depth", cfg.depth, "Iteration depth n for I_0..I_n");
  analyze->add_option("--horizon", cfg.horizon, "Horizon for heuristic trends")->check(CLI::PositiveNumber);
  analyze->add_option("--cap", cfg.cap, "Maximum size of any enumerated set")->check(CLI::PositiveNumber);
  analyze->add_option("--budget", cfg.budget, "Refinement rounds for interior certificates")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--format", cfg.format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (cfg.spec_path.empty() && cfg.inline_spec.empty()) {
    std::cerr << "error: one of --spec or --inline is required\n";
    return kUsage;
  }

  try {
    const auto spec = cantorval::spec_from_string(read_spec_text(cfg));
    if (validate->parsed()) {
      auto report = cantorval::validation_report(spec);
      emit(cfg.format == "human" ? cantorval::human_validation(report) : report.dump(2) + "\n", cfg.out);
      return report.at("ok").get<bool>() ? kOk : kConditionFailure;
    }
    cantorval::AnalyzeConfig acfg{cfg.depth, cfg.horizon, cfg.cap, cfg.budget};
    auto report = cantorval::analysis_report(spec, acfg);
    if (cfg.format == "csv")
      emit_csv(report, cfg.out);
    else if (cfg.format == "human")
      emit(cantorval::human_summary(report), cfg.out);
    else
      emit(report.dump(2) + "\n", cfg.out);
    return kOk;
  } catch (const cantorval::CapacityError& e) {
    std::cerr << cantorval::json{{"error", "capacity"}, {"stage", e.stage()}, {"cap", e.cap()}}.dump() << '\n';
    return kCapacity;
  } catch (const cantorval::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
