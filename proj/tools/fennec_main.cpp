// Copyright 2026 The Fennec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "fennec/fixtures.hpp"
#include "fennec/json_io.hpp"

namespace {

using namespace fennec;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNonConvergent = 2;
constexpr int kExitCapExceeded = 3;

std::uint64_t ProfileCapFromEnv(std::uint64_t fallback) {
  const char* env = std::getenv("FENNEC_MAX_PROFILES");
  if (env == nullptr || *env == '\0') return fallback;
  return std::strtoull(env, nullptr, 10);
}

std::map<std::string, Money> ParseParams(const std::vector<std::string>& kvs) {
  std::map<std::string, Money> params;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidInput,
                  "--param expects key=value, got '" + kv + "'");
    }
    params[kv.substr(0, eq)] = ParseMoney(kv.substr(eq + 1));
  }
  return params;
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    WriteFile(out_path, text);
  }
}

int RunClear(const std::string& network_path, const std::string& profile_arg,
             const std::string& direction, const std::string& output,
             int cds_rounds, const std::string& out_path) {
  FinancialNetwork net = LoadNetwork(network_path);
  StrategyProfile profile =
      profile_arg == "proportional"
          ? ProportionalProfile(net)
          : ParseProfileJson(net, Json::parse(ReadFile(profile_arg)));
  ClearingResult result;
  if (direction == "minimal") {
    result = McpClear(net, profile, ClearingDirection::kMinimal);
  } else {
    CdsOptions opts;
    opts.max_rounds = cds_rounds;
    result = CdsClear(net, profile, opts);
  }
  if (output == "csv") {
    Emit(ClearingResultToCsv(net, result), out_path);
  } else if (output == "table") {
    std::ostringstream text;
    text << ClearingResultToCsv(net, result);
    text << "defaults:";
    for (int i : result.defaults) text << " " << net.id(i);
    text << "\nconverged: " << (result.converged ? "yes" : "no") << "\n";
    Emit(text.str(), out_path);
  } else {
    Emit(ClearingResultToJson(net, result).dump(2), out_path);
  }
  return result.converged ? kExitOk : kExitNonConvergent;
}

int RunAnalyze(const std::string& network_path, const std::string& utility,
               const std::string& output, const std::string& check,
               int coalition_max, int jobs, int cds_rounds,
               std::uint64_t max_profiles, const std::string& out_path) {
  FinancialNetwork net = LoadNetwork(network_path);
  AnalyzeOptions options;
  options.profile_cap = ProfileCapFromEnv(max_profiles);
  options.cds.max_rounds = cds_rounds;
  options.jobs = jobs;
  options.max_coalition = coalition_max;
  if (check == "strong") options.coalition_check = StabilityNotion::kStrong;
  if (check == "super-strong") {
    options.coalition_check = StabilityNotion::kSuperStrong;
  }
  const UtilityMode mode =
      utility == "equity" ? UtilityMode::kEquity : UtilityMode::kTotalAssets;
  GameReport report = Analyze(net, mode, options);
  if (output == "table") {
    Emit(GameReportToTable(net, report), out_path);
  } else {
    Emit(GameReportToJson(net, report).dump(2), out_path);
  }
  return kExitOk;
}

Json ExpectationsJson(const Fixture& fixture) {
  Json j;
  j["fixture"] = fixture.name;
  j["params"] = Json::object();
  for (const auto& [key, value] : fixture.params) {
    j["params"][key] = MoneyToString(value);
  }
  j["note"] = fixture.note;
  j["expectations"] = Json::array();
  for (const Expectation& e : fixture.expectations) {
    Json o;
    o["label"] = e.label;
    o["utility"] = e.mode == UtilityMode::kTotalAssets ? "assets" : "equity";
    o["profile"] = ProfileToJson(fixture.network, e.profile);
    if (e.payments.has_value()) {
      Json rows = Json::array();
      for (const auto& row : *e.payments) {
        Json r = Json::array();
        for (const Money& p : row) r.push_back(MoneyToString(p));
        rows.push_back(r);
      }
      o["payments"] = rows;
    }
    if (!e.utilities.empty()) {
      Json u = Json::object();
      for (const auto& [firm, value] : e.utilities) {
        u[fixture.network.id(firm)] = MoneyToString(value);
      }
      o["utilities"] = u;
    }
    if (e.social_welfare.has_value()) {
      o["social_welfare"] = MoneyToString(*e.social_welfare);
    }
    o["provenance"] = e.provenance;
    j["expectations"].push_back(o);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clearing-payment engine and equilibrium analyzer for "
               "financial networks under priority-proportional payments"};
  app.require_subcommand(1);

  // clear
  std::string network_path, profile_arg = "proportional";
  std::string direction = "maximal", output = "json", out_path;
  int cds_rounds = 10000;
  auto* clear = app.add_subcommand("clear", "compute clearing payments");
  clear->add_option("--network", network_path, "network JSON")->required();
  clear->add_option("--profile", profile_arg,
                    "profile JSON path or 'proportional'");
  clear->add_option("--direction", direction)
      ->check(CLI::IsMember({"maximal", "minimal"}));
  clear->add_option("--output", output)
      ->check(CLI::IsMember({"json", "csv", "table"}));
  clear->add_option("--cds-rounds", cds_rounds, "outer round cap");
  clear->add_option("--out", out_path, "write output to a file");

  // analyze
  std::string utility = "assets", check;
  int coalition_max = 2, jobs = 1;
  std::uint64_t max_profiles = 1000000;
  auto* analyze = app.add_subcommand("analyze", "exhaustive game analysis");
  analyze->add_option("--network", network_path)->required();
  analyze->add_option("--utility", utility)
      ->check(CLI::IsMember({"assets", "equity"}));
  analyze->add_option("--output", output)
      ->check(CLI::IsMember({"json", "table"}));
  analyze->add_option("--check", check)
      ->check(CLI::IsMember({"strong", "super-strong"}));
  analyze->add_option("--coalition-max", coalition_max);
  analyze->add_option("--jobs", jobs, "parallel profile evaluation");
  analyze->add_option("--max-profiles", max_profiles, "enumeration cap");
  analyze->add_option("--cds-rounds", cds_rounds);
  analyze->add_option("--out", out_path);

  // fixture
  auto* fixture = app.add_subcommand("fixture", "benchmark instances");
  fixture->require_subcommand(1);
  auto* fixture_list = fixture->add_subcommand("list", "list fixture names");
  std::string fixture_name, out_dir = ".";
  std::vector<std::string> param_kvs;
  auto* fixture_emit =
      fixture->add_subcommand("emit", "write network and expectations JSON");
  fixture_emit->add_option("--name", fixture_name)->required();
  fixture_emit->add_option("--param", param_kvs, "key=value, repeatable");
  fixture_emit->add_option("--out-dir", out_dir);
  auto* fixture_verify =
      fixture->add_subcommand("verify", "check solver output vs expectations");
  fixture_verify->add_option("--name", fixture_name)->required();
  fixture_verify->add_option("--param", param_kvs, "key=value, repeatable");

  CLI11_PARSE(app, argc, argv);

  try {
    if (clear->parsed()) {
      return RunClear(network_path, profile_arg, direction, output, cds_rounds,
                      out_path);
    }
    if (analyze->parsed()) {
      return RunAnalyze(network_path, utility, output, check, coalition_max,
                        jobs, cds_rounds, max_profiles, out_path);
    }
    if (fixture_list->parsed()) {
      for (const std::string& name : FixtureNames()) std::cout << name << "\n";
      return kExitOk;
    }
    if (fixture_emit->parsed()) {
      Fixture f = MakeFixture(fixture_name, ParseParams(param_kvs));
      WriteFile(out_dir + "/" + f.name + ".network.json",
                NetworkToJson(f.network).dump(2) + "\n");
      WriteFile(out_dir + "/" + f.name + ".expectations.json",
                ExpectationsJson(f).dump(2) + "\n");
      std::cout << "wrote " << f.name << ".network.json and " << f.name
                << ".expectations.json\n";
      return kExitOk;
    }
    if (fixture_verify->parsed()) {
      Fixture f = MakeFixture(fixture_name, ParseParams(param_kvs));
      std::vector<std::string> failures = VerifyFixture(f);
      std::cout << f.name << ": " << (f.expectations.size() - failures.size())
                << "/" << f.expectations.size() << " expectations pass\n";
      for (const std::string& failure : failures) {
        std::cout << "FAIL " << failure << "\n";
      }
      return failures.empty() ? kExitOk : kExitInputError;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << ErrorCodeName(e.code()) << "]: " << e.what()
              << "\n";
    switch (e.code()) {
      case ErrorCode::kNonConvergentProfile:
        return kExitNonConvergent;
      case ErrorCode::kEnumerationCapExceeded:
      case ErrorCode::kStrategySpaceTooLarge:
        return kExitCapExceeded;
      default:
        return kExitInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
