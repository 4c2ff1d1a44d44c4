// momo-lab: config-driven experiments, sequence dumps and the self test.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "momo/arith.hpp"
#include "momo/cli/runner.hpp"
#include "momo/detail/parallel.hpp"

namespace {

using momo::cli::json;

constexpr int kExitConfig = 2;
constexpr int kExitRange = 3;
constexpr int kExitFailure = 1;

int report(const momo::Error& e) {
  std::cerr << "momo-lab: " << e.what() << '\n';
  if (e.code() == momo::ErrorCode::insufficient_range && e.required()) {
    std::cerr << "momo-lab: required N = " << *e.required() << '\n';
  }
  if (e.code() == momo::ErrorCode::insufficient_range) return kExitRange;
  if (e.code() == momo::ErrorCode::invalid_config) return kExitConfig;
  return kExitFailure;
}

int cmd_run(const std::string& config_path, const std::string& out_override) {
  const unsigned threads = momo::env_thread_cap();
  const json j = momo::cli::read_json_file(config_path);
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = momo::cli::run_config(j, threads);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string path = out_override.empty() ? result.config.output : out_override;
  if (path.empty()) {
    momo::cli::write_csv(std::cout, result.config.experiment_id, result.config.suite, result.rows,
                         momo::cli::kToolVersion);
  } else {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw momo::Error(momo::ErrorCode::invalid_config, "cannot write output file '" + path + "'");
    momo::cli::write_csv(out, result.config.experiment_id, result.config.suite, result.rows,
                         momo::cli::kToolVersion);
  }
  // the summary goes to stderr when the CSV itself occupies stdout
  std::ostream& summary = path.empty() ? std::cerr : std::cout;
  summary << "experiment " << result.config.experiment_id << " (suite " << result.config.suite << "): "
          << result.rows.size() << " rows, " << threads << " worker(s), " << std::fixed << std::setprecision(3)
          << secs << " s" << (path.empty() ? "" : ", written to " + path) << '\n';
  summary.unsetf(std::ios::fixed);
  for (const auto& row : result.rows) {
    summary << "  " << row.statistic << ' ' << row.params.dump() << " = " << momo::cli::format_g17(row.value.real());
    if (row.value.imag() != 0.0) summary << (row.value.imag() < 0 ? " - " : " + ") << momo::cli::format_g17(std::abs(row.value.imag())) << "i";
    summary << '\n';
  }
  return 0;
}

int cmd_list(bool as_json) {
  const auto& suites = momo::cli::suites();
  if (as_json) {
    json arr = json::array();
    for (const auto& s : suites) {
      arr.push_back({{"suite", s.name},
                     {"summary", s.summary},
                     {"config",
                      {{"version", momo::cli::kConfigVersion},
                       {"experiment_id", s.name},
                       {"suite", s.name},
                       {"params", s.defaults}}}});
    }
    std::cout << arr.dump(2) << '\n';
    return 0;
  }
  std::size_t width = 0;
  for (const auto& s : suites) width = std::max(width, s.name.size());
  for (const auto& s : suites) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << s.name << s.summary << '\n';
  return 0;
}

int cmd_sieve(const std::string& fn, std::uint64_t n, const std::string& path) {
  const auto seq = fn == "mobius" ? momo::arith::sieve_mobius(n) : momo::arith::sieve_liouville(n);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw momo::Error(momo::ErrorCode::invalid_argument, "cannot write '" + path + "'");
  out.write("MOMOSEQ1", 8);
  unsigned char len[8];
  for (int i = 0; i < 8; ++i) len[i] = static_cast<unsigned char>(n >> (8 * i));
  out.write(reinterpret_cast<const char*>(len), 8);
  // payload holds u(1), ..., u(n)
  std::vector<char> payload(n);
  for (std::uint64_t k = 1; k <= n; ++k) payload[k - 1] = static_cast<char>(seq.sign(k));
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw momo::Error(momo::ErrorCode::invalid_argument, "write to '" + path + "' failed");
  std::cout << "wrote " << fn << " for n = 1.." << n << " to " << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"momo-lab: orthogonality statistics of arithmetic functions against symbolic observables"};
  app.set_version_flag("--version", momo::cli::kToolVersion);
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run an experiment config and emit CSV");
  std::string config_path, out_override;
  run->add_option("config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_override, "CSV path, overriding the config's output");

  auto* list = app.add_subcommand("list", "list the canned experiment suites");
  bool list_json = false;
  list->add_flag("--json", list_json, "print each suite's default config as JSON");

  auto* sieve = app.add_subcommand("sieve", "dump mu or lambda as a binary i8 sequence");
  std::string fn, sieve_out;
  std::uint64_t sieve_n = 0;
  sieve->add_option("--fn", fn, "arithmetic function")->required()->check(CLI::IsMember({"mobius", "liouville"}));
  sieve->add_option("--n", sieve_n, "last index N")->required()->check(CLI::PositiveNumber);
  sieve->add_option("--out", sieve_out, "output path")->required();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path, out_override);
    if (*list) return cmd_list(list_json);
    if (*sieve) return cmd_sieve(fn, sieve_n, sieve_out);
    if (*selftest) return momo::acceptance::run_all(std::cout) ? 0 : kExitFailure;
  } catch (const momo::Error& e) {
    return report(e);
  } catch (const std::exception& e) {
    std::cerr << "momo-lab: error " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
