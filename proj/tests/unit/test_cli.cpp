#include <gtest/gtest.h>

#include <atomic>
#include <sstream>
#include <string>
#include <vector>

#include "momo/cli/runner.hpp"

namespace cli = momo::cli;
using cli::json;

namespace {

std::string pointer_of(const json& config) {
  try {
    cli::run_config(config, 1);
  } catch (const cli::ConfigError& e) {
    return e.pointer();
  }
  return "<no error>";
}

json envelope(const std::string& suite, json params) {
  return {{"version", 1}, {"experiment_id", "t"}, {"suite", suite}, {"params", std::move(params)}};
}

}  // namespace

TEST(Config, EnvelopeRoundTrip) {
  const json j = {{"version", 1},
                  {"experiment_id", "run-7"},
                  {"suite", "kbsz"},
                  {"params", {{"N", 1000}, {"pairs", {{3, 5}}}}},
                  {"output", "out/x.csv"}};
  const auto c = cli::parse_config_envelope(j);
  EXPECT_EQ(c.to_json(), j);
  EXPECT_EQ(cli::parse_config_envelope(json::parse(c.to_json().dump())).to_json(), j);
  const auto bare = cli::parse_config_envelope({{"version", 1}, {"experiment_id", "a"}, {"suite", "propD"}});
  EXPECT_TRUE(bare.output.empty());
  EXPECT_EQ(bare.to_json().count("output"), 0u);
}

TEST(Config, UnknownKeysCarryTheirPointer) {
  EXPECT_EQ(pointer_of({{"version", 1}, {"experiment_id", "a"}, {"suite", "propD"}, {"extra", 0}}), "/extra");
  EXPECT_EQ(pointer_of(envelope("propD", {{"grid", {{{"M", 100}, {"H", 10}, {"Q", 1}}}}})), "/params/grid/0/Q");
  EXPECT_EQ(pointer_of(envelope("propD", {{"gird", json::array()}})), "/params/gird");
  EXPECT_EQ(pointer_of(envelope("kbsz", {{"observables", {{{"kind", "rotation"}, {"alpha", 0.1}, {"beta", 1}}}}})),
            "/params/observables/0/beta");
  EXPECT_EQ(pointer_of(envelope("mobius-like", {{"cuts", {{"kind", "power"}, {"c", 1}, {"gamma", 1.5}, {"x", 1}}}})),
            "/params/cuts/x");
}

TEST(Config, InvalidValuesCarryTheirPointer) {
  EXPECT_EQ(pointer_of({{"version", 2}, {"experiment_id", "a"}, {"suite", "propD"}}), "/version");
  EXPECT_EQ(pointer_of({{"version", 1}, {"experiment_id", "a"}, {"suite", "nope"}}), "/suite");
  EXPECT_EQ(pointer_of({{"version", 1}, {"suite", "propD"}}), "/experiment_id");
  EXPECT_EQ(pointer_of(envelope("mobius-like", {{"u", "zeta"}})), "/params/u");
  EXPECT_EQ(pointer_of(envelope("mobius-like", {{"cuts", {{"kind", "power"}, {"c", 1}, {"gamma", 1.0}}}})),
            "/params/cuts/gamma");
  EXPECT_EQ(pointer_of(envelope("propD", {{"grid", {{{"M", -1}, {"H", 10}}}}})), "/params/grid/0/M");
  EXPECT_EQ(pointer_of(envelope("kbsz", {{"pairs", {{3, 4}}}})), "/params/pairs/0");
  EXPECT_EQ(pointer_of(envelope("entropy-mix", {{"p", 1.5}})), "/params/p");
  EXPECT_EQ(pointer_of(envelope("kakutani-vs-liouville", {{"A", {{"positions", {70}}, {"complement", false}}}})),
            "/params/A/positions/0");
  EXPECT_EQ(pointer_of(envelope("adversarial-tm",
                                {{"language", {{"alphabet", {"a", "b"}}, {"rules", {{"a", "ac"}, {"b", "ba"}}}}}})),
            "/params/language/rules/a");
  EXPECT_EQ(pointer_of(envelope("adversarial-tm", {{"language", {{"blocks", {"012"}}}}})),
            "/params/language/blocks/0");
}

TEST(Config, IntegersAcceptIntegralFloats) {
  EXPECT_EQ(cli::ParamReader::as_u64(json(1e4), "/x"), 10000u);
  EXPECT_EQ(cli::ParamReader::as_u64(json(7), "/x"), 7u);
  EXPECT_THROW(cli::ParamReader::as_u64(json(1.5), "/x"), cli::ConfigError);
  EXPECT_THROW(cli::ParamReader::as_u64(json(-3), "/x"), cli::ConfigError);
  EXPECT_THROW(cli::ParamReader::as_u64(json("3"), "/x"), cli::ConfigError);
  EXPECT_THROW(cli::ParamReader::as_u64(json(2), "/x", 3), cli::ConfigError);
}

TEST(Config, UserParamsOverlayDefaults) {
  const auto& suite = cli::find_suite("entropy-mix");
  const json merged = cli::merged_params(suite, {{"seed", 7}});
  EXPECT_EQ(merged["seed"], 7);
  EXPECT_EQ(merged["p"], suite.defaults["p"]);
  EXPECT_EQ(merged["N"], suite.defaults["N"]);
}

TEST(Catalogue, AtLeastNineSuitesWithValidDefaults) {
  const std::vector<std::string> required = {"mobius-like", "propD", "short-interval", "kbsz", "ap-aperiodicity",
                                             "kakutani-vs-liouville", "root-rotation", "entropy-mix", "adversarial-tm"};
  EXPECT_GE(cli::suites().size(), 9u);
  for (const auto& name : required) {
    const auto& suite = cli::find_suite(name);
    json params = suite.defaults;
    cli::ParamReader reader(params, "/params");
    EXPECT_NO_THROW(suite.plan(reader)) << name;
  }
  const auto& kak = cli::find_suite("kakutani-vs-liouville");
  EXPECT_EQ(kak.defaults["A"]["positions"], json::array());
  EXPECT_EQ(kak.defaults["A"]["complement"], true);
}

TEST(Runner, EmptyGridGivesNoRows) {
  const auto res = cli::run_config(envelope("propD", {{"grid", json::array()}}), 4);
  EXPECT_TRUE(res.rows.empty());
  std::ostringstream out;
  cli::write_csv(out, "t", "propD", res.rows, cli::kToolVersion);
  EXPECT_EQ(out.str(), std::string(cli::kCsvHeader) + "\r\n");
}

TEST(Runner, RowsFollowGridOrderForAnyWorkerCount) {
  std::vector<cli::Task> tasks;
  for (int i = 0; i < 37; ++i) {
    tasks.push_back([i](const momo::Exec&) {
      return std::vector<cli::Row>{{"s", {{"i", i}}, double(i), 1, 0.0}, {"t", {{"i", i}}, -double(i), 1, 0.0}};
    });
  }
  for (unsigned threads : {1u, 2u, 8u, 64u}) {
    const auto rows = cli::run_tasks(tasks, threads);
    ASSERT_EQ(rows.size(), 74u);
    for (int i = 0; i < 37; ++i) {
      EXPECT_EQ(rows[2 * i].params["i"], i);
      EXPECT_EQ(rows[2 * i].statistic, "s");
      EXPECT_EQ(rows[2 * i + 1].statistic, "t");
    }
  }
}

TEST(Runner, TaskErrorsPropagate) {
  std::vector<cli::Task> tasks(5, [](const momo::Exec&) { return std::vector<cli::Row>{}; });
  tasks[3] = [](const momo::Exec&) -> std::vector<cli::Row> {
    throw momo::Error(momo::ErrorCode::insufficient_range, "short", 99);
  };
  for (unsigned threads : {1u, 4u}) {
    try {
      cli::run_tasks(tasks, threads);
      ADD_FAILURE();
    } catch (const momo::Error& e) {
      EXPECT_EQ(e.code(), momo::ErrorCode::insufficient_range);
      EXPECT_EQ(e.required(), 99u);
    }
  }
}

TEST(Runner, SieveCapSurfacesRequiredRange) {
  try {
    cli::run_config(envelope("mobius-like", {{"limits", {10000}}, {"sieve_n", 500}}), 1);
    ADD_FAILURE();
  } catch (const momo::Error& e) {
    EXPECT_EQ(e.code(), momo::ErrorCode::insufficient_range);
    ASSERT_TRUE(e.required());
    EXPECT_EQ(*e.required(), 9993u);  // b_K - 1 for POWER(1, 1.5) up to 1e4
  }
}

TEST(Runner, RowsCarryTheirParameters) {
  const auto res = cli::run_config(envelope("root-rotation", {{"t_min", 10}, {"t_max", 10}}), 1);
  ASSERT_EQ(res.rows.size(), 1u);
  EXPECT_EQ(res.rows[0].params["b_t"], 615);
  EXPECT_EQ(res.rows[0].params["n_t"], 1024);
  EXPECT_EQ(res.rows[0].value.real(), 409.0 / 1024.0);
}

TEST(Csv, Rfc4180Quoting) {
  EXPECT_EQ(cli::csv_field("plain"), "plain");
  EXPECT_EQ(cli::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(cli::csv_field("line\nbreak"), "\"line\nbreak\"");
  EXPECT_EQ(cli::csv_field(""), "");
}

TEST(Csv, WriteAndSplitRoundTrip) {
  const std::vector<cli::Row> rows = {
      {"short_interval_avg", {{"M", 10}, {"H", 2}, {"u", "x,\"y\""}}, {0.1, -2.5e-300}, 20, 1.23456},
  };
  std::ostringstream out;
  cli::write_csv(out, "id,1", "propD", rows, "1.0.0");
  const std::string text = out.str();
  const auto first_break = text.find("\r\n");
  ASSERT_NE(first_break, std::string::npos);
  EXPECT_EQ(text.substr(0, first_break), cli::kCsvHeader);
  const std::string record = text.substr(first_break + 2, text.size() - first_break - 4);
  const auto fields = cli::split_csv_record(record);
  ASSERT_EQ(fields.size(), 9u);
  EXPECT_EQ(fields[0], "id,1");
  EXPECT_EQ(fields[1], "propD");
  EXPECT_EQ(fields[2], "short_interval_avg");
  EXPECT_EQ(json::parse(fields[3]), rows[0].params);
  EXPECT_EQ(std::stod(fields[4]), 0.1);
  EXPECT_EQ(std::stod(fields[5]), -2.5e-300);
  EXPECT_EQ(fields[6], "20");
  EXPECT_EQ(fields[7], "1.235");
  EXPECT_EQ(fields[8], "1.0.0");
}
