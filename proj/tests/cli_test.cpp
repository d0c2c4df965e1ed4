#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "atmp/oracle.hpp"
#include "atmp/pareto.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace atmp {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "atmpnet");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("atmp_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string make_instance(int orders = 3, int locations = 3, int modes = 2, int seed = 11) {
    const std::string p = path("inst.json");
    const auto r = run({"gen", "--orders", std::to_string(orders), "--locations", std::to_string(locations), "--modes",
                        std::to_string(modes), "--seed", std::to_string(seed), "--out", p});
    EXPECT_EQ(r.code, 0) << r.err;
    return p;
  }

  fs::path dir_;
};

TEST_F(Cli, GenThenFrontMatchesOracle) {
  const auto inst_path = make_instance();
  const auto csv_path = path("front.csv");
  const auto r = run({"front", "--instance", inst_path, "--out", csv_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_front_csv(slurp(csv_path));
  const auto oracle = oracle_front(read_instance(slurp(inst_path)));
  ASSERT_EQ(rows.size(), oracle.points.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& o = oracle.points[n].objective;
    EXPECT_EQ(rows[n].coverage, o.coverage);
    EXPECT_NEAR(rows[n].cost, o.cost, 1e-9 * std::max(1.0, o.cost));
    EXPECT_NEAR(rows[n].waiting_time_hours, o.waiting_time_hours, 1e-9 * std::max(1.0, o.waiting_time_hours));
  }
  const auto sidecar = nlohmann::json::parse(slurp(csv_path + ".solutions.json"));
  EXPECT_EQ(sidecar["points"].size(), rows.size());
}

TEST_F(Cli, FrontCsvRefilterIsUnchanged) {
  const auto inst_path = make_instance(4, 3, 2, 5);
  const auto r = run({"front", "--instance", inst_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_front_csv(r.out);
  std::vector<ObjectiveVector> objs;
  for (const auto& row : rows) objs.push_back({row.waiting_time_hours, row.cost, row.coverage});
  EXPECT_EQ(nondominated_filter(objs), objs);
}

TEST_F(Cli, ValidateCorruptedInstanceGivesPathMessage) {
  const auto inst_path = make_instance();
  std::string text = slurp(inst_path);
  const auto pos = text.find("\"op_cost_fresh\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 15, "\"op_cost_fresh\":\"oops\",\"x\"");
  std::ofstream(inst_path, std::ios::binary) << text;
  const auto r = run({"validate", "--instance", inst_path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/op_cost_fresh"), std::string::npos) << r.err;
}

TEST_F(Cli, ValidateReportsViolationsWithExitOne) {
  const auto inst_path = make_instance();
  auto doc = nlohmann::ordered_json::parse(slurp(inst_path));
  doc["big_t_hours"] = 0.5;
  std::ofstream(inst_path, std::ios::binary) << doc.dump();
  const auto r = run({"validate", "--instance", inst_path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE((r.out + r.err).find("big_t"), std::string::npos);
}

TEST_F(Cli, SolveCostOnlyGivesEmptyNetwork) {
  const auto inst_path = make_instance();
  const auto r = run({"solve", "--instance", inst_path, "--weights", "0,1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["objective"]["cost"], 0.0);
  EXPECT_EQ(doc["objective"]["coverage"], 0);
}

TEST_F(Cli, SolveWithoutObjectiveIsBadInput) {
  const auto inst_path = make_instance();
  EXPECT_EQ(run({"solve", "--instance", inst_path}).code, 2);
  EXPECT_EQ(run({"solve", "--instance", inst_path, "--weights", "1,x,0"}).code, 2);
  EXPECT_EQ(run({"solve", "--instance", path("missing.json"), "--weights", "1,1,0"}).code, 2);
}

TEST_F(Cli, SolveBudgetExhaustedExitsThree) {
  const auto inst_path = make_instance(6, 5, 2, 3);
  const auto r = run({"solve", "--instance", inst_path, "--weights", "1,1,3000", "--node-limit", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
}

TEST_F(Cli, EvalScoresASolutionFile) {
  const auto inst_path = make_instance();
  const auto sol_path = path("sol.json");
  ASSERT_EQ(run({"solve", "--instance", inst_path, "--weights", "1,1,3000", "--out", sol_path}).code, 0);
  const auto solved = nlohmann::json::parse(slurp(sol_path));
  std::ofstream(path("only.json"), std::ios::binary) << solved["solution"].dump();
  const auto r = run({"eval", "--instance", inst_path, "--solution", path("only.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["objective"], solved["objective"]);
}

TEST_F(Cli, BaselineAndExportRun) {
  const auto inst_path = make_instance(5, 4, 1, 2);
  auto r = run({"baseline", "--instance", inst_path, "--model", "pmedian", "--p", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["open"].size(), 2u);
  r = run({"baseline", "--instance", inst_path, "--model", "lscp", "--radius", "0"});
  EXPECT_EQ(r.code, 1);
  r = run({"export-lp", "--instance", inst_path, "--weights", "1,1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Subject To"), std::string::npos);
}

TEST_F(Cli, HelpMentionsSchemaVersion) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("schema"), std::string::npos);
}

TEST_F(Cli, OutputsAreRepeatable) {
  const auto inst_path = make_instance(4, 3, 2, 8);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"front", "--instance", inst_path, "--method", "heuristic", "--seed", "4"},
        std::vector<std::string>{"solve", "--instance", inst_path, "--primary", "V", "--max-cost", "3000"}}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace atmp
