#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "svt/holonomic.hpp"
#include "svt/io.hpp"

namespace svt::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const HttpsGet* get = nullptr) {
  std::ostringstream out, err;
  const int code = run(args, out, err, get);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("svt-cli-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string write_file(const TempDir& dir, const std::string& name, const std::string& body) {
  const auto path = dir.file(name);
  std::ofstream(path) << body;
  return path;
}

TEST(CliCount, AllMethodsAgree) {
  const Result r = run_cli({"count", "3", "3", "3", "--method", "all"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "37\n37\n37\n");
}

TEST(CliCount, DefaultsAndZeroDimension) {
  EXPECT_EQ(run_cli({"count", "2", "2", "2", "2", "2"}).out, "120\n");
  EXPECT_EQ(run_cli({"count", "5", "0", "5"}).out, "0\n");
}

TEST(CliCount, MalformedShapeIsUsageError) {
  EXPECT_EQ(run_cli({"count", "3", "x"}).code, kUsage);
  EXPECT_EQ(run_cli({"count"}).code, kUsage);
  EXPECT_EQ(run_cli({"count", "3", "3", "--method", "magic"}).code, kUsage);
}

TEST(CliCount, JsonTableAndPolyDump) {
  const Result r = run_cli({"count", "2", "2", "--format", "json", "--dump-poly"});
  EXPECT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("d"), 2);
  EXPECT_NE(r.err.find("1 0 0"), std::string::npos);
}

TEST(CliDiagonal, BfileC3) {
  const Result r = run_cli({"diagonal", "3", "24", "--format", "bfile"});
  EXPECT_EQ(r.code, kOk);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 24u);
  EXPECT_EQ(out.back(), "24 63203453697218605440");
}

TEST(CliDiagonal, C6AndMatrixCase) {
  EXPECT_EQ(lines(run_cli({"diagonal", "6", "6"}).out).back(), "6 1435747717722810960");
  EXPECT_EQ(run_cli({"diagonal", "2", "5"}).out, "1 1\n2 2\n3 3\n4 4\n5 5\n");
  EXPECT_EQ(run_cli({"diagonal", "2", "3", "--format", "csv"}).out, "n,value\n1,1\n2,2\n3,3\n");
  const auto j = nlohmann::json::parse(run_cli({"diagonal", "3", "3", "--format", "json"}).out);
  EXPECT_EQ(j.at("terms"), nlohmann::json::array({"1", "6", "37"}));
}

TEST(CliDiagonal, ResourceGuard) {
  EXPECT_EQ(run_cli({"diagonal", "7", "5"}).code, kUsage);
  EXPECT_EQ(run_cli({"diagonal", "7", "2", "--force"}).code, kOk);
  EXPECT_EQ(run_cli({"diagonal", "1", "5"}).code, kUsage);
}

TEST(CliGuess, RoundTripReproducesStoredC3) {
  TempDir dir;
  const std::string file = dir.file("c3.txt");
  ASSERT_EQ(run_cli({"diagonal", "3", "60", "--output", file}).code, kOk);
  const Result r = run_cli({"guess", file, "--max-order", "5", "--max-degree", "7"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(recurrence_from_json(nlohmann::json::parse(r.out)), c3_recurrence());
}

TEST(CliGuess, NoneFoundForC4) {
  TempDir dir;
  const std::string file = dir.file("c4.txt");
  ASSERT_EQ(run_cli({"diagonal", "4", "19", "--output", file}).code, kOk);
  const Result r = run_cli({"guess", file, "--max-order", "6", "--max-degree", "6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "NONE FOUND\n");
}

TEST(CliGuess, GeometricAndErrors) {
  TempDir dir;
  std::string body;
  BigInt v = 1;
  for (int n = 1; n <= 30; ++n) body += std::to_string(n) + " " + (v *= 2).get_str() + "\n";
  const auto file = write_file(dir, "pow2.txt", body);
  const Result r = run_cli({"guess", file, "--max-order", "1", "--max-degree", "0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("coeffs"),
            nlohmann::json::parse(R"([["-2"],["1"]])"));

  const auto short_file = write_file(dir, "short.txt", "1 2\n2 4\n3 8\n");
  EXPECT_EQ(run_cli({"guess", short_file, "--max-order", "1", "--max-degree", "0"}).code,
            kInsufficientData);
  const auto junk = write_file(dir, "junk.txt", "1 2\nfoo bar\n");
  EXPECT_EQ(run_cli({"guess", junk}).code, kUsage);
  EXPECT_EQ(run_cli({"guess", dir.file("missing.txt")}).code, kUsage);
}

TEST(CliAsymptotics, D3Report) {
  const Result r = run_cli({"asymptotics", "--d", "3", "--n", "200"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(std::stod(j.at("deviation").get<std::string>()), 1e-4);
  EXPECT_NEAR(std::stod(j.at("mu_estimated").get<std::string>()), 8.0, 1e-4);
  EXPECT_EQ(j.at("n_used"), 200);
  EXPECT_FALSE(j.at("comparison").empty());
}

TEST(CliAsymptotics, D5Report) {
  const Result r = run_cli({"asymptotics", "--d", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(std::stod(j.at("deviation").get<std::string>()), 0.017, 5e-4);
  EXPECT_EQ(j.at("mu_conjectured"), "1024.0000000000000000");
}

TEST(CliAsymptotics, Subdominance) {
  const Result r = run_cli({"asymptotics", "--subdominance", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(std::stod(j.at("ratio_unperturbed").get<std::string>()), 8.0, 1e-3);
  EXPECT_NEAR(std::stod(j.at("ratio_perturbed").get<std::string>()), 9.0, 1e-2);
  EXPECT_EQ(run_cli({"asymptotics", "--subdominance", "0"}).code, kUsage);
}

TEST(CliAsymptotics, InputFile) {
  TempDir dir;
  const auto file = dir.file("c4.txt");
  ASSERT_EQ(run_cli({"diagonal", "4", "19", "--output", file}).code, kOk);
  const Result r = run_cli({"asymptotics", "--input", file, "--theta-hint", "-3/2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NEAR(std::stod(nlohmann::json::parse(r.out).at("mu_estimated").get<std::string>()),
              81.0, 81.0 * 0.02);
  const auto bad = write_file(dir, "signs.txt", "1 1\n2 -2\n3 4\n4 -8\n");
  EXPECT_EQ(run_cli({"asymptotics", "--input", bad}).code, kUsage);
  EXPECT_EQ(run_cli({"asymptotics", "--d", "9"}).code, kUsage);
}

TEST(CliVerify, GoldenTables) {
  const Result r = run_cli({"verify"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "C3: 24/24 OK; C4: 19/19 OK; C5: 8/8 OK; C6: 6/6 OK\n");
}

TEST(CliVerify, CorruptedTableNamesFirstMismatch) {
  const Result r = run_cli({"verify", "--corrupt", "4:7"});
  EXPECT_EQ(r.code, kMismatch);
  EXPECT_NE(r.err.find("C4: first mismatch at n=7"), std::string::npos);

  GoldenTables tables = golden_tables();
  std::vector<BigInt> terms = tables[5].terms();
  terms[2] -= 1;
  tables[5] = BigSequence(1, terms);
  std::ostringstream out, err;
  EXPECT_EQ(verify_golden(tables, out, err), kMismatch);
  EXPECT_NE(err.str().find("n=3"), std::string::npos);
}

TEST(CliVerify, FetchDiffsAgainstDownloadedBfile) {
  TempDir dir;
  std::string body = "# A271905\n";
  const auto c3 = extend(c3_recurrence(), BigSequence(1, {1, 6, 37, 240, 1621}), 40);
  for (std::int64_t n = 1; n <= 40; ++n) body += std::to_string(n) + " " + c3.at(n).get_str() + "\n";
  std::string requested;
  const HttpsGet fake = [&](const std::string& host, const std::string& path) {
    requested = host + path;
    return std::optional<std::string>(body);
  };
  const Result r = run_cli({"verify", "--fetch", "--cache-dir", dir.path().string()}, &fake);
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(requested, "oeis.org/A271905/b271905.txt");
  EXPECT_NE(r.out.find("A271905: 40/40 OK"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "b271905.txt"));

  // Offline afterwards: exit 4, cached copy still diffed, with a warning.
  const HttpsGet offline = [](const std::string&, const std::string&) {
    return std::optional<std::string>();
  };
  const Result cached = run_cli({"verify", "--fetch", "--cache-dir", dir.path().string()}, &offline);
  EXPECT_EQ(cached.code, kNetwork);
  EXPECT_NE(cached.out.find("A271905: 40/40 OK"), std::string::npos);
  EXPECT_NE(cached.err.find("warning"), std::string::npos);
}

TEST(CliVerify, FetchFailureWithoutCache) {
  TempDir dir;
  const HttpsGet offline = [](const std::string&, const std::string&) {
    return std::optional<std::string>();
  };
  const Result r = run_cli({"verify", "--fetch", "--cache-dir", dir.file("none")}, &offline);
  EXPECT_EQ(r.code, kNetwork);
}

TEST(CliVerify, FetchDetectsRemoteMismatch) {
  TempDir dir;
  const HttpsGet fake = [](const std::string&, const std::string&) {
    return std::optional<std::string>("1 1\n2 6\n3 38\n");
  };
  const Result r = run_cli({"verify", "--fetch", "--cache-dir", dir.path().string()}, &fake);
  EXPECT_EQ(r.code, kMismatch);
  EXPECT_NE(r.err.find("n=3"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"diagonal", "4", "10", "--format", "json"},
        std::vector<std::string>{"asymptotics", "--d", "4"},
        std::vector<std::string>{"verify"}}) {
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  }
}

TEST(Cli, HelpAndUnknownSubcommand) {
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
}

TEST(OeisPath, BfileUrlScheme) {
  EXPECT_EQ(bfile_path("A271905"), "/A271905/b271905.txt");
  EXPECT_THROW(bfile_path("B12"), UsageError);
}

}  // namespace
}  // namespace svt::cli
