#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "nestrad/cli.hpp"
#include "nestrad/render.hpp"

namespace nestrad {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::string field(const std::string& text, const std::string& key) {
  for (const auto& line : lines(text)) {
    if (line.rfind(key + " ", 0) == 0) {
      const auto pos = line.find_first_not_of(' ', key.size());
      return line.substr(pos);
    }
  }
  return {};
}

TEST(Compute, Method1) {
  const Result r = run({"compute", "--method", "method1", "--m", "2", "--s", "2", "--sign", "+", "--k", "20", "--bits", "128"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(field(r.out, "value").substr(0, 14), "3.141592653589");
  // pi^3 / (96 * 4^20) = 2.94e-13
  EXPECT_EQ(field(r.out, "abs_error").substr(0, 17), "0.000000000000293");
  EXPECT_EQ(field(r.out, "correct_digits"), "12");
  EXPECT_TRUE(r.err.empty());
}

TEST(Compute, AsPrintedEmitsMisprint) {
  const Result r = run({"compute", "--method", "method2", "--variant", "as-printed", "--m", "10000", "--d", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field(r.out, "value").substr(0, 8), "0.000444");
  EXPECT_NE(r.err.find("MISPRINT"), std::string::npos);
  EXPECT_EQ(r.out.find("MISPRINT"), std::string::npos);
}

TEST(Compute, OtherMethods) {
  EXPECT_EQ(field(run({"compute", "--method", "viete", "--k", "1"}).out, "value").substr(0, 9), "2.8284271");
  EXPECT_EQ(field(run({"compute", "--method", "unity", "--m", "1", "--s", "0", "--k", "1"}).out, "value").substr(0, 9),
            "0.9003163");
  EXPECT_EQ(field(run({"compute", "--method", "combined", "--m", "5", "--d", "3", "--k", "1"}).out, "value").substr(0, 8),
            "3.087667");
  // 0.800884 exactly; the binary value truncates just below it
  EXPECT_NEAR(std::stod(field(run({"compute", "--method", "taylor", "--m", "5", "--d", "3", "--terms", "4"}).out, "value")),
              0.800884, 1e-15);
  EXPECT_EQ(field(run({"compute", "--method", "method1", "--x0", "0.8", "--k", "3"}).out, "params").find("ratio=self") !=
                std::string::npos,
            true);
}

TEST(ExitCodes, DomainAndCatalog) {
  EXPECT_EQ(run({"compute", "--method", "method2", "--m", "5", "--d", "7"}).code, kExitDomain);
  EXPECT_EQ(run({"compute", "--method", "method1", "--m", "5", "--s", "16", "--k", "3", "--ratio-mode", "exact"}).code,
            kExitDomain);
  EXPECT_EQ(run({"compute", "--method", "method1", "--m", "2", "--s", "4", "--sign", "+", "--k", "3"}).code, kExitDomain);
  EXPECT_EQ(run({"arccos", "--x0", "1.5"}).code, kExitDomain);
}

TEST(ExitCodes, Usage) {
  EXPECT_EQ(run({"compute", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "--method", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "--method", "method1", "--m", "2"}).code, kExitUsage);  // no --s
  EXPECT_EQ(run({"arccos", "--x0", "0.8", "--max-depth", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--method", "method1", "--m", "2", "--s", "2", "--k-range", "1:3", "--format", "xml"}).code,
            kExitUsage);
  EXPECT_EQ(run({"compute", "--method", "viete", "--k", "3", "--bits", "32"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--method", "method1", "--m", "2", "--s", "2", "--k-range", "1:x"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "--method", "method1", "--m", "2", "--s", "2", "--sign", "?", "--k", "2"}).code, kExitUsage);
}

TEST(ExitCodes, Precision) {
  const Result r = run({"arccos", "--x0", "0.8", "--max-depth", "10"});
  EXPECT_EQ(r.code, kExitPrecision);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"arccos", "--x0", "0.8", "--max-depth", "200"}).code, kExitOk);
}

TEST(ExitCodes, Unwritable) {
  const Result r = run({"compute", "--method", "viete", "--k", "3", "--out", "/nonexistent-dir/x.txt"});
  EXPECT_EQ(r.code, kExitCantCreate);
  EXPECT_TRUE(r.out.empty());
}

TEST(Table, CsvShape) {
  const Result one = run({"table", "--method", "method1", "--m", "2", "--s", "2", "--k-range", "3", "--format", "csv"});
  EXPECT_EQ(one.code, kExitOk) << one.err;
  const auto l = lines(one.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "index,approximant,abs_error,correct_digits,error_ratio");
  EXPECT_EQ(l[1].rfind("3,3.136548", 0), 0u);
  EXPECT_EQ(l[1].back(), ',');  // no ratio for the first row
  EXPECT_EQ(one.out.back(), '\n');

  const Result three = run({"table", "--method", "method1", "--m", "2", "--s", "2", "--k-range", "1:3", "--format", "csv"});
  EXPECT_EQ(lines(three.out).size(), 4u);
  const Result listed = run({"table", "--method", "method1", "--m", "2", "--s", "2", "--k-range", "1,2,3", "--format", "csv"});
  EXPECT_EQ(listed.out, three.out);
}

TEST(Table, EmptySweepIsHeaderOnly) {
  const Result r = run({"table", "--method", "method1", "--m", "2", "--s", "2", "--k-range", "5:4", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "index,approximant,abs_error,correct_digits,error_ratio\n");
}

TEST(Table, NoExponentNotation) {
  const Result r = run({"table", "--method", "method2", "--m-range", "10,100,1000,10000", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(std::regex_search(r.out, std::regex("[0-9][eE]")));
}

TEST(Table, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--method", "method1", "--m", "2", "--s", "3", "--sign", "-", "--k-range", "1:12", "--format", "json"},
           {"table", "--method", "method2", "--variant", "as-printed", "--m-range", "100,1000", "--format", "json"},
           {"table", "--method", "combined", "--m-range", "50,100", "--k", "5", "--format", "json"}}) {
    const Result r = run(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const ConvergenceReport report = report_from_json(r.out);
    EXPECT_EQ(render_report(report, Format::json), r.out);
    EXPECT_FALSE(report.rows.empty());
    EXPECT_EQ(report.meta.bits, 128);
  }
}

TEST(Table, Deterministic) {
  const std::vector<std::string> args = {"table", "--method", "unity", "--m", "5", "--s", "16", "--k-range", "1:25", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> csv = {"table", "--method", "viete", "--k-range", "1:30", "--format", "csv"};
  EXPECT_EQ(run(csv).out, run(csv).out);
}

TEST(Table, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "nestrad_cli_test.csv";
  const Result r = run({"table", "--method", "viete", "--k-range", "1:4", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(lines(ss.str()).size(), 5u);
  std::filesystem::remove(path);
}

TEST(Reproduce, FourPassLines) {
  const Result r = run({"reproduce"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  int pass = 0;
  for (const auto& line : lines(r.out)) pass += line.rfind("PASS", 0) == 0;
  EXPECT_EQ(pass, 4);
}

TEST(Reproduce, ShallowFails) {
  const Result r = run({"reproduce", "--k", "3"});
  EXPECT_EQ(r.code, kExitCheckFailed);
}

TEST(Verify, AllPass) {
  const Result r = run({"verify", "--bits", "256"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--format", "json"}).code, kExitOk);
}

TEST(Audit, Csv) {
  const Result r = run({"audit", "--m", "2", "--s", "2", "--bits", "53", "--k", "40", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 41u);
  EXPECT_EQ(l[0], "k,naive_error,stable_error,digits_lost");
}

TEST(Arccos, Value) {
  const Result r = run({"arccos", "--x0", "0.8", "--bits", "256"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(field(r.out, "value").substr(0, 20), "0.643501108793284386");
  EXPECT_GE(std::stoi(field(r.out, "correct_digits")), 50);
}

}  // namespace
}  // namespace nestrad
