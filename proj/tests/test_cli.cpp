// End-to-end checks of the command line tool.  The binary path arrives via
// the POLARHULL_CLI_PATH compile definition; every invocation runs through
// the shell with stderr folded into the captured output.

#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(POLARHULL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polarhull_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // A small deterministic dataset on disk, shared by most tests.
  std::string dataset(std::size_t count = 200, const std::string& name = "points.xy") {
    const std::string p = path(name);
    const CliResult r = run_cli("gen --family disk_uniform --count " + std::to_string(count) +
                                " --seed 7 --out " + p);
    EXPECT_EQ(r.exit_code, 0) << r.output;
    return p;
  }

  fs::path dir_;
};

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_F(CliFiles, GenIsDeterministicPerSeed) {
  const CliResult a = run_cli("gen --family blobs --count 150 --seed 11 --out " + path("a.xy"));
  const CliResult b = run_cli("gen --family blobs --count 150 --seed 11 --out " + path("b.xy"));
  const CliResult c = run_cli("gen --family blobs --count 150 --seed 12 --out " + path("c.xy"));
  ASSERT_EQ(a.exit_code, 0) << a.output;
  EXPECT_NE(a.output.find("wrote 150 points"), std::string::npos);
  ASSERT_EQ(b.exit_code, 0);
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(slurp(path("a.xy")), slurp(path("b.xy")));
  EXPECT_NE(slurp(path("a.xy")), slurp(path("c.xy")));
}

TEST_F(CliFiles, GenSupportsCsvByExtensionAndExplicitFormat) {
  const CliResult a = run_cli("gen --count 25 --seed 3 --out " + path("pts.csv"));
  const CliResult b = run_cli("gen --count 25 --seed 3 --format csv --out " + path("pts2.dat"));
  ASSERT_EQ(a.exit_code, 0) << a.output;
  ASSERT_EQ(b.exit_code, 0) << b.output;
  const std::string csv = slurp(path("pts.csv"));
  EXPECT_EQ(csv.rfind("x,y\n", 0), 0u);
  EXPECT_EQ(csv, slurp(path("pts2.dat")));
}

TEST_F(CliFiles, HullReportListsTheExpectedKeys) {
  const std::string in = dataset();
  const CliResult r = run_cli("hull --in " + in + " --algo horizon --bin-interval-deg 10");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  for (const char* key :
       {"algo=horizon", "input_size=200", "reduced_size=", "hull_size=", "reduction_percent=",
        "iterations=", "final_interval_deg=", "horizon_candidates=", "combine_work=",
        "visits_total=", "seconds_total="}) {
    EXPECT_NE(r.output.find(key), std::string::npos) << key << " missing in:\n" << r.output;
  }
}

TEST_F(CliFiles, AllAlgorithmsWriteTheSameHullFile) {
  const std::string in = dataset();
  std::vector<std::string> files;
  for (const std::string algo :
       {"graham", "jarvis", "horizon", "contour", "dnc_ordered", "dnc_unordered"}) {
    const std::string out = path("hull_" + algo + ".txt");
    const CliResult r = run_cli("hull --in " + in + " --algo " + algo + " --out " + out);
    ASSERT_EQ(r.exit_code, 0) << algo << ":\n" << r.output;
    files.push_back(out);
  }
  const std::string reference = slurp(files.front());
  EXPECT_EQ(reference.rfind("# index x y\n", 0), 0u);
  for (const std::string& f : files) EXPECT_EQ(slurp(f), reference) << f;
}

TEST_F(CliFiles, HullHonorsTheJarvisFinalOption) {
  const std::string in = dataset();
  const CliResult g = run_cli("hull --in " + in + " --algo horizon --final graham --out " +
                              path("hg.txt"));
  const CliResult j = run_cli("hull --in " + in + " --algo horizon --final jarvis --out " +
                              path("hj.txt"));
  ASSERT_EQ(g.exit_code, 0);
  ASSERT_EQ(j.exit_code, 0);
  EXPECT_EQ(slurp(path("hg.txt")), slurp(path("hj.txt")));
}

TEST_F(CliFiles, VerifyReportsOkForEveryAlgorithm) {
  const std::string in = dataset();
  const CliResult r = run_cli("verify --in " + in);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  for (const std::string algo :
       {"graham", "jarvis", "horizon", "contour", "dnc_ordered", "dnc_unordered"}) {
    EXPECT_NE(r.output.find("verify algo=" + algo + " status=ok"), std::string::npos)
        << r.output;
  }
  EXPECT_EQ(r.output.find("status=mismatch"), std::string::npos);
}

TEST_F(CliFiles, VerifyDetectsACorruptedHull) {
  const std::string in = dataset();
  const CliResult r = run_cli("verify --in " + in + " --algo graham --inject-corruption");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("status=mismatch"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("position="), std::string::npos);
}

TEST_F(CliFiles, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("hull").exit_code, 2);  // --in is required
  EXPECT_EQ(run_cli("hull --in x.xy --algo nope").exit_code, 2);
  EXPECT_EQ(run_cli("gen --family hexagons --out " + path("x.xy")).exit_code, 2);
}

TEST_F(CliFiles, InvalidBinIntervalExitsWithTwo) {
  const std::string in = dataset(50);
  const CliResult zero = run_cli("hull --in " + in + " --algo horizon --bin-interval-deg 0");
  EXPECT_EQ(zero.exit_code, 2);
  EXPECT_NE(zero.output.find("error:"), std::string::npos);
  const CliResult wide = run_cli("hull --in " + in + " --algo horizon --bin-interval-deg 91");
  EXPECT_EQ(wide.exit_code, 2);
  const CliResult leaf = run_cli("hull --in " + in + " --algo dnc_ordered --leaf-size 2");
  EXPECT_EQ(leaf.exit_code, 2);
}

TEST_F(CliFiles, InputProblemsExitWithThree) {
  EXPECT_EQ(run_cli("hull --in " + path("missing.xy")).exit_code, 3);

  const std::string bad = path("bad.xy");
  std::ofstream(bad) << "1 2\nfoo bar\n";
  const CliResult parse = run_cli("hull --in " + bad);
  EXPECT_EQ(parse.exit_code, 3);
  EXPECT_NE(parse.output.find("line 2"), std::string::npos) << parse.output;

  const std::string empty = path("empty.xy");
  std::ofstream(empty) << "# nothing but comments\n";
  EXPECT_EQ(run_cli("hull --in " + empty).exit_code, 3);
}

TEST_F(CliFiles, BenchPrintsOneTsvRowPerAlgorithm) {
  const CliResult r = run_cli(
      "bench --family circle_ring --count 400 --seed 5 --repeats 1 --algo graham --algo horizon "
      "--algo contour");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("algo\tn\treduced\thull\treduction_pct\titerations\t", 0), 0u);
  EXPECT_EQ(count_lines(r.output), 4u);  // header + three algorithms
  std::string row;
  while (std::getline(lines, row)) {
    std::size_t tabs = 0;
    for (char ch : row) tabs += ch == '\t';
    EXPECT_EQ(tabs, 15u) << row;
    EXPECT_NE(row.find("\t400\t"), std::string::npos) << row;
  }
}

TEST_F(CliFiles, BenchAcceptsAnInputFile) {
  const std::string in = dataset(120);
  const CliResult r = run_cli("bench --in " + in + " --repeats 1 --algo dnc_ordered");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("dnc_ordered\t120\t"), std::string::npos) << r.output;
}

TEST_F(CliFiles, RenderWritesAnSvgDocument) {
  const std::string in = dataset(80);
  const std::string out = path("scene.svg");
  const CliResult r =
      run_cli("render --in " + in + " --algo horizon --fence --rays --out " + out);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("wrote " + out), std::string::npos);
  const std::string svg = slurp(out);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_NE(svg.find("<path"), std::string::npos);
}
