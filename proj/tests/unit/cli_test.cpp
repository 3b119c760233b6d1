#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"kprimes"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kprimes::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("kprimes_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir.string();
}

const std::string kData = KPRIMES_TEST_DATA_DIR;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("farey probe") {
  const auto r = run({"probe", "farey", "-Q", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cover OK, disjoint OK") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kprimes::cli::kValidation);
  CHECK(run({"nonsense"}).code == kprimes::cli::kValidation);
  CHECK(run({"rk", "--n", "x", "--k", "3"}).code == kprimes::cli::kValidation);
  CHECK(run({"--help"}).code == kprimes::cli::kOk);
}

TEST_CASE("k below five is rejected") {
  const auto r = run({"report", "--n", "1001", "--k", "4"});
  CHECK(r.code == kprimes::cli::kValidation);
  CHECK(r.err.find("k >= 5") != std::string::npos);
  CHECK(run({"sweep", "--k", "4", "--from", "1", "--to", "9", "-Q", "2"}).code == kprimes::cli::kValidation);
}

TEST_CASE("missing zeros exit 3 and name every key") {
  const auto r = run({"--zero-dir", fresh_dir("missing"), "report", "--n", "1001", "--k", "5", "-Q", "5", "-T", "50"});
  CHECK(r.code == kprimes::cli::kDependency);
  CHECK(r.err.find("zeta") != std::string::npos);
  CHECK(r.err.find("q=5 chi=3") != std::string::npos);
}

TEST_CASE("n beyond the sieve is a range error") {
  CHECK(run({"report", "--n", "100000000000", "--k", "5"}).code == kprimes::cli::kRange);
}

TEST_CASE("malformed zero import names the line") {
  const auto r = run({"--zero-dir", fresh_dir("import"), "zeros", "import", kData + "/bad_token.zeros"});
  CHECK(r.code == kprimes::cli::kValidation);
  CHECK(r.err.find("line 4") != std::string::npos);
}

TEST_CASE("import, compute, export and report") {
  const auto dir = fresh_dir("flow");
  CHECK(run({"--zero-dir", dir, "zeros", "import", kData + "/zeta_zeros_200.zeros"}).code == 0);
  CHECK(run({"--zero-dir", dir, "zeros", "compute", "--q1", "3", "--chi", "1", "-T", "200"}).code == 0);
  const auto exported = run({"--zero-dir", dir, "zeros", "export", "--zeta"});
  CHECK(exported.code == 0);
  CHECK(exported.out.find("14.1347251417347") != std::string::npos);

  const auto report = run({"--zero-dir", dir, "report", "--n", "201", "--k", "5", "-T", "100"});
  CHECK(report.code == 0);
  CHECK(report.out.find("\"Q\":4") != std::string::npos);
  CHECK(report.out.find("\"level_capped\":true") != std::string::npos);

  const auto sweep = run({"--zero-dir", dir, "sweep", "--k", "5", "--from", "101", "--to", "111", "--parity", "odd",
                          "-Q", "3", "-T", "100"});
  CHECK(sweep.code == 0);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 7);
  CHECK(sweep.err.find("rows=6") != std::string::npos);
}

TEST_CASE("empty sweep prints only the header") {
  const auto r = run({"sweep", "--k", "5", "--from", "20", "--to", "10", "-Q", "2"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("single computations") {
  const auto rk = run({"rk", "--n", "7", "--k", "3"});
  CHECK(rk.code == 0);
  CHECK(rk.out.find("R_3(7) = 1.5834") != std::string::npos);
  const auto s = run({"singular", "--n", "9", "--k", "3", "-Q", "100"});
  CHECK(s.code == 0);
  CHECK(s.out.find("ramanujan") != std::string::npos);
  CHECK(run({"singular", "--n", "9", "--k", "12", "-Q", "100"}).code == kprimes::cli::kRange);
}

TEST_CASE("probes print one JSON record per line") {
  const auto v = run({"--seed", "7", "probe", "v-bound", "-N", "50", "--samples", "200"});
  CHECK(v.code == 0);
  CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 2);
  CHECK(run({"probe", "main-term", "-N", "100", "-Q", "5", "-k", "3"}).code == 0);
  CHECK(run({"probe", "main-term", "-N", "100", "-Q", "6"}).code == kprimes::cli::kValidation);
}

}
