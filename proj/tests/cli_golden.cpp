// Golden tests for the command-line surface: spawns the built binary and
// compares stdout and exit codes against pinned expectations.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string g_binary;
std::string g_data;
int g_failures = 0;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& prefix = "") {
  const std::string cmd = prefix + g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "cannot spawn: " << cmd << "\n";
    exit(2);
  }
  Result r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(const std::string& args, const std::string& want_out, int want_code = 0,
            const std::string& prefix = "") {
  const auto r = run(args, prefix);
  if (r.out != want_out || r.code != want_code) {
    ++g_failures;
    std::cerr << "FAIL: " << prefix << "vactab " << args << "\n  want code " << want_code
              << " got " << r.code << "\n  want output <<<" << want_out << ">>>\n  got  <<<"
              << r.out << ">>>\n";
  } else {
    std::cout << "ok: " << prefix << "vactab " << args << "\n";
  }
}

void expect_code(const std::string& args, int want_code, const std::string& prefix = "") {
  const auto r = run(args, prefix);
  if (r.code != want_code) {
    ++g_failures;
    std::cerr << "FAIL: " << prefix << "vactab " << args << "\n  want code " << want_code
              << " got " << r.code << "\n";
  } else {
    std::cout << "ok: " << prefix << "vactab " << args << "\n";
  }
}

void expect_contains(const std::string& args, const std::string& needle, int want_code = 0) {
  const auto r = run(args);
  if (r.code != want_code || r.out.find(needle) == std::string::npos) {
    ++g_failures;
    std::cerr << "FAIL: vactab " << args << "\n  want code " << want_code << " got "
              << r.code << "; needle <<<" << needle << ">>> in <<<" << r.out << ">>>\n";
  } else {
    std::cout << "ok: vactab " << args << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_golden <vactab-binary> <data-dir>\n";
    return 2;
  }
  g_binary = argv[1];
  g_data = argv[2];

  // count
  expect("count --variant svt --k 3 --shape 1", "10\n");
  expect("count --variant lvt --k 4 --shape 2,1 --method dp", "12\n");
  expect("count --variant nvac --n 2 --k 3 --shape 1,1", "4\n");
  expect("count --variant svt --k 3 --shape 1 --cross",
         "formula=10  dp=10  enumerate=10\n");
  expect("count --variant svt --k 2 --half --shape ''",
         "5\n");
  expect_code("count --variant nvac --k 3 --shape 1,1", 2);       // missing --n
  expect_code("count --variant nvac --n 2 --k 1 --method formula", 2);
  expect_code("count --variant svt --shape 1", 2);                // missing --k

  // sequence
  expect("sequence g --terms 6", "1 2 7 31 164 999\n");
  expect("sequence a-half --terms 6", "1 2 6 24 116 648\n");
  expect("sequence u-half --terms 6", "1 3 12 61 381 2854\n");
  expect_contains("sequence --all --terms 5", "u      (A059099): 1 2 7 33 198\n");
  expect_contains("sequence g --terms 4 --format json", "\"A002872\"");
  expect_code("sequence w --terms 4", 1);

  // verify
  expect_code("verify --all", 0);
  expect_code("verify --identity thm7.1 --max-k 8", 0);
  expect_contains("verify --identity eq2.1 --n 6 --k 4", "lhs=1296 rhs=1296");
  expect_code("verify --identity thm9.9", 2);
  expect_code("verify", 2);

  // biject
  expect_contains("biject --map psi --input " + g_data + "/ex_psi_walk.json --round-trip",
                  R"("blocks":[[1,5],[2],[3,4,7],[6]])");
  expect_contains("biject --map psi --input " + g_data + "/ex_psi_walk.json --trace",
                  R"("step":"13/2")");
  expect_contains("biject --map di --input " + g_data + "/di_seq.json --round-trip",
                  R"("walk":{"n":2,"shapes":[[2],[1],[1,1]],"variant":"nvac"})");
  expect("biject --map di-inv --input " + g_data + "/di_image.json --round-trip",
         "{\"n\":2,\"seq\":[1]}\n");
  expect_contains("biject --map psi-inv --input " + g_data + "/table1_row1.json",
                  R"("shapes":[[],[],[1],[],[1],[1],[1,1]])");
  expect_contains(
      "biject --map glue-symmetric-even --input " + g_data + "/thm32_image.json",
      R"("blocks":[[-6,-3,3,6],[-5,1],[-4,-2],[-1,5],[2,4]])");
  expect_contains("biject --map glue-symmetric-odd --input " + g_data + "/thm43_image.json",
                  R"("blocks":[[-7,-5],[-6,2],[-4,0,4],[-3,-1,1,3],[-2,6],[5,7]])");
  expect_contains("biject --map glue-odd-pair --input " + g_data + "/ex42_pair.json",
                  R"("blocks":[[1,3],[2,10],[4,8,13],[5,7,11,14],[6,9,12]])");
  expect_contains("biject --map glue-connecting --input " + g_data + "/connecting.json",
                  R"("blocks":[[1,2]])");
  expect_contains("biject --map type-b --input " + g_data + "/ex68_typeb.json",
                  R"([[-7,-5],[-6,1,3],[-4,4],[-3,-1,6],[-2],[2],[5,7]])");
  expect_contains("biject --map collapse-block --input " + g_data + "/ex66_collapse.json",
                  R"("sigma":[2,1,3])");
  expect_code("biject --map psi --input /nonexistent.json", 2);
  expect_code("biject --map bogus --input " + g_data + "/di_seq.json", 2);
  expect_code("biject --map type-b --input " + g_data + "/ex68_typeb.json --round-trip", 2);
  // domain violation: walk that does not validate
  expect_code("biject --map psi --input " + g_data + "/bad_walk.json", 1);

  // enumeration bound: env variable and config file, env winning
  const std::string cfgdir = "vactab_cfg_probe";
  std::system(("mkdir -p " + cfgdir +
               " && printf '{\"enumeration_bound\": 2}' > " + cfgdir + "/vactab.json")
                  .c_str());
  const std::string in_cfgdir = "cd " + cfgdir + " && ";
  expect_code("count --variant svt --k 3 --method enumerate --shape 1", 1, in_cfgdir);
  expect_code("count --variant svt --k 3 --method enumerate --shape 1", 0,
              in_cfgdir + "VT_ENUM_BOUND=7 ");
  expect_code("count --variant svt --k 8 --method enumerate --shape 1", 1,
              "VT_ENUM_BOUND=2 ");
  expect("count --variant svt --k 3 --method enumerate --shape 1 --enum-bound 3", "10\n",
         0, "VT_ENUM_BOUND=2 ");

  if (g_failures) {
    std::cerr << g_failures << " golden check(s) failed\n";
    return 1;
  }
  std::cout << "all golden checks passed\n";
  return 0;
}
