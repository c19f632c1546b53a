#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string bin;
int failures = 0;

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = bin + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void check(const std::string& name, bool cond, const std::string& detail) {
  if (cond) {
    std::cout << "ok: " << name << '\n';
  } else {
    ++failures;
    std::cout << "FAIL: " << name << " -- " << detail << '\n';
  }
}

void expect(const std::string& name, const std::string& args, int code,
            const std::string& out) {
  RunResult r = run(args);
  check(name, r.code == code && r.out == out,
        "exit " + std::to_string(r.code) + ", output <" + r.out + ">");
}

void expect_contains(const std::string& name, const std::string& args, int code,
                     const std::string& needle) {
  RunResult r = run(args);
  check(name, r.code == code && r.out.find(needle) != std::string::npos,
        "exit " + std::to_string(r.code) + ", output <" + r.out + ">");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <binary>\n";
    return 2;
  }
  bin = argv[1];

  {
    std::ofstream f("k22.json");
    f << R"({"n":4,"name":"K22","relations":[[1,3],[1,4],[2,3],[2,4]]})";
  }
  {
    std::ofstream f("k22.txt");
    f << "4: 1<3 1<4 2<3 2<4";
  }
  {
    std::ofstream f("c2.txt");
    f << "2: 1<2";
  }
  {
    std::ofstream f("cyclic.txt");
    f << "2: 1<2 2<1";
  }

  const std::string k22_fq =
      "q^3*M[4] + 2q^2*M[1,3] + M[2,2] + 2q^2*M[3,1] + 2*M[1,1,2] + "
      "4q*M[1,2,1] + 2*M[2,1,1] + 4*M[1,1,1,1]\n";

  expect("enumerate text", "enumerate --input k22.json", 0, k22_fq);
  expect("enumerate dsl equivalence", "enumerate --input k22.txt", 0, k22_fq);
  expect("enumerate json", "enumerate --input c2.txt --format json", 0,
         R"({"basis":"M","terms":[{"alpha":[2],"coeff":[0,1]},{"alpha":[1,1],"coeff":[1]}]})"
         "\n");
  expect("enumerate fundamental basis", "enumerate --input c2.txt --basis L", 0,
         "q*L[2] + (1 - q)*L[1,1]\n");
  expect("enumerate q0", "enumerate --input k22.json --q0", 0,
         "M[2,2] + 2*M[1,1,2] + 2*M[2,1,1] + 4*M[1,1,1,1]\n");
  expect("enumerate one coefficient", "enumerate --input k22.json --alpha 1,2,1", 0,
         "4q\n");
  expect("enumerate top coefficient", "enumerate --input k22.json --alpha 4", 0,
         "q^3\n");
  expect_contains("enumerate weight mismatch", "enumerate --input k22.json --alpha 1,2",
                  2, "error:");

  expect("stdin input", "fpoly < c2.txt", 0, "1 + q\n");
  expect("fpoly text", "fpoly --input k22.json", 0, "1 + 4q + 4q^2 + q^3\n");
  expect("fpoly json", "fpoly --input k22.json --format json", 0,
         R"({"coefficients":[1,4,4,1]})"
         "\n");

  expect("ppart brute force", "ppart --input c2.txt --m 2", 0,
         "x2^2 + x1*x2 + x1^2\n");
  expect("ppart extensions", "ppart --input c2.txt --extensions", 0,
         "M[2] + M[1,1]\n");
  expect("ppart extensions fundamental", "ppart --input c2.txt --extensions --basis L",
         0, "L[2]\n");
  expect_contains("ppart negative m", "ppart --input c2.txt --m -1", 2, "");

  expect("antipode check", "antipode-check --input c2.txt", 0,
         "lhs: (1 - q)*M[2] + M[1,1]\n"
         "rhs: (1 - q)*M[2] + M[1,1]\n"
         "match: yes\n");
  expect("antipode check json", "antipode-check --input c2.txt --format json", 0,
         R"({"lhs":{"basis":"M","terms":[{"alpha":[2],"coeff":[1,-1]},{"alpha":[1,1],"coeff":[1]}]},)"
         R"("rhs":{"basis":"M","terms":[{"alpha":[2],"coeff":[1,-1]},{"alpha":[1,1],"coeff":[1]}]},)"
         R"("match":true})"
         "\n");

  expect("verify small", "verify --max-n 2", 0,
         "oracle: 2+1 posets, m<=4: all pass\n"
         "antipode: 2+1 posets: all pass\n"
         "opposite: 2+1 posets: all pass\n"
         "hopf: 1 pairs, 1 posets: all pass\n"
         "ppartition: 2+1 posets, m<=4: all pass\n"
         "euler: 2+1 posets: all pass\n"
         "faces: 2+1 posets: all pass\n");
  expect("verify one suite", "verify --max-n 3 --suite euler", 0,
         "euler: 5+2+1 posets: all pass\n");
  expect_contains("verify long gate", "verify --max-n 6", 2, "requires --long");
  expect_contains("verify out of range", "verify --max-n 7", 2, "");

  {
    RunResult serial = run("verify --max-n 3 --threads 1");
    RunResult pooled = run("verify --max-n 3 --threads 4");
    check("verify thread determinism",
          serial.code == 0 && pooled.code == 0 && serial.out == pooled.out,
          "outputs differ");
  }

  expect("survey", "survey --max-n 3", 0,
         "1 class at n=1, 0 collisions\n"
         "2 classes at n=2, 0 collisions\n"
         "5 classes at n=3, 0 collisions\n");
  expect_contains("survey long gate", "survey --max-n 6", 2, "requires --long");

  expect("collision search", "search-collision --n 3", 0, "no pair found\n");
  expect_contains("collision search long gate", "search-collision --n 7", 2,
                  "requires --long");

  expect_contains("cyclic input", "enumerate --input cyclic.txt", 2, "error:");
  expect_contains("missing file", "enumerate --input does-not-exist.json", 2, "error:");
  {
    std::ofstream f("garbage.txt");
    f << "not a poset";
  }
  expect_contains("malformed input", "enumerate --input garbage.txt", 2, "error:");
  expect_contains("no subcommand", "", 2, "");
  expect_contains("unknown option", "fpoly --frobnicate", 2, "");
  expect_contains("help exits clean", "--help", 0, "Usage");

  std::cout << (failures == 0 ? "all cli checks pass\n" : "cli checks failing\n");
  return failures == 0 ? 0 : 1;
}
