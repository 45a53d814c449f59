// Exercises the installed CLI end to end: exit-code contract, file formats,
// byte-determinism of reports. argv[1] is the path to the braceforge binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "braceforge/gallery.hpp"
#include "braceforge/json_io.hpp"

using namespace braceforge;

namespace {

std::string bin;
int failures = 0;

int run(const std::string& args) {
  const std::string cmd = bin + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void expect_exit(const std::string& args, int want) {
  const int got = run(args);
  if (got != want) {
    std::printf("FAIL: `%s` exited %d, expected %d\n", args.c_str(), got, want);
    ++failures;
  } else {
    std::printf("ok: `%s` -> %d\n", args.c_str(), want);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void expect(bool cond, const std::string& what) {
  if (!cond) {
    std::printf("FAIL: %s\n", what.c_str());
    ++failures;
  } else {
    std::printf("ok: %s\n", what.c_str());
  }
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: cli-driver <path-to-braceforge>\n");
    return 2;
  }
  bin = argv[1];
  const std::string dir = "/tmp/braceforge_cli_test";
  if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) return 2;

  // object production
  expect_exit("group heisenberg --p 3 -o " + dir + "/h3.json", 0);
  expect(io::load_group(dir + "/h3.json")->order() == 27, "written group file loads");
  expect_exit("group abelian --factors 2 2 -o " + dir + "/v4.json", 0);
  expect_exit("group direct -a " + dir + "/v4.json -b " + dir + "/h3.json -o " + dir + "/prod.json", 0);
  expect(io::load_group(dir + "/prod.json")->order() == 108, "direct product file loads");
  expect_exit("group validate -i " + dir + "/h3.json", 0);
  expect_exit("group info -i " + dir + "/h3.json", 0);

  // math-verdict exit codes: corrupt table is exit 1, unreadable file exit 2
  {
    nlohmann::json j = io::read_file(dir + "/v4.json");
    j["table"][1][1] = 1;
    io::write_file(dir + "/bad.json", j);
  }
  expect_exit("group validate -i " + dir + "/bad.json", 1);
  expect_exit("group validate -i " + dir + "/missing.json", 2);
  expect_exit("no-such-verb", 2);
  expect_exit("group heisenberg --p 4", 2); // NotOddPrime is a parameter error

  // gamma / rb / brace verifiers
  const AlphaFamilyInstance split = build_alpha_family(3, 2);
  const AlphaFamilyInstance nonsplit = build_alpha_family(3, 1);
  io::write_file(dir + "/gamma_split.json", io::gamma_json(split.gamma));
  io::write_file(dir + "/gamma_nonsplit.json", io::gamma_json(nonsplit.gamma));
  io::write_file(dir + "/rep_split.json", io::map_json(split.rep));
  io::write_file(dir + "/rep_nonsplit.json", io::map_json(nonsplit.rep));
  io::write_file(dir + "/dot.json", io::group_json(*split.heisenberg));
  io::write_file(dir + "/circle.json", io::group_json(*split.circle));
  expect_exit("verify-gamma -i " + dir + "/gamma_split.json", 0);
  expect_exit("verify-brace --dot " + dir + "/dot.json --circle " + dir + "/circle.json", 0);
  expect_exit("verify-brace --dot " + dir + "/dot.json --circle " + dir + "/dot.json", 0);

  RotaBaxterOperator good = rb_formula_alpha(3, 2);
  io::write_file(dir + "/rb_good.json", io::rb_json(good));
  expect_exit("verify-rb -i " + dir + "/rb_good.json", 0);
  {
    RotaBaxterOperator bad = good;
    bad.images[5] = good.images[5] == 0 ? 1 : 0;
    io::write_file(dir + "/rb_bad.json", io::rb_json(bad));
  }
  expect_exit("verify-rb -i " + dir + "/rb_bad.json", 1);

  // cohomology pipeline: split instance flows to an operator, nonsplit to exit 1
  expect_exit("extract-cocycle --gamma " + dir + "/gamma_split.json --rep " + dir +
                  "/rep_split.json -o " + dir + "/kappa_split.json",
              0);
  expect_exit("extract-cocycle --gamma " + dir + "/gamma_nonsplit.json --rep " + dir +
                  "/rep_nonsplit.json -o " + dir + "/kappa_nonsplit.json",
              0);
  expect_exit("solve-coboundary -i " + dir + "/kappa_split.json", 0);
  expect_exit("solve-coboundary -i " + dir + "/kappa_nonsplit.json", 1);
  expect_exit("build-extension -i " + dir + "/kappa_split.json -o " + dir + "/ext.json", 0);
  expect(io::load_group(dir + "/ext.json")->order() == 81, "extension file loads");
  expect_exit("find-complement -i " + dir + "/kappa_split.json --gens 9 3", 0);
  expect_exit("find-complement -i " + dir + "/kappa_nonsplit.json --gens 9 3", 1);
  expect_exit("obstruction -i " + dir + "/kappa_split.json", 0);
  expect_exit("obstruction -i " + dir + "/kappa_nonsplit.json", 1);
  expect_exit("reconstruct-rb --gamma " + dir + "/gamma_split.json --rep " + dir +
                  "/rep_split.json -o " + dir + "/rb_rebuilt.json",
              0);
  expect_exit("verify-rb -i " + dir + "/rb_rebuilt.json", 0);
  expect_exit("reconstruct-rb --gamma " + dir + "/gamma_nonsplit.json --rep " + dir +
                  "/rep_nonsplit.json -o " + dir + "/cert.json",
              1);
  {
    const nlohmann::json cert = io::read_file(dir + "/cert.json");
    expect(cert.at("trivial") == false && cert.at("witness_row").is_array(),
           "nontrivial-class certificate written");
  }

  // enumeration
  expect_exit("enumerate-rb -i " + dir + "/v4.json -o " + dir + "/ops.json", 0);
  expect(io::read_file(dir + "/ops.json").at("count") == 16, "V4 has 16 operators (= endomorphisms)");

  // reproduction determinism: identical bytes for identical seeds
  expect_exit("reproduce alpha --p 3 --seed 7 -o " + dir + "/rep1.json", 0);
  expect_exit("reproduce alpha --p 3 --seed 7 -o " + dir + "/rep2.json", 0);
  expect(slurp(dir + "/rep1.json") == slurp(dir + "/rep2.json"), "reports byte-identical");
  expect_exit("reproduce p5 --p 3 --recodings 2", 0);
  expect_exit("reproduce noninner --kind c4_d4", 0);

  // order cap override via the environment
  {
    const std::string cmd = "BRACEFORGE_ORDER_CAP=10 " + bin + " group heisenberg --p 3 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const int got = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    expect(got == 2, "BRACEFORGE_ORDER_CAP=10 rejects order 27 with a usage error");
  }

  std::printf(failures ? "%d CLI contract failures\n" : "CLI contract: all ok\n", failures);
  return failures ? 1 : 0;
}
