#include <doctest.h>

#include "subprocess.hpp"

using testutil::pfkit_bin;
using testutil::run;
using testutil::write_file;

TEST_CASE("pf on a plain text matrix") {
  const auto file = write_file("pf2.txt", "2\n0 5\n-5 0\n");
  const auto r = run(pfkit_bin() + " pf " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "5\n");
}

TEST_CASE("pf on the JSON upper form of J_2, with oracle check") {
  const auto file = write_file("j2.json", R"({"n":4,"ring":"int","upper":[1,0,0,0,0,1]})");
  const auto r = run(pfkit_bin() + " pf --check " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\nMATCH\n");
}

TEST_CASE("pf of the embedded 2x2 identity is -1") {
  const auto file = write_file("embed1.txt", "2\n0 1\n-1 0\n");
  // [[0,I],[-I,0]] for I of dim 2 is the 4x4 with a13 = a24 = 1
  const auto file4 = write_file("embed2.json", R"({"n":4,"ring":"int","upper":[0,1,0,0,1,0]})");
  CHECK(run(pfkit_bin() + " pf " + file).output == "1\n");
  const auto r = run(pfkit_bin() + " pf " + file4);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-1\n");
}

TEST_CASE("non-skew input exits 2 and names the offending pair") {
  const auto file = write_file("bad.txt", "2\n0 5\n5 0\n");
  const auto r = run(pfkit_bin() + " pf " + file);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("(1,2)") != std::string::npos);
}

TEST_CASE("parse failures exit 2") {
  const auto file = write_file("garbage.txt", "banana\n");
  CHECK(run(pfkit_bin() + " pf " + file).exit_code == 2);
  CHECK(run(pfkit_bin() + " pf /nonexistent/path").exit_code == 2);
  CHECK(run(pfkit_bin() + " pf").exit_code == 2); // missing argument
}

TEST_CASE("odd dimension is rejected") {
  const auto file = write_file("odd.txt", "3\n0 1 2\n-1 0 3\n-2 -3 0\n");
  CHECK(run(pfkit_bin() + " pf " + file).exit_code == 2);
}

TEST_CASE("oracle checks above the bound are refused, not skipped") {
  const auto file = write_file("j3.json", R"({"n":6,"ring":"int","upper":[1,0,0,0,0,0,0,0,0,1,0,0,0,0,1]})");
  CHECK(run(pfkit_bin() + " pf " + file).exit_code == 0);
  const auto refused = run(pfkit_bin() + " pf --check --oracle-bound 4 " + file);
  CHECK(refused.exit_code == 2);
  CHECK(refused.output.find("bound") != std::string::npos);
  // the environment override behaves the same way
  const auto env_refused = run("PFKIT_ORACLE_BOUND=4 " + pfkit_bin() + " pf --check " + file);
  CHECK(env_refused.exit_code == 2);
}

TEST_CASE("charpoly prints coefficients and the rendered polynomial") {
  const auto file = write_file("j2b.json", R"({"n":4,"ring":"int","upper":[1,0,0,0,0,1]})");
  const auto r = run(pfkit_bin() + " charpoly " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1, 2, 1\nx^2 + 2*x + 1\n");

  const auto two = write_file("c7.txt", "2\n0 7\n-7 0\n");
  CHECK(run(pfkit_bin() + " charpoly " + two).output == "1, 7\nx + 7\n");

  // the generic symbolic matrix through the JSON poly format
  const auto gen = write_file("generic4.json",
                              R"({"n":4,"ring":"poly","vars":["a12","a13","a14","a23","a24","a34"],)"
                              R"("upper":["a12","a13","a14","a23","a24","a34"]})");
  const auto rg = run(pfkit_bin() + " charpoly " + gen);
  CHECK(rg.exit_code == 0);
  CHECK(rg.output == "1, a12 + a34, a12*a34 - a13*a24 + a14*a23\n"
                     "x^2 + (a12 + a34)*x + (a12*a34 - a13*a24 + a14*a23)\n");
}

TEST_CASE("pairs subcommand") {
  const auto j1 = write_file("j1.txt", "2\n0 1\n-1 0\n");
  const auto r = run(pfkit_bin() + " pairs " + j1 + " " + j1 + " --check");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1, 1\nMATCH\n");

  // q_{A,J} coefficients equal the charpoly coefficient line
  const auto a = write_file("a6.txt", "6\n0 2 -1 3 0 1\n-2 0 4 -2 1 0\n1 -4 0 5 -3 2\n-3 2 -5 0 1 -1\n0 -1 3 -1 0 2\n-1 0 -2 1 -2 0\n");
  const auto j3 = write_file("j3b.json", R"({"n":6,"ring":"int","upper":[1,0,0,0,0,0,0,0,0,1,0,0,0,0,1]})");
  const auto pair_out = run(pfkit_bin() + " pairs " + a + " " + j3);
  const auto cp_out = run(pfkit_bin() + " charpoly " + a);
  CHECK(pair_out.exit_code == 0);
  const std::string coeff_line = cp_out.output.substr(0, cp_out.output.find('\n') + 1);
  CHECK(pair_out.output == coeff_line);

  const auto mismatched = run(pfkit_bin() + " pairs " + j1 + " " + j3);
  CHECK(mismatched.exit_code == 2);
  CHECK(mismatched.output.find("equal dimensions") != std::string::npos);
}

TEST_CASE("verify campaigns are reproducible and exit 0") {
  const std::string cmd = pfkit_bin() + " verify cayley --dim 4 --trials 5 --seed 9";
  const auto r1 = run(cmd);
  const auto r2 = run(cmd);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK(r1.output.find("\"pass\":true") != std::string::npos);

  // human format
  const auto rh = run(cmd + " --format human");
  CHECK(rh.exit_code == 0);
  CHECK(rh.output.find("PASS cayley") != std::string::npos);
}

TEST_CASE("verify usage errors exit 2") {
  CHECK(run(pfkit_bin() + " verify nosuch --dim 4").exit_code == 2);
  CHECK(run(pfkit_bin() + " verify all --dim 5").exit_code == 2);
  CHECK(run(pfkit_bin() + " verify all --dim 4 --format yaml").exit_code == 2);
  CHECK(run(pfkit_bin() + " verify all --dim 4 --ring poly").exit_code == 2);
  CHECK(run(pfkit_bin() + " verify all --dim 4 --ring zp:15").exit_code == 2);
}

TEST_CASE("verify runs symbolic and prime-field campaigns") {
  const auto sym = run(pfkit_bin() + " verify pce --symbolic --dim 4");
  CHECK(sym.exit_code == 0);
  CHECK(sym.output.find("poly:") != std::string::npos);

  const auto zp = run(pfkit_bin() + " verify mp --dim 4 --trials 20 --ring zp:97 --seed 7");
  CHECK(zp.exit_code == 0);
}

TEST_CASE("oracle-dump lists enumerations") {
  const auto m = run(pfkit_bin() + " oracle-dump --kind matchings --dim 4");
  CHECK(m.exit_code == 0);
  CHECK(m.output == "(1,2) (3,4) sign=+1\n(1,3) (2,4) sign=-1\n(1,4) (2,3) sign=+1\n");

  const auto p = run(pfkit_bin() + " oracle-dump --kind pclow-seqs --dim 4 --len 4");
  CHECK(p.exit_code == 0);
  CHECK(p.output.find("[(1,2)(2,1)] [(3,4)(4,3)]") != std::string::npos);
  CHECK(p.output.find("[(1,3)(3,4)(4,2)(2,1)]") != std::string::npos);
  CHECK(p.output.find("[(1,4)(4,3)(3,2)(2,1)]") != std::string::npos);

  CHECK(run(pfkit_bin() + " oracle-dump --kind widgets").exit_code == 2);
}
