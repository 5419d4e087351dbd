#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int status = -1;
  std::string out;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("FROBQ_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "FROBQ_BIN must point at the binary");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("series prints coefficient lines") {
  RunResult r = run_cli("series -k 2 -a 1 -N 3");
  CHECK(r.status == 0);
  CHECK(r.out == "1 4 9\n");

  r = run_cli("series -k 1 -a 1/2 -N 5");
  CHECK(r.status == 0);
  CHECK(r.out == "1 1 2 3 5\n");

  r = run_cli("series -k 4 -a 0 -N 2 --method all");
  CHECK(r.status == 0);
  CHECK(r.out == "6 32\n");

  RunResult direct = run_cli("series -k 2 -a 0 -N 6 --method direct");
  RunResult decomp = run_cli("series -k 2 -a 0 -N 6 --method decomp");
  RunResult enumerated = run_cli("series -k 2 -a 0 -N 6 --method enumerate");
  CHECK(direct.status == 0);
  CHECK(direct.out == decomp.out);
  CHECK(direct.out == enumerated.out);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("series -k 2 -a 1/2 -N 3").status == 2);   // parity
  CHECK(run_cli("series -k 0 -a 0 -N 3").status == 2);     // bad k
  CHECK(run_cli("series -k 2 -a 1").status == 2);          // missing -N
  CHECK(run_cli("series -k 2 -a x -N 3").status == 2);     // unparsable a
  CHECK(run_cli("series -k 2 -a 1 -N 3 --method bogus").status == 2);
  CHECK(run_cli("bogus").status == 2);                     // unknown command
  CHECK(run_cli("verify nonsense").status == 2);           // unknown suite
  CHECK(run_cli("scan -k 4 -a 0 --Mmax 1").status == 2);   // bad bound
  CHECK(run_cli("motzkin -k 2 -a 1/2 -n 3").status == 2);  // parity
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("decompose prints the level-two entries") {
  RunResult r = run_cli("decompose -k 4");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "h[2,0] = theta[1,0]^2 theta[2,2] +"
                        " theta[1,1]^2 theta[2,0]"));
  CHECK(contains(r.out, "h[2,1] = 2 theta[1,0] theta[1,1] theta[2,1]"));
  CHECK(contains(r.out, "h[2,2] = theta[1,0]^2 theta[2,0] +"
                        " theta[1,1]^2 theta[2,2]"));

  r = run_cli("decompose -k 2 --render pochhammer --central");
  CHECK(r.status == 0);
  CHECK(r.out == "(q^2;q^2)^5 / ((q;q)^4 (q^4;q^4)^2)\n");

  r = run_cli("decompose -k 6 --simplify --central");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "6 theta[1,0] theta[1,1]^2 theta[2,1] theta[6,3]"));
  CHECK(contains(r.out, "theta[1,0]^3 theta[2,2] theta[6,6]"));
  CHECK(contains(r.out, "theta[1,0]^3 theta[2,0] theta[6,0]"));
}

TEST_CASE("motzkin reports") {
  RunResult r = run_cli("motzkin -k 2 -a 0 -n 0");
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");

  r = run_cli("motzkin -k 4 -a 0 -n 12 --depth 6");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "guaranteed=4"));
  CHECK(contains(r.out, " ok"));

  r = run_cli("motzkin -k 2 -a 1 -n 2 --prec 9");
  CHECK(r.status == 0);  // half-integer shift, truncated coefficient list
  CHECK(!r.out.empty());
}

TEST_CASE("verify runs the identity suites") {
  RunResult r = run_cli("verify jtp --prec 10");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "checks passed"));
  CHECK(contains(r.out, "ok   triple product"));

  r = run_cli("verify reconstruction --kmax 3 --prec 6");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "reconstruction (k=3)"));

  r = run_cli("verify lemmas --kmax 2 --prec 12");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "shifted-theta square"));
}

TEST_CASE("scan prints tables and records") {
  RunResult r = run_cli("scan -k 4 -a 0 --Amax 4 --Mmax 64 --nmax 99");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "proved"));
  CHECK(contains(r.out, "32"));
  CHECK(contains(r.out, "64"));
  CHECK(contains(r.out, "n_max"));

  r = run_cli("scan -k 4 -a 0 --Amax 2 --Mmax 64 --nmax 99 --records"
              " --workers 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "k=4 a2=0 A=2 B=1 M=32 status=proved n_max=99"));
}

}  // TEST_SUITE
