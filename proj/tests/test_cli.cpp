#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef FIBOPER_CLI_PATH
#error "FIBOPER_CLI_PATH must point at the fiboper binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// stdout captured, stderr dropped; exit code from the shell.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FIBOPER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("fib command") {
  CHECK(run_cli("fib 10").out == "55\n");
  CHECK(run_cli("fib 0").out == "0\n");
  CHECK(run_cli("fib 4 2").out == "6\n");
  CHECK(run_cli("fib 6 --factorial").out == "240\n");
  CHECK(run_cli("fib 10 --psi natural").out == "10\n");
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("table command") {
  RunResult r = run_cli("table sheffer:bernoulli 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("B_3 = x^3 + 2x^2 + x + 1/3") != std::string::npos);

  RunResult j = run_cli("table basic:delta 2 --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"coeffs\": [\n      \"0\",\n      \"0\",\n      \"1\"\n    ]") !=
        std::string::npos);

  RunResult fwd = run_cli("table basic:forward 3");
  CHECK(fwd.out.find("q_3 = x^3 - 4x^2 + 3x") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("table nosuch 3").exit_code == 2);
  CHECK(run_cli("table basic:abel:1.5 3").exit_code == 2);
  CHECK(run_cli("table basic:abel 3").exit_code == 2);
  CHECK(run_cli("table basic:delta 4 --format yaml").exit_code == 2);
  CHECK(run_cli("fib -3").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("table basic:delta 8 --trunc 4").exit_code == 2);
}

TEST_CASE("verify exits 0 on the shipped ledger") {
  RunResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mismatch=0") != std::string::npos);
  CHECK(r.out.find("ERRATA_CONFIRMED") != std::string::npos);

  RunResult j = run_cli("verify --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"mismatch\": 0") != std::string::npos);

  // the transcription is Fibonacci data; classical recomputation must fail
  CHECK(run_cli("verify --psi natural").exit_code == 1);
}

TEST_CASE("gram and spectral commands") {
  RunResult g = run_cli("gram sheffer:bernoulli 4");
  CHECK(g.exit_code == 0);
  CHECK(g.out == "1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 2 0\n0 0 0 0 6\n");

  RunResult h = run_cli("gram sheffer:hermite:1 3");
  CHECK(h.exit_code == 0);
  CHECK(h.out == "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 2\n");

  RunResult s = run_cli("spectral basic:delta 5 --format json");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("\"all_match\": true") != std::string::npos);

  RunResult hs = run_cli("spectral sheffer:hermite:1 4");
  CHECK(hs.exit_code == 0);
  CHECK(hs.out.find("all_match=no") != std::string::npos);
}

TEST_CASE("environment variable selects the sequence") {
  std::string saved = std::getenv("FIBOPER_PSI") ? std::getenv("FIBOPER_PSI") : "";
  setenv("FIBOPER_PSI", "natural", 1);
  CHECK(run_cli("fib 10").out == "10\n");
  if (saved.empty()) {
    unsetenv("FIBOPER_PSI");
  } else {
    setenv("FIBOPER_PSI", saved.c_str(), 1);
  }
  CHECK(run_cli("fib 10").out == "55\n");
}

TEST_CASE("byte determinism across repeated runs") {
  for (const char* args :
       {"table sheffer:bernoulli 9 --format json", "table basic:abel:3/2 6 --format latex",
        "verify --format json", "spectral sheffer:hermite:1 5 --format json",
        "gram sheffer:laguerre:1 4 --format plain"}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
