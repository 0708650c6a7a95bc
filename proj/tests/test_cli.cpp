// Golden-surface tests for the command-line tool: every subcommand runs on a
// fixed fixture and the output is checked for the documented fields and exit
// codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HERMSPEC_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(HERMSPEC_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("spectrum subcommand on the order-4 fixture") {
    auto r = run_cli("spectrum --input " + fixture("example4.dg") + " --omega i --mode exact");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-3") != std::string::npos);
    CHECK(r.out.find("charpoly") != std::string::npos);
    auto rj = run_cli("spectrum --input " + fixture("example4.dg") +
                      " --omega i --mode exact --format json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.out.find("\"charpoly\":[-3,8,-6,0,1]") != std::string::npos);
    CHECK(rj.out.find("\"mult\":3") != std::string::npos);
}

TEST_CASE("bounds subcommand reports the tight extreme bound") {
    auto r = run_cli("bounds --input " + fixture("example4.dg") + " --omega i --mode exact");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("extreme") != std::string::npos);
    CHECK(r.out.find("tight") != std::string::npos);
}

TEST_CASE("starset subcommand emits the documented json") {
    auto r = run_cli("starset --input " + fixture("example4.dg") + " --omega i --lambda -3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"star_set\"") != std::string::npos);
    CHECK(r.out.find("\"residual\"") != std::string::npos);
}

TEST_CASE("scan subcommand: n=3, json summary") {
    auto r = run_cli("scan --n-min 1 --n-max 3 --omega i --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"violations\":0") != std::string::npos);
    CHECK(r.out.find("\"digraphs\":69") != std::string::npos);  // 1 + 4 + 64
}

TEST_CASE("harmonics subcommand prints the dimension table") {
    auto r = run_cli("harmonics --d 3 --kmax 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("8") != std::string::npos);  // m_{1,1}^3 = 8
    auto rs = run_cli("harmonics --d 3 --kmax 2 --p 2 --q 1 --format json");
    CHECK(rs.exit_code == 0);
    CHECK(rs.out.find("\"mu\"") != std::string::npos);
}

TEST_CASE("jacobi subcommand") {
    auto r = run_cli("jacobi --d 4 --k 1 --l 1 --eval 1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("15") != std::string::npos);  // g(1) = m = 15
}

TEST_CASE("scheme-eliminate subcommand") {
    auto r = run_cli("scheme-eliminate --max-m 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("891/16") != std::string::npos);
    CHECK(r.out.find("survivors") != std::string::npos);
    CHECK(r.out.find(" 3 5 9") != std::string::npos);
}

TEST_CASE("verify-paper subcommand passes") {
    auto r = run_cli("verify-paper");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    auto r = run_cli("spectrum --omega bogus --input " + fixture("digon.dg"));
    CHECK(r.exit_code == 2);
    auto r2 = run_cli("nonsense-subcommand");
    CHECK(r2.exit_code == 2);
    auto r3 = run_cli("starset --input " + fixture("digon.dg") + " --omega i --lambda 7");
    CHECK(r3.exit_code == 2);  // 7 is not an eigenvalue: invalid argument
}

TEST_CASE("stdin input") {
    std::string cmd = "printf 'n 2\\n0 1 digon\\n' | " + std::string(HERMSPEC_CLI_PATH) +
                      " spectrum --input - --omega i --mode exact --format json 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.find("\"charpoly\":[-1,0,1]") != std::string::npos);
}
