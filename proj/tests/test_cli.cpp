#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "higgs/invariants.hpp"

using namespace higgs;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
    const std::string cmd = std::string(HIGGS_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("compute writes tables") {
    const auto csv = cli("compute --genus 0 --deg 2 --rmax 2 --dmax 6 --kind omega --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("l,r,d,kind,value,provenance\n", 0) == 0);
    CHECK(csv.out.find("2,2,6,omega,\"v^10+v^8\",stable-region\n") != std::string::npos);

    const auto json = cli("compute --genus 1 --deg 0 --canonical --rmax 2 --dmax 4 --kind hplus");
    CHECK(json.code == 0);
    const auto t = InvariantTable::fromJson(json.out);
    CHECK(t.kind == Kind::HPlus);
    CHECK(t.canonical);
    CHECK(t == computeTable(Kind::HPlus, 0, true, CurveModel::symbolic(1), 2, 4));
    CHECK(t.toJson() == json.out);
}

TEST_CASE("numeric mode") {
    const auto r = cli("compute --genus 1 --zeta 1,-1,2 --q 2 --deg 1 --kind moduli-volume --rmax 1 --dmax 2");
    CHECK(r.code == 0);
    const auto t = InvariantTable::fromJson(r.out);
    CHECK(t.q0 == 2);
    CHECK(t.zeta == std::vector<long>{1, -1, 2});
    // [Pic0] q^{l+1-g} = P(1) * 2 = 4.
    for (int d = 0; d <= 2; ++d) CHECK(t.at(1, d) == ScalarExpr(4));
    CHECK(cli("compute --genus 1 --zeta 1,-1,2 --deg 1").code == 1);
    CHECK(cli("compute --genus 1 --zeta 1,-1 --q 2 --deg 1").code == 1);
}

TEST_CASE("output is deterministic") {
    const std::string args = "compute --genus 1 --deg 1 --rmax 3 --dmax 6 --kind omega,h,moduli-volume";
    const auto a = cli(args + " --threads 1");
    const auto b = cli(args + " --threads 1");
    const auto c = cli(args + " --threads 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out.front() == '[');
}

TEST_CASE("output file") {
    const std::string path = "test_cli_output.csv";
    CHECK(cli("compute --genus 0 --deg 1 --rmax 1 --dmax 1 --format csv --output " + path).code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == cli("compute --genus 0 --deg 1 --rmax 1 --dmax 1 --format csv").out);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(cli("compute --genus 0 --deg -2 --canonical=false --rmax 2 --dmax 4 --kind omega").code == 2);
    CHECK(cli("compute --genus 2 --deg 1 --kind h").code == 2);
    CHECK(cli("compute --genus 0 --deg 0 --canonical").code == 1);
    CHECK(cli("compute --rmax 9").code == 1);
    CHECK(cli("compute --kind bogus").code == 1);
    CHECK(cli("frobnicate").code == 1);
    CHECK(cli("").code == 1);

    const auto ok = cli("verify --suite oracle --q 2 --rmax 2 --dmax 4 --deg 0");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS oracle nilpotent q0=2 l=0") != std::string::npos);
    CHECK(cli("verify --suite oracle --genus 1").code == 1);
    CHECK(cli("verify --suite oracle --q 4").code == 1);
    // An enumeration cap that is too small fails the check itself.
    const auto capped = cli("verify --suite oracle --q 2 --rmax 2 --dmax 2 --cap 10");
    CHECK(capped.code == 3);
    CHECK(capped.out.find("enumeration cap exceeded") != std::string::npos);
}

TEST_CASE("verify suites") {
    const auto id = cli("verify --suite identities --genus 1 --rmax 2 --dmax 4");
    CHECK(id.code == 0);
    CHECK(id.out.find("FAIL") == std::string::npos);
    const auto conj = cli("verify --suite conjecture --genus 1 --deg 0 --canonical --rmax 2");
    CHECK(conj.code == 0);
    CHECK(conj.out.find("PASS Omega(2,d) constant over d=0..1 (functional equation imposed)") != std::string::npos);
    CHECK(cli("verify --suite conjecture --genus 1 --deg -1 --rmax 2").code == 2);
}

TEST_CASE("disk cache does not change results") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "higgs_cli_cache_test";
    fs::remove_all(dir);
    const std::string args = "compute --genus 1 --deg 1 --rmax 2 --dmax 4 --kind omega";
    const auto plain = cli(args);
    const std::string env = "env HIGGS_CACHE_DIR=" + dir.string() + " ";
    const std::string cmd = env + HIGGS_CLI_PATH + " " + args;
    auto run = [&] {
        std::string out;
        FILE* p = popen(cmd.c_str(), "r");
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
        pclose(p);
        return out;
    };
    CHECK(run() == plain.out);
    CHECK(fs::exists(dir / "g1_l_1.txt"));
    CHECK(run() == plain.out);
    fs::remove_all(dir);
}
