// Command-line front end: invariant tables and verification suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "higgs/invariants.hpp"
#include "higgs/verify.hpp"

namespace {

enum Exit { Ok = 0, ConfigError = 1, Unsupported = 2, VerifyFailed = 3 };

struct JobConfig {
    int genus = 0;
    std::vector<long> zeta;
    std::vector<long> qs;
    std::optional<long> deg;
    bool canonical = false;
    int rmax = 2;
    int dmax = 4;
    std::vector<std::string> kinds{"h"};
    std::string format = "json";
    std::string output;
    std::string suite;
    double cap = 1e7;
    int threads = 0;
};

long divisorDegree(const JobConfig& c) {
    if (c.deg) return *c.deg;
    return c.canonical ? 2L * c.genus - 2 : 0;
}

void emit(const JobConfig& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + c.output);
    f << text;
}

int cmdCompute(const JobConfig& c) {
    if (c.zeta.empty() != c.qs.empty())
        throw std::invalid_argument("numeric mode needs both --zeta and --q");
    if (c.qs.size() > 1) throw std::invalid_argument("compute takes a single --q");
    const long l = divisorDegree(c);
    const higgs::CurveModel symbolic = higgs::CurveModel::symbolic(c.genus);
    std::optional<higgs::CurveModel> numeric;
    if (!c.zeta.empty()) numeric = higgs::CurveModel::numeric(c.genus, c.zeta, c.qs.front());
    higgs::EngineOptions opts;
    opts.threads = c.threads;

    std::vector<higgs::InvariantTable> tables;
    for (const auto& name : c.kinds) {
        auto t = higgs::computeTable(higgs::parseKind(name), l, c.canonical, symbolic, c.rmax, c.dmax, opts);
        tables.push_back(numeric ? higgs::specializeTable(t, *numeric) : std::move(t));
    }

    std::string text;
    if (c.format == "csv") {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            const std::string csv = tables[i].toCsv();
            text += i == 0 ? csv : csv.substr(csv.find('\n') + 1);
        }
    } else if (tables.size() == 1) {
        text = tables.front().toJson();
    } else {
        text = "[\n";
        for (std::size_t i = 0; i < tables.size(); ++i) {
            std::string j = tables[i].toJson();
            j.pop_back();
            text += j + (i + 1 < tables.size() ? ",\n" : "\n");
        }
        text += "]\n";
    }
    emit(c, text);
    return Ok;
}

int cmdVerify(const JobConfig& c) {
    higgs::EngineOptions opts;
    opts.threads = c.threads;
    higgs::VerifyReport rep;
    if (c.suite == "oracle") {
        if (c.genus != 0) throw std::invalid_argument("the oracle suite runs at genus 0 only");
        higgs::p1::OracleOptions oracle;
        oracle.cap = c.cap;
        oracle.threads = c.threads;
        const std::vector<long> qs = c.qs.empty() ? std::vector<long>{2, 3} : c.qs;
        for (long q0 : qs)
            if (!higgs::isPrime(q0)) throw std::invalid_argument("the oracle suite needs prime --q");
        rep = higgs::verifyOracle(divisorDegree(c), qs, c.rmax, c.dmax, oracle, opts);
    } else if (c.suite == "identities") {
        rep = higgs::verifyIdentities(c.genus, c.rmax, c.dmax, opts);
    } else {
        const long l = divisorDegree(c);
        higgs::checkDivisor(l, c.canonical, c.genus);
        rep = higgs::verifyConjecture(c.genus, l, c.canonical, c.rmax, opts);
    }
    const std::string text = rep.toText() + (rep.allPass() ? "all checks passed\n" : "verification failed\n");
    emit(c, text);
    return rep.allPass() ? Ok : VerifyFailed;
}

void addCommon(CLI::App* sub, JobConfig& c) {
    sub->add_option("--genus", c.genus, "Genus of the curve")->check(CLI::Range(0, 8));
    sub->add_option("--q", c.qs, "Field size q0 (repeatable for verify)")->check(CLI::PositiveNumber);
    sub->add_option("--deg", c.deg, "Degree l of the divisor D (default 2g-2 with --canonical, else 0)");
    sub->add_flag("--canonical", c.canonical, "D is the canonical divisor");
    sub->add_option("--rmax", c.rmax, "Largest rank")->check(CLI::Range(1, higgs::kMaxEngineRank));
    sub->add_option("--dmax", c.dmax, "Largest degree")->check(CLI::Range(0, 64));
    sub->add_option("--output", c.output, "Write to this file instead of stdout");
    sub->add_option("--cap", c.cap, "Enumeration cap per splitting type (oracle)")->check(CLI::PositiveNumber);
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts of twisted Higgs bundles on curves over finite fields"};
    app.require_subcommand(1);
    JobConfig c;

    auto* compute = app.add_subcommand("compute", "Compute an invariant table");
    addCommon(compute, c);
    compute->add_option("--zeta", c.zeta, "Zeta numerator coefficients c_0,...,c_2g (numeric mode)")->delimiter(',');
    compute->add_option("--kind", c.kinds,
                        "inil, iplus, omegaplus, hplus, omega, h, aplus, moduli-volume, stack-volume (repeatable)")
        ->delimiter(',');
    compute->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    addCommon(verify, c);
    verify->add_option("--suite", c.suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember({"oracle", "identities", "conjecture"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : ConfigError;
    }

    try {
        return compute->parsed() ? cmdCompute(c) : cmdVerify(c);
    } catch (const higgs::UnsupportedRegime& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Unsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ConfigError;
    }
}
