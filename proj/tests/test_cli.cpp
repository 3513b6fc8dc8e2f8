#include "gogmagog/cli/app.hpp"
#include "gogmagog/cli/registry.hpp"
#include "gogmagog/cli/serialize.hpp"
#include "gogmagog/cli/suites.hpp"
#include "gogmagog/triangles/enumerate.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace gogmagog;
using namespace gogmagog::cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
};

// Runs the installed binary; stderr is discarded.
Run run_binary(const std::string& args) {
    const char* bin = std::getenv("GOGMAGOG_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Run run_in_process(std::vector<std::string> args) {
    args.insert(args.begin(), "gogmagog");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    return r;
}

ParamPoly value_of(const std::string& out) { return poly_from_json(json::parse(out).at("value")); }

}  // namespace

TEST_CASE("enumerate reports object counts") {
    auto g = run_binary("enumerate gog --m 0 --n 3 --k 3");
    CHECK(g.code == 0);
    auto j = json::parse(g.out);
    CHECK(j["count"] == 7);
    CHECK(j["objects"].size() == 7);
    CHECK(j["objects"][0].contains("stats"));
    auto m = run_binary("enumerate magog --m 2 --n 1 --k 1");
    CHECK(json::parse(m.out)["count"] == 3);
}

TEST_CASE("enumerate pentagon matches the library enumerator") {
    auto r = run_binary("enumerate pentagon --m 0 --n 2 --kl 2 --kr 1");
    CHECK(r.code == 0);
    uint64_t direct = enumerate_gog_pentagons(0, 2, 2, 1, [](const TriangularArray&, const StatVector&) {});
    CHECK(json::parse(r.out)["count"] == direct);
}

TEST_CASE("formula evaluation") {
    auto r = run_binary("formula gog-count --m 0 --n 4 --k 4");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["value"][0]["coeff"] == "42");
    CHECK(j["provenance"] == "gog-count-constant-term");
    CHECK(value_of(r.out) == ParamPoly(42));

    auto mt = run_binary("formula mt-uv --bottom 1,2,3");
    CHECK(value_of(mt.out) == mt_generating_function({1, 2, 3}));
    auto terms = json::parse(mt.out)["value"];
    CHECK(terms.size() == 5);
}

TEST_CASE("magog slice formula equals the enumerated slice and names its route") {
    ParamPoly want;
    enumerate_magog_trapezoids(0, 3, 2, [&](const TriangularArray&, const StatVector& s) {
        if (s.minima == 1) want += ParamPoly::param(Param::P, s.maxima);
    });
    auto r = run_binary("formula magog-v2 --m 0 --n 3 --k 2 --q 1");
    CHECK(r.code == 0);
    CHECK(value_of(r.out) == want);
    CHECK(json::parse(r.out)["route"] == "constant-term");
    auto ex = run_binary("formula magog-v2 --m 0 --n 3 --k 1 --q 1");
    CHECK(ex.code == 0);
    CHECK(json::parse(ex.out)["route"] == "lgv-slice (excluded case)");
    CHECK(run_binary("formula magog-v2-det --m 0 --n 3 --k 1 --q 1").code == 3);
}

TEST_CASE("exit codes") {
    CHECK(run_binary("enumerate gog --m 0 --n 7 --k 7 --max-objects 100").code == 2);
    CHECK(run_binary("formula gog-count --m 0 --n 4 --k 4 --max-vars 2").code == 2);
    CHECK(run_binary("formula gog-count --m 0 --n 4").code == 3);
    CHECK(run_binary("formula no-such-formula").code == 3);
    CHECK(run_binary("enumerate gog --m 0 --n 3 --k 5").code == 3);
    CHECK(run_binary("frobnicate").code == 3);
    CHECK(run_binary("verify gog --max-n 2").code == 0);
}

TEST_CASE("verify suites pass at small bounds") {
    for (const char* s : {"gog", "magog", "pentagon", "sttree", "operator", "appendix"}) {
        auto r = run_in_process({"verify", s, "--max-n", "2", "--max-m", "1"});
        CHECK_MESSAGE(r.code == 0, s);
        auto j = json::parse(r.out);
        CHECK(j["summary"]["failed"] == 0);
        CHECK(j["summary"]["cases"].get<int>() > 0);
    }
    CHECK(run_in_process({"verify", "nonsense"}).code == 3);
}

TEST_CASE("verify reports are byte-deterministic across thread counts") {
    setenv("GOGMAGOG_THREADS", "1", 1);
    auto a = run_in_process({"verify", "all", "--max-n", "2", "--max-m", "1"});
    setenv("GOGMAGOG_THREADS", "4", 1);
    auto b = run_in_process({"verify", "all", "--max-n", "2", "--max-m", "1"});
    unsetenv("GOGMAGOG_THREADS");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    setenv("GOGMAGOG_THREADS", "zero", 1);
    CHECK(run_in_process({"verify", "gog", "--max-n", "1"}).code == 3);
    unsetenv("GOGMAGOG_THREADS");
}

TEST_CASE("a failing case carries both values") {
    SuiteReport r;
    SuiteCase c;
    c.suite = "demo";
    c.name = "mismatch";
    c.value_a = "1";
    c.value_b = "2";
    r.cases.push_back(c);
    CHECK_FALSE(r.ok());
    auto j = report_json(r);
    CHECK(j["cases"][0]["value_a"] == "1");
    CHECK(j["cases"][0]["value_b"] == "2");
    CHECK(j["summary"]["failed"] == 1);
}

TEST_CASE("conjecture tables") {
    auto r = run_in_process({"conjecture", "--m", "0", "--n", "3"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["tables"].size() == 3);
    CHECK(j["all_verdicts"] == true);
    auto one = run_in_process({"conjecture", "--m", "1", "--n", "3", "--k", "2"});
    CHECK(json::parse(one.out)["tables"][0]["verdict"] == true);
    auto csv = run_in_process({"conjecture", "--m", "0", "--n", "1", "--format", "csv"});
    CHECK(csv.out.rfind("m,n,k,object,minima,maxima,count,verdict\n", 0) == 0);
}

TEST_CASE("csv output and the out flag") {
    auto r = run_in_process({"formula", "mt-uv", "--bottom", "1,2", "--format", "csv"});
    CHECK(r.out == "monomial,coeff\nv,1\nu,1\n");
    const std::string path = "test_cli_out.json";
    auto f = run_in_process({"formula", "gog-count", "--m", "0", "--n", "3", "--k", "3", "--out", path});
    CHECK(f.code == 0);
    CHECK(f.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(value_of(ss.str()) == ParamPoly(7));
    std::remove(path.c_str());
}

TEST_CASE("polynomial serialization round trip") {
    ParamPoly p = ParamPoly::param(Param::u, 2) * ParamPoly::param(Param::QR) - ParamPoly(3);
    auto j = poly_json(p);
    CHECK(j[0]["coeff"] == "-3");
    CHECK(j[0]["exponents"].empty());
    CHECK(poly_from_json(j) == p);
    CHECK_THROWS(poly_json(ParamPoly::x(0)));
}

TEST_CASE("every registered formula is reachable") {
    CHECK(formula_registry().size() >= 30);
    for (const auto& f : formula_registry()) {
        CHECK_FALSE(f.provenance.empty());
        // empty arguments must fail with a precondition, never crash
        try {
            evaluate_formula(f.id, FormulaArgs{});
        } catch (const PreconditionError&) {
        }
    }
    FormulaArgs a;
    a.n = 3;
    a.family = "quartic";
    CHECK(evaluate_formula("behrend", a).value["holds"] == true);
    FormulaArgs s;
    s.from = 5;
    s.to = 2;
    CHECK(evaluate_formula("extended-sum", s).poly == ParamPoly(-7));
}
