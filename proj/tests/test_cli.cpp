#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "wlp/hilbert.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("WLP_BIN");
    const std::string cmd =
        (env.empty() ? "" : env + " ") + (bin ? bin : "./wlp") + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify: human output carries the verdict") {
    const RunResult r = run_cli("classify --vars 4 --powers 5,7,8,10,10");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "verdict: Fails"));
    REQUIRE(contains(r.out, "rule: thm-3.2(ii)"));
    REQUIRE(contains(r.out, "failure degree: 13"));
    REQUIRE(contains(r.out, "gap 1"));
    REQUIRE(contains(r.out, "prime=2147483647"));
}

TEST_CASE("classify: structured output matches the human numbers") {
    const RunResult r = run_cli("classify --vars 4 --powers 5,7,8,10,10 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["command"] == "classify");
    REQUIRE(doc["inputs"]["powers"] == json::array({5, 7, 8, 10, 10}));
    REQUIRE(doc["verdict"]["status"] == "Fails");
    REQUIRE(doc["verdict"]["rule"] == "thm-3.2(ii)");
    REQUIRE(doc["verdict"]["failure_degree"] == 13);
    REQUIRE(doc["certificate"]["gap"] == 1);
    REQUIRE(doc["certificate"]["actual"] == 1);
    REQUIRE(doc["prime"] == 2147483647);
    REQUIRE(doc.contains("elapsed_ms"));
    // single line, idempotent re-serialization
    REQUIRE(r.out.find('\n') == r.out.size() - 1);
    REQUIRE(json::parse(doc.dump()).dump() == doc.dump());
}

TEST_CASE("classify: assertion flags set the exit code") {
    REQUIRE(run_cli("classify --vars 4 --powers 5,7,8,10,10 --assert-fails").exit_code == 0);
    REQUIRE(run_cli("classify --vars 4 --powers 5,7,8,10,10 --assert-holds").exit_code == 1);
    REQUIRE(run_cli("classify --vars 4 --powers 2,9,9,9,9 --assert-holds").exit_code == 0);
    // a conjecture satisfies neither assertion
    REQUIRE(run_cli("classify --vars 7 --powers 3,3,3,3,3,3,3,3 --assert-fails").exit_code == 1);
}

TEST_CASE("linsys: dispatcher output and trace") {
    const RunResult r = run_cli("linsys --pdim 3 --deg 9 --mults 5,5,5,5,5,5 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["dimension"] == 14);
    REQUIRE(doc["resolved_by"] == "dl-p3");
    REQUIRE(doc["trace"].size() == 3);
    for (const auto& step : doc["trace"]) REQUIRE(step["step"] == "cremona");
    REQUIRE(doc["trace"][0]["shift"] == -2);
    REQUIRE(json::parse(doc.dump()).dump() == doc.dump());

    const RunResult peel = run_cli("linsys --pdim 2 --deg 13 --mults 9,7,6,4,4 --method peel");
    REQUIRE(peel.exit_code == 0);
    REQUIRE(contains(peel.out, "dimension: 1"));
    REQUIRE(contains(peel.out, "peel-conic mult 4"));

    const RunResult empty = run_cli("linsys --pdim 5 --deg 1 --mults 0,0,0,0,0,0,0,0");
    REQUIRE(empty.exit_code == 0);
    REQUIRE(contains(empty.out, "dimension: 6"));
}

TEST_CASE("linsys: unresolved systems exit with 3") {
    const RunResult r = run_cli("linsys --pdim 3 --deg 17 --mults 14,11,10,7,7,4 --format json");
    REQUIRE(r.exit_code == 3);
    const json doc = json::parse(r.out);
    REQUIRE(doc["dimension"].is_null());
    REQUIRE(doc["resolved_by"] == "unknown-cremona-blocked");
}

TEST_CASE("usage errors exit with 2") {
    REQUIRE(run_cli("linsys --pdim 3 --mults 1,1").exit_code == 2);          // missing --deg
    REQUIRE(run_cli("linsys --pdim 3 --deg 4 --mults 1 --method zig").exit_code == 2);
    REQUIRE(run_cli("frobnicate --vars 3").exit_code == 2);
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("classify --vars 4 --powers 5,7,8,10").exit_code == 2);  // wrong count
    REQUIRE(run_cli("reproduce no-such-target").exit_code == 2);
    REQUIRE(run_cli("classify --vars 4 --powers 5,7,8,10,10 --prime 6").exit_code == 2);
    REQUIRE(run_cli("reproduce theorem-4.1 --d 5..4").exit_code == 2);
}

TEST_CASE("certificate: oracle fallback and its absence") {
    const RunResult blocked =
        run_cli("certificate --vars 5 --powers 4,7,8,11,11,14 --degree 17 --no-oracle");
    REQUIRE(blocked.exit_code == 3);

    const RunResult r =
        run_cli("certificate --vars 5 --powers 4,7,8,11,11,14 --degree 17 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["certificate"]["oracle_used"] == true);
    REQUIRE(doc["certificate"]["via"] == "rank-oracle");
    REQUIRE(doc["certificate"]["gap"].get<long long>() >= 1);
}

TEST_CASE("oracle: single degree report") {
    const RunResult r =
        run_cli("oracle --vars 3 --powers 3,3,3,3 --power-k 3 --degree 4 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["reports"].size() == 1);
    REQUIRE(doc["reports"][0]["maximal_rank"] == false);
    REQUIRE(doc["reports"][0]["dim_quotient_ell"] == 1);
    REQUIRE(doc["failing_degrees"] == json::array({4}));
}

TEST_CASE("hilbert: values match the library") {
    const RunResult r = run_cli("hilbert --vars 4 --powers 5,7,8,10,10 --degree 13 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["value"] == 220);
    REQUIRE(doc["first_difference"]["value"] == -5);
    const wlp::HilbertFunction h = wlp::aci_hilbert(wlp::ExponentConfig(4, {5, 7, 8, 10, 10}));
    for (size_t i = 0; i < h.values.size(); ++i)
        REQUIRE(doc["values"][i].get<long long>() == h.values[i].convert_to<long long>());
}

TEST_CASE("reproduce: targeted run and range options") {
    const RunResult r = run_cli("reproduce prop-5.3 --n 3..3 --d 1..2 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["pass"] == true);
    REQUIRE(doc["targets"].size() == 1);
    REQUIRE(doc["targets"][0]["lines"].size() == 2);
}

TEST_CASE("field parameters come from flags or the environment") {
    const RunResult flag = run_cli("classify --vars 4 --powers 2,9,9,9,9 --seed 7 --format json");
    REQUIRE(json::parse(flag.out)["seed"] == 7);
    const RunResult env =
        run_cli("classify --vars 4 --powers 2,9,9,9,9 --format json", "WLP_SEED=5 WLP_RETRIES=2");
    const json doc = json::parse(env.out);
    REQUIRE(doc["seed"] == 5);
    REQUIRE(doc["retries"] == 2);
}
