#include "apdecomp/ap_search.hpp"

#include "doctest.h"
#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(APDECOMP_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("find emits the decompositions the library computes, same order") {
    auto r = run_cli("find 31 --format json");
    REQUIRE(r.exit_code == 0);
    auto env = nlohmann::json::parse(r.out);
    CHECK(env["command"] == "find");
    CHECK(env["parameters"]["n"] == 31);
    auto lib = apd::find_3ap(apd::Modulus(31), false);
    const auto& decs = env["result"]["decompositions"];
    REQUIRE(decs.size() == lib.size());
    for (size_t i = 0; i < lib.size(); ++i) {
        CHECK(decs[i]["first"] == lib[i].first);
        CHECK(decs[i]["diff"] == lib[i].diff);
        CHECK(decs[i]["generators"].get<std::vector<apd::i64>>() == lib[i].generators());
        CHECK(decs[i]["orders"].get<std::vector<apd::i64>>() == lib[i].orders());
    }
    // the payload round-trips losslessly
    CHECK(nlohmann::json::parse(env.dump()) == env);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("find 71").exit_code == 0); // empty result is success
    CHECK(run_cli("find 2").exit_code == 1);
    CHECK(run_cli("find").exit_code == 1);
    CHECK(run_cli("gf 2 8").exit_code == 2);     // characteristic error
    CHECK(run_cli("table nosuch").exit_code == 1);
    CHECK(run_cli("lift 31 4").exit_code == 1);  // p must be an odd prime
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("identical invocations are byte-identical") {
    auto a = run_cli("table D --limit 200 --diff-paper");
    auto b = run_cli("table D --limit 200 --diff-paper");
    CHECK(a.out == b.out);
    auto c = run_cli("find 455 --weak --threads 1");
    auto d = run_cli("find 455 --weak --threads 3");
    CHECK(c.out == d.out);
}

TEST_CASE("csv carries the same rows as text") {
    auto t = run_cli("find 104 --four");
    auto c = run_cli("find 104 --four --format csv");
    CHECK(t.out.find("count 2") != std::string::npos);
    CHECK(c.out.find("104,77,2,77,2,79,2,81,3,83,4,strong") != std::string::npos);
}
