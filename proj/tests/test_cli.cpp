#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PINIDX_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::ordered_json parse_json(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("json output round-trips") {
    for (const char* args : {"--json ko index --k 0 --m 1 --n 3", "--json ko order --k 1",
                             "--json series ahat --max-i 3", "--json exterior s-spectrum --m 6",
                             "--json rp sw --q 6", "--json clifford classify --n 11"}) {
        const Run r = run(args);
        CHECK(r.code == 0);
        const auto doc = parse_json(r);
        CHECK(doc.dump(2) + "\n" == r.out);
        CHECK(doc.contains("command"));
        CHECK(doc.contains("result"));
    }
}

TEST_CASE("exact values are strings") {
    const auto doc = parse_json(run("--json ko index --k 0 --m 1 --n 3"));
    CHECK(doc["result"]["index"] == "7/4");
    const auto order = parse_json(run("--json ko order --k 1"));
    CHECK(order["result"]["order"] == "64");
}

TEST_CASE("verification commands report pass flags") {
    const Run ok = run("--json series identity --which a8 --order 24");
    CHECK(ok.code == 0);
    CHECK(parse_json(ok)["passed"] == true);
    const Run bad = run(std::string("--json congruence check --which a8 --data ") + PINIDX_TEST_DATA +
                        "/violated_a8.txt");
    CHECK(bad.code == 1);
    const auto doc = parse_json(bad);
    CHECK(doc["passed"] == false);
    CHECK(doc["result"]["residue"] == "1/2");
}

TEST_CASE("output is deterministic") {
    CHECK(run("series ahat --max-i 4").out == run("series ahat --max-i 4").out);
    CHECK(run("exterior oscillator --m 2 --deg 3").out == run("exterior oscillator --m 2 --deg 3").out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("ko order").code == 2);
    CHECK(run("ko index --k 0 --m 1/2 --n 0").code == 2);
    CHECK(run("series identity --which a3").code == 2);
    CHECK(run("congruence check --which a8 --data /nonexistent").code == 2);
    CHECK(run("").code == 2);
}
