#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef DIHEDRAL_CLI_PATH
#error "DIHEDRAL_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(DIHEDRAL_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

} // namespace

TEST_CASE("analyze preset emits the certified parameters") {
    auto r = run("analyze --preset d22 --output-format json");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["n"] == 22);
    CHECK(j["k"] == 12);
    CHECK(j["d"] == 6);
    CHECK(j["d_method"] == "exhaustive");
    CHECK(j["dihedral_invariant"] == true);
    // text and json carry the same numbers
    auto t = run("analyze --preset d22 --output-format text");
    REQUIRE(t.status == 0);
    CHECK(t.out.find("d: 6") != std::string::npos);
    CHECK(t.out.find("k: 12") != std::string::npos);
}

TEST_CASE("construct falls back to the general definition when condition (c) fails") {
    auto r = run("construct --q 2 --m 7 --b 1 --delta 3 --output-format json");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 14);
    CHECK(j["bch_bound"].get<unsigned>() >= 3);
}

TEST_CASE("exit codes distinguish failure classes") {
    CHECK(run("analyze --preset d22").status == 0);
    CHECK(run("analyze --q 2 --m 11 --gen 1,c,1").status == 2);      // bad coefficient token
    CHECK(run("analyze --badflag").status == 2);                     // CLI parse error
    CHECK(run("construct --q 2 --m 4 --delta 3").status == 3);       // gcd(m, q) != 1
    CHECK(run("construct --q 2 --m 11 --b 0 --delta 4").status == 3); // degenerate generator
}

TEST_CASE("byte-identical reruns") {
    const std::string args = "search --q 2 --m-max 20 --delta-min 3 --delta-max 3 --b-max 2";
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("environment variable sets the default output format") {
    auto r = run("analyze --preset d22"); // wrapper env below
    const std::string cmd = std::string("DIHEDRAL_OUTPUT_FORMAT=json ") +
                            DIHEDRAL_CLI_PATH + " analyze --preset d22 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(nlohmann::json::parse(out)["d"] == 6);
    CHECK(r.out.find("d: 6") != std::string::npos); // without the variable, text
}

TEST_CASE("matrix export shape") {
    auto r = run("export --preset d22");
    REQUIRE(r.status == 0);
    unsigned lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 12);
    // each row holds 22 space-separated digits
    const std::string first = r.out.substr(0, r.out.find('\n'));
    unsigned fields = 1;
    for (char c : first)
        if (c == ' ') ++fields;
    CHECK(fields == 22);
}

TEST_CASE("spec export roundtrips through analyze") {
    auto r = run("export --preset d22 --kind spec");
    REQUIRE(r.status == 0);
    std::string line = r.out;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    auto a = run("analyze --spec \"" + line + "\" --output-format json");
    REQUIRE(a.status == 0);
    CHECK(nlohmann::json::parse(a.out)["d"] == 6);
}

TEST_CASE("empty search range gives an empty table") {
    auto r = run("search --q 2 --m-min 20 --m-max 10 --output-format json");
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out).empty());
}

TEST_CASE("verify single property") {
    auto r = run("verify --property binary-equivalence --m-max 51 --output-format json");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["pass"] == true);
    CHECK(j[0]["detail"].get<std::string>().find("{3, 11, 19, 43}") != std::string::npos);
    CHECK(run("verify --property no-such-property").status == 2);
}

TEST_CASE("reproduce flags the published table discrepancies") {
    auto r = run("reproduce --output-format json");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 4);
    for (const auto& row : j) {
        CHECK(row["n_match"] == true);
        if (row["name"] == "d22" || row["name"] == "d86a" || row["name"] == "d86b") {
            CHECK(row["k_match"] == true);
            CHECK(row["d_match"] == true);
        } else {
            // any mismatch must carry an explanation
            if (!(row["k_match"] == true && row["d_match"] == true))
                CHECK(!row["note"].get<std::string>().empty());
        }
    }
}
