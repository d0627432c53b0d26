#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI through the shell; stderr is folded into the output only when asked.
Run cli(const std::string& args, bool with_stderr = false) {
    const std::string cmd = std::string("\"") + KODUAL_CLI + "\" " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string fx(const std::string& name) { return std::string("\"") + KODUAL_FIXTURES + "/" + name + "\""; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("validate") {
    const auto ok = cli("validate " + fx("sing.yaml"));
    CHECK(ok.status == 0);
    CHECK(nlohmann::json::parse(ok.out)["valid"] == true);
    CHECK(cli("validate " + fx("empty-kospace.json")).status == 0);

    const auto bad = cli("validate " + fx("missing-principal.yaml"), true);
    CHECK(bad.status == 1);
    CHECK(bad.out.find("S3") != std::string::npos);

    CHECK(cli("validate " + fx("malformed.yaml")).status == 2);
    CHECK(cli("validate " + fx("no-such-file.yaml")).status != 0);
    CHECK(cli("no-such-subcommand").status == 2);
}

TEST_CASE("convert") {
    const auto m3 = cli("convert " + fx("m3.yaml") + " --to kospace", true);
    CHECK(m3.status == 1);
    CHECK(m3.out.find("(a,b,c,b)") != std::string::npos);

    const auto sing = cli("convert " + fx("sing.yaml") + " --to bidcpo");
    REQUIRE(sing.status == 0);
    const auto j = nlohmann::json::parse(sing.out);
    CHECK(j["kind"] == "bidcpo");
    CHECK(j["k"].size() == 1);
    CHECK(j["o"].size() == 1);
    CHECK(j["rel"].empty());

    CHECK(cli("convert " + fx("sing.yaml") + " --to embedded --roundtrip").status == 0);
    CHECK(cli("convert " + fx("empty-kospace.json") + " --to bidcpo --roundtrip").status == 0);
    CHECK(cli("convert " + fx("empty-polarity.json") + " --to kospace").status == 0);
    CHECK(cli("convert " + fx("dia.yaml") + " --to bidcpo").status == 0);

    const auto pipeline = cli("convert " + fx("chain3.yaml") + " --to frame-pipeline");
    REQUIRE(pipeline.status == 0);
    CHECK(nlohmann::json::parse(pipeline.out)["points"].size() == 2);
}

TEST_CASE("dualize and concept lattice") {
    const auto sing = cli("dualize degroot " + fx("sing.yaml"));
    REQUIRE(sing.status == 0);
    const auto dual = nlohmann::json::parse(sing.out);
    CHECK(dual["kfam"] == nlohmann::json::parse(R"([["x"]])"));
    CHECK(dual["ofam"] == nlohmann::json::parse("[[]]"));
    CHECK(cli("dualize lawson " + fx("m3.yaml")).status == 0);
    const auto c = cli("concept-lattice " + fx("m3.yaml"));
    REQUIRE(c.status == 0);
    CHECK(nlohmann::json::parse(c.out)["concepts"].size() == 5);
}

TEST_CASE("check") {
    const auto dist = cli("check distributive " + fx("m3.yaml"), true);
    CHECK(dist.status == 1);
    CHECK(dist.out.find("(a,b,c,b)") != std::string::npos);
    CHECK(cli("check bifounded " + fx("m3.yaml")).status == 0);
    CHECK(cli("check bicontinuous " + fx("dia.yaml")).status == 0);
    CHECK(cli("check raney " + fx("boolean4.yaml")).status == 0);
    CHECK(cli("check hofmis " + fx("dia.yaml")).status == 0);
}

TEST_CASE("sweep") {
    const auto r = cli("sweep key-lemma");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "sweep-report");
    CHECK(j["passed"] == j["total"]);
    CHECK(cli("--format text sweep key-lemma 4").out.find("key-lemma") != std::string::npos);

    const auto unknown = cli("sweep nope", true);
    CHECK(unknown.status == 2);
    CHECK(unknown.out.find("frame-pipeline") != std::string::npos);
}

TEST_CASE("gen") {
    const auto p = cli("gen poset 4 --seed 0");
    REQUIRE(p.status == 0);
    CHECK(nlohmann::json::parse(p.out) == nlohmann::json::parse(slurp(std::string(KODUAL_FIXTURES) + "/gen-poset4-seed0.json")));
    CHECK(cli("gen poset 4 --seed 0").out == p.out);
    CHECK(cli("gen poset 4 --seed 1").out != p.out);

    const auto k = cli("gen kospace 4 --seed 3");
    REQUIRE(k.status == 0);
    CHECK(cli("gen kospace 4 --seed 3").out == k.out);
    CHECK(cli("gen kospace 40").status != 0);
    CHECK(cli("gen kospace 13 --override-guardrail").status == 0);
}

TEST_CASE("export-dot") {
    const auto d = cli("export-dot " + fx("chain2.yaml"));
    REQUIRE(d.status == 0);
    CHECK(d.out.rfind("digraph", 0) == 0);
    CHECK(cli("export-dot " + fx("m3.yaml")).status == 0);
    CHECK(cli("export-dot " + fx("dia.yaml")).status == 0);
    CHECK(cli("export-dot " + fx("sing.yaml")).status == 0);
}
